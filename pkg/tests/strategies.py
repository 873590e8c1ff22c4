from __future__ import annotations

from hypothesis import strategies as st

from termlogic.terms import EMPTY, UNIVERSE, Atom, Comp, Dyadic, Join, Mark, Meet, Monadic, RelKind

ATOMS = ("b", "c", "d")

leaves = st.sampled_from([Atom(a) for a in ATOMS] + [EMPTY, UNIVERSE])

exprs = st.recursive(
    leaves,
    lambda kids: st.one_of(
        kids.map(Comp),
        st.tuples(kids, kids).map(lambda p: Meet(*p)),
        st.tuples(kids, kids).map(lambda p: Join(*p)),
    ),
    max_leaves=6,
)

dyadics = st.builds(Dyadic, st.sampled_from(list(RelKind)), exprs, exprs)
monadics = st.builds(Monadic, st.sampled_from(list(Mark)), exprs)
statements = st.one_of(dyadics, monadics)
