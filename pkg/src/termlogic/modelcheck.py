"""Exhaustive semantic oracle over minterm-emptiness models.

Every statement reduces to a Boolean combination of "this set of minterms is
empty" facts. Formulas are compiled to a small postfix program and handed to
the enumeration kernel, which walks models in index order (all-empty first).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from . import _accel
from .semantics import Model, SignatureError, check_signature, denote_mask, full_mask
from .terms import Atom, Dyadic, Mark, Monadic, RelKind, Statement, children, sides

DEFAULT_MAX_ATOMS = 4
# 5 atoms already means 2**32 models; beyond that enumeration is hopeless
HARD_MAX_ATOMS = 5


@dataclass(frozen=True)
class Holds:
    statement: Statement


@dataclass(frozen=True)
class MetaAnd:
    items: tuple


@dataclass(frozen=True)
class MetaOr:
    items: tuple


@dataclass(frozen=True)
class MetaNot:
    item: "MetaFormula"


MetaFormula = Union[Holds, MetaAnd, MetaOr, MetaNot]


def meta_and(*items) -> MetaAnd:
    return MetaAnd(tuple(lift(i) for i in items))


def meta_or(*items) -> MetaOr:
    return MetaOr(tuple(lift(i) for i in items))


def meta_not(item) -> MetaNot:
    return MetaNot(lift(item))


def lift(f) -> MetaFormula:
    """Accept bare statements wherever a formula is expected."""
    if isinstance(f, (Holds, MetaAnd, MetaOr, MetaNot)):
        return f
    if isinstance(f, (Dyadic, Monadic)):
        return Holds(f)
    raise TypeError(f"not a statement or formula: {f!r}")


def formula_atoms(f: MetaFormula) -> list[str]:
    """Atoms in order of first appearance."""
    seen: list[str] = []

    def walk(g):
        if isinstance(g, Holds):
            for side in sides(g.statement):
                _collect(side, seen)
        elif isinstance(g, MetaNot):
            walk(g.item)
        else:
            for i in g.items:
                walk(i)

    walk(f)
    return seen


def _collect(e, seen: list[str]) -> None:
    if isinstance(e, Atom):
        if e.name not in seen:
            seen.append(e.name)
        return
    for k in children(e):
        _collect(k, seen)


@dataclass(frozen=True)
class ValidityReport:
    valid: bool
    countermodel: Model | None
    models_checked: int


class Program:
    """Postfix emptiness program for one formula over a fixed signature."""

    def __init__(self, formula: MetaFormula, signature: Sequence[str]):
        self.signature = tuple(signature)
        self.ops: list[int] = []
        self.args: list[int] = []
        self._everything = full_mask(len(self.signature))
        self._emit_formula(formula)

    def _push(self, op: int, arg: int) -> None:
        self.ops.append(op)
        self.args.append(arg)

    def _empty(self, mask: int, negated: bool = False) -> None:
        self._push(0, mask)
        if negated:
            self._push(1, 0)

    def _emit_formula(self, f: MetaFormula) -> None:
        if isinstance(f, Holds):
            self._emit_statement(f.statement)
        elif isinstance(f, MetaNot):
            self._emit_formula(f.item)
            self._push(1, 0)
        else:
            if not f.items:
                # empty conjunction is true, empty disjunction false
                self._empty(0, negated=isinstance(f, MetaOr))
                return
            for item in f.items:
                self._emit_formula(item)
            self._push(2 if isinstance(f, MetaAnd) else 3, len(f.items))

    def _emit_statement(self, st: Statement) -> None:
        sig = self.signature
        if isinstance(st, Monadic):
            m = denote_mask(st.subject, sig)
            self._empty(m, negated=st.mark is Mark.INHABITED)
            return
        l = denote_mask(st.lhs, sig)
        r = denote_mask(st.rhs, sig)
        every = self._everything
        rel = st.rel
        plain = {
            RelKind.EQ: (l ^ r, False),
            RelKind.NEQ: (l ^ r, True),
            RelKind.SUBSETEQ: (l & ~r & every, False),
            RelKind.NSUBSETEQ: (l & ~r & every, True),
            RelKind.SUPSETEQ: (r & ~l & every, False),
            RelKind.NSUPSETEQ: (r & ~l & every, True),
            RelKind.CONJOINT: (l & r, True),
            RelKind.DISJOINT: (l & r, False),
            RelKind.EXHAUSTIVE: (every & ~(l | r), False),
            RelKind.NONEXHAUSTIVE: (every & ~(l | r), True),
        }
        if rel in plain:
            mask, neg = plain[rel]
            self._empty(mask, neg)
            return
        # proper inclusion: included and not equal
        inner = l & ~r & every if rel in (RelKind.PROPERSUB, RelKind.NPROPERSUB) else r & ~l & every
        self._empty(inner)
        self._empty(l ^ r, negated=True)
        self._push(2, 2)
        if rel in (RelKind.NPROPERSUB, RelKind.NPROPERSUP):
            self._push(1, 0)

    @property
    def n_models(self) -> int:
        return 1 << (1 << len(self.signature))

    def first(self, start: int = 0, backend=None) -> int:
        be = backend or _accel
        return be.first_model(self.ops, self.args, self.n_models, start)

    def count(self, backend=None) -> int:
        be = backend or _accel
        return be.count_models(self.ops, self.args, self.n_models)


def _signature(formulas: Iterable[MetaFormula], signature, max_atoms: int) -> tuple[str, ...]:
    if max_atoms > HARD_MAX_ATOMS:
        raise SignatureError(f"max_atoms {max_atoms} exceeds the hard cap of {HARD_MAX_ATOMS}")
    if signature is None:
        seen: list[str] = []
        for f in formulas:
            for a in formula_atoms(f):
                if a not in seen:
                    seen.append(a)
        sig = tuple(seen)
    else:
        sig = check_signature(signature)
    if len(sig) > max_atoms:
        raise SignatureError(f"signature of {len(sig)} atoms exceeds the cap of {max_atoms}")
    return sig


def valid(premises: Iterable, conclusion, signature: Sequence[str] | None = None,
          max_atoms: int = DEFAULT_MAX_ATOMS) -> ValidityReport:
    """Do the premises entail the conclusion in every model?"""
    prems = [lift(p) for p in premises]
    concl = lift(conclusion)
    sig = _signature(prems + [concl], signature, max_atoms)
    prog = Program(MetaAnd(tuple(prems) + (MetaNot(concl),)), sig)
    hit = prog.first()
    if hit < 0:
        return ValidityReport(True, None, prog.n_models)
    return ValidityReport(False, Model(sig, hit), hit + 1)


def countermodel_search(premises: Iterable, conclusion, signature=None,
                        max_atoms: int = DEFAULT_MAX_ATOMS) -> Model | None:
    return valid(premises, conclusion, signature, max_atoms).countermodel


def equivalent(a, b, signature: Sequence[str] | None = None, max_atoms: int = DEFAULT_MAX_ATOMS) -> bool:
    fa, fb = lift(a), lift(b)
    sig = _signature([fa, fb], signature, max_atoms)
    differ = MetaOr((MetaAnd((fa, MetaNot(fb))), MetaAnd((MetaNot(fa), fb))))
    return Program(differ, sig).first() < 0


def satisfying_models(formula, signature: Sequence[str], max_atoms: int = DEFAULT_MAX_ATOMS) -> list[Model]:
    f = lift(formula)
    sig = _signature([f], signature, max_atoms)
    prog = Program(f, sig)
    out: list[Model] = []
    idx = prog.first()
    while idx >= 0:
        out.append(Model(sig, idx))
        idx = prog.first(idx + 1)
    return out


def statement_signature(stmts: Iterable[Statement]) -> tuple[str, ...]:
    seen: list[str] = []
    for st in stmts:
        for a in formula_atoms(Holds(st)):
            if a not in seen:
                seen.append(a)
    return tuple(seen)


def backend_name() -> str:
    return _accel.BACKEND


__all__ = [
    "DEFAULT_MAX_ATOMS",
    "HARD_MAX_ATOMS",
    "Holds",
    "MetaAnd",
    "MetaFormula",
    "MetaNot",
    "MetaOr",
    "Program",
    "ValidityReport",
    "countermodel_search",
    "equivalent",
    "meta_and",
    "meta_not",
    "meta_or",
    "satisfying_models",
    "valid",
]
