"""Representations of the eight categorical relations and the Star form.

Rows are stored as ASCII templates over the placeholders ``b`` (subject) and
``c`` (predicate) and filled with the form's atoms on demand.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from .modelcheck import Holds, MetaAnd, MetaFormula, MetaNot, lift
from .systems import fill_statement
from .terms import (
    UMLAUT,
    Atom,
    CategoricalForm,
    FormKind,
    Statement,
    conversed,
    parse_statement,
    render_statement,
)

K = FormKind

# Equational variant then order variant for each of the six columns:
# meet against 0, join against 1, meet/join against the subject, then the predicate.
_TABLE1: dict[FormKind, tuple[tuple[str, ...], tuple[str, ...]]] = {
    K.I: (("b&c != 0", "b'|c' != 1", "b&c' != b", "b'|c != b'", "b'&c != c", "b|c' != c'"),
          ("b&c > 0", "b'|c' < 1", "b&c' < b", "b'|c > b'", "b'&c < c", "b|c' > c'")),
    K.E: (("b&c = 0", "b'|c' = 1", "b&c' = b", "b'|c = b'", "b'&c = c", "b|c' = c'"),
          ("b&c <= 0", "b'|c' >= 1", "b&c' >= b", "b'|c <= b'", "b'&c >= c", "b|c' <= c'")),
    K.O: (("b&c' != 0", "b'|c != 1", "b&c != b", "b'|c' != b'", "b'&c' != c'", "b|c != c"),
          ("b&c' > 0", "b'|c < 1", "b&c < b", "b'|c' > b'", "b'&c' < c'", "b|c > c")),
    K.A: (("b&c' = 0", "b'|c = 1", "b&c = b", "b'|c' = b'", "b'&c' = c'", "b|c = c"),
          ("b&c' <= 0", "b'|c >= 1", "b&c >= b", "b'|c' <= b'", "b'&c' >= c'", "b|c <= c")),
    K.OUM: (("b'&c != 0", "b|c' != 1", "b'&c' != b'", "b|c != b", "b&c != c", "b'|c' != c'"),
            ("b'&c > 0", "b|c' < 1", "b'&c' < b'", "b|c > b", "b&c < c", "b'|c' > c'")),
    K.AUM: (("b'&c = 0", "b|c' = 1", "b'&c' = b'", "b|c = b", "b&c = c", "b'|c' = c'"),
            ("b'&c <= 0", "b|c' >= 1", "b'&c' >= b'", "b|c <= b", "b&c >= c", "b'|c' <= c'")),
    K.IUM: (("b'&c' != 0", "b|c != 1", "b'&c != b'", "b|c' != b", "b&c' != c'", "b'|c != c"),
            ("b'&c' > 0", "b|c < 1", "b'&c < b'", "b|c' > b", "b&c' < c'", "b'|c > c")),
    K.EUM: (("b'&c' = 0", "b|c = 1", "b'&c = b'", "b|c' = b", "b&c' = c'", "b'|c = c"),
            ("b'&c' <= 0", "b|c >= 1", "b'&c >= b'", "b|c' <= b", "b&c' >= c'", "b'|c <= c")),
}

TABLE1_COLUMNS = ("meet 0", "join 1", "meet subj", "join subj", "meet pred", "join pred")

# plain, complemented (negated inside), obverse, reverse, inverse, converse, contrapositive
_TABLE2: dict[FormKind, tuple[str, ...]] = {
    K.I: ("b # c", "b !# c", "b !<= c'", "b' !>= c", "b' !@ c'", "c # b", "c' !@ b'"),
    K.E: ("b !# c", "b # c", "b <= c'", "b' >= c", "b' @ c'", "c !# b", "c' @ b'"),
    K.O: ("b !<= c", "b <= c", "b # c'", "b' !@ c", "b' !>= c'", "c !>= b", "c' !<= b'"),
    K.A: ("b <= c", "b !<= c", "b !# c'", "b' @ c", "b' >= c'", "c >= b", "c' <= b'"),
    K.OUM: ("b !>= c", "b >= c", "b !@ c'", "b' # c", "b' !<= c'", "c !<= b", "c' !>= b'"),
    K.AUM: ("b >= c", "b !>= c", "b @ c'", "b' !# c", "b' <= c'", "c <= b", "c' >= b'"),
    K.IUM: ("b !@ c", "b @ c", "b !>= c'", "b' !<= c", "b' # c'", "c !@ b", "c' # b'"),
    K.EUM: ("b @ c", "b !@ c", "b >= c'", "b' <= c", "b' !# c'", "c @ b", "c' !# b'"),
}

TABLE2_COLUMNS = ("plain", "complemented", "obverse", "reverse", "inverse", "converse", "contrapositive")
TABLE2_DERIVED_COLUMNS = ("converse of obverse", "converse of reverse")

_NO_COMPLEMENT: dict[FormKind, tuple[str, ...]] = {
    K.I: ("b&c > 0",),
    K.E: ("b&c = 0",),
    K.O: ("b&c < b", "b|c > c"),
    K.A: ("b&c = b", "b|c = c"),
    K.OUM: ("b&c < c", "b|c > b"),
    K.AUM: ("b&c = c", "b|c = b"),
    K.IUM: ("b|c < 1",),
    K.EUM: ("b|c = 1",),
}

# Converse of a relation on (b, c) read as a relation on (c, b).
BREVE = {K.I: K.I, K.E: K.E, K.O: K.OUM, K.A: K.AUM, K.OUM: K.O, K.AUM: K.A, K.IUM: K.IUM, K.EUM: K.EUM}

_LC = {K.A: "b&c = b", K.E: "b&c' = b", K.I: "b&c != 0", K.O: "b&c' != 0", K.STAR: "b != 0"}
_ML = {K.A: "b <= c", K.E: "b <= c'", K.I: "b # c", K.O: "b # c'", K.STAR: "b # b"}


class TranslationError(ValueError):
    pass


@lru_cache(maxsize=None)
def _pattern(text: str) -> Statement:
    return parse_statement(text, variables=True)


def _fill(text: str, form: CategoricalForm) -> Statement:
    binding = {"b": Atom(form.subject)}
    if form.predicate is not None:
        binding["c"] = Atom(form.predicate)
    return fill_statement(_pattern(text), binding)


def _as_form(form, subject: str = "b", predicate: str = "c") -> CategoricalForm:
    if isinstance(form, CategoricalForm):
        return form
    kind = form if isinstance(form, FormKind) else FormKind(form)
    return CategoricalForm(kind, subject, None if kind is K.STAR else predicate)


def to_system(form: CategoricalForm, system: str) -> Statement:
    """Surface form of a categorical statement in LC or ML."""
    table = {"LC": _LC, "ML": _ML}.get(system)
    if table is None:
        raise TranslationError(f"no surface forms for system {system!r}")
    if form.kind in UMLAUT:
        raise TranslationError(f"{form.kind.value} has no {system} surface form")
    return _fill(table[form.kind], form)


def canonical(form) -> Statement:
    """The plain relational reading; the reference for every table cell."""
    f = _as_form(form)
    if f.kind is K.STAR:
        return _fill(_ML[K.STAR], f)
    return _fill(_TABLE2[f.kind][0], f)


def _relational(form) -> CategoricalForm:
    f = _as_form(form)
    if f.kind is K.STAR:
        raise TranslationError("Star has no table row")
    return f


def table1_row(form) -> list[Statement]:
    """Twelve cells: equational variants of the six columns, then order variants."""
    f = _relational(form)
    eq, order = _TABLE1[f.kind]
    return [_fill(t, f) for t in eq + order]


def table1_pairs(form) -> list[tuple[Statement, Statement]]:
    cells = table1_row(form)
    return list(zip(cells[:6], cells[6:]))


def table2_row(form) -> list[MetaFormula]:
    f = _relational(form)
    texts = _TABLE2[f.kind]
    row: list[MetaFormula] = [lift(_fill(t, f)) for t in texts]
    row[1] = MetaNot(row[1])
    return row


def table2_derived(form) -> list[Statement]:
    """Converse of the obverse and converse of the reverse."""
    f = _relational(form)
    texts = _TABLE2[f.kind]
    obverse, reverse = _pattern(texts[2]), _pattern(texts[3])
    return [fill_statement(conversed(s), _binding(f)) for s in (obverse, reverse)]


def _binding(f: CategoricalForm) -> dict:
    return {"b": Atom(f.subject), "c": Atom(f.predicate)}


def no_complement_row(form) -> list[Statement]:
    f = _relational(form)
    return [_fill(t, f) for t in _NO_COMPLEMENT[f.kind]]


def render_formula(f: MetaFormula) -> str:
    if isinstance(f, MetaNot):
        return f"~({render_formula(f.item)})"
    if isinstance(f, Holds):
        return render_statement(f.statement)
    joiner = " and " if isinstance(f, MetaAnd) else " or "
    return "(" + joiner.join(render_formula(i) for i in f.items) + ")"


def _grid(header: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    widths = [max(len(r[i]) for r in [header, *rows]) for i in range(len(header))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in [header, *rows]]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


def render_table1(forms: Sequence[FormKind] = tuple(_TABLE1)) -> str:
    rows = []
    for kind in forms:
        cells = [render_statement(s) for s in table1_row(kind)]
        rows.append([kind.value, "eq", *cells[:6]])
        rows.append(["", "order", *cells[6:]])
    return _grid(["rel", "variant", *TABLE1_COLUMNS], rows)


def render_table2(forms: Sequence[FormKind] = tuple(_TABLE2)) -> str:
    rows = [
        [k.value, *(render_formula(x) for x in table2_row(k)), *(render_statement(s) for s in table2_derived(k))]
        for k in forms
    ]
    return _grid(["rel", *TABLE2_COLUMNS, *TABLE2_DERIVED_COLUMNS], rows)


def render_no_complement(forms: Sequence[FormKind] = tuple(_NO_COMPLEMENT)) -> str:
    rows = [[k.value, "; ".join(render_statement(s) for s in no_complement_row(k))] for k in forms]
    return _grid(["rel", "without complement"], rows)


def render_system_table(system: str) -> str:
    kinds = (K.A, K.E, K.I, K.O, K.STAR)
    rows = []
    for k in kinds:
        form = _as_form(k, "s", "p") if k is not K.STAR else CategoricalForm(K.STAR, "s")
        rows.append([k.value, render_statement(to_system(form, system))])
    return _grid(["form", system], rows)
