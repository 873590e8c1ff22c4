"""Term expressions, statements and the canonical ASCII grammar.

Expressions are strictly binary trees. Nested meets and joins always carry
explicit parentheses, so ``a&b&c`` is rejected and the printer emits exactly
what the parser accepts.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Iterator, Sequence, Union


class ParseError(ValueError):
    """Malformed expression or statement text. Carries a 1-based column."""

    def __init__(self, message: str, text: str = "", column: int = 0):
        self.text = text
        self.column = column
        where = f" at column {column}" if column else ""
        super().__init__(f"{message}{where}")


# ---------------------------------------------------------------- expressions


@dataclass(frozen=True, slots=True)
class Atom:
    name: str


@dataclass(frozen=True, slots=True)
class Var:
    """Schema variable. Only ever appears inside axiom patterns."""

    name: str


@dataclass(frozen=True, slots=True)
class Comp:
    arg: "TermExpr"


@dataclass(frozen=True, slots=True)
class Meet:
    left: "TermExpr"
    right: "TermExpr"


@dataclass(frozen=True, slots=True)
class Join:
    left: "TermExpr"
    right: "TermExpr"


@dataclass(frozen=True, slots=True)
class Empty:
    pass


@dataclass(frozen=True, slots=True)
class Universe:
    pass


TermExpr = Union[Atom, Var, Comp, Meet, Join, Empty, Universe]

EMPTY = Empty()
UNIVERSE = Universe()


def children(e: TermExpr) -> tuple:
    if isinstance(e, Comp):
        return (e.arg,)
    if isinstance(e, (Meet, Join)):
        return (e.left, e.right)
    return ()


def with_children(e: TermExpr, kids: Sequence[TermExpr]) -> TermExpr:
    if isinstance(e, Comp):
        return Comp(kids[0])
    if isinstance(e, Meet):
        return Meet(kids[0], kids[1])
    if isinstance(e, Join):
        return Join(kids[0], kids[1])
    return e


def size(e: TermExpr) -> int:
    """Node count."""
    if isinstance(e, Comp):
        return 1 + size(e.arg)
    if isinstance(e, (Meet, Join)):
        return 1 + size(e.left) + size(e.right)
    return 1


def atoms_of(e: TermExpr) -> set[str]:
    if isinstance(e, Atom):
        return {e.name}
    out: set[str] = set()
    for k in children(e):
        out |= atoms_of(k)
    return out


def vars_of(e: TermExpr) -> set[str]:
    if isinstance(e, Var):
        return {e.name}
    out: set[str] = set()
    for k in children(e):
        out |= vars_of(k)
    return out


def subterms(e: TermExpr) -> Iterator[tuple[tuple[int, ...], TermExpr]]:
    """Pre-order walk yielding (relative path, subterm)."""
    yield (), e
    for i, k in enumerate(children(e)):
        for path, sub in subterms(k):
            yield (i,) + path, sub


# ----------------------------------------------------------------- relations


class RelKind(enum.Enum):
    EQ = "="
    NEQ = "!="
    SUBSETEQ = "<="
    NSUBSETEQ = "!<="
    SUPSETEQ = ">="
    NSUPSETEQ = "!>="
    PROPERSUB = "<"
    PROPERSUP = ">"
    NPROPERSUB = "!<"
    NPROPERSUP = "!>"
    CONJOINT = "#"
    DISJOINT = "!#"
    EXHAUSTIVE = "@"
    NONEXHAUSTIVE = "!@"

    @property
    def token(self) -> str:
        return self.value


_NEGATION = {
    RelKind.EQ: RelKind.NEQ,
    RelKind.SUBSETEQ: RelKind.NSUBSETEQ,
    RelKind.SUPSETEQ: RelKind.NSUPSETEQ,
    RelKind.PROPERSUB: RelKind.NPROPERSUB,
    RelKind.PROPERSUP: RelKind.NPROPERSUP,
    RelKind.CONJOINT: RelKind.DISJOINT,
    RelKind.EXHAUSTIVE: RelKind.NONEXHAUSTIVE,
}
_NEGATION.update({v: k for k, v in list(_NEGATION.items())})

_CONVERSE = {
    RelKind.SUBSETEQ: RelKind.SUPSETEQ,
    RelKind.NSUBSETEQ: RelKind.NSUPSETEQ,
    RelKind.PROPERSUB: RelKind.PROPERSUP,
    RelKind.NPROPERSUB: RelKind.NPROPERSUP,
}
_CONVERSE.update({v: k for k, v in list(_CONVERSE.items())})


def negate(rel: RelKind) -> RelKind:
    return _NEGATION[rel]


def converse(rel: RelKind) -> RelKind:
    return _CONVERSE.get(rel, rel)


@dataclass(frozen=True, slots=True)
class Dyadic:
    rel: RelKind
    lhs: TermExpr
    rhs: TermExpr


class Mark(enum.Enum):
    INHABITED = "inh"
    EMPTY = "emp"


@dataclass(frozen=True, slots=True)
class Monadic:
    mark: Mark
    subject: TermExpr


Statement = Union[Dyadic, Monadic]


def sides(st: Statement) -> tuple:
    if isinstance(st, Dyadic):
        return (st.lhs, st.rhs)
    return (st.subject,)


def with_sides(st: Statement, new: Sequence[TermExpr]) -> Statement:
    if isinstance(st, Dyadic):
        return Dyadic(st.rel, new[0], new[1])
    return Monadic(st.mark, new[0])


def normalize(st: Statement) -> Dyadic:
    """Rewrite a monadic claim as the matching dyadic statement against 0."""
    if isinstance(st, Dyadic):
        return st
    rel = RelKind.NEQ if st.mark is Mark.INHABITED else RelKind.EQ
    return Dyadic(rel, st.subject, EMPTY)


def statement_size(st: Statement) -> int:
    return sum(size(s) for s in sides(st))


def statement_atoms(st: Statement) -> set[str]:
    out: set[str] = set()
    for s in sides(st):
        out |= atoms_of(s)
    return out


def statement_vars(st: Statement) -> set[str]:
    out: set[str] = set()
    for s in sides(st):
        out |= vars_of(s)
    return out


def negated(st: Statement) -> Statement:
    if isinstance(st, Monadic):
        other = Mark.EMPTY if st.mark is Mark.INHABITED else Mark.INHABITED
        return Monadic(other, st.subject)
    return Dyadic(negate(st.rel), st.lhs, st.rhs)


def conversed(st: Dyadic) -> Dyadic:
    return Dyadic(converse(st.rel), st.rhs, st.lhs)


# ------------------------------------------------------------------ position


class PositionError(ValueError):
    pass


def subterm_at(st: Statement, path: Sequence[int]) -> TermExpr:
    if not path:
        raise PositionError("empty position path")
    tops = sides(st)
    if not 0 <= path[0] < len(tops):
        raise PositionError(f"no side {path[0]} in statement")
    node = tops[path[0]]
    for step in path[1:]:
        kids = children(node)
        if not 0 <= step < len(kids):
            raise PositionError(f"path {format_path(path)} leaves the expression")
        node = kids[step]
    return node


def _replace_in(e: TermExpr, path: Sequence[int], new: TermExpr) -> TermExpr:
    if not path:
        return new
    kids = list(children(e))
    if not 0 <= path[0] < len(kids):
        raise PositionError("path leaves the expression")
    kids[path[0]] = _replace_in(kids[path[0]], path[1:], new)
    return with_children(e, kids)


def substitute_at(st: Statement, path: Sequence[int], old: TermExpr, new: TermExpr) -> Statement:
    """Replace the single occurrence of ``old`` found at ``path`` by ``new``."""
    found = subterm_at(st, path)
    if found != old:
        raise PositionError(
            f"occurrence mismatch at {format_path(path)}: expected {render(old)}, found {render(found)}"
        )
    tops = list(sides(st))
    tops[path[0]] = _replace_in(tops[path[0]], path[1:], new)
    return with_sides(st, tops)


def positions(st: Statement) -> Iterator[tuple[tuple[int, ...], TermExpr]]:
    for i, top in enumerate(sides(st)):
        for path, sub in subterms(top):
            yield (i,) + path, sub


def format_path(path: Sequence[int]) -> str:
    return ".".join(str(p) for p in path)


def parse_path(text: str) -> tuple[int, ...]:
    parts = text.strip().split(".")
    out = []
    for i, part in enumerate(parts):
        if i == 0 and part in ("lhs", "rhs"):
            out.append(0 if part == "lhs" else 1)
        elif part.isdigit():
            out.append(int(part))
        else:
            raise ParseError(f"bad position path {text!r}")
    return tuple(out)


# ------------------------------------------------------------------- printer


def _operand(e: TermExpr) -> str:
    s = render(e)
    return f"({s})" if isinstance(e, (Meet, Join)) else s


def render(e: TermExpr) -> str:
    """Canonical ASCII print of an expression."""
    if isinstance(e, (Atom, Var)):
        return e.name
    if isinstance(e, Empty):
        return "0"
    if isinstance(e, Universe):
        return "1"
    if isinstance(e, Comp):
        return _operand(e.arg) + "'"
    op = "&" if isinstance(e, Meet) else "|"
    return f"{_operand(e.left)}{op}{_operand(e.right)}"


def render_statement(st: Statement) -> str:
    if isinstance(st, Monadic):
        return f"{st.mark.value}({render(st.subject)})"
    return f"{render(st.lhs)} {st.rel.token} {render(st.rhs)}"


# -------------------------------------------------------------------- parser

_TOKEN = re.compile(
    r"\s*(?:(?P<ident>[a-z][a-z0-9_]*)|(?P<rel>!<=|!>=|!=|!#|!@|!<|!>|<=|>=|<|>|=|#|@)"
    r"|(?P<punct>[()&|'01]))"
)
_REL_BY_TOKEN = {k.token: k for k in RelKind}


class _Lexer:
    def __init__(self, text: str):
        self.text = text
        self.toks: list[tuple[str, str, int]] = []
        pos = 0
        while True:
            while pos < len(text) and text[pos].isspace():
                pos += 1
            if pos >= len(text):
                break
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                raise ParseError(f"unexpected character {text[pos]!r}", text, pos + 1)
            kind = m.lastgroup or "punct"
            start = m.start(kind)
            self.toks.append((kind, m.group(kind), start + 1))
            pos = m.end()
        self.i = 0

    def peek(self) -> tuple[str, str, int] | None:
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self) -> tuple[str, str, int]:
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of input", self.text, len(self.text) + 1)
        self.i += 1
        return tok

    def expect(self, value: str) -> None:
        kind, got, col = self.take()
        if got != value:
            raise ParseError(f"expected {value!r}, got {got!r}", self.text, col)

    def fail(self, message: str) -> ParseError:
        tok = self.peek()
        col = tok[2] if tok else len(self.text) + 1
        return ParseError(message, self.text, col)


def _parse_unary(lx: _Lexer, variables: bool) -> TermExpr:
    kind, val, col = lx.take()
    if kind == "ident":
        node: TermExpr = Var(val) if variables else Atom(val)
    elif val == "0":
        node = EMPTY
    elif val == "1":
        node = UNIVERSE
    elif val == "(":
        node = _parse_expr(lx, variables)
        lx.expect(")")
    else:
        raise ParseError(f"expected a term, got {val!r}", lx.text, col)
    while (tok := lx.peek()) is not None and tok[1] == "'":
        lx.take()
        node = Comp(node)
    return node


def _parse_expr(lx: _Lexer, variables: bool) -> TermExpr:
    left = _parse_unary(lx, variables)
    tok = lx.peek()
    if tok is None or tok[1] not in ("&", "|"):
        return left
    op = lx.take()[1]
    right = _parse_unary(lx, variables)
    nxt = lx.peek()
    if nxt is not None and nxt[1] in ("&", "|"):
        raise lx.fail("nested '&'/'|' needs explicit parentheses")
    return Meet(left, right) if op == "&" else Join(left, right)


def parse_expr(text: str, variables: bool = False) -> TermExpr:
    lx = _Lexer(text)
    e = _parse_expr(lx, variables)
    if lx.peek() is not None:
        raise lx.fail("trailing input")
    return e


def _parse_statement(lx: _Lexer, variables: bool) -> Statement:
    tok = lx.peek()
    nxt = lx.toks[lx.i + 1] if lx.i + 1 < len(lx.toks) else None
    if tok and tok[0] == "ident" and tok[1] in ("inh", "emp") and nxt and nxt[1] == "(":
        lx.take()
        lx.expect("(")
        subject = _parse_expr(lx, variables)
        lx.expect(")")
        return Monadic(Mark(tok[1]), subject)
    lhs = _parse_expr(lx, variables)
    tok = lx.peek()
    if tok is None or tok[0] != "rel":
        raise lx.fail("expected a relation token")
    lx.take()
    rhs = _parse_expr(lx, variables)
    return Dyadic(_REL_BY_TOKEN[tok[1]], lhs, rhs)


def parse_statement(text: str, variables: bool = False) -> Statement:
    """Parse one statement. With ``variables`` identifiers become schema variables."""
    lx = _Lexer(text)
    st = _parse_statement(lx, variables)
    if lx.peek() is not None:
        raise lx.fail("trailing input")
    return st


# ----------------------------------------------------------- categorical forms


class FormKind(enum.Enum):
    A = "A"
    E = "E"
    I = "I"  # noqa: E741
    O = "O"  # noqa: E741
    AUM = "Aum"
    EUM = "Eum"
    IUM = "Ium"
    OUM = "Oum"
    STAR = "Star"


UMLAUT = frozenset({FormKind.AUM, FormKind.EUM, FormKind.IUM, FormKind.OUM})


@dataclass(frozen=True)
class CategoricalForm:
    kind: FormKind
    subject: str
    predicate: str | None = None

    def __post_init__(self):
        if self.kind is FormKind.STAR:
            if self.predicate is not None:
                raise ValueError("Star carries exactly one atom")
        elif self.predicate is None:
            raise ValueError(f"{self.kind.value} needs a predicate atom")

    def __str__(self) -> str:
        if self.kind is FormKind.STAR:
            return f"Star({self.subject})"
        return f"{self.kind.value}({self.subject},{self.predicate})"
