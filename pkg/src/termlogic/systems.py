"""Axiom schemas for the three systems plus the bridge definitions.

Schemas are plain data over schema variables; the kernel interprets them with
one generic matcher.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Mapping

from .terms import (
    Statement,
    TermExpr,
    Var,
    children,
    parse_statement,
    render_statement,
    sides,
    statement_vars,
    with_children,
    with_sides,
)


class SchemaKind(enum.Enum):
    AXIOM = "axiom"
    LEMMA = "lemma"
    DEFINITION = "definition"


@dataclass(frozen=True)
class AxiomSchema:
    name: str
    premises: tuple[Statement, ...]
    conclusion: Statement
    bidirectional: bool = False
    kind: SchemaKind = SchemaKind.AXIOM
    # Axioms a lemma stands for when usage is reported.
    requires: frozenset[str] = frozenset()

    def __post_init__(self):
        if self.bidirectional and len(self.premises) != 1:
            raise ValueError(f"{self.name}: only one-premise schemas can be bidirectional")
        if self.premises:
            bound = set().union(*(statement_vars(p) for p in self.premises))
            loose = statement_vars(self.conclusion) - bound
            if loose:
                raise ValueError(f"{self.name}: conclusion variables {sorted(loose)} not in premises")
        if self.kind is SchemaKind.LEMMA and not self.requires:
            raise ValueError(f"{self.name}: a lemma must declare the axioms it stands for")

    @property
    def variables(self) -> tuple[str, ...]:
        names: set[str] = statement_vars(self.conclusion)
        for p in self.premises:
            names |= statement_vars(p)
        return tuple(sorted(names))

    @property
    def usage(self) -> frozenset[str]:
        return self.requires if self.kind is SchemaKind.LEMMA else frozenset({self.name})

    def __str__(self) -> str:
        arrow = "<=>" if self.bidirectional else "|-"
        lhs = ", ".join(render_statement(p) for p in self.premises)
        concl = render_statement(self.conclusion)
        return f"{self.name}: {lhs} {arrow} {concl}" if lhs else f"{self.name}: {concl}"


@dataclass(frozen=True)
class SystemDef:
    name: str
    schemas: tuple[AxiomSchema, ...]
    _index: Mapping[str, AxiomSchema] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        index = {s.name: s for s in self.schemas}
        if len(index) != len(self.schemas):
            raise ValueError(f"duplicate schema names in {self.name}")
        object.__setattr__(self, "_index", index)

    def __contains__(self, name: str) -> bool:
        return name in self._index

    def get(self, name: str) -> AxiomSchema | None:
        return self._index.get(name)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(s.name for s in self.schemas)

    def extended(self, extra: Iterable[AxiomSchema]) -> "SystemDef":
        return SystemDef(self.name, self.schemas + tuple(extra))


def schema(
    name: str,
    premises: Iterable[str],
    conclusion: str,
    *,
    bidirectional: bool = False,
    kind: SchemaKind = SchemaKind.AXIOM,
    requires: Iterable[str] = (),
) -> AxiomSchema:
    return AxiomSchema(
        name=name,
        premises=tuple(parse_statement(p, variables=True) for p in premises),
        conclusion=parse_statement(conclusion, variables=True),
        bidirectional=bidirectional,
        kind=kind,
        requires=frozenset(requires),
    )


class BindingError(ValueError):
    pass


def fill(e: TermExpr, binding: Mapping[str, TermExpr]) -> TermExpr:
    if isinstance(e, Var):
        try:
            return binding[e.name]
        except KeyError:
            raise BindingError(f"no binding for variable {e.name}") from None
    kids = children(e)
    if not kids:
        return e
    return with_children(e, [fill(k, binding) for k in kids])


def match(pattern: TermExpr, term: TermExpr, binding: Mapping[str, TermExpr] | None = None) -> dict | None:
    """First-order matching of a schema pattern against a ground term."""
    out = dict(binding or {})
    stack = [(pattern, term)]
    while stack:
        p, t = stack.pop()
        if isinstance(p, Var):
            seen = out.get(p.name)
            if seen is None:
                out[p.name] = t
            elif seen != t:
                return None
            continue
        if type(p) is not type(t):
            return None
        kids = children(p)
        if not kids:
            if p != t:
                return None
            continue
        stack.extend(zip(kids, children(t)))
    return out


def match_statement(pattern: Statement, st: Statement, binding: Mapping[str, TermExpr] | None = None) -> dict | None:
    if type(pattern) is not type(st):
        return None
    if getattr(pattern, "rel", None) != getattr(st, "rel", None) or getattr(pattern, "mark", None) != getattr(st, "mark", None):
        return None
    out: dict | None = dict(binding or {})
    for p, t in zip(sides(pattern), sides(st)):
        out = match(p, t, out)
        if out is None:
            return None
    return out


def fill_statement(st: Statement, binding: Mapping[str, TermExpr]) -> Statement:
    return with_sides(st, [fill(s, binding) for s in sides(st)])


def instantiate(sch: AxiomSchema, binding: Mapping[str, TermExpr]) -> tuple[tuple[Statement, ...], Statement]:
    """Simultaneous replacement of every schema variable in all patterns."""
    missing = [v for v in sch.variables if v not in binding]
    if missing:
        raise BindingError(f"{sch.name}: binding misses {', '.join(missing)}")
    prems = tuple(fill_statement(p, binding) for p in sch.premises)
    return prems, fill_statement(sch.conclusion, binding)


# ------------------------------------------------------------------- systems

LEMMA = SchemaKind.LEMMA
DEFINITION = SchemaKind.DEFINITION


@lru_cache(maxsize=None)
def lc_system() -> SystemDef:
    return SystemDef(
        "LC",
        (
            schema("LC1", [], "b&c = c&b"),
            schema("LC2", [], "b&(c&d) = (b&c)&d"),
            schema("LC3", ["b&c != 0"], "c != 0"),
            schema("LC4", ["b&c = b"], "c'&b' = c'", bidirectional=True),
            schema("LC5", ["b&c' = b"], "c&b' = c", bidirectional=True),
            schema("LC6", ["b&c != 0"], "b != 0", kind=LEMMA, requires=["LC3", "LC1"]),
        ),
    )


@lru_cache(maxsize=None)
def ml_system() -> SystemDef:
    return SystemDef(
        "ML",
        (
            schema("ML1", ["b # c"], "c # b", bidirectional=True),
            schema("ML2", ["b <= c"], "c' <= b'", bidirectional=True),
            schema("ML3", ["b <= c'"], "c <= b'", bidirectional=True),
            schema("ML4", ["b <= c", "c <= d"], "b <= d"),
            schema("ML5", ["b # c", "c <= d"], "b # d"),
            schema("ML6", ["c # b", "c <= d"], "d # b", kind=LEMMA, requires=["ML5", "ML1"]),
        ),
    )


@lru_cache(maxsize=None)
def bl_system() -> SystemDef:
    return SystemDef(
        "BL",
        (
            schema("BL-idem-meet", [], "b&b = b"),
            schema("BL-idem-join", [], "b|b = b"),
            schema("BL-comm-meet", [], "b&c = c&b"),
            schema("BL-comm-join", [], "b|c = c|b"),
            schema("BL-assoc-meet", [], "(b&c)&d = b&(c&d)"),
            schema("BL-assoc-join", [], "(b|c)|d = b|(c|d)"),
            schema("BL-absorb-meet", [], "b&(b|c) = b"),
            schema("BL-absorb-join", [], "b|(b&c) = b"),
            schema("BL-dist-meet", [], "b&(c|d) = (b&c)|(b&d)"),
            schema("BL-dist-join", [], "b|(c&d) = (b|c)&(b|d)"),
            schema("BL-ident-meet", [], "b&1 = b"),
            schema("BL-ident-join", [], "b|0 = b"),
            schema("BL-compl-meet", [], "b&b' = 0"),
            schema("BL-compl-join", [], "b|b' = 1"),
        ),
    )


def _req(*short: str) -> list[str]:
    return ["BL-" + n for n in short]


_INVOL = ("absorb-join", "comm-join", "comm-meet", "compl-join", "compl-meet", "dist-join", "dist-meet",
          "ident-join", "ident-meet")
_DEMORGAN = _INVOL + ("assoc-join", "assoc-meet", "idem-join", "idem-meet")


@lru_cache(maxsize=None)
def bl_theorems() -> tuple[AxiomSchema, ...]:
    """Derived BL laws. Each one is backed by a checked corpus script whose
    axiom usage equals the declared ``requires`` set."""
    return (
        schema("BL-dom-meet", [], "b&0 = 0", kind=LEMMA, requires=_req("assoc-meet", "compl-meet", "idem-meet")),
        schema("BL-dom-join", [], "b|1 = 1", kind=LEMMA, requires=_req("assoc-join", "compl-join", "idem-join")),
        schema("BL-subsum", ["b&c = b"], "b|c = c", bidirectional=True, kind=LEMMA,
               requires=_req("absorb-join", "absorb-meet", "comm-join", "comm-meet")),
        schema("BL-antisym", ["b&c = b", "b|c = b"], "b = c", kind=LEMMA,
               requires=_req("absorb-join", "comm-join", "comm-meet")),
        schema("BL-invol", [], "b'' = b", kind=LEMMA, requires=_req(*_INVOL)),
        schema("BL-compl-eq", ["b = c"], "b' = c'", bidirectional=True, kind=LEMMA,
               requires=_req(*_INVOL, "idem-meet")),
        schema("BL-uniq-compl-1", ["b&c = 0", "b|c = 1"], "c = b'", kind=LEMMA,
               requires=_req("comm-meet", "compl-join", "compl-meet", "dist-meet", "ident-meet")),
        schema("BL-uniq-compl-2", ["b&c' = 0", "b|c' = 1"], "c = b", kind=LEMMA,
               requires=_req(*_INVOL, "idem-meet")),
        schema("BL-demorgan-meet", [], "(b&c)' = b'|c'", kind=LEMMA, requires=_req(*_DEMORGAN)),
        schema("BL-demorgan-join", [], "(b|c)' = b'&c'", kind=LEMMA, requires=_req(*_DEMORGAN)),
    )


@lru_cache(maxsize=None)
def bridge_definitions() -> tuple[AxiomSchema, ...]:
    return (
        schema("D1", ["b <= c"], "b&c = b", bidirectional=True, kind=DEFINITION),
        schema("D2", ["b # c"], "b&c != 0", bidirectional=True, kind=DEFINITION),
    )


@lru_cache(maxsize=None)
def lcd_system() -> SystemDef:
    return SystemDef("LC+D", lc_system().schemas + bridge_definitions())


SYSTEM_NAMES = ("LC", "ML", "BL", "LC+D")


def get_system(name: str) -> SystemDef:
    table = {"LC": lc_system, "ML": ml_system, "BL": bl_system, "LC+D": lcd_system}
    try:
        return table[name]()
    except KeyError:
        raise KeyError(f"unknown system {name!r}; expected one of {', '.join(SYSTEM_NAMES)}") from None


def find_lemma(name: str) -> AxiomSchema | None:
    for s in bl_theorems():
        if s.name == name:
            return s
    return None
