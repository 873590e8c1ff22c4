"""Minterm-emptiness semantics.

A signature of n atoms has 2**n minterms. Minterm ``k`` is the bitmask whose
bit ``i`` says atom ``i`` occurs positively. A model never stores elements,
only whether each minterm is inhabited. It is packed into one integer whose
bit ``k`` is the inhabited flag of minterm ``k``; that integer also fixes the
enumeration order, so the all-empty model comes first.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .terms import (
    Atom,
    Comp,
    Empty,
    Join,
    Mark,
    Meet,
    Monadic,
    RelKind,
    Statement,
    TermExpr,
    Universe,
    Var,
)


class SignatureError(ValueError):
    pass


def check_signature(signature: Sequence[str]) -> tuple[str, ...]:
    sig = tuple(signature)
    if len(set(sig)) != len(sig):
        raise SignatureError(f"duplicate atom in signature {sig}")
    for name in sig:
        if not name or not name[0].islower():
            raise SignatureError(f"bad atom name {name!r}")
    return sig


def full_mask(n_atoms: int) -> int:
    return (1 << (1 << n_atoms)) - 1


def denote_mask(expr: TermExpr, signature: Sequence[str]) -> int:
    """Denotation as a bitset over minterms."""
    n = len(signature)
    index = {a: i for i, a in enumerate(signature)}
    everything = full_mask(n)

    def go(e: TermExpr) -> int:
        if isinstance(e, Atom):
            try:
                i = index[e.name]
            except KeyError:
                raise SignatureError(f"atom {e.name!r} not in signature {tuple(signature)}") from None
            return sum(1 << k for k in range(1 << n) if k >> i & 1)
        if isinstance(e, Comp):
            return everything & ~go(e.arg)
        if isinstance(e, Meet):
            return go(e.left) & go(e.right)
        if isinstance(e, Join):
            return go(e.left) | go(e.right)
        if isinstance(e, Empty):
            return 0
        if isinstance(e, Universe):
            return everything
        if isinstance(e, Var):
            raise SignatureError(f"schema variable {e.name!r} has no denotation")
        raise TypeError(f"not a term: {e!r}")

    return go(expr)


def denote(expr: TermExpr, signature: Sequence[str]) -> frozenset[int]:
    """Set of minterms (as bitmasks) making up the class."""
    mask = denote_mask(expr, signature)
    return frozenset(k for k in range(1 << len(signature)) if mask >> k & 1)


def minterm_label(k: int, signature: Sequence[str], prime: str = "'") -> str:
    return " ".join(a if k >> i & 1 else a + prime for i, a in enumerate(signature))


@dataclass(frozen=True)
class Model:
    signature: tuple[str, ...]
    inhabited: int

    def __post_init__(self):
        if not 0 <= self.inhabited <= full_mask(len(self.signature)):
            raise ValueError("inhabited bits exceed the minterm count")

    def is_inhabited(self, minterm: int) -> bool:
        return bool(self.inhabited >> minterm & 1)

    def table(self) -> list[tuple[str, str]]:
        return [
            (minterm_label(k, self.signature), "inhabited" if self.is_inhabited(k) else "empty")
            for k in range(1 << len(self.signature))
        ]

    def render(self) -> str:
        rows = self.table()
        width = max(len(r[0]) for r in rows)
        return "\n".join(f"{label.ljust(width)}  {state}" for label, state in rows)


def all_models(signature: Sequence[str]) -> Iterator[Model]:
    sig = check_signature(signature)
    for i in range(full_mask(len(sig)) + 1):
        yield Model(sig, i)


def _none(model: Model, mask: int) -> bool:
    return model.inhabited & mask == 0


def holds(stmt: Statement, model: Model) -> bool:
    """Truth of a statement in a model, straight from the definitions."""
    sig = model.signature
    if isinstance(stmt, Monadic):
        m = denote_mask(stmt.subject, sig)
        return (not _none(model, m)) if stmt.mark is Mark.INHABITED else _none(model, m)
    everything = full_mask(len(sig))
    l = denote_mask(stmt.lhs, sig)
    r = denote_mask(stmt.rhs, sig)
    rel = stmt.rel
    eq = _none(model, l ^ r)
    sub = _none(model, l & ~r)
    sup = _none(model, r & ~l)
    if rel is RelKind.EQ:
        return eq
    if rel is RelKind.NEQ:
        return not eq
    if rel is RelKind.SUBSETEQ:
        return sub
    if rel is RelKind.NSUBSETEQ:
        return not sub
    if rel is RelKind.SUPSETEQ:
        return sup
    if rel is RelKind.NSUPSETEQ:
        return not sup
    if rel is RelKind.PROPERSUB:
        return sub and not eq
    if rel is RelKind.NPROPERSUB:
        return not (sub and not eq)
    if rel is RelKind.PROPERSUP:
        return sup and not eq
    if rel is RelKind.NPROPERSUP:
        return not (sup and not eq)
    if rel is RelKind.CONJOINT:
        return not _none(model, l & r)
    if rel is RelKind.DISJOINT:
        return _none(model, l & r)
    if rel is RelKind.EXHAUSTIVE:
        return _none(model, everything & ~(l | r))
    if rel is RelKind.NONEXHAUSTIVE:
        return not _none(model, everything & ~(l | r))
    raise TypeError(f"unknown relation {rel!r}")

