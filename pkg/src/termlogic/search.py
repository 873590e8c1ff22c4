"""Bounded forward proof search and bounded non-provability exhaustion.

The search saturates rounds: round ``r`` holds every statement whose shortest
derivation has height ``r`` (premises sit at height 0). Candidates per round:

* premise-carrying schemas (and reverses of bidirectional ones) matched
  against known lines;
* premise-free equation schemas used as rewrite rules at any position of a
  known line (the instance line itself is exempt from the size cap);
* premise-free schemas instantiated directly from the binding pool, that is
  subexpressions of premises and goal plus one complement layer;
* replacement of equals by equals with any known equation.

Within a round the winner for each new statement is the candidate with the
smallest tie-break key, so results never depend on hash order. The kernel
re-checks every proof before it is returned.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence, Union

from .kernel import Line, Premise, Proof, SchemaApply, SubstEquals, check_proof
from .systems import AxiomSchema, SystemDef, fill, fill_statement, get_system, instantiate, match, match_statement
from .terms import (
    Comp,
    Dyadic,
    RelKind,
    Statement,
    TermExpr,
    format_path,
    normalize,
    positions,
    render,
    render_statement,
    size,
    statement_atoms,
    statement_size,
    substitute_at,
    subterms,
    sides,
)

DEFAULT_DEPTH = 7
DEFAULT_SIZE_LIMIT = 9
DEFAULT_MAX_STATEMENTS = 200_000


@dataclass(frozen=True)
class SearchConfig:
    depth: int = DEFAULT_DEPTH
    size_limit: int = DEFAULT_SIZE_LIMIT
    max_statements: int = DEFAULT_MAX_STATEMENTS
    time_limit: float | None = None

    def __post_init__(self):
        if self.depth < 1 or self.size_limit < 1 or self.max_statements < 1:
            raise ValueError("search limits must be positive")


class Status:
    SATURATED = "saturated"          # no new statement appeared: closure complete under the size cap
    DEPTH = "depth-exhausted"        # every round up to the depth limit was explored
    RESOURCE = "resource-limit"      # statement or time budget hit before the depth limit


@dataclass(frozen=True)
class ExhaustionCertificate:
    system: str
    premises: tuple[Statement, ...]
    goal: Statement
    depth_limit: int
    size_limit: int
    depth_reached: int
    statements: int
    status: str

    @property
    def exhaustive(self) -> bool:
        return self.status in (Status.SATURATED, Status.DEPTH)

    def render(self) -> str:
        prem = "; ".join(render_statement(p) for p in self.premises) or "(none)"
        lines = [
            f"system: {self.system}",
            f"premises: {prem}",
            f"goal: {render_statement(self.goal)}",
            f"limits: depth {self.depth_limit}, size {self.size_limit}",
            f"depth reached: {self.depth_reached}",
            f"statements generated: {self.statements}",
            f"status: {self.status}",
        ]
        if self.exhaustive:
            lines.append("goal absent from the bounded closure (bounded evidence, not a proof of underivability)")
        else:
            lines.append("search stopped on a resource limit; nothing is certified")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class NotFound:
    certificate: ExhaustionCertificate


SearchResult = Union[Proof, NotFound]


class GoalDerivable(Exception):
    def __init__(self, proof: Proof):
        super().__init__("goal is derivable within the bounds")
        self.proof = proof


# ------------------------------------------------------------ derivations


@dataclass(frozen=True)
class _Apply:
    schema: str
    binding: tuple
    reverse: bool
    sources: tuple[Statement, ...]


@dataclass(frozen=True)
class _Subst:
    equation: Statement
    target: Statement
    path: tuple[int, ...]
    r2l: bool


@dataclass(frozen=True)
class _Rewrite:
    """Instance of a premise-free equation schema applied at one position."""
    schema: str
    binding: tuple
    target: Statement
    path: tuple[int, ...]
    r2l: bool


_Derivation = Union[_Apply, _Subst, _Rewrite]


def _bind_text(binding: tuple) -> str:
    return ",".join(f"{v}:={render(e)}" for v, e in binding)


def _key(d: _Derivation, height: Mapping[Statement, int]) -> tuple:
    # Shallow parents first, then schema name, binding text and position.
    depth = sum(height[p] for p in _parents(d))
    if isinstance(d, _Apply):
        return (depth, 0, d.schema, _bind_text(d.binding), "", d.reverse, tuple(render_statement(s) for s in d.sources))
    if isinstance(d, _Rewrite):
        return (depth, 1, d.schema, _bind_text(d.binding), format_path(d.path), d.r2l, (render_statement(d.target),))
    return (depth, 2, "", render_statement(d.equation), format_path(d.path), d.r2l, (render_statement(d.target),))


def _parents(d: _Derivation) -> tuple[Statement, ...]:
    if isinstance(d, _Apply):
        return d.sources
    if isinstance(d, _Subst):
        return (d.equation, d.target)
    return (d.target,)


# ------------------------------------------------------------- the engine


def _is_eq(st: Statement) -> bool:
    return isinstance(st, Dyadic) and st.rel is RelKind.EQ


def _pool(stmts: Iterable[Statement]) -> list[TermExpr]:
    found: dict[TermExpr, None] = {}
    for st in stmts:
        for top in sides(st):
            for _, sub in subterms(top):
                found.setdefault(sub, None)
    for e in list(found):
        found.setdefault(Comp(e), None)
    return sorted(found, key=lambda e: (len(render(e)), render(e)))


class _Engine:
    def __init__(self, premises: Sequence[Statement], goal: Statement, system: SystemDef, config: SearchConfig):
        self.system = system
        self.config = config
        self.premises = tuple(normalize(p) for p in premises)
        self.goal = normalize(goal)
        self.signature = set().union(*(statement_atoms(s) for s in self.premises + (self.goal,)))
        self.round_of: dict[Statement, int] = {}
        self.how: dict[Statement, _Derivation | None] = {}
        self.order: list[Statement] = []
        self.rounds_done = 0
        self.equations: list[Statement] = []
        # subterm -> (statement, path, statement size)
        self.occurrences: dict[TermExpr, list[tuple[Statement, tuple[int, ...], int]]] = {}
        free = [s for s in system.schemas if not s.premises]
        self.rewrites = [(s, r2l) for s in free if _is_eq(s.conclusion) for r2l in (False, True)]
        self.free = free
        self.guarded = [s for s in system.schemas if s.premises]
        for p in self.premises:
            if p not in self.round_of:
                self._add(p, 0, None)

    # bookkeeping
    def _add(self, st: Statement, rnd: int, how: _Derivation | None) -> None:
        self.round_of[st] = rnd
        self.how[st] = how
        self.order.append(st)
        if _is_eq(st):
            self.equations.append(st)
        n = statement_size(st)
        for path, sub in positions(st):
            self.occurrences.setdefault(sub, []).append((st, path, n))

    def _fits(self, st: Statement) -> bool:
        return statement_size(st) <= self.config.size_limit and statement_atoms(st) <= self.signature

    # candidate generation for one round
    def _candidates(self, fresh: list[Statement]) -> dict[Statement, _Derivation]:
        out: dict[Statement, _Derivation] = {}
        known = self.order
        fresh_set = set(fresh)

        def offer(st: Statement, d: _Derivation) -> None:
            if st in self.round_of or not self._fits(st):
                return
            cur = out.get(st)
            if cur is None or _key(d, self.round_of) < _key(cur, self.round_of):
                out[st] = d

        for sch in self.guarded:
            for reverse in ((False, True) if sch.bidirectional else (False,)):
                prems, concl = (sch.premises, sch.conclusion)
                if reverse:
                    prems, concl = (sch.conclusion,), sch.premises[0]
                self._apply(sch, prems, concl, reverse, known, fresh_set, offer)

        cap = self.config.size_limit
        for st in fresh:
            room = cap - statement_size(st)
            for path, sub in positions(st):
                sub_size = size(sub)
                for sch, r2l in self.rewrites:
                    lhs, rhs = sch.conclusion.lhs, sch.conclusion.rhs
                    src, dst = (rhs, lhs) if r2l else (lhs, rhs)
                    b = match(src, sub)
                    if b is None or set(b) != set(sch.variables):
                        continue
                    new_side = fill(dst, b)
                    if size(new_side) - sub_size > room:
                        continue
                    result = substitute_at(st, path, sub, new_side)
                    offer(result, _Rewrite(sch.name, tuple(sorted(b.items())), st, path, r2l))

        for eq in self.equations:
            new_eq = eq in fresh_set
            for r2l in (False, True):
                src, dst = (eq.rhs, eq.lhs) if r2l else (eq.lhs, eq.rhs)
                if src == dst:
                    continue
                grow = size(dst) - size(src)
                for target, path, n in self.occurrences.get(src, ()):
                    if n + grow > cap:
                        continue
                    if not new_eq and target not in fresh_set:
                        continue
                    offer(substitute_at(target, path, src, dst), _Subst(eq, target, path, r2l))
        return out

    def _apply(self, sch: AxiomSchema, prems, concl, reverse, known, fresh_set, offer) -> None:
        def extend(i: int, binding: dict, used: tuple) -> None:
            if i == len(prems):
                if not any(u in fresh_set for u in used):
                    return
                if set(binding) < set(sch.variables):
                    return
                offer(fill_statement(concl, binding),
                      _Apply(sch.name, tuple(sorted(binding.items())), reverse, used))
                return
            for st in known:
                b = match_statement(prems[i], st, binding)
                if b is not None:
                    extend(i + 1, b, used + (st,))

        extend(0, {}, ())

    def _seed(self) -> dict[Statement, _Derivation]:
        """Round-one instances of premise-free schemas drawn from the pool."""
        out: dict[Statement, _Derivation] = {}
        pool = _pool(self.premises + (self.goal,))
        for sch in self.free:
            names = sch.variables
            for combo in itertools.product(pool, repeat=len(names)):
                b = dict(zip(names, combo))
                _, st = instantiate(sch, b)
                if st in self.round_of or not self._fits(st):
                    continue
                d = _Apply(sch.name, tuple(sorted(b.items())), False, ())
                cur = out.get(st)
                if cur is None or _key(d, self.round_of) < _key(cur, self.round_of):
                    out[st] = d
        return out

    def run(self, stop_at_goal: bool = True) -> str:
        start = time.monotonic()
        fresh = list(self.order)
        limit = self.config
        if stop_at_goal and self.goal in self.round_of:
            return "found"
        for rnd in range(1, limit.depth + 1):
            cands = self._candidates(fresh)
            if rnd == 1:
                for st, d in self._seed().items():
                    if st not in cands or _key(d, self.round_of) < _key(cands[st], self.round_of):
                        cands[st] = d
            fresh = sorted(cands, key=render_statement)
            for st in fresh:
                self._add(st, rnd, cands[st])
            self.rounds_done = rnd
            if stop_at_goal and self.goal in self.round_of:
                return "found"
            if not fresh:
                return Status.SATURATED
            if len(self.order) > limit.max_statements:
                return Status.RESOURCE
            if limit.time_limit is not None and time.monotonic() - start > limit.time_limit:
                return Status.RESOURCE
        return Status.DEPTH

    # proof extraction
    def proof(self, system_name: str) -> Proof:
        needed: dict[Statement, None] = {}

        def visit(st: Statement) -> None:
            if st in needed:
                return
            d = self.how[st]
            if d is not None:
                for p in _parents(d):
                    visit(p)
            needed[st] = None

        visit(self.goal)
        ids: dict[Statement, str] = {}
        lines: list[Line] = []
        for i, p in enumerate(self.premises, 1):
            ids.setdefault(p, f"P{i}")
            lines.append(Line(f"P{i}", p, Premise()))
        n = len(self.premises)
        steps = [s for s in needed if self.how[s] is not None]
        steps.sort(key=lambda s: (self.round_of[s], render_statement(s)))
        for st in steps:
            if st in ids:
                continue
            d = self.how[st]
            if isinstance(d, _Apply):
                n += 1
                ids[st] = f"S{n}"
                why = SchemaApply(d.schema, d.binding, d.reverse, tuple(ids[s] for s in d.sources))
                lines.append(Line(ids[st], st, why))
            elif isinstance(d, _Subst):
                n += 1
                ids[st] = f"S{n}"
                lines.append(Line(ids[st], st, SubstEquals(ids[d.equation], ids[d.target], d.path, d.r2l)))
            else:
                sch = self.system.get(d.schema)
                _, inst = instantiate(sch, dict(d.binding))
                helper = ids.get(inst)
                if helper is None:
                    n += 1
                    helper = f"S{n}"
                    lines.append(Line(helper, inst, SchemaApply(d.schema, d.binding), split=True))
                n += 1
                ids[st] = f"S{n}"
                lines.append(Line(ids[st], st, SubstEquals(helper, ids[d.target], d.path, d.r2l)))
        sig = tuple(sorted(self.signature))
        return Proof(system_name, sig, tuple(lines), (self.goal,))


def _resolve(system: Union[str, SystemDef]) -> tuple[str, SystemDef]:
    if isinstance(system, SystemDef):
        return system.name, system
    return system, get_system(system)


def prove(premises: Sequence[Statement], goal: Statement, system: Union[str, SystemDef],
          config: SearchConfig = SearchConfig()) -> SearchResult:
    """Search for a proof; return it (kernel-checked) or a not-found certificate."""
    name, sysdef = _resolve(system)
    eng = _Engine(premises, goal, sysdef, config)
    status = eng.run(stop_at_goal=True)
    if status == "found":
        proof = eng.proof(name)
        verdict = check_proof(proof, sysdef)
        if not verdict.ok:
            raise AssertionError(f"search produced a rejected proof: {verdict.violation}")
        return proof
    return NotFound(_certificate(name, eng, status))


def nonprovable_witness(premises: Sequence[Statement], goal: Statement, system: Union[str, SystemDef],
                        config: SearchConfig = SearchConfig()) -> ExhaustionCertificate:
    """Explore the whole bounded space; raise GoalDerivable if the goal shows up."""
    result = prove(premises, goal, system, config)
    if isinstance(result, Proof):
        raise GoalDerivable(result)
    return result.certificate


def _certificate(name: str, eng: _Engine, status: str) -> ExhaustionCertificate:
    return ExhaustionCertificate(
        system=name,
        premises=eng.premises,
        goal=eng.goal,
        depth_limit=eng.config.depth,
        size_limit=eng.config.size_limit,
        depth_reached=eng.rounds_done,
        statements=len(eng.order),
        status=status,
    )


# ------------------------------------------------------------ usage matrix

MATRIX_COLUMNS = {
    "LC": ("LC2", "LC3", "LC1", "LC5", "LC4"),
    "ML": ("ML4", "ML5", "ML1", "ML3", "ML2"),
}


class MatrixError(ValueError):
    pass


def axiom_usage_matrix(proofs: Iterable[tuple[str, Proof]], system: Union[str, SystemDef]) -> list[tuple[str, frozenset[str]]]:
    """One row per named proof with lemma usage expanded. Any failing proof aborts."""
    name, sysdef = _resolve(system)
    rows = []
    for label, proof in proofs:
        if proof.system != name:
            raise MatrixError(f"{label} is a {proof.system} proof, not {name}")
        verdict = check_proof(proof)
        if not verdict.ok:
            raise MatrixError(f"{label} does not check: {verdict.violation}")
        rows.append((label, verdict.usage))
    return rows


def render_matrix(rows: Sequence[tuple[str, frozenset[str]]], system: str) -> str:
    columns = MATRIX_COLUMNS.get(system) or tuple(sorted(set().union(*(u for _, u in rows))))
    width = max([len("syllogism")] + [len(label) for label, _ in rows])
    head = "syllogism".ljust(width) + "  " + "  ".join(columns)
    out = [head.rstrip(), "-" * len(head.rstrip())]
    for label, usage in rows:
        cells = "  ".join(("x" if c in usage else ".").center(len(c)) for c in columns)
        out.append((label.ljust(width) + "  " + cells).rstrip())
    return "\n".join(out) + "\n"
