"""Trusted proof checker.

Three rules only: a premise, a schema application (instantiate then detach)
and replacement of one occurrence by an equal term. Everything is compared by
tree equality; no associativity or commutativity is applied behind the
user's back.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Mapping, Sequence, Union

from .systems import AxiomSchema, BindingError, SystemDef, find_lemma, get_system, instantiate
from .terms import (
    Dyadic,
    PositionError,
    RelKind,
    Statement,
    TermExpr,
    format_path,
    render,
    render_statement,
    statement_atoms,
    statement_vars,
    subterm_at,
    substitute_at,
    vars_of,
)


@dataclass(frozen=True)
class Premise:
    pass


@dataclass(frozen=True)
class SchemaApply:
    schema: str
    binding: tuple[tuple[str, TermExpr], ...]
    reverse: bool = False
    sources: tuple[str, ...] = ()

    @classmethod
    def make(cls, schema: str, binding: Mapping[str, TermExpr], reverse: bool = False,
             sources: Sequence[str] = ()) -> "SchemaApply":
        return cls(schema, tuple(sorted(binding.items())), reverse, tuple(sources))

    @property
    def binding_map(self) -> dict[str, TermExpr]:
        return dict(self.binding)


@dataclass(frozen=True)
class SubstEquals:
    equation: str
    target: str
    path: tuple[int, ...]
    r2l: bool = False


Justification = Union[Premise, SchemaApply, SubstEquals]


@dataclass(frozen=True)
class Line:
    id: str
    statement: Statement
    why: Justification = Premise()
    # Marks a line that only exists because one written step was split in two.
    split: bool = False

    @property
    def is_premise(self) -> bool:
        return isinstance(self.why, Premise)


@dataclass(frozen=True)
class Proof:
    system: str
    signature: tuple[str, ...]
    lines: tuple[Line, ...]
    conclusions: tuple[Statement, ...]
    uses: tuple[str, ...] = ()
    title: str = ""

    @property
    def premises(self) -> tuple[Statement, ...]:
        return tuple(l.statement for l in self.lines if l.is_premise)

    @property
    def steps(self) -> tuple[Line, ...]:
        return tuple(l for l in self.lines if not l.is_premise)

    def step_count(self) -> int:
        """Derived lines, not counting split helpers."""
        return sum(1 for l in self.steps if not l.split)


@dataclass(frozen=True)
class Violation:
    line: str
    rule: str
    reason: str
    expected: str = ""
    actual: str = ""

    def __str__(self) -> str:
        out = f"{self.line}: {self.rule}: {self.reason}"
        if self.expected or self.actual:
            out += f"\n  expected: {self.expected}\n  actual:   {self.actual}"
        return out


@dataclass(frozen=True)
class Verdict:
    ok: bool
    usage: frozenset[str] = field(default_factory=frozenset)
    violation: Violation | None = None


_ID = re.compile(r"^[A-Z](\d+)([a-z]*)$")


def line_order(line_id: str) -> tuple[int, str]:
    m = _ID.match(line_id)
    if not m:
        raise ValueError(f"bad line id {line_id!r}")
    return int(m.group(1)), m.group(2)


def rule_name(why: Justification) -> str:
    if isinstance(why, Premise):
        return "premise"
    if isinstance(why, SchemaApply):
        return f"axiom {why.schema}" + (" rev" if why.reverse else "")
    return "eq"


def check_step(context: Mapping[str, Statement], system: SystemDef, line: Line) -> Violation | None:
    """Check one line against the lines it cites. Returns None when it is fine."""
    why = line.why
    rule = rule_name(why)
    if isinstance(why, Premise):
        return None
    if isinstance(why, SchemaApply):
        sch = system.get(why.schema)
        if sch is None:
            return Violation(line.id, rule, f"unknown schema {why.schema} in {system.name}")
        return _check_apply(context, sch, why, line, rule)
    if isinstance(why, SubstEquals):
        return _check_subst(context, why, line, rule)
    return Violation(line.id, rule, f"unknown justification {why!r}")


def _check_apply(context, sch: AxiomSchema, why: SchemaApply, line: Line, rule: str) -> Violation | None:
    binding = why.binding_map
    extra = sorted(set(binding) - set(sch.variables))
    if extra:
        return Violation(line.id, rule, f"binding names unknown variables {', '.join(extra)}")
    for v, e in binding.items():
        if vars_of(e):
            return Violation(line.id, rule, f"binding for {v} contains schema variables")
    try:
        prems, concl = instantiate(sch, binding)
    except BindingError as exc:
        return Violation(line.id, rule, str(exc))
    if why.reverse:
        if not sch.bidirectional:
            return Violation(line.id, rule, f"{sch.name} is not bidirectional")
        prems, concl = (concl,), prems[0]
    if len(why.sources) != len(prems):
        return Violation(line.id, rule, f"{sch.name} needs {len(prems)} cited lines, got {len(why.sources)}")
    for src, want in zip(why.sources, prems):
        if src not in context:
            return Violation(line.id, rule, f"cites unknown or later line {src}")
        if context[src] != want:
            return Violation(line.id, rule, f"cited line {src} does not match the premise pattern",
                             render_statement(want), render_statement(context[src]))
    if line.statement != concl:
        return Violation(line.id, rule, "conclusion mismatch", render_statement(concl),
                         render_statement(line.statement))
    return None


def _check_subst(context, why: SubstEquals, line: Line, rule: str) -> Violation | None:
    for ref in (why.equation, why.target):
        if ref not in context:
            return Violation(line.id, rule, f"cites unknown or later line {ref}")
    eq = context[why.equation]
    if not (isinstance(eq, Dyadic) and eq.rel is RelKind.EQ):
        return Violation(line.id, rule, f"line {why.equation} is not an equation",
                         "an '=' statement", render_statement(eq))
    src, dst = (eq.rhs, eq.lhs) if why.r2l else (eq.lhs, eq.rhs)
    target = context[why.target]
    try:
        found = subterm_at(target, why.path)
    except PositionError as exc:
        return Violation(line.id, rule, f"bad position {format_path(why.path)}: {exc}")
    if found != src:
        return Violation(line.id, rule, f"subterm at {format_path(why.path)} of {why.target} is not the source side",
                         render(src), render(found))
    result = substitute_at(target, why.path, src, dst)
    if line.statement != result:
        return Violation(line.id, rule, "rewritten statement mismatch", render_statement(result),
                         render_statement(line.statement))
    return None


def resolve_system(proof: Proof, system: SystemDef | None = None) -> SystemDef:
    base = system if system is not None else get_system(proof.system)
    extra = []
    for name in proof.uses:
        lemma = find_lemma(name)
        if lemma is None:
            raise KeyError(f"unknown lemma {name!r}")
        extra.append(lemma)
    return base.extended(extra) if extra else base


def check_proof(proof: Proof, system: SystemDef | None = None) -> Verdict:
    """Check every line in order; stop at the first violation."""
    try:
        sysdef = resolve_system(proof, system)
    except KeyError as exc:
        return Verdict(False, violation=Violation("-", "header", str(exc.args[0])))
    sig = set(proof.signature)
    context: dict[str, Statement] = {}
    usage: set[str] = set()
    last: tuple[int, str] | None = None
    for line in proof.lines:
        rule = rule_name(line.why)
        try:
            order = line_order(line.id)
        except ValueError as exc:
            return Verdict(False, frozenset(usage), Violation(line.id, rule, str(exc)))
        if last is not None and order <= last:
            return Verdict(False, frozenset(usage), Violation(line.id, rule, "line ids must strictly increase"))
        last = order
        stray = statement_atoms(line.statement) - sig
        if stray or statement_vars(line.statement):
            return Verdict(False, frozenset(usage),
                           Violation(line.id, rule, f"statement leaves the signature {sorted(stray)}"))
        bad = check_step(context, sysdef, line)
        if bad is not None:
            return Verdict(False, frozenset(usage), bad)
        if isinstance(line.why, SchemaApply):
            usage |= sysdef.get(line.why.schema).usage
        context[line.id] = line.statement
    have = set(context.values())
    for concl in proof.conclusions:
        if concl not in have:
            return Verdict(False, frozenset(usage),
                           Violation("-", "conclusion", "declared conclusion never derived",
                                     render_statement(concl), ""))
    return Verdict(True, frozenset(usage))
