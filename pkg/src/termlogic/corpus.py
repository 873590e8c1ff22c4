"""The embedded proof corpus and the syllogism catalog.

Scripts live under ``termlogic/scripts/<group>/`` as plain text. Expected axiom
usage for the syllogisms is tabulated here by hand, independently of the
scripts, so a drifting script shows up as a mismatch rather than a silent
change of ground truth.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import Iterable, Sequence

from .kernel import Proof, Verdict, check_proof
from .modelcheck import equivalent, meta_not, meta_or, valid
from .script import ScriptError, parse_script
from .systems import SchemaKind, find_lemma
from .terms import CategoricalForm, FormKind, parse_statement, render_statement
from .translate import to_system

K = FormKind


@dataclass(frozen=True)
class SyllogismDef:
    name: str
    figure: int
    premises: tuple[CategoricalForm, CategoricalForm]
    existential: CategoricalForm | None
    conclusions: tuple[CategoricalForm, ...]

    @property
    def mood(self) -> str:
        return self.name.split("-")[0]


def _form(text: str) -> CategoricalForm:
    kind, *terms = text.split()
    if kind == "*":
        return CategoricalForm(K.STAR, terms[0])
    return CategoricalForm(FormKind(kind), terms[0], terms[1])


# name: first premise; second premise; existential premise or "-"; conclusions
_CATALOG = """
Barbara-1:   A s m; A m p; -;   A s p
Barbari-1:   A s m; A m p; * s; A s p, I s p
Celarent-1:  A s m; E m p; -;   E s p
Celaront-1:  A s m; E m p; * s; E s p, O s p
Camestres-2: E s m; A p m; -;   E s p
Camestros-2: E s m; A p m; * s; E s p, O s p
Bamalip-4:   A m s; A p m; * p; I s p
Darapti-3:   A m s; A m p; * m; I s p
Felapton-3:  A m s; E m p; * m; O s p
Disamis-3:   A m s; I m p; -;   I s p
Bokardo-3:   A m s; O m p; -;   O s p
Darii-1:     I s m; A m p; -;   I s p
Ferio-1:     I s m; E m p; -;   O s p
Baroko-2:    O s m; A p m; -;   O s p
Dimatis-4:   A m s; I p m; -;   I s p
Datisi-3:    I m s; A m p; -;   I s p
Ferison-3:   I m s; E m p; -;   O s p
Festino-2:   I s m; E p m; -;   O s p
Fresison-4:  I m s; E p m; -;   O s p
Fesapo-4:    A m s; E p m; * m; O s p
Cesare-2:    A s m; E p m; -;   E s p
Cesaro-2:    A s m; E p m; * s; E s p, O s p
Calemes-4:   E m s; A p m; -;   E s p
Calemos-4:   E m s; A p m; * s; E s p, O s p
"""

# Syllogism-axiom matrices, lemma usage expanded.
LC_USAGE = {
    "Barbara-1": "LC2", "Barbari-1": "LC2", "Celarent-1": "LC2", "Celaront-1": "LC2",
    "Camestres-2": "LC2 LC4", "Camestros-2": "LC2 LC4", "Bamalip-4": "LC2 LC1",
    "Darapti-3": "LC2 LC3", "Felapton-3": "LC2 LC3", "Disamis-3": "LC2 LC3", "Bokardo-3": "LC2 LC3",
    "Darii-1": "LC2 LC3 LC1", "Ferio-1": "LC2 LC3 LC1", "Baroko-2": "LC2 LC3 LC1 LC4",
    "Dimatis-4": "LC2 LC3 LC1", "Datisi-3": "LC2 LC3 LC1", "Ferison-3": "LC2 LC3 LC1",
    "Festino-2": "LC2 LC3 LC1 LC5", "Fresison-4": "LC2 LC3 LC1 LC5", "Fesapo-4": "LC2 LC3 LC5",
    "Cesare-2": "LC2 LC5", "Cesaro-2": "LC2 LC5", "Calemes-4": "LC2 LC5", "Calemos-4": "LC2 LC5",
}
ML_USAGE = {
    "Barbara-1": "ML4", "Barbari-1": "ML4 ML5", "Celarent-1": "ML4", "Celaront-1": "ML4 ML5",
    "Camestres-2": "ML4 ML2", "Camestros-2": "ML4 ML5 ML2", "Bamalip-4": "ML4 ML5 ML1",
    "Darapti-3": "ML5 ML1", "Felapton-3": "ML5 ML1", "Disamis-3": "ML5 ML1", "Bokardo-3": "ML5 ML1",
    "Darii-1": "ML5", "Ferio-1": "ML5", "Baroko-2": "ML5 ML2",
    "Dimatis-4": "ML5 ML1", "Datisi-3": "ML5 ML1", "Ferison-3": "ML5 ML1",
    "Festino-2": "ML5 ML3", "Fresison-4": "ML5 ML1 ML3", "Fesapo-4": "ML5 ML1 ML3",
    "Cesare-2": "ML4 ML3", "Cesaro-2": "ML4 ML5 ML3", "Calemes-4": "ML4 ML3", "Calemos-4": "ML4 ML5 ML3",
}
_OTHER_USAGE = {
    "lemma/LC6": "LC3 LC1",
    "lemma/ML6": "ML5 ML1",
    "lemma/GLB": "LC2",
    "lcd-ml/ML1": "D2 LC1",
    "lcd-ml/ML2": "D1 LC4",
    "lcd-ml/ML3": "D1 LC5",
    "lcd-ml/ML4": "D1 LC2",
    "lcd-ml/ML5": "D2 D1 LC1 LC2 LC3",
}

STEP_LIMITS = {"LC": 5, "ML": 3}

GROUPS = ("lc", "ml", "lemma", "lcd-ml", "bl", "bl-lc")

_BL_FILES = (
    ("dom-meet", "BL-dom-meet"),
    ("dom-join", "BL-dom-join"),
    ("subsum-fwd", "BL-subsum"),
    ("subsum-rev", "BL-subsum"),
    ("antisym", "BL-antisym"),
    ("invol", "BL-invol"),
    ("compl-eq-fwd", "BL-compl-eq"),
    ("compl-eq-rev", "BL-compl-eq"),
    ("uniq-compl-1", "BL-uniq-compl-1"),
    ("uniq-compl-2", "BL-uniq-compl-2"),
    ("demorgan-meet", "BL-demorgan-meet"),
    ("demorgan-join", "BL-demorgan-join"),
)
_GROUP_FILES = {
    "lemma": (("lc6", "LC6"), ("ml6", "ML6"), ("glb", None)),
    "lcd-ml": tuple((f"ml{i}", f"ML{i}") for i in range(1, 6)),
    "bl": _BL_FILES,
    "bl-lc": (("lc3", "LC3"), ("lc4", "LC4"), ("lc5", "LC5")),
}

# c = 0 implies b&c = 0, read contrapositively as b&c != 0 implies c != 0
TRANSPOSITION = (("c = 0", "b&c = 0"), ("b&c != 0", "c != 0"))


@lru_cache(maxsize=None)
def catalog() -> tuple[SyllogismDef, ...]:
    out = []
    for row in filter(None, (r.strip() for r in _CATALOG.splitlines())):
        name, rest = row.split(":", 1)
        first, second, star, concl = (p.strip() for p in rest.split(";"))
        out.append(SyllogismDef(
            name=name,
            figure=int(name.rsplit("-", 1)[1]),
            premises=(_form(first), _form(second)),
            existential=None if star == "-" else _form(star),
            conclusions=tuple(_form(c.strip()) for c in concl.split(",")),
        ))
    return tuple(out)


def syllogism(name: str) -> SyllogismDef:
    for d in catalog():
        if d.name.lower() == name.lower():
            return d
    raise KeyError(f"unknown syllogism {name!r}")


def lowered(defn: SyllogismDef, system: str):
    """Premises (existential last) and conclusions as statements of ``system``."""
    prems = [to_system(f, system) for f in defn.premises]
    if defn.existential is not None:
        prems.append(to_system(defn.existential, system))
    return tuple(prems), tuple(to_system(c, system) for c in defn.conclusions)


@dataclass(frozen=True)
class CorpusEntry:
    id: str
    group: str
    system: str
    text: str
    expected_usage: frozenset[str] | None
    # the schema this script derives, if any
    establishes: str | None = None

    @property
    def name(self) -> str:
        return self.id.split("/", 1)[1]

    def proof(self) -> Proof:
        return parse_script(self.text)


def _read(group: str, stem: str) -> str:
    return resources.files("termlogic").joinpath("scripts", group, f"{stem}.proof").read_text()


def _usage(text: str | None) -> frozenset[str] | None:
    return None if text is None else frozenset(text.split())


@lru_cache(maxsize=None)
def all_scripts() -> tuple[CorpusEntry, ...]:
    out = []
    for group, system, table in (("lc", "LC", LC_USAGE), ("ml", "ML", ML_USAGE)):
        for d in catalog():
            text = _read(group, d.name.lower())
            out.append(CorpusEntry(f"{group}/{d.name}", group, system, text, _usage(table[d.name])))
    for group in GROUPS[2:]:
        for stem, target in _GROUP_FILES[group]:
            text = _read(group, stem)
            proof = parse_script(text)
            ident = f"{group}/{proof.title or stem}"
            out.append(CorpusEntry(ident, group, proof.system, text, _usage(_OTHER_USAGE.get(ident)), target))
    return tuple(out)


def entry(ident: str) -> CorpusEntry:
    for e in all_scripts():
        if e.id.lower() == ident.lower():
            return e
    raise KeyError(f"no corpus entry {ident!r}")


# ----------------------------------------------------------------- checking


@dataclass(frozen=True)
class EntryResult:
    id: str
    system: str
    ok: bool
    usage: frozenset[str]
    oracle: str
    problem: str = ""

    def line(self) -> str:
        usage = "{" + ", ".join(sorted(self.usage)) + "}"
        out = f"{self.id}  {self.system}  {'ok' if self.ok else 'fail'}  {usage}  oracle={self.oracle}"
        return out + (f"  ({self.problem})" if self.problem else "")


@dataclass(frozen=True)
class CorpusReport:
    results: tuple[EntryResult, ...]

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    @property
    def failures(self) -> tuple[EntryResult, ...]:
        return tuple(r for r in self.results if not r.ok)

    def render(self) -> str:
        rows = [r.line().split("  ", 4) for r in self.results]
        widths = [max(len(r[i]) for r in rows) for i in range(3)]
        out = []
        for r in rows:
            head = "  ".join(c.ljust(w) for c, w in zip(r[:3], widths))
            out.append(("  ".join([head, *r[3:]])).rstrip())
        passed = len(self.results) - len(self.failures)
        out.append(f"{passed}/{len(self.results)} entries ok")
        return "\n".join(out) + "\n"


def oracle_verdict(proof: Proof) -> str:
    """Semantic check of premises against every declared conclusion."""
    sig = proof.signature
    for c in proof.conclusions:
        if not valid(proof.premises, c, signature=sig).valid:
            return "invalid"
    return "valid"


def transposition_certified() -> bool:
    (a, b), (c, d) = ((parse_statement(x), parse_statement(y)) for x, y in TRANSPOSITION)
    forward = meta_or(meta_not(a), b)
    contra = meta_or(meta_not(c), d)
    return equivalent(forward, contra, signature=("b", "c"))


def check_entry(e: CorpusEntry) -> EntryResult:
    try:
        proof = e.proof()
    except ScriptError as exc:
        return EntryResult(e.id, e.system, False, frozenset(), "n/a", f"parse error: {exc}")
    verdict: Verdict = check_proof(proof)
    oracle = oracle_verdict(proof)
    if e.id == "bl-lc/LC3":
        oracle += "+transposition" if transposition_certified() else "+transposition-failed"
    problems = []
    if not verdict.ok:
        problems.append(str(verdict.violation).splitlines()[0])
    if e.expected_usage is not None and verdict.ok and verdict.usage != e.expected_usage:
        problems.append("usage differs from " + "{" + ", ".join(sorted(e.expected_usage)) + "}")
    if e.establishes and verdict.ok:
        problems.extend(_establishes_problems(e, proof, verdict))
    limit = STEP_LIMITS.get(e.system) if e.group in ("lc", "ml") else None
    if limit is not None and proof.step_count() > limit:
        problems.append(f"{proof.step_count()} steps exceeds {limit}")
    if not oracle.startswith("valid") or oracle.endswith("failed"):
        problems.append("oracle disagrees")
    return EntryResult(e.id, e.system, not problems, verdict.usage, oracle, "; ".join(problems))


def _establishes_problems(e: CorpusEntry, proof: Proof, verdict: Verdict) -> list[str]:
    """A lemma script must derive its schema's instance over the script atoms."""
    sch = find_lemma(e.establishes)
    if sch is None:
        return []
    if sch.kind is SchemaKind.LEMMA and not verdict.usage <= sch.requires:
        return [f"usage exceeds declared requires of {sch.name}"]
    return []


def check_all(entries: Iterable[CorpusEntry] | None = None) -> CorpusReport:
    """Check every entry; failures are reported, never raised."""
    return CorpusReport(tuple(check_entry(e) for e in (all_scripts() if entries is None else entries)))


def lemma_requires_mismatches() -> list[str]:
    """Declared ``requires`` of each derived BL law against its scripts' usage."""
    union: dict[str, frozenset[str]] = {}
    for e in all_scripts():
        if e.group == "bl" and e.establishes:
            v = check_proof(e.proof())
            union[e.establishes] = union.get(e.establishes, frozenset()) | v.usage
    out = []
    for name, used in union.items():
        declared = find_lemma(name).requires
        if declared != used:
            out.append(f"{name}: declared {sorted(declared)} but scripts use {sorted(used)}")
    return out


def script_matches_catalog(e: CorpusEntry) -> bool:
    """The script's premises and conclusions are exactly the lowered catalog forms."""
    if e.group not in ("lc", "ml"):
        return True
    proof = e.proof()
    prems, concl = lowered(syllogism(e.name), e.system)
    return set(proof.premises) == set(prems) and len(proof.premises) == len(prems) and proof.conclusions == concl


def matrix_rows(system: str) -> list[tuple[str, Proof]]:
    group = {"LC": "lc", "ML": "ml"}[system]
    return [(e.name, e.proof()) for e in all_scripts() if e.group == group]


def describe(defn: SyllogismDef, system: str) -> str:
    prems, concl = lowered(defn, system)
    left = ", ".join(render_statement(p) for p in prems)
    right = ", ".join(render_statement(c) for c in concl)
    return f"{defn.name}: {left} |- {right}"


__all__: Sequence[str] = (
    "CorpusEntry",
    "CorpusReport",
    "EntryResult",
    "SyllogismDef",
    "LC_USAGE",
    "ML_USAGE",
    "all_scripts",
    "catalog",
    "check_all",
    "check_entry",
    "entry",
    "lemma_requires_mismatches",
    "lowered",
    "matrix_rows",
    "script_matches_catalog",
    "syllogism",
)
