"""Acceptance criteria. Each test prints one PASS/FAIL line."""

from __future__ import annotations

import itertools
import time

import pytest

import oracle
from termlogic.corpus import all_scripts, catalog, lowered, matrix_rows
from termlogic.kernel import Proof, check_proof
from termlogic.modelcheck import equivalent, lift, valid
from termlogic.search import SearchConfig, Status, axiom_usage_matrix, nonprovable_witness, prove
from termlogic.systems import SYSTEM_NAMES, bl_theorems, get_system, instantiate
from termlogic.terms import Atom, FormKind, parse_statement as P, statement_atoms
from termlogic.translate import no_complement_row, table1_row, table2_row

# Rows in catalog order, columns LC2 LC3 LC1 LC5 LC4 and ML4 ML5 ML1 ML3 ML2.
LC_GRID = """
x.... x.... x.... x.... x...x x...x x.x.. xx... xx... xx... xx... xxx..
xxx.. xxx.x xxx.. xxx.. xxx.. xxxx. xxxx. xx.x. x..x. x..x. x..x. x..x.
"""
ML_GRID = """
x.... xx... x.... xx... x...x xx..x xxx.. .xx.. .xx.. .xx.. .xx.. .x...
.x... .x..x .xx.. .xx.. .xx.. .x.x. .xxx. .xxx. x..x. xx.x. x..x. xx.x.
"""
COLUMNS = {"LC": ("LC2", "LC3", "LC1", "LC5", "LC4"), "ML": ("ML4", "ML5", "ML1", "ML3", "ML2")}
EXISTENTIAL = {"Barbari-1", "Celaront-1", "Camestros-2", "Cesaro-2", "Calemos-4",
               "Darapti-3", "Felapton-3", "Fesapo-4", "Bamalip-4"}


@pytest.fixture
def report(capsys):
    def emit(number: int, title: str, ok: bool, detail: str = "") -> None:
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}" + (f" ({detail})" if detail else ""))
        assert ok, detail
    return emit


def _expected(grid: str, system: str) -> dict[str, frozenset[str]]:
    cells = grid.split()
    names = [d.name for d in catalog()]
    assert len(cells) == len(names) == 24
    return {n: frozenset(c for c, mark in zip(COLUMNS[system], row) if mark == "x") for n, row in zip(names, cells)}


def _syllogism_entries(group: str):
    return [e for e in all_scripts() if e.group == group]


def test_1_corpus_completeness(report):
    start = time.perf_counter()
    verdicts = [(e.id, check_proof(e.proof())) for g in ("lc", "ml") for e in _syllogism_entries(g)]
    elapsed = time.perf_counter() - start
    bad = [i for i, v in verdicts if not v.ok]
    ok = len(verdicts) == 48 and not bad and elapsed < 1.0
    report(1, "24 LC and 24 ML syllogism scripts check", ok, f"{48 - len(bad)}/48 in {elapsed:.3f}s")


def test_2_matrix_reproduction(report):
    diffs = []
    for system, grid in (("LC", LC_GRID), ("ML", ML_GRID)):
        want = _expected(grid, system)
        got = dict(axiom_usage_matrix(matrix_rows(system), system))
        diffs += [f"{system}:{n}" for n in want if got.get(n) != want[n]]
        diffs += [f"{system}:{n} extra" for n in got if n not in want]
    report(2, "usage matrices match the expected grids", not diffs, ", ".join(diffs) or "48 rows exact")


def _fresh_schemas():
    for name in SYSTEM_NAMES:
        yield from get_system(name).schemas
    yield from bl_theorems()


def test_3_semantic_soundness_sweep(report):
    start = time.perf_counter()
    bad = []
    for e in all_scripts():
        proof = e.proof()
        atoms = proof.signature
        assert len(atoms) <= 3
        for c in proof.conclusions:
            if oracle.entails(proof.premises, c, atoms) is not None:
                bad.append(e.id)
    n_schemas = 0
    for sch in _fresh_schemas():
        n_schemas += 1
        prems, concl = instantiate(sch, {v: Atom(v) for v in sch.variables})
        atoms = tuple(sorted(set().union(*(statement_atoms(s) for s in (*prems, concl)))))
        assert len(atoms) <= 3
        if oracle.entails(prems, concl, atoms) is not None:
            bad.append(sch.name)
        if sch.bidirectional and oracle.entails([concl], prems[0], atoms) is not None:
            bad.append(sch.name + " rev")
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 5.0
    report(3, "corpus entries and schemas are semantically sound", ok,
           f"{len(all_scripts())} entries, {n_schemas} schemas, {elapsed:.2f}s" + (f"; bad {bad}" if bad else ""))


def test_4_existential_import_boundary(report):
    start = time.perf_counter()
    flipped, problems = set(), []
    for d in catalog():
        for system in ("LC", "ML"):
            prems, concls = lowered(d, system)
            for c in concls:
                assert valid(prems, c, signature=("s", "m", "p")).valid
                r = valid(prems[:2], c, signature=("s", "m", "p"))
                if r.valid:
                    continue
                flipped.add(d.name)
                inhabited = frozenset(cell for k, cell in enumerate(oracle.minterms(("s", "m", "p")))
                                      if r.countermodel.is_inhabited(_index(cell)))
                if not (all(oracle.truth(p, inhabited, ("s", "m", "p")) for p in prems[:2])
                        and not oracle.truth(c, inhabited, ("s", "m", "p"))):
                    problems.append(f"{d.name} bad countermodel")
    elapsed = time.perf_counter() - start
    ok = flipped == EXISTENTIAL and not problems and elapsed < 1.0
    report(4, "exactly the 9 three-premise moods need their existential premise", ok,
           f"{len(flipped)} flip, {24 - len(flipped)} stay valid, {elapsed:.3f}s" + (f"; {problems}" if problems else ""))


def _index(cell) -> int:
    return sum(1 << i for i, on in enumerate(cell) if on)


def test_5_representation_sweep(report):
    relational = [k for k in FormKind if k is not FormKind.STAR]
    counts = {"table1": 0, "table2": 0, "nocomp": 0}
    failures = []
    for kind in relational:
        rows = {"table1": table1_row(kind), "table2": table2_row(kind), "nocomp": no_complement_row(kind)}
        for table, row in rows.items():
            counts[table] += len(row)
            for a, b in itertools.combinations(row, 2):
                if not equivalent(lift(a), lift(b), signature=("b", "c")):
                    failures.append(f"{table}:{kind.value}")
        # rows of different tables for one relation agree too
        if not equivalent(lift(rows["table1"][0]), lift(rows["table2"][0]), signature=("b", "c")):
            failures.append(f"cross:{kind.value}")
        if not equivalent(lift(rows["table1"][0]), lift(rows["nocomp"][0]), signature=("b", "c")):
            failures.append(f"cross-nocomp:{kind.value}")
    ok = counts["table1"] == 96 and counts["table2"] == 56 and counts["nocomp"] >= 8 and not failures
    report(5, "every table row is internally equivalent", ok,
           f"{counts['table1']} + {counts['table2']} + {counts['nocomp']} cells" + (f"; {failures}" if failures else ""))


def test_6_hierarchy_derivations(report):
    groups = ("bl", "bl-lc", "lcd-ml")
    entries = [e for e in all_scripts() if e.group in groups]
    bad = [e.id for e in entries if not check_proof(e.proof()).ok]
    names = {e.name for e in entries}
    wanted = {"LC3", "LC4", "LC5", "ML1", "ML2", "ML3", "ML4", "ML5", "BL-dom-meet", "BL-dom-join", "BL-subsum",
              "BL-subsum-rev", "BL-invol", "BL-compl-eq", "BL-compl-eq-rev", "BL-uniq-compl-1", "BL-uniq-compl-2",
              "BL-demorgan-meet", "BL-demorgan-join"}
    missing = wanted - names
    ok = not bad and not missing
    report(6, "hierarchy derivation scripts check", ok,
           f"{len(entries) - len(bad)}/{len(entries)} ok" + (f"; missing {sorted(missing)}" if missing else ""))


SEPARATIONS = [
    ("ML", ["b # c"], "c # c"),
    ("LC", [], "b'' = b"),
    ("LC", [], "b&b = b"),
]


def test_7_separation_evidence(report):
    config = SearchConfig(depth=6, size_limit=9)
    notes, ok = [], True
    for system, prems, goal in SEPARATIONS:
        args = ([P(p) for p in prems], P(goal), system, config)
        first = nonprovable_witness(*args)
        again = nonprovable_witness(*args)
        good = (first == again and first.exhaustive and first.status in (Status.SATURATED, Status.DEPTH)
                and first.depth_limit >= 6 and first.size_limit >= 9)
        ok &= good
        notes.append(f"{system} {goal}: {first.status}/{first.statements}")
    report(7, "bounded exhaustion certificates for the separation claims", ok, "; ".join(notes))


def test_8_search_reconstruction(report):
    start = time.perf_counter()
    config = SearchConfig(depth=7)
    failed = []
    for system in ("LC", "ML"):
        for d in catalog():
            prems, concls = lowered(d, system)
            for c in concls:
                r = prove(prems, c, system, config)
                if not (isinstance(r, Proof) and check_proof(r).ok):
                    failed.append(f"{system}:{d.name}")
    elapsed = time.perf_counter() - start
    ok = not failed and elapsed < 60.0
    report(8, "search re-derives all 24 syllogisms in both systems", ok,
           f"{elapsed:.1f}s" + (f"; failed {failed}" if failed else ""))


def test_9_proof_length_bounds(report):
    limits = {"lc": 5, "ml": 3}
    over, longest = [], {}
    for group, limit in limits.items():
        for e in _syllogism_entries(group):
            n = e.proof().step_count()
            longest[group] = max(longest.get(group, 0), n)
            if n > limit:
                over.append(f"{e.id}={n}")
    report(9, "LC proofs take at most 5 steps, ML proofs at most 3", not over,
           f"longest LC {longest['lc']}, ML {longest['ml']}" + (f"; over {over}" if over else ""))
