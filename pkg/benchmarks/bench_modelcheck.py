"""Compare the compiled and pure-Python enumeration kernels.

    python3 benchmarks/bench_modelcheck.py [--repeat N]

Each workload compiles one formula to a program and counts its models with
both kernels; the counts must agree.
"""

from __future__ import annotations

import argparse
import time

from termlogic import _mcpure
from termlogic.corpus import catalog, lowered
from termlogic.modelcheck import Program, meta_and, meta_not
from termlogic.terms import parse_statement as P

try:
    from termlogic import _mckernel
except ImportError:  # extension not built
    _mckernel = None


def workloads():
    """(label, program) pairs; four atoms give 65536 models per program."""
    sig4 = ("s", "m", "p", "q")
    out = []
    for system in ("LC", "ML"):
        chain = []
        for d in catalog():
            prems, concls = lowered(d, system)
            chain.append(meta_and(*prems, meta_not(concls[0])))
        out.append((f"24 {system} syllogism refutations, 4 atoms", [Program(f, sig4) for f in chain]))
    big = meta_and(P("s&m != 0"), P("(m|p)' <= q"), meta_not(P("s # q")), P("(s&p)|q @ m'"))
    out.append(("one mixed formula, 4 atoms", [Program(big, sig4)]))
    sig5 = ("s", "m", "p", "q", "r")
    out.append(("mixed formula, 5 atoms, first 2**20 models", [Program(meta_and(P("s&m = r"), P("p <= q")), sig5)]))
    return out


def _time(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    return best


def run(repeat: int) -> list[tuple[str, float, float | None]]:
    rows = []
    for label, progs in workloads():
        limit = 1 << 20 if "2**20" in label else None

        def count(backend, progs=progs, limit=limit):
            return [backend.count_models(p.ops, p.args, limit or p.n_models) for p in progs]

        py_counts = count(_mcpure)
        py = _time(lambda: count(_mcpure), repeat)
        cy = None
        if _mckernel is not None:
            assert count(_mckernel) == py_counts, label
            cy = _time(lambda: count(_mckernel), repeat)
        rows.append((label, py, cy))
    return rows


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    rows = run(args.repeat)
    width = max(len(r[0]) for r in rows)
    print(f"{'workload'.ljust(width)}  {'python s':>10}  {'cython s':>10}  {'speedup':>8}")
    for label, py, cy in rows:
        if cy is None:
            print(f"{label.ljust(width)}  {py:10.4f}  {'n/a':>10}  {'n/a':>8}")
        else:
            print(f"{label.ljust(width)}  {py:10.4f}  {cy:10.4f}  {py / cy:7.1f}x")


if __name__ == "__main__":
    main()
