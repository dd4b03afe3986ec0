#!/usr/bin/env python3
"""Benchmark the compiled coset-table kernel against the pure-Python twin.

The scanner is the only hot loop in the package: every other operation
is desk scale.  Workloads cover the regimes that matter: presentations
that collapse quickly (certification cases), a large cyclic group that
exercises long relator scans, a free group that exercises pure table
growth, and an infinite group that burns the whole coset budget.

Usage: python benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import time

import knotcert._coset_py as pure
from knotcert.fpgroups import Presentation, _relator_letters, parse_presentation

try:
    import knotcert._coset_c as compiled
except ImportError:
    compiled = None


def nest_text(d: int) -> str:
    k = d // 2
    parts = [f"a^{d} b^{d}"]
    for i in sorted(set(range(k + 1)) - {1}):
        parts.append(f"a^{d - i} b^{i}")
        if i != d - i:
            parts.append(f"b^{d - i} a^{i}")
    return ", ".join(parts)


def workloads():
    nest_batch = [parse_presentation(nest_text(d)) for d in range(5, 11)]
    yield "nest certification batch d=5..10", [(p, 100_000) for p in nest_batch]
    yield "cyclic Z/2000 (long relator scan)", [(parse_presentation("a^2000", 1), 4000)]
    yield "free group F2 to 100k cosets", [(Presentation(2, ()), 100_000)]
    yield "(2,3,7) triangle group, 30k budget", [
        (parse_presentation("a^2, b^3, " + "ab" * 7, 2), 30_000)
    ]
    yield "quaternion presentation x200", [
        (parse_presentation("a^4, a^2 b^-2, b^-1 a b a", 2), 1000)
    ] * 200


def run_workload(impl, jobs) -> tuple[float, list]:
    started = time.perf_counter()
    results = []
    for pres, limit in jobs:
        results.append(impl.hlt_enumerate(2 * pres.n_generators, _relator_letters(pres), limit))
    return time.perf_counter() - started, results


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3, help="best-of repetitions")
    args = parser.parse_args()

    backends = [("python", pure)]
    if compiled is not None:
        backends.append(("c", compiled))
    else:
        print("note: compiled kernel not built; showing pure-Python timings only\n")

    header = f"{'workload':<40} " + " ".join(f"{name:>10}" for name, _ in backends)
    if len(backends) == 2:
        header += f" {'speedup':>9}"
    print(header)
    print("-" * len(header))

    for name, jobs in workloads():
        times = []
        reference = None
        for _, impl in backends:
            best = min(run_workload(impl, jobs)[0] for _ in range(args.repeat))
            outcome = run_workload(impl, jobs)[1]
            if reference is None:
                reference = outcome
            elif [r[:1] + (None if r[1] is None else tuple(map(tuple, r[1])),) for r in outcome] != [
                r[:1] + (None if r[1] is None else tuple(map(tuple, r[1])),) for r in reference
            ]:
                raise SystemExit(f"backends disagree on workload {name!r}")
            times.append(best)
        row = f"{name:<40} " + " ".join(f"{t * 1000:>8.1f}ms" for t in times)
        if len(times) == 2:
            row += f" {times[0] / times[1]:>8.1f}x"
        print(row)


if __name__ == "__main__":
    main()
