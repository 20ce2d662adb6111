#!/usr/bin/env python3
"""Benchmark the pure-Python kernels against the compiled extension.

Workloads are the three hot loops: Weyl orbit expansion, the Freudenthal
recursion, and spinor subset sums.  Run from the repository root after
``pip install -e .``:

    python benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import time

from spinsym import SimpleType, build_root_system
from spinsym._kernels import _pure
from spinsym.dirac import _dominant_support_scaled, _g_system

try:
    from spinsym._kernels import _fast
except ImportError:
    _fast = None


def _scaled(rs, scale=2):
    simples = tuple(tuple(int(c * scale) for c in a.coords) for a in rs.simple_roots)
    norms = tuple(sum(x * x for x in a) for a in simples)
    positives = tuple(tuple(int(c * scale) for c in a.coords) for a in rs.positive_roots)
    delta = tuple(int(c * scale) for c in rs.weyl_vector.coords)
    return simples, norms, positives, delta


def bench_orbit(backend):
    rs = build_root_system(SimpleType("D", 6))
    simples, norms, _, delta = _scaled(rs)
    out = backend.weyl_orbit(delta, simples, norms)  # regular: 46080 points
    return len(out)

def bench_character(backend):
    # Freudenthal recursion plus orbit expansion: the full weight multiset
    # of an F4 irreducible of dimension 29172
    rs = build_root_system(SimpleType("F", 4))
    lam = rs.fundamental_weights[0] + rs.fundamental_weights[1]
    simples, norms, positives, delta = _scaled(rs)
    lam_s = tuple(int(c * 2) for c in lam.coords)
    doms = _dominant_support_scaled(_g_system(rs), lam, 2)
    mults = backend.freudenthal(lam_s, positives, delta, simples, norms, doms)
    total = 0
    for v, m in mults.items():
        total += m * len(backend.weyl_orbit(v, simples, norms))
    assert total == 29172
    return total


def bench_subset_sums(backend):
    base = tuple(range(8))
    vectors = [tuple((i + j) % 5 - 2 for j in range(8)) for i in range(20)]
    table = backend.subset_sums(base, vectors)  # 2^20 subsets
    return sum(table.values())


WORKLOADS = [
    ("weyl_orbit W(D6), 46080 pts", bench_orbit),
    ("character F4, dim 29172", bench_character),
    ("subset_sums 2^20", bench_subset_sums),
]


def run(repeat: int) -> None:
    backends = [("pure", _pure)]
    if _fast is not None:
        backends.append(("fast", _fast))
    else:
        print("compiled kernels unavailable; timing the pure backend only")
    print(f"{'workload':<32} " + " ".join(f"{name:>10}" for name, _ in backends) + "    speedup")
    for label, fn in WORKLOADS:
        times = []
        for _, backend in backends:
            best = min(
                _timed(fn, backend) for _ in range(repeat)
            )
            times.append(best)
        ratio = f"{times[0] / times[-1]:9.1f}x" if len(times) > 1 else "       n/a"
        print(f"{label:<32} " + " ".join(f"{t:9.4f}s" for t in times) + f" {ratio}")


def _timed(fn, backend) -> float:
    t0 = time.perf_counter()
    fn(backend)
    return time.perf_counter() - t0


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3)
    run(parser.parse_args().repeat)
