"""Compare the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat 5] [--degree 8]

Kernel timings call both modules directly on the same inputs (and assert the
results agree); the end-to-end timing runs normal_span_report in a fresh
interpreter per backend.
"""

import argparse
import os
import random
import subprocess
import sys
import timeit
from fractions import Fraction

from rsqea import _pykernels

try:
    from rsqea import _ckernels
except ImportError:
    _ckernels = None

P = 2147483647


def laurent_inputs(rng, nterms=40, span=6):
    def poly():
        return {(rng.randint(-span, span), rng.randint(-span, span)):
                Fraction(rng.randint(-9, 9) or 1, rng.randint(1, 3)) for _ in range(nterms)}
    return poly(), poly()


def pencil_inputs(rng, nrows=30, ncols=20, nlams=81):
    lhs = [[rng.randrange(P) if rng.random() < 0.3 else 0 for _ in range(ncols)]
           for _ in range(nrows)]
    rhs = [[rng.randrange(P) if rng.random() < 0.3 else 0 for _ in range(ncols)]
           for _ in range(nrows)]
    lams = [rng.randrange(P) for _ in range(nlams)]
    return lhs, rhs, lams, ncols


def bench(label, fn, repeat):
    best = min(timeit.repeat(fn, number=1, repeat=repeat))
    return label, best


def kernel_table(repeat):
    rng = random.Random(7)
    a, b = laurent_inputs(rng)
    lhs, rhs, lams, ncols = pencil_inputs(rng)
    cases = {
        "laurent_mul 40x40 terms": lambda m: m.laurent_mul(a, b),
        "laurent_axpy 40 terms": lambda m: m.laurent_axpy(dict(a), b, Fraction(3, 2)),
        "rank_mod_p 30x20": lambda m: m.rank_mod_p(lhs, ncols, P),
        "pencil_nullities 81 pencils": lambda m: m.pencil_nullities(lhs, rhs, lams, ncols, P),
    }
    rows = []
    for name, call in cases.items():
        py = bench(name, lambda: call(_pykernels), repeat)[1]
        if _ckernels is not None:
            assert call(_pykernels) == call(_ckernels), name
            cy = bench(name, lambda: call(_ckernels), repeat)[1]
        else:
            cy = float("nan")
        rows.append((name, py, cy))
    return rows


def end_to_end(degree):
    code = ("import time;from rsqea.presentations import build_presentation;"
            "from rsqea.normality import normal_span_report;t=time.perf_counter();"
            f"[normal_span_report({degree}, build_presentation(w)) for w in 'UV'];"
            "print(time.perf_counter()-t)")
    out = {}
    for backend, flag in (("python", "1"), ("cython", "0")):
        env = dict(os.environ, RSQEA_PURE_PYTHON=flag)
        res = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True,
                             text=True, check=True)
        out[backend] = float(res.stdout.strip())
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--degree", type=int, default=8)
    args = ap.parse_args()
    if _ckernels is None:
        print("compiled kernels not built; only the fallback is timed")
    print(f"{'kernel':32} {'python (s)':>12} {'cython (s)':>12} {'speedup':>8}")
    for name, py, cy in kernel_table(args.repeat):
        print(f"{name:32} {py:12.6f} {cy:12.6f} {py / cy:8.1f}")
    if _ckernels is not None:
        e2e = end_to_end(args.degree)
        print(f"normal_span_report to degree {args.degree}, U and V: python {e2e['python']:.2f} s, "
              f"cython {e2e['cython']:.2f} s ({e2e['python'] / e2e['cython']:.1f}x)")


if __name__ == "__main__":
    main()
