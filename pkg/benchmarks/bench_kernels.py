"""Benchmark the compiled contraction kernels against the numpy fallback.

Run:  python benchmarks/bench_kernels.py  [--repeat 5]

Times the three hot kernels on realistic shapes (the rank-2 symbol family
at d = 5: 50 labels over Q(zeta_5), and the symmetric-center sweep shape:
150 labels at conductor 60), then times an end-to-end fusion-ring build.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from zmodular._accel import pykernels

try:
    from zmodular._accel import _kernels as compiled
except ImportError:
    compiled = None


def _time(fn, *args, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def bench_kernels(repeat: int) -> None:
    rng = np.random.default_rng(7)
    cases = {
        "cyc_matmul (50x50, N=5)": (
            "cyc_matmul",
            rng.integers(-6, 7, (50, 50, 5)).astype(np.int64),
            rng.integers(-6, 7, (50, 50, 5)).astype(np.int64),
        ),
        "cyc_weighted_rows (150x150, N=60)": (
            "cyc_weighted_rows",
            rng.integers(-6, 7, (150, 150, 60)).astype(np.int64),
            rng.integers(-200, 200, (150, 60)).astype(np.int64),
        ),
        "verlinde_contract (50x50, N=5)": (
            "verlinde_contract",
            rng.integers(-6, 7, (50, 50, 5)).astype(np.int64),
            rng.integers(-50, 50, (50, 50, 5)).astype(np.int64),
        ),
        "fusion_associator_defect (m=50)": (
            "fusion_associator_defect",
            rng.integers(-2, 3, (50, 50, 50)).astype(np.int64),
        ),
    }
    print(f"{'kernel':40s} {'numpy':>10s} {'compiled':>10s} {'speedup':>8s}")
    for name, (fn_name, *args) in cases.items():
        t_py = _time(getattr(pykernels, fn_name), *args, repeat=repeat)
        if compiled is not None:
            ref = getattr(pykernels, fn_name)(*args)
            got = getattr(compiled, fn_name)(*args)
            assert np.array_equal(ref, got), f"kernel mismatch in {fn_name}"
            t_c = _time(getattr(compiled, fn_name), *args, repeat=repeat)
            print(f"{name:40s} {t_py*1e3:9.1f}ms {t_c*1e3:9.1f}ms {t_py/t_c:7.1f}x")
        else:
            print(f"{name:40s} {t_py*1e3:9.1f}ms {'n/a':>10s}")


def bench_end_to_end(repeat: int) -> None:
    from zmodular.fusion import check_associativity, verlinde
    from zmodular.symbols import malle_datum, special_symbols

    md = malle_datum(2, 5)
    unit = md.labels.index(special_symbols(2, 5)[0])

    def build():
        ring = verlinde(md, unit)
        check_associativity(ring)
        check_associativity(ring, absolute=True)

    t = _time(build, repeat=repeat)
    print(f"\nfusion ring + associativity for the 50-label family: {t:.2f}s")


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    opts = ap.parse_args()
    if compiled is None:
        print("compiled kernels not built; showing numpy fallback only\n")
    bench_kernels(opts.repeat)
    bench_end_to_end(opts.repeat)
