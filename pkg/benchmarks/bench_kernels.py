"""Compare the compiled kernels against the pure-Python fallback.

Times the two hot loops (group-ring convolution, tableau weight counting)
and a realistic end-to-end sweep (the decomposition identity over a box).
Run from the repository root:

    python3 benchmarks/bench_kernels.py
"""

import itertools
import statistics
import subprocess
import sys
import time


def _time(fn, repeats=5):
    best = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best.append(time.perf_counter() - t0)
    return min(best), statistics.median(best)


def bench_direct():
    from qgl3 import kernels
    from qgl3._kernels_py import convolve as conv_py
    from qgl3._kernels_py import ssyt_weight_counts as counts_py

    print(f"active backend: {kernels.BACKEND}")

    big = counts_py(28, 12)
    med = counts_py(10, 4)
    print(f"convolve operands: {len(big)} x {len(med)} support weights")

    rows = []
    if kernels.BACKEND == "cython":
        rows.append(("convolve (cython)", *_time(lambda: kernels.convolve(big, med))))
    rows.append(("convolve (python)", *_time(lambda: conv_py(big, med))))
    if kernels.BACKEND == "cython":
        rows.append(("ssyt counts 40,18 (cython)", *_time(lambda: kernels.ssyt_weight_counts(40, 18))))
    rows.append(("ssyt counts 40,18 (python)", *_time(lambda: counts_py(40, 18))))
    for name, best, median in rows:
        print(f"  {name:32s} best {best * 1e3:8.2f} ms   median {median * 1e3:8.2f} ms")


def bench_sweep():
    from qgl3.charring import _weyl_cache, weyl_char
    from qgl3.decomp import chi_decomposition
    from qgl3.lattice import Weight
    from qgl3 import kernels

    def run():
        _weyl_cache.clear()
        for a, b in itertools.product(range(4), repeat=2):
            for r, s in itertools.product(range(5), repeat=2):
                lam = 5 * Weight(a, b) + Weight(r, s)
                assert chi_decomposition(lam, 5).character() == weyl_char(lam)

    best, median = _time(run, repeats=3)
    print(f"  decomposition sweep l=5 box=3 ({kernels.BACKEND}): best {best:6.2f} s  median {median:6.2f} s")


def main():
    bench_direct()
    bench_sweep()
    if "--pure-child" not in sys.argv and "QGL3_PURE" not in __import__("os").environ:
        print("rerunning sweep with the pure-Python backend:")
        subprocess.run(
            [sys.executable, __file__, "--pure-child"],
            env={**__import__("os").environ, "QGL3_PURE": "1"},
            check=True,
        )


if __name__ == "__main__":
    main()
