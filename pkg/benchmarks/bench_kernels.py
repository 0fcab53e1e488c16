"""Compare the compiled and pure-Python kernels.

    python3 benchmarks/bench_kernels.py --repeat 5

Kernel rows time each function directly on both modules.  The end-to-end
rows run a full tableau-sum evaluation in a fresh interpreter per backend
(selected with QTCOMB_PURE_PYTHON) so that no caches are shared.
"""
import argparse
import os
import subprocess
import sys
import timeit

from qtcomb.kernels import _pykernels

try:
    from qtcomb.kernels import _ckernels
except ImportError:
    _ckernels = None

E2E = """
import time
from fractions import Fraction as F
from qtcomb import wfun, kernels
from qtcomb.arith import QTPoint
from qtcomb.partition import partitions_up_to
pt = QTPoint(F(2, 3), F(-5, 7))
z = [F(3), F(-1, 2), F(5, 4), F(7, 3)][:{n}]
t0 = time.perf_counter()
for lam in partitions_up_to({w}):
    wfun.w_multi_tableau(z, lam, pt)
print(kernels.BACKEND, time.perf_counter() - t0)
"""


def kernel_cases(shape, n):
    chains = _pykernels.strip_chains(shape, n)
    fillings = [tuple(_pykernels.chain_filling(c)) for c in chains]
    ncells = sum(shape)
    wnum = [3 ** (i % 7) for i in range(len(fillings))]
    wden = [2 ** (i % 5) + 1 for i in range(len(fillings))]
    tnum = [[(c + 1) * (v + 2) for v in range(n)] for c in range(ncells)]
    tden = [[v + c + 5 for v in range(n)] for c in range(ncells)]
    lo = [0] * 6
    hi = [3] * 6
    return {
        "box_product 4^6": lambda m: m.box_product(lo, hi),
        f"strip_chains {shape} n={n}": lambda m: m.strip_chains(shape, n),
        "chain_filling (all chains)": lambda m: [m.chain_filling(c) for c in chains],
        f"weighted_product_sum ({len(fillings)} terms)":
            lambda m: m.weighted_product_sum(fillings, wnum, wden, tnum, tden),
    }


def _plain(x):
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    return x


def best_of(fn, repeat, number):
    return min(timeit.repeat(fn, repeat=repeat, number=number)) / number


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    p.add_argument("--repeat", type=int, default=5)
    p.add_argument("--number", type=int, default=3)
    p.add_argument("--shape", default="4,3,2,1")
    p.add_argument("--n", type=int, default=5)
    p.add_argument("--e2e-weight", type=int, default=7)
    args = p.parse_args(argv)

    if _ckernels is None:
        print("compiled kernels not built; only the pure-Python backend is available")
        return 1
    shape = tuple(int(x) for x in args.shape.split(","))
    print(f"{'kernel':44s} {'python ms':>11s} {'cython ms':>11s} {'speedup':>8s}")
    for name, fn in kernel_cases(shape, args.n).items():
        assert _plain(fn(_pykernels)) == _plain(fn(_ckernels)), name
        tp = best_of(lambda: fn(_pykernels), args.repeat, args.number) * 1e3
        tc = best_of(lambda: fn(_ckernels), args.repeat, args.number) * 1e3
        print(f"{name:44s} {tp:11.3f} {tc:11.3f} {tp / tc:7.1f}x")

    print()
    for n in (3, 4):
        times = {}
        for flag in ("1", ""):
            env = dict(os.environ, QTCOMB_PURE_PYTHON=flag)
            out = subprocess.run([sys.executable, "-c", E2E.format(n=n, w=args.e2e_weight)],
                                 env=env, capture_output=True, text=True, check=True).stdout.split()
            times[out[0]] = float(out[1]) * 1e3
        label = f"w tableau sum, |lam|<={args.e2e_weight}, n={n}"
        tp, tc = times["python"], times["cython"]
        print(f"{label:44s} {tp:11.1f} {tc:11.1f} {tp / tc:7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
