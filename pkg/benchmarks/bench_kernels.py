"""Time the compiled and pure-Python kernels on the hot loops.

Run with ``python benchmarks/bench_kernels.py``.
"""

import math
import timeit

import numpy as np

from tnorm_analogy import _pykernels

try:
    from tnorm_analogy import _ckernels
except ImportError:
    _ckernels = None

XS = np.linspace(0.3, 1.0, 2049)
PS = np.exp(np.linspace(math.log(1e-6), math.log(1e6), 2048))

CASES = {
    "diff_sweep 2049 pts": lambda k: k.diff_sweep(10.0, 0.01, 0.2, 0.3, XS),
    "diff_over_params 2048 p": lambda k: k.diff_over_params(PS, 0.1, 0.25, 0.4, 0.6),
    "frank_tnorm x1000": lambda k: [k.frank_tnorm(2.0, i / 1000, 0.5) for i in range(1000)],
}


def best_of(fn, repeat=5, number=20):
    return min(timeit.repeat(fn, repeat=repeat, number=number)) / number


def main():
    backends = [_pykernels] + ([_ckernels] if _ckernels else [])
    print(f"{'case':<28}" + "".join(f"{k.BACKEND:>12}" for k in backends) + ("     speedup" if _ckernels else ""))
    for name, case in CASES.items():
        times = [best_of(lambda k=k: case(k)) for k in backends]
        row = f"{name:<28}" + "".join(f"{t * 1e3:>10.3f}ms" for t in times)
        if len(times) == 2:
            row += f"{times[0] / times[1]:>11.1f}x"
        print(row)
    if _ckernels is None:
        print("compiled extension not built; only the Python backend was timed")


if __name__ == "__main__":
    main()
