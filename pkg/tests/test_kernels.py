"""Compiled and pure-Python kernels must agree and be deterministic."""

import math
import random
import subprocess
import sys

import numpy as np
import pytest

from conftest import KERNEL_BACKENDS
from tnorm_analogy import _kernels, _pykernels

PARAMS = [0.0, 1e-12, 1e-6, 0.05, 0.37, 0.8, 1 - 1e-6, 1.0, 1 + 1e-6, 2.0, 2.72, 3.0, 50.0, 1e6, 1e15, math.inf]


def test_selected_backend_is_one_of_the_available():
    assert _kernels.BACKEND in {m.BACKEND for m in KERNEL_BACKENDS}


def test_boundaries(kernels):
    for p in PARAMS:
        assert kernels.frank_tnorm(p, 0.0, 0.7) == 0.0
        assert kernels.frank_tnorm(p, 0.7, 1.0) == 0.7
        assert kernels.frank_tconorm(p, 0.3, 0.0) == 0.3
        assert kernels.frank_tconorm(p, 0.3, 1.0) == 1.0


def test_sweep_matches_scalar(kernels):
    xs = np.linspace(0.3, 1.0, 101)
    for p in PARAMS:
        curve = kernels.diff_sweep(p, 0.01, 0.2, 0.3, xs)
        for x, v in zip(xs, curve):
            t, s = kernels.frank_residuals(p, 0.01, 0.2, 0.3, float(x))
            assert v == t + s


def test_over_params_matches_scalar(kernels):
    res = kernels.diff_over_params(PARAMS, 0.1, 0.25, 0.4, 0.6)
    for p, v in zip(PARAMS, res):
        t, s = kernels.frank_residuals(p, 0.1, 0.25, 0.4, 0.6)
        assert v == t + s


@pytest.mark.skipif(len(KERNEL_BACKENDS) < 2, reason="compiled extension not built")
def test_backends_agree():
    c = KERNEL_BACKENDS[1]
    rng = random.Random(7)
    for _ in range(20000):
        p = rng.choice(PARAMS) if rng.random() < 0.3 else math.exp(rng.uniform(-30, 30))
        a, b = rng.random(), rng.random()
        assert abs(c.frank_tnorm(p, a, b) - _pykernels.frank_tnorm(p, a, b)) <= 1e-15
        assert abs(c.frank_tconorm(p, a, b) - _pykernels.frank_tconorm(p, a, b)) <= 1e-15
    xs = np.linspace(0.0, 1.0, 513)
    for p in PARAMS:
        np.testing.assert_allclose(
            c.diff_sweep(p, 0.2, 0.4, 0.5, xs), _pykernels.diff_sweep(p, 0.2, 0.4, 0.5, xs), rtol=0, atol=1e-15
        )


def test_deterministic(kernels):
    xs = np.linspace(0.3, 1.0, 701)
    first = kernels.diff_sweep(10.0, 0.01, 0.2, 0.3, xs)
    second = kernels.diff_sweep(10.0, 0.01, 0.2, 0.3, xs.copy())
    assert first.tobytes() == second.tobytes()


def test_fallback_selected_without_extension():
    code = (
        "import sys; sys.modules['tnorm_analogy._ckernels'] = None\n"
        "import tnorm_analogy\n"
        "print(tnorm_analogy.BACKEND, tnorm_analogy.frank_tnorm(2, 0.5, 0.5))"
    )
    out = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True, check=True).stdout
    backend, value = out.split()
    assert backend == "python"
    assert float(value) == _pykernels.frank_tnorm(2.0, 0.5, 0.5)
