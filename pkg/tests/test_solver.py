import math
import random

import numpy as np
import pytest

from tnorm_analogy import (
    INF,
    ONE,
    ZERO,
    Frank,
    FrankParam,
    InvalidRange,
    Lukasiewicz,
    Min,
    Product,
    SolverOptions,
    diff_residual,
    minimize_over_d,
    solve_p,
    sweep_d,
)
from tnorm_analogy.solver import golden_section

FIG = (0.01, 0.2, 0.3)

# mpmath at 50 digits: argmin of diff_p over [0.3, 1] and the minimum
FIG_REFERENCE = {
    2: (0.44486643695658, 0.04513356304342),
    10: (0.46493014353413, 0.02506985646587),
    100: (0.48117552065710, 0.00882447934290),
}


def test_diff_residual_examples():
    assert diff_residual(Lukasiewicz(), (0.1, 0.3, 0.5, 0.7)) == pytest.approx(0.0, abs=1e-15)
    assert diff_residual(Min(), (0.3, 0.3, 0.7, 0.7)) == 0.0
    assert diff_residual(Product(), (0.1, 0.2, 0.3, 0.6)) == pytest.approx(0.2, abs=1e-15)
    assert diff_residual(Frank(2), (0.01, 0.2, 0.3, 0.49)) == pytest.approx(0.08940129062250942, abs=1e-14)


def test_sweep_shape():
    curve = sweep_d(2, *FIG, 0.3, 1.0, 700)
    assert len(curve.x) == 701
    assert curve.x[0] == 0.3 and curve.x[-1] == 1.0
    assert np.all(curve.diff >= 0)
    i = curve.argmin()
    assert 0 < i < 700
    assert np.all(np.diff(curve.diff[: i + 1]) < 0)
    assert np.all(np.diff(curve.diff[i:]) > 0)
    assert curve.samples[i] == (curve.x[i], curve.diff[i])


def test_sweep_touches_zero_for_lukasiewicz():
    curve = sweep_d(INF, *FIG, 0.3, 1.0, 700)
    i = curve.argmin()
    assert curve.x[i] == pytest.approx(0.49, abs=1e-12)
    assert curve.diff[i] <= 1e-15


@pytest.mark.parametrize("p", sorted(FIG_REFERENCE))
def test_minimize_reference(p):
    d_star, min_diff = minimize_over_d(p, *FIG, 0.3, 1.0)
    ref_d, ref_m = FIG_REFERENCE[p]
    assert d_star == pytest.approx(ref_d, abs=1e-7)
    assert min_diff == pytest.approx(ref_m, abs=1e-13)


def test_minimize_root_flag():
    m = minimize_over_d(INF, *FIG, 0.3, 1.0)
    assert m.root
    assert m.d_star == pytest.approx(0.49, abs=1e-9)
    assert m.min_diff <= 1e-9
    assert not minimize_over_d(2, *FIG, 0.3, 1.0).root


def test_minimizer_beats_grid():
    for p in (0.01, 0.5, 2, 10, 100, 1e4):
        m = minimize_over_d(p, *FIG, 0.3, 1.0)
        curve = sweep_d(p, *FIG, 0.3, 1.0, 4000)
        assert m.min_diff <= curve.diff.min() + 1e-12
        assert m.min_diff == pytest.approx(diff_residual(Frank(p), (*FIG, m.d_star)), abs=1e-15)


def test_minimizers_increase_with_p():
    ds = [minimize_over_d(p, *FIG, 0.3, 1.0).d_star for p in (2, 10, 100, 1e4)]
    assert all(x < y for x, y in zip(ds, ds[1:]))
    assert ds[-1] < 0.49


def test_deterministic():
    assert minimize_over_d(10, *FIG, 0.3, 1.0) == minimize_over_d(10, *FIG, 0.3, 1.0)
    r1, r2 = solve_p((0.2, 0.3, 0.4, 0.5)), solve_p((0.2, 0.3, 0.4, 0.5))
    assert r1 == r2


def test_invalid_range():
    with pytest.raises(InvalidRange):
        sweep_d(2, *FIG, 0.6, 0.6, 10)
    with pytest.raises(InvalidRange):
        minimize_over_d(2, *FIG, 0.9, 0.3)
    with pytest.raises(InvalidRange):
        sweep_d(2, *FIG, 0.3, 1.0, 1)
    with pytest.raises(ValueError):
        sweep_d(2, *FIG, -0.1, 1.0, 10)


def test_solve_p_trivial_quad_has_sentinels():
    res = solve_p((0.5, 0.5, 0.7, 0.7))
    for s in (ZERO, ONE, INF):
        assert s in res.solutions
    assert res.best_residual <= 1e-12
    assert [p.value for p in res.solutions] == sorted(p.value for p in res.solutions)


def test_solve_p_arithmetic_quad():
    res = solve_p((0.1, 0.3, 0.5, 0.7))
    assert res.best_p == INF
    assert INF in res.solutions
    assert ONE not in res.solutions


def test_solve_p_without_solutions():
    res = solve_p((0.01, 0.2, 0.3, 0.45), SolverOptions(grid_steps=256))
    assert res.solutions == ()
    # the necessity bound keeps every residual at least |a + d - b - c|
    assert res.best_residual >= 0.04 - 1e-12


def test_necessity_bound():
    rng = random.Random(17)
    for _ in range(3000):
        q = tuple(rng.random() for _ in range(4))
        p = FrankParam(math.exp(rng.uniform(-20, 20)))
        a, b, c, d = q
        assert diff_residual(Frank(p), q) >= abs((a + d) - (b + c)) - 1e-12


def test_necessity_corollary():
    # wherever the curve is within tol of zero, a + d = b + c holds within tol
    for p in (0.3, 2, 100, INF):
        curve = sweep_d(p, 0.1, 0.2, 0.3, 0.0, 1.0, 2000)
        near = curve.x[curve.diff <= 1e-3]
        assert np.all(np.abs(0.1 + near - 0.5) <= 1e-3)


def test_golden_section_quadratic():
    x, fx = golden_section(lambda x: (x - 0.3) ** 2, 0.0, 1.0)
    assert x == pytest.approx(0.3, abs=1e-8)
    assert fx <= 1e-16
    # endpoint minimum is returned when supplied
    x, fx = golden_section(lambda x: x, 0.0, 1.0, f_lo=0.0, f_hi=1.0)
    assert x == 0.0 and fx == 0.0
