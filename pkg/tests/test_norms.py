import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays
from scipy.optimize import brentq

from orlicz import (GridFunction, YoungFunction, distribution_function, load_grid_function,
                    lp_norm, luxemburg_norm, make_builtin, modular, save_grid_function,
                    strictly_convex_equivalent, weak_lp_norm, weak_orlicz_norm)
from orlicz.errors import DegenerateFunctionError, FinitenessError
from orlicz.young import Affine, Power

PHIS = {
    "power(1)": make_builtin("power", [1.0]),
    "power(2)": make_builtin("power", [2.0]),
    "power(3.5)": make_builtin("power", [3.5]),
    "entropy": make_builtin("entropy"),
    "counterexample": make_builtin("counterexample"),
    "affine(2)": make_builtin("affine", [2.0]),
}


def indicator(k: int, height: float = 1.0, n: int = 64, extent: float = 4.0):
    v = np.zeros(n)
    v[10:10 + k] = height
    return GridFunction(1, extent, n, v)


def inverse(phi, y):
    """phi^{-1}(y) by root bracketing, independent of the bisection in the library."""
    hi = 1.0
    while phi(hi) < y:
        hi *= 2
    return brentq(lambda t: phi(t) - y, 0.0, hi, xtol=1e-15, rtol=1e-15)


random_grids = st.builds(
    lambda n, ext, vals: GridFunction(1, ext, n, vals[:n]),
    st.sampled_from([16, 32, 64]),
    st.floats(0.5, 10.0),
    arrays(np.float64, 64, elements=st.floats(-50, 50)),
).filter(lambda f: np.any(f.values != 0))


# -- distribution function and L^p ----------------------------------------------

def test_distribution_function_zero():
    assert distribution_function(GridFunction(1, 1.0, 8, np.zeros(8)), 0.5) == 0.0


def test_distribution_function_indicator():
    f = indicator(7, height=2.0)
    assert distribution_function(f, 1.0) == 7 * f.cell_volume


def test_distribution_function_gaussian_level_sets():
    f = GridFunction.sample(lambda x: np.exp(-x[..., 0] ** 2), 1, 8.0, 512)
    t = np.linspace(0.05, 0.95, 19)
    exact = 2 * np.sqrt(-np.log(t))
    assert np.max(np.abs(distribution_function(f, t) - exact)) <= 2 * f.cell_volume


@given(random_grids)
def test_distribution_function_non_increasing(f):
    t = np.linspace(0, 60, 300)
    assert np.all(np.diff(distribution_function(f, t)) <= 0)


def test_lp_examples():
    f = GridFunction.sample(lambda x: np.where((x[..., 0] >= -1) & (x[..., 0] < 1), 1.0, 0.0), 1, 4.0, 64)
    assert lp_norm(f, 1) == pytest.approx(2.0, abs=1e-14)
    g = GridFunction(2, 3.0, 8, np.full((8, 8), -2.5))
    assert lp_norm(g, 3) == pytest.approx(2.5 * 6.0 ** (2 / 3), rel=1e-14)
    assert lp_norm(g, math.inf) == 2.5
    gauss = GridFunction.sample(lambda x: np.exp(-x[..., 0] ** 2 / 2), 1, 8.0, 256)
    assert lp_norm(gauss, 2) == pytest.approx(math.pi ** 0.25, abs=1e-6)


def test_weak_lp_indicator_and_zero():
    f = indicator(12)
    m = 12 * f.cell_volume
    for p in (1.0, 2.0, 3.0):
        assert weak_lp_norm(f, p) == pytest.approx(m ** (1 / p), rel=1e-14)
    assert weak_lp_norm(GridFunction(1, 1.0, 8, np.zeros(8)), 2.0) == 0.0


@given(random_grids, st.floats(0.5, 6.0))
def test_weak_lp_below_lp(f, p):
    assert weak_lp_norm(f, p) <= lp_norm(f, p) * (1 + 1e-12)


# -- Luxemburg and weak Orlicz ---------------------------------------------------

def test_luxemburg_equals_lp_on_random_functions():
    rng = np.random.default_rng(11)
    worst = 0.0
    for _ in range(100):
        n = int(rng.choice([16, 64, 256]))
        p = float(rng.uniform(1.0, 4.0))
        f = GridFunction(1, float(rng.uniform(1, 10)), n, rng.normal(size=n) * 10 ** rng.uniform(-3, 3))
        worst = max(worst, abs(luxemburg_norm(f, make_builtin("power", [p])).value / lp_norm(f, p) - 1))
    assert worst <= 1e-9


@pytest.mark.parametrize("name", list(PHIS))
@pytest.mark.parametrize("k,c", [(1, 0.3), (9, 3.0), (40, 17.0)])
def test_indicator_closed_forms(name, k, c):
    phi = PHIS[name]
    f = indicator(k, height=c)
    m = k * f.cell_volume
    expected = c / inverse(phi, 1.0 / m)
    assert luxemburg_norm(f, phi).value == pytest.approx(expected, rel=1e-9)
    assert weak_orlicz_norm(f, phi).value == pytest.approx(expected, rel=1e-9)


def test_zero_function():
    z = GridFunction(1, 2.0, 16, np.zeros(16))
    assert luxemburg_norm(z, PHIS["entropy"]).value == 0.0
    assert weak_orlicz_norm(z, PHIS["entropy"]).value == 0.0


@pytest.mark.parametrize("name", list(PHIS))
def test_modular_at_norm_is_one(name):
    rng = np.random.default_rng(5)
    phi = PHIS[name]
    for _ in range(10):
        f = GridFunction(1, 4.0, 64, rng.normal(size=64))
        r = luxemburg_norm(f, phi)
        assert 1 - 1e-6 <= r.modular_at_value <= 1 + 1e-6
        assert modular(f, phi, r.value) == pytest.approx(r.modular_at_value, rel=1e-12)


@pytest.mark.parametrize("name", list(PHIS))
@given(f=random_grids)
def test_weak_orlicz_below_luxemburg(name, f):
    phi = PHIS[name]
    assert weak_orlicz_norm(f, phi).value <= luxemburg_norm(f, phi).value * (1 + 1e-6)


@given(random_grids, st.floats(-100, 100).filter(lambda c: abs(c) > 1e-3))
def test_homogeneity(f, c):
    phi = PHIS["counterexample"]
    assert luxemburg_norm(f * c, phi).value == pytest.approx(abs(c) * luxemburg_norm(f, phi).value,
                                                            rel=1e-9)


@given(random_grids)
def test_monotonicity(f):
    phi = PHIS["entropy"]
    g = f.with_values(np.abs(f.values) + 0.1)
    assert luxemburg_norm(f, phi).value <= luxemburg_norm(g, phi).value * (1 + 1e-10)


def test_triangle_inequality():
    rng = np.random.default_rng(2)
    phi = PHIS["counterexample"]
    for _ in range(1000):
        f = GridFunction(1, 2.0, 16, rng.normal(size=16))
        g = GridFunction(1, 2.0, 16, rng.normal(size=16) * rng.uniform(0.1, 10))
        lhs = luxemburg_norm(f + g, phi).value
        assert lhs <= (luxemburg_norm(f, phi).value + luxemburg_norm(g, phi).value) * (1 + 1e-9)


def test_equivalent_functions_give_comparable_norms():
    phi = PHIS["counterexample"]
    phi1 = strictly_convex_equivalent(phi)
    rng = np.random.default_rng(8)
    for _ in range(20):
        f = GridFunction(1, 4.0, 64, rng.normal(size=64))
        a, b = luxemburg_norm(f, phi).value, luxemburg_norm(f, phi1).value
        # phi <= phi1 <= 2 phi
        assert a <= b * (1 + 1e-9) and b <= 2 * a * (1 + 1e-9)


def test_complex_and_two_dimensional():
    f = GridFunction.sample(lambda x: np.exp(-np.sum(x ** 2, -1)) * np.exp(1j * x[..., 0]), 2, 4.0, 32)
    r = luxemburg_norm(f, PHIS["power(2)"])
    assert r.value == pytest.approx(lp_norm(f, 2.0), rel=1e-9)


def test_degenerate_and_infinite_phi_rejected():
    f = indicator(3)
    flat = YoungFunction(((0.0, Power(2.0, 0.0)), (1.0, Affine(1.0, 1.0))))
    with pytest.raises(DegenerateFunctionError):
        luxemburg_norm(f, flat)
    capped = YoungFunction(((0.0, Power(2.0)),), finite_until=5.0)
    with pytest.raises(FinitenessError):
        weak_orlicz_norm(f, capped)


def test_grid_file_round_trip(tmp_path):
    rng = np.random.default_rng(0)
    f = GridFunction(2, 3.0, 8, rng.normal(size=(8, 8)) + 1j * rng.normal(size=(8, 8)))
    save_grid_function(f, tmp_path / "f.bin")
    g = load_grid_function(tmp_path / "f.bin")
    assert (g.dim, g.extent, g.n) == (2, 3.0, 8)
    np.testing.assert_array_equal(g.values, f.values)
    real = GridFunction(1, 1.0, 4, [1.0, 2.0, 3.0, 4.0])
    save_grid_function(real, tmp_path / "r.bin")
    back = load_grid_function(tmp_path / "r.bin")
    assert not np.iscomplexobj(back.values)
    raw = (tmp_path / "r.bin").read_bytes()
    assert raw.split(b"\n", 1)[0].startswith(b"{")
    assert len(raw.split(b"\n", 1)[1]) == 4 * 16


def test_grid_validation():
    with pytest.raises(ValueError):
        GridFunction(1, 1.0, 7, np.zeros(7))
    with pytest.raises(ValueError):
        GridFunction(3, 1.0, 4, np.zeros((4, 4, 4)))
    with pytest.raises(ValueError):
        GridFunction(1, 1.0, 4, [0, np.nan, 0, 0])
