import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from orlicz import (DomainError, FinitenessError, GridConfig, NotStrictError, PreconditionError,
                    YoungFunction, check_delta2, check_equivalence, check_lambda, check_squeezing,
                    compute_exponents, evaluate, exponential_smoothing, make_builtin,
                    one_sided_derivative, second_differences, smooth_equivalent,
                    strictly_convex_equivalent)
from orlicz.errors import DegenerateFunctionError
from orlicz.young import Affine, Power, bump_moment


def library():
    return {
        "power(1)": make_builtin("power", [1.0]),
        "power(1.5)": make_builtin("power", [1.5]),
        "power(2)": make_builtin("power", [2.0]),
        "power(3)": make_builtin("power", [3.0]),
        "affine(2)": make_builtin("affine", [2.0]),
        "entropy": make_builtin("entropy"),
        "counterexample": make_builtin("counterexample"),
        "exp_minus_one": make_builtin("exp_minus_one"),
    }


# -- built-ins and evaluation -------------------------------------------------

def test_counterexample_pieces():
    phi = make_builtin("counterexample")
    assert [s for s, _ in phi.pieces] == [0.0, 1.0, 2.0]
    t = np.array([0.5, 1.0, 1.5, 2.0, 3.0])
    np.testing.assert_allclose(phi(t), [0.5, 2.0, 4.0, 6.0, 11.0], rtol=0, atol=1e-15)


def test_power_one_is_identity():
    phi = make_builtin("power", [1.0])
    t = np.geomspace(1e-3, 1e3, 7)
    np.testing.assert_array_equal(phi(t), t)
    np.testing.assert_array_equal(phi.derivative(t, "right"), np.ones_like(t))


def test_entropy_value():
    assert make_builtin("entropy")(2.0) == pytest.approx(2 * math.log(3), rel=1e-15)


def test_power_below_one_rejected():
    with pytest.raises(ValueError):
        make_builtin("power", [0.5])


def test_unknown_builtin():
    with pytest.raises(ValueError):
        make_builtin("cosh")


def test_negative_argument_is_domain_error():
    with pytest.raises(DomainError):
        evaluate(make_builtin("entropy"), -1.0)


def test_infinite_beyond_threshold():
    phi = YoungFunction(((0.0, Power(2.0)),), finite_until=3.0)
    assert phi(2.0) == 4.0
    assert math.isinf(phi(4.0))
    with pytest.raises(DomainError):
        one_sided_derivative(phi, 4.0)
    with pytest.raises(FinitenessError):
        compute_exponents(phi)


@pytest.mark.parametrize("t,side,expected", [
    (1.0, "right", 4.0), (1.0, "left", 4.0),
    (2.0, "right", 4.0), (2.0, "left", 4.0),
    (0.5, "right", 2.0), (3.0, "left", 6.0),
])
def test_counterexample_one_sided_derivatives(t, side, expected):
    assert one_sided_derivative(make_builtin("counterexample"), t, side) == expected


def test_kink_has_distinct_one_sided_derivatives():
    phi = YoungFunction(((0.0, Power(1.0)), (1.0, Affine(3.0, 2.0))))
    assert one_sided_derivative(phi, 1.0, "left") == 1.0
    assert one_sided_derivative(phi, 1.0, "right") == 3.0


@given(st.floats(1.0, 6.0), st.floats(1e-3, 1e3))
def test_power_derivative_closed_form(p, t):
    phi = make_builtin("power", [p])
    for side in ("left", "right"):
        assert one_sided_derivative(phi, t, side) == pytest.approx(p * t ** (p - 1), rel=1e-12)


def test_serialization_round_trip():
    for phi in list(library().values()) + [smooth_equivalent(make_builtin("power", [2.0])),
                                           strictly_convex_equivalent(make_builtin("counterexample"))]:
        back = YoungFunction.from_dict(phi.to_dict())
        t = np.geomspace(1e-3, 1e2, 50)
        np.testing.assert_array_equal(back(t), phi(t))


def test_custom_pieces_round_trip():
    phi = YoungFunction(((0.0, Power(2.0, 3.0)), (1.0, Affine(6.0, 3.0))), kind="custom")
    back = YoungFunction.from_dict(phi.to_dict())
    assert back(2.0) == phi(2.0) == 9.0


# -- structural invariants on the library ------------------------------------

@pytest.mark.parametrize("name", list(library()))
def test_convex_monotone_and_zero_at_origin(name):
    phi = library()[name]
    assert phi(0.0) == 0.0
    rng = np.random.default_rng(3)
    s, t = rng.uniform(0, 20, 10_000), rng.uniform(0, 20, 10_000)
    mid = phi(0.5 * (s + t))
    avg = 0.5 * (phi(s) + phi(t))
    assert np.all(mid <= avg * (1 + 1e-12) + 1e-300)
    grid = np.linspace(0, 20, 2001)
    assert np.all(np.diff(phi(grid)) >= 0)


@pytest.mark.parametrize("name", list(library()))
def test_one_sided_derivatives_monotone(name):
    phi = library()[name]
    t = np.union1d(np.linspace(0.01, 10, 997), [1.0, 2.0])
    left, right = phi.derivative(t, "left"), phi.derivative(t, "right")
    assert np.all(left <= right * (1 + 1e-12))
    assert np.all(right[:-1] <= left[1:] * (1 + 1e-12))


@pytest.mark.parametrize("name", list(library()))
def test_exponent_ordering(name):
    r = compute_exponents(library()[name])
    assert 1.0 <= r.q_phi <= r.p_phi


def test_p_equals_one_only_for_linear():
    ones = {n for n, phi in library().items() if compute_exponents(phi).p_phi == 1.0}
    assert ones == {"power(1)", "affine(2)"}


@pytest.mark.parametrize("p", [1.0, 1.5, 2.0, 3.7])
def test_power_exponents_exact(p):
    r = compute_exponents(make_builtin("power", [p]))
    assert r.p_phi == p and r.q_phi == p


def test_counterexample_exponents():
    r = compute_exponents(make_builtin("counterexample"))
    assert r.q_phi == pytest.approx(4 / 3, abs=1e-3)
    assert r.p_phi == pytest.approx(2.0, abs=1e-3)
    assert r.strict


def test_entropy_exponents():
    r = compute_exponents(make_builtin("entropy"))
    assert r.q_phi == pytest.approx(1.0, abs=1e-3)
    assert r.p_phi == pytest.approx(2.0, abs=1e-3)
    assert r.delta2.satisfied and not r.lam.satisfied


def test_exponents_need_full_grid():
    with pytest.raises(PreconditionError):
        compute_exponents(make_builtin("power", [2.0]), GridConfig(1e-2, 1e2, 100))


def test_degenerate_function_rejected():
    phi = YoungFunction(((0.0, Power(2.0, 0.0)), (1.0, Affine(1.0, 1.0))))
    with pytest.raises(DegenerateFunctionError):
        compute_exponents(phi)


def test_report_json_fields():
    d = compute_exponents(make_builtin("counterexample")).to_dict()
    assert set(d) == {"p_phi", "q_phi", "arg_sup", "arg_inf", "delta2", "lambda", "grid_range"}


# -- Delta2 and Lambda ---------------------------------------------------------

@pytest.mark.parametrize("p", [1.0, 2.0, 3.0])
def test_delta2_power(p):
    r = check_delta2(make_builtin("power", [p]))
    assert r.satisfied and r.C == pytest.approx(2 ** p, rel=1e-12)


def test_delta2_exponential_fails():
    assert not check_delta2(make_builtin("exp_minus_one")).satisfied


def test_delta2_counterexample_constant():
    r = check_delta2(make_builtin("counterexample"))
    assert r.satisfied and r.C <= 4.0 + 1e-9


def test_lambda_examples():
    r = check_lambda(make_builtin("power", [2.0]), p=2.0)
    assert r.satisfied and r.worst_ratio == pytest.approx(1.0, abs=1e-12)
    assert check_lambda(make_builtin("counterexample"), p=4 / 3).satisfied
    assert not check_lambda(make_builtin("entropy"), p=1.1).satisfied
    with pytest.raises(ValueError):
        check_lambda(make_builtin("power", [2.0]), p=1.0)


@pytest.mark.parametrize("name", list(library()))
def test_delta2_iff_p_finite(name):
    phi = library()[name]
    r = compute_exponents(phi)
    assert check_delta2(phi).satisfied == math.isfinite(r.p_phi)


@pytest.mark.parametrize("name", list(library()))
def test_lambda_iff_q_above_one(name):
    phi = library()[name]
    r = compute_exponents(phi)
    p = max(r.q_phi - 0.01, 1.01)
    assert check_lambda(phi, p=p).satisfied == (r.q_phi > 1.001)


@pytest.mark.parametrize("name", ["power(1.5)", "power(2)", "counterexample"])
def test_ratio_monotone_below_q(name):
    phi = library()[name]
    q = compute_exponents(phi).q_phi
    for p in (1.01, 0.5 * (1 + q), q):
        t = np.geomspace(1e-4, 1e4, 5000)
        ratio = phi(t) / t ** p
        assert np.all(np.diff(ratio) >= -1e-12 * ratio[1:])


# -- squeezing and equivalence ------------------------------------------------

def test_squeezing_power():
    phi = make_builtin("power", [2.0])
    c = check_squeezing(phi, compute_exponents(phi), 1.0, 1.0)
    assert (c.c_low_small, c.c_up_small, c.c_low_large, c.c_up_large) == (1.0, 1.0, 1.0, 1.0)


def test_squeezing_counterexample_finite():
    phi = make_builtin("counterexample")
    c = check_squeezing(phi, compute_exponents(phi), 1.0, 2.0)
    for v in (c.c_low_small, c.c_up_small, c.c_low_large, c.c_up_large):
        assert 0 < v < math.inf


def test_squeezing_entropy_small_bound():
    phi = make_builtin("entropy")
    c = check_squeezing(phi, compute_exponents(phi), 1.0, 2.0)
    assert c.c_up_small == pytest.approx(math.log(2.0), rel=1e-9)


def test_equivalence_examples():
    p2 = make_builtin("power", [2.0])
    assert check_equivalence(p2, p2).C == 1.0
    three = YoungFunction(((0.0, Power(2.0, 3.0)),))
    r = check_equivalence(p2, three)
    assert r.equivalent and r.C == pytest.approx(3.0, rel=1e-14)
    assert not check_equivalence(p2, make_builtin("power", [3.0])).equivalent


# -- constructions --------------------------------------------------------------

def test_smooth_equivalent_of_linear():
    psi = smooth_equivalent(make_builtin("power", [1.0]))
    t = np.geomspace(1e-3, 1e3, 25)
    np.testing.assert_allclose(psi(t), t * (1 - 0.5 * bump_moment()), rtol=1e-12)
    assert bump_moment() == pytest.approx(0.5, abs=1e-12)


@pytest.mark.parametrize("name", ["power(2)", "power(3)", "counterexample", "entropy", "affine(2)"])
def test_smooth_equivalent_below_and_equivalent(name):
    phi = library()[name]
    psi = smooth_equivalent(phi)
    t = np.geomspace(1e-4, 1e4, 10_000)
    assert psi(0.0) == 0.0
    assert np.all(psi(t) <= phi(t) * (1 + 1e-12))
    r = check_equivalence(psi, phi)
    assert r.equivalent and r.C <= 4.0


def test_smooth_equivalent_needs_delta2():
    with pytest.raises(PreconditionError):
        smooth_equivalent(make_builtin("exp_minus_one"))


def test_exponential_smoothing_linear_closed_form():
    psi = exponential_smoothing(make_builtin("power", [1.0]))
    t = np.linspace(0, 30, 3001)
    np.testing.assert_allclose(psi(t), t - 1 + np.exp(-t), rtol=0, atol=1e-8)


def test_exponential_smoothing_square_closed_form():
    psi = exponential_smoothing(make_builtin("power", [2.0]))
    t = np.linspace(0, 20, 201)
    exact = t * t - 2 * t + 2 - 2 * np.exp(-t)
    np.testing.assert_allclose(psi(t), exact, rtol=1e-10, atol=1e-12)


@pytest.mark.parametrize("name", ["power(1.5)", "power(2)", "counterexample"])
def test_strictly_convex_equivalent(name):
    phi = library()[name]
    phi1 = strictly_convex_equivalent(phi)
    assert phi1(0.0) == 0.0
    assert np.min(second_differences(phi1)) > 0
    r = check_equivalence(phi1, phi)
    assert r.equivalent and r.C <= 2.0


def test_strictly_convex_equivalent_needs_q_above_one():
    with pytest.raises(PreconditionError):
        strictly_convex_equivalent(make_builtin("entropy"))


def test_entropy_strictly_convex():
    assert np.min(second_differences(make_builtin("entropy"))) > 0


def test_counterexample_not_strictly_convex():
    assert np.min(second_differences(make_builtin("counterexample"), t_max=3.0)) <= 1e-12


def test_not_strict_error_is_precondition():
    assert issubclass(NotStrictError, PreconditionError)


@pytest.mark.parametrize("name", ["power(1.5)", "power(2)", "power(3)", "affine(2)", "entropy",
                                  "counterexample"])
def test_exponents_agree_for_left_and_right_derivatives(name):
    # the sup and inf of t phi'(t) / phi(t) do not depend on the side of the derivative
    from orlicz.bench import library
    phi = library()[name]
    t = np.geomspace(1e-6, 1e6, 100_000)
    t = np.union1d(t, [1.0, 2.0])
    v = phi.eval(t)
    right = t * phi.derivative(t, "right") / v
    left = t * phi.derivative(t, "left") / v
    assert np.max(left) == pytest.approx(np.max(right), rel=1e-9)
    assert np.min(left) == pytest.approx(np.min(right), rel=1e-9)
