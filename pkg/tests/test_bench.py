import json
import math

import numpy as np
import pytest

from orlicz import (CASE_IDS, ExperimentSpec, FamilyConfig, NotStrictError, OrderViolationError,
                    PreconditionError, fourier_transform, generate_family, run_check,
                    run_boundedness)
from orlicz.bench import REFINEMENT_TOL, THREADS_ENV, dumps, lambda_probe_exponent, library

SMALL = {"kinds": ["gaussian", "random-trig"], "count": 2, "seed": 3}


def spec(**kw):
    base = {"operator": "multiplier", "symbol": {"name": "identity"}, "phi": "counterexample",
            "family": SMALL, "grid": {"n": 64}}
    base.update(kw)
    return ExperimentSpec.from_dict(base)


# -- families -------------------------------------------------------------------

def test_gaussian_peak_at_center():
    (label, f), = generate_family(FamilyConfig(("gaussian",), 1, sweeps={"gaussian": [1.0]}))
    assert label == "gaussian(sigma=1)"
    assert f.values[128] == 1.0 and np.argmax(f.values) == 128


def test_family_is_deterministic():
    cfg = FamilyConfig(seed=42)
    a, b = generate_family(cfg), generate_family(cfg)
    assert [l for l, _ in a] == [l for l, _ in b]
    for (_, f), (_, g) in zip(a, b):
        assert f.values.tobytes() == g.values.tobytes()
    other = generate_family(FamilyConfig(("random-trig",), 3, seed=43))
    mine = [f for l, f in a if l.startswith("random-trig")]
    assert not np.array_equal(mine[0].values, other[0][1].values)


def test_modulated_gaussian_spectrum_peak():
    (_, f), = generate_family(FamilyConfig(("modulated-gaussian",), 1,
                                           sweeps={"modulated-gaussian": [4.0]}))
    xi = f.frequency_axis()
    peak = xi[np.argmax(np.abs(fourier_transform(f)))]
    assert peak == xi[np.argmin(np.abs(xi - 4.0))]


@pytest.mark.parametrize("dim,n", [(1, 64), (2, 32)])
def test_family_members_are_nonzero_with_finite_norms(dim, n):
    from orlicz import luxemburg_norm
    for _, f in generate_family(FamilyConfig(), dim, 8.0, n):
        assert np.any(f.values != 0)
        for name, phi in library().items():
            if name in ("entropy", "exp_minus_one"):
                continue
            assert math.isfinite(luxemburg_norm(f, phi).value)


def test_peaked_widths_respect_grid():
    fam = generate_family(FamilyConfig(("peaked",), 8), n=64)
    h = 16 / 64
    assert all(float(l.split("=")[1][:-1]) >= 2 * h - 1e-12 for l, _ in fam)


def test_family_config_validation():
    with pytest.raises(ValueError):
        FamilyConfig(("noise",))
    with pytest.raises(ValueError):
        FamilyConfig(count=0)
    cfg = FamilyConfig.from_dict({"kinds": ["plateau"], "count": 2, "seed": 9})
    assert FamilyConfig.from_dict(cfg.to_dict()) == cfg


# -- experiment specs -------------------------------------------------------------

def test_spec_validation():
    with pytest.raises(ValueError, match="power of two"):
        spec(grid={"n": 100})
    with pytest.raises(ValueError, match="operator"):
        spec(operator="wavelet")
    with pytest.raises(ValueError, match="symbol"):
        spec(symbol={"name": "nope"})
    with pytest.raises(ValueError, match="phase"):
        spec(operator="fio")


def test_spec_json_round_trip():
    s = spec(operator="fio", symbol={"name": "identity"}, phase={"name": "translation-phase", "c": 0.5},
             cutoff=0.5, orders=[-0.01, -0.01])
    again = ExperimentSpec.from_json(json.dumps(s.to_dict()))
    assert again.to_dict() == s.to_dict()


# -- JSON output ------------------------------------------------------------------

def test_dumps_uses_seventeen_digits():
    text = dumps({"x": 0.1, "y": [1.0 / 3.0, np.float64(2.5)], "n": 3, "inf": math.inf,
                  "ok": True, "none": None})
    assert '"x": 0.10000000000000001' in text
    assert "0.33333333333333331" in text
    assert '"inf": Infinity' in text
    back = json.loads(text)
    assert back["y"][0] == 1.0 / 3.0 and back["n"] == 3 and back["ok"] is True


# -- boundedness runs ---------------------------------------------------------------

def test_identity_multiplier_ratios_are_one():
    rep = run_boundedness(spec(family={}, grid={"n": 128}))
    for level in rep.levels:
        for row in level["ratios"]:
            for key, val in row.items():
                if key != "function":
                    assert abs(val - 1.0) <= 1e-9, (row["function"], key)
    assert rep.bounded and all(t["slope"] <= 1e-9 for t in rep.trend.values())


def test_sgn_multiplier_counterexample_is_bounded():
    rep = run_boundedness(spec(symbol={"name": "sgn"}, family={"kinds": ["gaussian"]},
                               grid={"n": 256}))
    t = rep.trend["orlicz"]
    assert math.isfinite(t["sup_n"]) and t["slope"] < REFINEMENT_TOL and rep.bounded
    assert rep.conditions["mihlin"]["value"] == 1.0
    assert [lv["n"] for lv in rep.levels] == [256, 512]
    assert json.loads(rep.to_json())["schema"] == "orlicz-report/1"


def test_psdo_run_records_seminorm():
    rep = run_boundedness(spec(operator="psdo-kn", symbol={"name": "modulated-riesz"}))
    assert rep.conditions["hormander_class_S0_1_0"]["divergent"] is False
    assert rep.bounded


def test_entropy_is_refused():
    with pytest.raises(NotStrictError, match="Lambda fails"):
        run_boundedness(spec(phi="entropy"))


def test_x_dependent_multiplier_is_refused():
    with pytest.raises(PreconditionError):
        run_boundedness(spec(symbol={"name": "modulated-riesz"}))


def test_fio_order_gate():
    kw = dict(operator="fio", phase={"name": "translation-phase", "c": 0.5}, cutoff=0.5,
              family={"kinds": ["gaussian"], "count": 1})
    with pytest.raises(OrderViolationError):
        run_boundedness(spec(orders=[0.0, 0.0], **kw))
    rep = run_boundedness(spec(orders=[-0.01, -0.01], **kw))
    assert rep.lp_exponents is not None and rep.thresholds["T_d_phi"] == 0.0
    assert rep.conditions["sg"]["divergent"] is False


def test_fio_without_orders_is_refused():
    with pytest.raises(PreconditionError):
        run_boundedness(spec(operator="fio", phase={"name": "flat-phase"}, cutoff=0.5))


def test_threads_do_not_change_results(monkeypatch):
    s = spec(symbol={"name": "hilbert"})
    monkeypatch.setenv(THREADS_ENV, "1")
    one = run_boundedness(s).to_json()
    monkeypatch.setenv(THREADS_ENV, "4")
    four = run_boundedness(s).to_json()
    assert one == four


# -- scripted cases -----------------------------------------------------------------

def test_lambda_probe_exponent():
    assert lambda_probe_exponent(4 / 3) == pytest.approx(4 / 3 - 0.01)
    assert lambda_probe_exponent(1.0) == 1.01


@pytest.mark.parametrize("case_id", CASE_IDS)
def test_cases_pass(case_id):
    res = run_check(case_id)
    assert res.passed, res.to_dict()
    assert res.case_id == case_id and res.check


def test_case_values():
    q = run_check("counterexample-q43").measured
    assert abs(q["q_phi"] - 4 / 3) <= 1e-3 and abs(q["p_phi"] - 2) <= 1e-3
    assert run_check("weak-embed").measured["max_weak_minus_strong_lp"] <= 1e-12
    assert run_check("transfer").measured["discrepancy"] <= 1e-4


def test_unknown_case():
    with pytest.raises(ValueError):
        run_check("nope")


def test_default_grid_depends_on_dimension():
    one = ExperimentSpec.from_dict({"operator": "multiplier", "symbol": {"name": "identity"},
                                    "phi": "counterexample"})
    two = ExperimentSpec.from_dict({"operator": "multiplier", "symbol": {"name": "identity"},
                                    "phi": "counterexample", "grid": {"dim": 2}})
    assert one.grid["n"] == 256 and two.grid["n"] == 128 and two.dim == 2


def test_contract_alias():
    from orlicz import reproduce_paper, run_check
    assert reproduce_paper is run_check
