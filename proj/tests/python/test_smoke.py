import math

import numpy as np
import pytest

import hyperfront as hf


def test_closed_forms():
    assert hf.parabolic_cubic_speed(1.0, 1.0, 0.25) == pytest.approx(math.sqrt(2) / 4)
    assert hf.damped_cubic_speed(1.0, 1.0, 0.25, 1.0) == pytest.approx(1.0 / 3.0)
    assert hf.pwl_speed(1.0, 1.0, 0.375, 0.0, 1.0) == pytest.approx(0.4588315, abs=1e-7)
    model = hf.ReactionModel.cubic(1.0, 0.25)
    assert hf.closed_form_speed(model, hf.ModelParams(1.0, 0.0)) == pytest.approx(1.0 / 3.0)
    assert hf.closed_form_speed(model, hf.ModelParams(1.0, 1.0)) is None


def test_model_evaluation():
    cubic = hf.ReactionModel.cubic(1.0, 0.25)
    assert cubic.f(0.0) == 0.0 and cubic.f(1.0) == 0.0
    assert cubic.alpha == 0.25 and cubic.is_cubic
    pwl = hf.ReactionModel.piecewise_affine(1.0, 0.3)
    with pytest.raises(hf.ValidationError):
        pwl.df(0.3)
    with pytest.raises(hf.ValidationError):
        hf.ReactionModel.cubic(1.0, 1.5)


def test_shooting():
    model = hf.ReactionModel.cubic(1.0, 0.25)
    res = hf.find_speed(model, hf.ModelParams(1.0, 0.0))
    assert res.c_star == pytest.approx(1.0 / 3.0, rel=2e-5)
    assert res.iterations > 0
    lam_minus, lam_plus = hf.eigenvalues(model, hf.ModelParams(1.0, 0.0), 0.0, res.c_star)
    assert lam_minus < 0 < lam_plus
    lo, hi = hf.speed_bracket(model, hf.ModelParams(1.0, 0.0))
    assert hf.mismatch(model, hf.ModelParams(1.0, 0.0), lo) > 0 > hf.mismatch(model, hf.ModelParams(1.0, 0.0), hi)


def test_shooting_errors():
    cfg = hf.ShootingConfig()
    cfg.max_iter = 2
    with pytest.raises(hf.NonConvergence):
        hf.find_speed(hf.ReactionModel.cubic(1.0, 0.25), hf.ModelParams(1.0, 1.0), cfg)
    with pytest.raises(hf.ValidationError):
        hf.ModelParams(1.0, 2.0)


def test_run_and_estimators():
    model = hf.ReactionModel.cubic(1.0, 0.25)
    grid = hf.Grid(dx=0.1, dt=2e-3, L=30.0, T=8.0)
    out = hf.run(hf.SchemeKind.FirstOrder, model, hf.ModelParams(1.0, 0.0), grid)
    u = out["u"]
    assert u.shape == (len(out["t"]), grid.J)
    assert np.all(np.isfinite(u))
    speeds = [hf.leveque_yee_step(u[i], u[i + 1], -1.0, grid.dx, out["t"][i + 1] - out["t"][i])
              for i in range(len(u) // 2, len(u) - 1)]
    assert np.mean(speeds) == pytest.approx(1.0 / 3.0, rel=0.1)  # short run, still in transient
    ss = hf.scout_and_spot(u[0], u[-1], 0.25, grid.dx, grid.dt, grid.N)
    assert ss > 0
    with pytest.raises(hf.WrongRegime):
        hf.run(hf.SchemeKind.Kinetic, model, hf.ModelParams(1.0, 0.0), grid)


def test_table_and_profile():
    rows = hf.run_table("B", {"L": 30, "T": 8, "dt": 0.002, "alphas": "0.25"})
    assert [r["scheme"] for r in rows] == ["first-order", "lienard", "kinetic"]
    for r in rows:
        assert r["E_ly"] == pytest.approx(abs(r["c_ly"] - r["c_ex"]) / r["c_ex"])
    xi = np.linspace(-5, 5, 11)
    phi = hf.equal_depth_profile(hf.ReactionModel.cubic(1.0, 0.5), 1.0, xi)
    assert np.allclose(phi, 1.0 / (1.0 + np.exp(np.sqrt(0.5) * xi)), atol=1e-8)
    assert hf.exact_csv({"alphas": "0.25"}).startswith("alpha,c0,c_tau,c_pwl\n")
