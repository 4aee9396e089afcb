"""Law catalog behavior: tails, atoms, moments, samplers, designed envelopes."""

import math

import numpy as np
import pytest

import mdtail as md
from mdtail.tails import catalog, model_from_spec

CATALOG = catalog()


def test_catalog_shape():
    labels = [entry.model.label for entry in CATALOG]
    assert len(labels) == 9
    assert len(set(labels)) == 9
    assert "gaussian" in labels and "two_point" in labels
    assert any(lbl.startswith("oscillating") for lbl in labels)


def test_survival_is_monotone_and_bounded():
    for entry in CATALOG:
        m = entry.model
        ts = np.geomspace(max(m.t0 * 0.5, 1e-3), 1e6, 400)
        vals = np.array([m.survival(float(t)) for t in ts])
        assert np.all(vals >= 0.0) and np.all(vals <= 1.0)
        assert np.all(np.diff(vals) <= 1e-15), m.label


def test_survival_rejects_negative_threshold():
    with pytest.raises(ValueError):
        md.two_point().survival(-0.5)


def test_two_point_pointwise_probabilities():
    m = md.two_point()
    assert m.survival(0.5) == 0.5
    assert m.survival(1.0) == 0.0
    assert m.prob_greater(np.array([-1.5]))[0] == 1.0
    assert m.prob_greater(np.array([-1.0]))[0] == 0.5
    assert m.prob_greater(np.array([0.0]))[0] == 0.5
    assert m.prob_greater(np.array([1.0]))[0] == 0.0
    assert m.atoms == ((-1.0, 0.5), (1.0, 0.5))


def test_moments_match_recorded_values():
    # Second moments via tail integrals must agree with the recorded values.
    for entry in CATALOG:
        m = entry.model
        mean, var = md.moments(m)
        assert math.isclose(mean, m.mu, rel_tol=5e-3, abs_tol=5e-4), m.label
        assert math.isfinite(m.sigma2)
        second_recorded = m.sigma2 + m.mu**2
        second_tonelli = var + mean**2
        assert math.isclose(second_tonelli, second_recorded, rel_tol=5e-3), m.label


def test_moments_divergence_reports_infinite_variance():
    mean, var = md.moments(md.pareto(1.5))
    assert math.isclose(mean, 3.0, rel_tol=1e-6)
    assert math.isinf(var)
    assert math.isinf(md.pareto(1.5).sigma2)


def test_pareto_closed_form_moments():
    m = md.pareto(3.0)
    assert math.isclose(m.mu, 1.5, rel_tol=1e-15)
    assert math.isclose(m.sigma2, 0.75, rel_tol=1e-15)
    assert math.isclose(m.survival(10.0), 1e-3, rel_tol=1e-12)


def test_sampler_agrees_with_survival():
    n = 10**6
    for entry in CATALOG:
        m = entry.model
        xs = md.sample(m, seed=11, n=n)
        for t in (m.t0, 2.0 * m.t0, 5.0 * m.t0):
            p = m.survival(float(t))
            if not 1e-5 < p < 1.0 - 1e-5:
                continue
            hat = np.count_nonzero(xs > t) / n
            se = math.sqrt(p * (1.0 - p) / n)
            assert abs(hat - p) <= 4.0 * se, (m.label, t)


def test_two_point_sample_mean_envelope():
    xs = md.sample(md.two_point(), seed=1234, n=10**6)
    assert set(np.unique(xs)) == {-1.0, 1.0}
    assert abs(xs.mean()) <= 4.0 / math.sqrt(10**6)


def test_sampling_is_deterministic_per_seed():
    m = md.pareto(3.0)
    a = md.sample(m, seed=5, n=1000)
    b = md.sample(m, seed=5, n=1000)
    c = md.sample(m, seed=6, n=1000)
    assert np.array_equal(a, b)
    assert not np.array_equal(a, c)
    with pytest.raises(ValueError):
        md.sample(m, seed=5, n=0)


def test_designed_tail_matches_envelope_form_far_out():
    g1 = md.power_scale(1.0)
    g2 = md.power_scale(2.0)
    for lam_p, lam_m, g in ((1.0, 1.0, g1), (0.5, 2.0, g1), (1.0, 0.5, g2)):
        m = md.make_designed_tail(lam_p, lam_m, g)
        log_q_r = math.log(m.survival(m.t0))
        for t in (1e6, 1e8, 1e10):
            u = math.log(t)
            got = float(m.log_right_tail_u(np.array([u]))[0])
            want = min(log_q_r, -2.0 * u - lam_p * g.eval(u))
            assert abs(got - want) <= 1e-3, (m.label, t)


def test_designed_tail_is_centered_with_recorded_variance():
    g = md.power_scale(1.0)
    m = md.make_designed_tail(0.5, 2.0, g)
    assert m.mu == 0.0
    mean, var = md.moments(m)
    assert abs(mean) < 1e-9
    assert math.isclose(var, m.sigma2, rel_tol=5e-3)
    assert len(m.atoms) == 1
    assert abs(m.atoms[0][0]) < m.t0


def test_designed_tail_cap_keeps_survival_below_quarter():
    g = md.power_scale(1.0)
    m = md.make_designed_tail(1.0, 1.0, g, t0=1.0001)
    assert m.survival(m.t0) <= 0.25 + 1e-12


def test_designed_tail_rejections():
    g = md.power_scale(1.0)
    with pytest.raises(ValueError):
        md.make_designed_tail(-1.0, 1.0, g)
    with pytest.raises(ValueError):
        md.make_designed_tail(float("nan"), 1.0, g)
    with pytest.raises(ValueError):
        md.make_designed_tail(1.0, 1.0, g, t0=1.0)
    # second moment diverges when the decay exponent on a log scale is <= 1
    with pytest.raises(ValueError):
        md.make_designed_tail(0.5, 0.5, md.log_scale())


def test_designed_infinite_exponent_uses_gaussian_side():
    g = md.power_scale(1.0)
    m = md.make_designed_tail(math.inf, 1.0, g)
    from scipy.special import ndtr

    t = 3.0
    q_scale = m.survival(m.t0) / float(ndtr(-m.t0))
    assert math.isclose(m.survival(t), q_scale * float(ndtr(-t)), rel_tol=1e-9)
    assert m.design_exponents.lam1_bar == math.inf
    assert m.design_exponents.lam_bar == 1.0


def test_oscillating_schedule_block_structure():
    g = md.power_scale(1.0)
    m = md.make_oscillating_tail(0.5, 2.0, g, 3.0)
    sched = m.oscillation
    assert sched.lows == (1.0, 27.0, 729.0, 19683.0)
    assert sched.peaks == (3.0, 81.0, 2187.0)
    assert m.design_grid.u_min == 1.0
    assert m.design_grid.u_max == 19683.0
    assert m.design_grid.spacing == "geometric"


def test_oscillating_alternates_between_envelopes():
    # At block lows the tail sits on the shallow envelope, at peaks on the
    # steep one; both within 5% in log space.
    g = md.power_scale(1.0)
    m = md.make_oscillating_tail(0.5, 2.0, g, 3.0)
    sched = m.oscillation
    for u in sched.lows[1:]:
        got = float(m.log_right_tail_u(np.array([u]))[0])
        want = -2.0 * u - 0.5 * g.eval(u)
        assert abs(got - want) <= 0.05 * abs(want), ("low", u)
    for u in sched.peaks:
        got = float(m.log_right_tail_u(np.array([u]))[0])
        want = -2.0 * u - 2.0 * g.eval(u)
        assert abs(got - want) <= 0.05 * abs(want), ("peak", u)


def test_oscillating_rejections():
    g = md.power_scale(1.0)
    with pytest.raises(ValueError):
        md.make_oscillating_tail(2.0, 0.5, g, 3.0)
    with pytest.raises(ValueError):
        md.make_oscillating_tail(0.5, 2.0, g, 1.0)
    with pytest.raises(ValueError):
        md.make_oscillating_tail(0.5, 2.0, g, 3.0, u0=0.0)


def test_model_from_spec_presets():
    m = model_from_spec({"preset": "pareto", "alpha": 3})
    assert m.label == "pareto(3)"
    m = model_from_spec(
        {
            "preset": "designed",
            "lambda_plus": 0.5,
            "lambda_minus": "inf",
            "scale": {"kind": "power", "rho": 1.0},
        }
    )
    assert m.design_exponents.lam2_bar == math.inf
    m = model_from_spec(
        {
            "preset": "oscillating",
            "lambda_lo": 0.5,
            "lambda_hi": 2.0,
            "block_growth": 3.0,
            "scale": {"kind": "power", "rho": 1.0},
        }
    )
    assert m.oscillation is not None


def test_model_from_spec_rejections():
    with pytest.raises(ValueError):
        model_from_spec({"preset": "mystery"})
    with pytest.raises(ValueError):
        model_from_spec({"preset": "pareto"})
    with pytest.raises(ValueError):
        model_from_spec({"preset": "gaussian", "alpha": 2})
    with pytest.raises(ValueError):
        model_from_spec({"preset": "designed", "scale": {"kind": "power"}})
    with pytest.raises(ValueError):
        model_from_spec({"preset": "designed", "lambda_plus": 1, "lambda_minus": "huge",
                         "scale": {"kind": "power"}})


def test_pareto_design_metadata():
    assert md.pareto(2.5).design_scale_label == "t"
    assert md.pareto(2.5).design_exponents.lam1_bar == 0.5
    assert md.pareto(1.5).design_exponents is None
    with pytest.raises(ValueError):
        md.pareto(1.0)
