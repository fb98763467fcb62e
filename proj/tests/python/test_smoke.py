import numpy as np
import pytest

import birs


def test_fit_null_matches_least_squares():
    rng = np.random.default_rng(1)
    x = np.column_stack([np.ones(50), rng.normal(size=50)])
    y = x @ np.array([0.5, -1.0]) + rng.normal(size=50)
    model = birs.fit_null(y, x, "gaussian")
    expected, *_ = np.linalg.lstsq(x, y, rcond=None)
    np.testing.assert_allclose(model.gamma_hat, expected, atol=1e-10)
    np.testing.assert_allclose(model.residuals, y - x @ expected, atol=1e-10)


def test_separated_logistic_raises():
    x = np.column_stack([np.ones(6), [1.0, 2, 3, 4, 5, 6]])
    y = np.array([0.0, 0, 0, 1, 1, 1])
    with pytest.raises(birs.SeparationDetected):
        birs.fit_null(y, x, "binomial")


def test_sbirs_spike():
    u = np.zeros(8)
    u[7] = 5.0
    boot = np.random.default_rng(2).uniform(-1, 1, size=(8, 1000))
    regions = birs.run_sbirs(u, boot, alpha=0.05, truncation_s=0)
    assert [(r["start"], r["end"]) for r in regions] == [(7, 8)]


def test_pipeline_end_to_end():
    sim = birs.simulate(n=300, p=512, seed=3, effect_c=0.8, window_bp=1500.0, maf_low=0.05, ld_rho=0.95)
    assert sim["genotypes"].shape == (300, 512)
    model = birs.fit_null(sim["y"], sim["x"], "gaussian")
    u, boot = birs.compute_score_set(sim["genotypes"], model, n_boot=200, seed=7)
    assert u.shape == (512,)
    assert boot.shape == (512, 200)

    found = birs.run_dbirs(u, boot, alpha=0.05, truncation_s=3, block_size=128, workers=1)
    again = birs.run_dbirs(u, boot, alpha=0.05, truncation_s=3, block_size=128, workers=4)
    assert found == again
    assert found

    pairs = [(r["start"], r["end"]) for r in found]
    m = birs.metrics(sim["truth"], pairs, sim["positions"])
    assert 0.0 <= m["dr"] <= 1.0
    assert m["dr"] > 0.0
    assert m["fdr"][25.0] >= m["fdr"][50.0] >= m["fdr"][75.0]

    for mode in ("bonferroni-baseline", "fixed-threshold-baseline"):
        birs.run_dbirs(u, boot, block_size=128, mode=mode)
    with pytest.raises(ValueError):
        birs.run_dbirs(u, boot, mode="other")


def test_bootstrap_is_seeded():
    sim = birs.simulate(n=200, p=64, seed=5, n_causal_windows=0)
    model = birs.fit_null(sim["y"], sim["x"], "gaussian")
    _, a = birs.compute_score_set(sim["genotypes"], model, n_boot=100, seed=11)
    _, b = birs.compute_score_set(sim["genotypes"], model, n_boot=100, seed=11)
    _, c = birs.compute_score_set(sim["genotypes"], model, n_boot=100, seed=12)
    assert np.array_equal(a, b)
    assert not np.array_equal(a, c)
