import math

import pytest

import copgraph


def test_canonical_round_trip():
    assert copgraph.canonical("gumbel:5.0:cdf") == "gumbel:5"
    assert copgraph.canonical("independence") == "pi"
    assert copgraph.canonical("joe:2:density*pi") == "joe:2:density*pi"
    with pytest.raises(ValueError):
        copgraph.canonical("gumbel")  # theta missing


def test_independence_densities():
    r = copgraph.densities("pi", 64)
    assert r["descriptor"] == "pi"
    assert r["edge"] == pytest.approx(0.25, abs=1e-12)
    assert r["path2"] == pytest.approx(1 / 12, abs=1e-12)
    assert r["triangle"] == pytest.approx(1 / 27, abs=1e-12)
    assert copgraph.degree_function("pi", 0.8) == pytest.approx(0.4, abs=1e-12)


def test_evaluate_and_latent_dim():
    assert copgraph.latent_dim("pi*pi") == 2
    assert copgraph.evaluate("cplus", 0.3, 0.7) == pytest.approx(0.3)
    assert copgraph.evaluate("pi*pi", [0.5, 0.4], [0.6, 0.5]) == pytest.approx(
        0.5 * 0.6 * 0.4 * 0.5
    )


def test_sampling_is_deterministic():
    a = copgraph.sample_edges("gumbel:3", 60, 42)
    b = copgraph.sample_edges("gumbel:3", 60, 42)
    assert a == b
    assert all(i < j < 60 for i, j in a)


def test_analyze_star():
    out = copgraph.analyze(4, [(0, 1), (0, 2), (0, 3)])
    assert out["m"] == 3
    assert out["stars3"] == 1
    assert out["r_newman"] == pytest.approx(-1.0)
    assert out["sign"] == "disassortative"
    with pytest.raises(ValueError):
        copgraph.analyze(4, [(0, 1), (1, 0)])  # duplicate edge


def test_expected_assortativity_undefined_for_flat_degrees():
    with pytest.raises(ArithmeticError):
        copgraph.expected_assortativity("pi:density")


def test_calibration_hits_small_target():
    res = copgraph.calibrate_r("gumbel:?", 0.05)
    assert res["status"] == "converged"
    assert abs(res["residual"]) <= 1e-4
    assert res["graphon"].startswith("gumbel:1.35")
    assert copgraph.calibrate_r("gumbel:?", 0.9)["status"] == "unreachable"


def test_sweep_rows():
    rows = copgraph.sweep("gumbel:?", [1.0, 3.0], n=80, reps=3, seed=7)
    assert [row["theta"] for row in rows] == [1.0, 3.0]
    assert all(row["reps"] == 3 for row in rows)
    assert rows[0]["min_r"] <= rows[0]["mean_r"] <= rows[0]["max_r"]
    assert not math.isnan(rows[1]["mean_r"])
