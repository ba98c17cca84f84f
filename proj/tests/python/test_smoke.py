"""Smoke tests for the python bindings."""

import math

import pytest

import adcap

HALF_PI = math.pi / 2
QUARTER_PI = math.pi / 4


def test_endpoint_capacities():
    assert adcap.ce2(0.0, 0.0) == pytest.approx(4.0, abs=1e-12)
    assert adcap.ce2(HALF_PI, 0.0) == pytest.approx(0.0, abs=1e-12)
    assert adcap.ce2(HALF_PI, 1.0) == pytest.approx(2.6887219, abs=1e-7)
    assert adcap.qe2(HALF_PI, 1.0) == pytest.approx(adcap.ce2(HALF_PI, 1.0) / 2, abs=1e-14)
    assert adcap.cp2(HALF_PI, 1.0) == pytest.approx(1.5, abs=1e-12)


def test_spectra_normalized():
    omega = adcap.output_spectrum(math.pi / 3, 0.5)
    assert omega == pytest.approx([0.0390625, 0.1796875, 0.1796875, 0.6015625], abs=1e-12)
    assert sum(adcap.environment_spectrum(1.1, 0.3)) == pytest.approx(1.0, abs=1e-12)


def test_ce_lim_reductions():
    for chi, mu in [(0.3, 0.2), (1.2, 0.8)]:
        assert adcap.ce_lim(chi, mu, QUARTER_PI, QUARTER_PI) == pytest.approx(
            adcap.ce2(chi, mu), abs=1e-10
        )
        assert adcap.ce_lim(chi, mu, 0.0, 0.0) == pytest.approx(adcap.cp2(chi, mu), abs=1e-10)


def test_mutual_information_and_random_states():
    rho = adcap.random_density_matrix(4, seed=5)
    assert adcap.random_density_matrix(4, seed=5) == rho
    trace = sum(rho[i][i].real for i in range(4))
    assert trace == pytest.approx(1.0, abs=1e-13)

    mixed = [[0.25 if i == j else 0.0 for j in range(4)] for i in range(4)]
    assert adcap.mutual_information(0.9, 0.4, mixed) == pytest.approx(
        adcap.ce2(0.9, 0.4), abs=1e-10
    )
    assert adcap.mutual_information(0.9, 0.4, rho) <= adcap.ce2(0.9, 0.4) + 1e-9


def test_evolve_matches_channel():
    alpha, t = 1.0, 0.8
    chi = math.acos(math.exp(-alpha * t / 2))
    excited = [[1.0 if i == j == 0 else 0.0 for j in range(4)] for i in range(4)]
    evolved = adcap.evolve(alpha, t, excited)
    assert evolved[0][0].real == pytest.approx(math.cos(chi) ** 2, abs=1e-12)
    assert evolved[3][3].real == pytest.approx(math.sin(chi) ** 2, abs=1e-12)


def test_tradeoff_curve():
    curve = adcap.tradeoff_curve(math.pi / 3, 0.5, budget_points=3, resolution=24)
    assert len(curve) == 3
    assert curve[0]["capacity"] == pytest.approx(adcap.cp2(math.pi / 3, 0.5), abs=1e-9)
    assert curve[-1]["capacity"] == pytest.approx(adcap.ce2(math.pi / 3, 0.5), abs=1e-9)
    assert curve[0]["capacity"] <= curve[1]["capacity"] <= curve[2]["capacity"] + 1e-12


def test_point_report_and_verify():
    report = adcap.point_report(0.7, 0.6)
    assert report["qe2"] == pytest.approx(report["ce2"] / 2, abs=1e-14)
    assert sum(report["omega"]) == pytest.approx(1.0, abs=1e-12)

    checks = adcap.verify(grid=5, seed=3, samples=10)
    # The sampled-dominance check reflects whatever the samples find (the
    # maximally mixed input is not the global optimum); every analytic
    # check must pass.
    assert all(c["passed"] for c in checks if "mutual information" not in c["name"])
