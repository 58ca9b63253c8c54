"""Smoke tests of the Python bindings.

Run against the module built by the main CMake tree (PYTHONPATH points at
<build>/python_pkg) or against an installed wheel.
"""

import math

import pytest

import ifsjacobi


def test_lebesgue_closure_matches_analytic_matrix():
    sigma = ifsjacobi.DiscreteMeasure([-1.0, 1.0], [0.5, 0.5])
    result = ifsjacobi.closure(sigma, 0.5, 64)
    exact = ifsjacobi.jacobi_lebesgue(64)
    assert ifsjacobi.frobenius_distance(result, exact) < 1e-13
    assert result.size() == 64
    assert result.a(0) == pytest.approx(0.0, abs=1e-15)
    assert result.b(1) == pytest.approx(1.0 / math.sqrt(3.0), abs=1e-14)


def test_convolve_methods_agree():
    sigma = ifsjacobi.DiscreteMeasure([-1.0, 1.0], [0.5, 0.5])
    eta = ifsjacobi.jacobi_lebesgue(24)
    direct = ifsjacobi.convolve(sigma, eta, 0.25, 24)
    spectral = ifsjacobi.convolve_spectral(sigma, eta, 0.25, 24)
    assert ifsjacobi.frobenius_distance(direct, spectral) < 1e-10


def test_fixpoint_reaches_invariant_measure():
    sigma = ifsjacobi.DiscreteMeasure([-1.0, 1.0], [0.5, 0.5])
    result = ifsjacobi.fixpoint(sigma, 0.5, 32)
    assert result.report.converged
    assert result.report.iterations <= 200
    exact = ifsjacobi.jacobi_lebesgue(32)
    assert ifsjacobi.frobenius_distance(result.jacobi, exact) < 1e-11


def test_gauss_rule_weights_sum_to_one():
    rule = ifsjacobi.gauss_rule(ifsjacobi.jacobi_lebesgue(16), 7)
    assert len(rule) == 7
    assert sum(rule.weights) == pytest.approx(1.0, abs=1e-13)
    assert all(-1.0 < x < 1.0 for x in rule.nodes)


def test_invert_round_trip():
    mu = ifsjacobi.closure(ifsjacobi.jacobi_lebesgue(40), 0.3, 40)
    inv = ifsjacobi.invert(mu, 0.3, 12)
    assert not inv.terminated_early
    assert inv.feasible_size == 12
    exact = ifsjacobi.jacobi_lebesgue(12)
    assert ifsjacobi.frobenius_distance(inv.sigma_jacobi, exact) < 1e-8


def test_fibonacci_target_and_frontier():
    target = ifsjacobi.fibonacci_jacobi(64)
    assert target.a(10) == 0.0
    assert target.b(1) == 0.4  # the word starts with the letter A
    assert target.b(2) == 0.5
    frontier = ifsjacobi.delta_frontier(target, [8], 1e-2)
    point = frontier.points[0]
    assert point.n == 8
    assert 0.0 < point.delta_n <= 0.999


def test_analysis_reports():
    matrix = ifsjacobi.jacobi_lebesgue(256)
    nevai = ifsjacobi.nevai_report(matrix, 0.0, 0.5)
    assert nevai.summable_trend
    assert len(nevai.deviations) == 255

    capacity = ifsjacobi.capacity_report(matrix)
    assert capacity.final_estimate == pytest.approx(math.log(2.0), abs=1e-3)
    assert not capacity.has_bounds


def test_errors_surface_as_python_exceptions():
    with pytest.raises(ifsjacobi.Error):
        ifsjacobi.closure(ifsjacobi.DiscreteMeasure([0.0], [1.0]), 0.3, 4)
    with pytest.raises(ifsjacobi.Error):
        ifsjacobi.jacobi_lebesgue(0)


def test_file_round_trip(tmp_path):
    matrix = ifsjacobi.jacobi_lebesgue(8)
    path = str(tmp_path / "m.jac")
    ifsjacobi.write_jacobi_file(path, matrix)
    back = ifsjacobi.read_jacobi_file(path)
    assert back == matrix
