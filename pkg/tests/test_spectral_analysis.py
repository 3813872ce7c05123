"""Pseudospectra, level sets, localization metrics, singular-value profiles."""

from __future__ import annotations

import numpy as np
import pytest

from skinfx import (
    build_gauge_capacitance,
    eigenmatrix_singular_values,
    hausdorff_distance,
    level_set_polylines,
    localization_metric,
    perturbed_toeplitz_matrix,
    pseudospectrum,
    singular_profile_value,
    solve_spectrum,
    symbol_curve,
    thread_budget,
    uniform_chain,
    uniform_chain_symbol,
)


def test_sigma_min_vanishes_at_eigenvalues() -> None:
    grid = pseudospectrum(np.diag([1.0]), window=(0.0, 2.0, -1.0, 1.0), resolution=3)
    assert grid.re_axis[1] == 1.0 and grid.im_axis[1] == 0.0
    assert grid.sigma_min[1, 1] == 0.0


def test_sigma_min_of_diagonal_matrix_is_distance_to_spectrum() -> None:
    A = np.diag([0.0, 2.0])
    grid = pseudospectrum(A, window=(1.0, 1.0 + 1e-9, 0.0, 1e-9), resolution=2)
    assert grid.sigma_min[0, 0] == pytest.approx(1.0, rel=1e-9)


def test_pseudospectrum_masks_nest() -> None:
    A = perturbed_toeplitz_matrix(uniform_chain_symbol(0.5, 1.0, 1.0), 12)
    grid = pseudospectrum(A, window=(-0.5, 4.5, -1.0, 1.0), resolution=41,
                          eps_levels=(0.1, 0.01))
    inner = grid.sigma_min <= 0.01
    outer = grid.sigma_min <= 0.1
    assert np.all(outer[inner])


def test_pseudospectrum_eigenvalue_inclusion() -> None:
    rng = np.random.default_rng(3)
    A = rng.standard_normal((5, 5))
    lams = np.linalg.eigvals(A)
    window = (lams.real.min() - 1.0, lams.real.max() + 1.0,
              lams.imag.min() - 1.0, lams.imag.max() + 1.0)
    grid = pseudospectrum(A, window=window, resolution=60)
    for lam in lams:
        i = int(np.argmin(np.abs(grid.im_axis - lam.imag)))
        j = int(np.argmin(np.abs(grid.re_axis - lam.real)))
        node = complex(grid.re_axis[j], grid.im_axis[i])
        assert grid.sigma_min[i, j] <= abs(node - lam) + 1e-12


def test_pseudospectrum_conjugate_symmetry_for_real_matrices() -> None:
    A = perturbed_toeplitz_matrix(uniform_chain_symbol(0.5, 1.0, 1.0), 10)
    grid = pseudospectrum(A, window=(-0.5, 4.5, -1.0, 1.0), resolution=41)
    assert np.max(np.abs(grid.sigma_min - grid.sigma_min[::-1, :])) <= 1e-12


def test_pseudospectrum_input_gates() -> None:
    with pytest.raises(ValueError, match="A must be square"):
        pseudospectrum(np.ones((2, 3)))
    with pytest.raises(ValueError, match="resolution must be at least 2"):
        pseudospectrum(np.eye(2), resolution=1)
    with pytest.raises(ValueError, match="degenerate window"):
        pseudospectrum(np.eye(2), window=(0.0, 0.0, -1.0, 1.0))


def test_level_set_polylines_circle_radius() -> None:
    # sigma_min of a scalar zero matrix is |z|: the eps level set is a circle
    grid = pseudospectrum(np.zeros((1, 1)), window=(-1.0, 1.0, -1.0, 1.0),
                          resolution=201)
    polys = level_set_polylines(grid, 0.5)
    assert polys
    points = np.concatenate(polys)
    np.testing.assert_allclose(np.abs(points), 0.5, atol=5e-3)


def test_localization_metric_values() -> None:
    assert localization_metric(np.ones(16)) == pytest.approx(0.25, rel=0, abs=0)
    basis = np.zeros(9)
    basis[3] = 1.0
    assert localization_metric(basis) == 1.0
    v = np.exp(-0.5 * np.arange(36))
    assert localization_metric(v) == pytest.approx(0.7950600976206502, rel=1e-12)
    assert localization_metric(v) == pytest.approx(
        np.max(np.abs(v)) / np.linalg.norm(v), rel=0, abs=0)
    with pytest.raises(ValueError, match="zero vector has no localization"):
        localization_metric(np.zeros(4))


def test_eigenmatrix_singular_values_normalized() -> None:
    np.testing.assert_allclose(eigenmatrix_singular_values(np.eye(7)), np.ones(7))
    svals = eigenmatrix_singular_values(np.ones((4, 4)))
    np.testing.assert_allclose(svals, [1.0, 0.0, 0.0, 0.0], atol=1e-14)
    assert np.all(np.diff(svals) <= 0)


def test_singular_profile_value_indexing() -> None:
    svals = np.array([1.0, 0.5, 0.25, 0.125])
    assert singular_profile_value(svals, 0.5) == 0.5
    assert singular_profile_value(svals, 1.0) == 0.125
    assert singular_profile_value(svals, 1e-9) == 1.0


def test_singular_profile_decays_with_size() -> None:
    values = {}
    for n in (20, 40):
        vecs = solve_spectrum(build_gauge_capacitance(uniform_chain(n, 0.5))).vectors
        values[n] = singular_profile_value(eigenmatrix_singular_values(vecs), 0.5)
    assert values[40] < values[20]


def test_hausdorff_distance_basics() -> None:
    assert hausdorff_distance([0.0], [0.0]) == 0.0
    assert hausdorff_distance([0.0], [3.0]) == pytest.approx(3.0)
    assert hausdorff_distance([0.0, 1.0], [0.0]) == pytest.approx(1.0)
    assert hausdorff_distance([0.0], [0.0, 1.0]) == pytest.approx(1.0)
    with pytest.raises(ValueError, match="hausdorff_distance needs non-empty sets"):
        hausdorff_distance([], [0.0])


def test_pseudospectrum_boundary_approaches_symbol_curve() -> None:
    # finite sections at increasing size: the eps boundary of the larger
    # section sits closer to the next one than the smaller section's does
    sym = uniform_chain_symbol(0.5, 1.0, 1.0)
    curve = symbol_curve(sym, 512)
    pad = 0.35
    window = (curve.real.min() - pad, curve.real.max() + pad,
              curve.imag.min() - pad, curve.imag.max() + pad)
    grids = {n: pseudospectrum(perturbed_toeplitz_matrix(sym, n), window=window,
                               resolution=180, eps_levels=(0.1, 0.01))
             for n in (10, 20, 40)}
    for eps in (0.1, 0.01):
        bounds = {n: np.concatenate(level_set_polylines(grids[n], eps))
                  for n in (10, 20, 40)}
        d_small = hausdorff_distance(bounds[10], bounds[20])
        d_large = hausdorff_distance(bounds[20], bounds[40])
        assert d_large < d_small


def test_eigenvalues_cluster_at_band_edges() -> None:
    chain = uniform_chain(40, 0.5)
    lams = np.sort(np.real(solve_spectrum(build_gauge_capacitance(chain)).lambdas))
    gaps = np.diff(lams[1:])  # nontrivial part of the spectrum
    middle = gaps[len(gaps) // 2]
    assert gaps[0] < middle
    assert gaps[-1] < middle


def test_thread_budget_env_override(monkeypatch) -> None:
    monkeypatch.delenv("SKINFX_THREADS", raising=False)
    assert thread_budget() >= 1
    monkeypatch.setenv("SKINFX_THREADS", "3")
    assert thread_budget() == 3
