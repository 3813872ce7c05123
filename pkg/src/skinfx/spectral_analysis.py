"""Pseudospectra, localization diagnostics, and spectral-set distances.

The epsilon-pseudospectrum is computed on a rectangular grid through the
smallest singular value of (A - lambda I): membership is sigma_min < eps,
the 2-norm resolvent characterization. Level-set boundaries come out of a
marching-squares pass over the sigma_min grid.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np
from scipy.spatial.distance import directed_hausdorff
from skimage import measure


def thread_budget() -> int:
    """Worker cap for grid sweeps; SKINFX_THREADS overrides the default."""
    raw = os.environ.get("SKINFX_THREADS")
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            pass
    return min(4, os.cpu_count() or 1)


@dataclass(frozen=True)
class PseudospectrumGrid:
    """sigma_min(A - lambda I) sampled on a rectangular grid.

    sigma_min is indexed [im, re]; eps_levels records the thresholds the
    grid was requested for.
    """

    re_axis: np.ndarray
    im_axis: np.ndarray
    sigma_min: np.ndarray
    eps_levels: tuple[float, ...]

    def window(self) -> tuple[float, float, float, float]:
        return (float(self.re_axis[0]), float(self.re_axis[-1]),
                float(self.im_axis[0]), float(self.im_axis[-1]))


def default_window(A: np.ndarray, eps_levels) -> tuple[float, float, float, float]:
    """Eigenvalue bounding box inflated by half its extent plus the largest eps."""
    eigs = np.linalg.eigvals(np.asarray(A, dtype=complex))
    margin = max(eps_levels) if len(eps_levels) else 0.0
    re_lo, re_hi = float(eigs.real.min()), float(eigs.real.max())
    im_lo, im_hi = float(eigs.imag.min()), float(eigs.imag.max())
    pad_re = 0.5 * (re_hi - re_lo) + margin
    pad_im = 0.5 * (im_hi - im_lo) + margin
    base = 0.05 * max(re_hi - re_lo, im_hi - im_lo, 1.0)
    pad_re = max(pad_re, base)
    pad_im = max(pad_im, base)
    return (re_lo - pad_re, re_hi + pad_re, im_lo - pad_im, im_hi + pad_im)


def pseudospectrum(A: np.ndarray, window=None, resolution: int = 200,
                   eps_levels=(1e-1, 1e-2, 1e-3)) -> PseudospectrumGrid:
    """Smallest singular value of (A - lambda I) over a grid window.

    window is (re_min, re_max, im_min, im_max); when omitted it defaults to
    the eigenvalue bounding box inflated by 50% plus the largest eps.
    resolution counts nodes per axis. Rows of the grid are dispatched to a
    thread pool (capped by SKINFX_THREADS) and each row's shifts are
    factored with one batched SVD call.
    """
    A = np.asarray(A, dtype=complex)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError("A must be square")
    if resolution < 2:
        raise ValueError("resolution must be at least 2")
    if window is None:
        window = default_window(A, eps_levels)
    re_lo, re_hi, im_lo, im_hi = map(float, window)
    if not (re_hi > re_lo and im_hi > im_lo):
        raise ValueError("degenerate window")
    re_axis = np.linspace(re_lo, re_hi, resolution)
    im_axis = np.linspace(im_lo, im_hi, resolution)
    n = A.shape[0]
    eye = np.eye(n, dtype=complex)
    sigma = np.empty((resolution, resolution))

    def row_sigmas(i: int) -> None:
        shifts = re_axis[None, :, None, None] + 1j * im_axis[i]
        stack = A[None, :, :] - shifts[0] * eye[None, :, :]
        svals = np.linalg.svd(stack, compute_uv=False)
        sigma[i, :] = svals[:, -1]

    workers = thread_budget()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            list(pool.map(row_sigmas, range(resolution)))
    else:
        for i in range(resolution):
            row_sigmas(i)
    return PseudospectrumGrid(re_axis=re_axis, im_axis=im_axis, sigma_min=sigma,
                              eps_levels=tuple(float(e) for e in eps_levels))


def level_set_polylines(grid: PseudospectrumGrid, eps: float) -> list[np.ndarray]:
    """Boundary polylines of {sigma_min = eps} as arrays of complex points.

    Marching squares on the sigma_min grid; each returned array traces one
    contour segment in the complex plane.
    """
    contours = measure.find_contours(grid.sigma_min, float(eps))
    polylines = []
    for contour in contours:
        im = np.interp(contour[:, 0], np.arange(len(grid.im_axis)), grid.im_axis)
        re = np.interp(contour[:, 1], np.arange(len(grid.re_axis)), grid.re_axis)
        polylines.append(re + 1j * im)
    return polylines


def localization_metric(v) -> float:
    """sup-norm over 2-norm of a vector: 1 for a delta peak, 1/sqrt(N) flat."""
    v = np.asarray(v, dtype=complex).ravel()
    norm2 = np.linalg.norm(v)
    if norm2 == 0:
        raise ValueError("zero vector has no localization")
    return float(np.max(np.abs(v)) / norm2)


def eigenmatrix_singular_values(vectors) -> np.ndarray:
    """Singular values of an eigenvector matrix, descending, scaled by the largest."""
    svals = np.linalg.svd(np.asarray(vectors, dtype=complex), compute_uv=False)
    svals = np.sort(svals)[::-1]
    if svals[0] == 0:
        return svals
    return svals / svals[0]


def singular_profile_value(normalized_svals, fraction: float) -> float:
    """Normalized singular value at rescaled index fraction (1-based k = fraction*N)."""
    n = len(normalized_svals)
    k = int(round(fraction * n))
    k = min(max(k, 1), n)
    return float(normalized_svals[k - 1])


def hausdorff_distance(set_a, set_b) -> float:
    """Hausdorff distance between two finite sets of complex points."""
    a = np.asarray(set_a, dtype=complex).ravel()
    b = np.asarray(set_b, dtype=complex).ravel()
    if len(a) == 0 or len(b) == 0:
        raise ValueError("hausdorff_distance needs non-empty sets")
    pa = np.column_stack([a.real, a.imag])
    pb = np.column_stack([b.real, b.imag])
    d_ab = directed_hausdorff(pa, pb)[0]
    d_ba = directed_hausdorff(pb, pa)[0]
    return float(max(d_ab, d_ba))
