"""Gauge capacitance matrices and their generalized spectra.

The finite matrix couples neighboring resonators through the kernel
g(x) = x / (1 - e^{-x}); row i uses the gauge gamma_i of resonator i and the
length ell_j of the column resonator. The quasiperiodic variant closes a
single cell onto itself with Bloch phase factors e^{+-i alpha L} in the
corner entries.

Eigenvalues lambda of the generalized problem C a = lambda V a (V the
diagonal of resonator lengths) map to resonance frequencies
omega = v_b * sqrt(delta * lambda), taking the square root with positive
real part.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .geometry import ChainSpec, UnitCellSpec
from .spectral_analysis import localization_metric

RESIDUAL_RTOL = 1e-10


def gauge_kernel(x):
    """g(x) = x / (1 - e^{-x}), stable through x = 0.

    Evaluated as -x/expm1(-x); the series 1 + x/2 + x^2/12 takes over below
    1e-6 where expm1 loses the quotient's accuracy, so the gamma -> 0 limit
    is exact.
    """
    arr = np.asarray(x, dtype=float)
    scalar = arr.ndim == 0
    arr = np.atleast_1d(arr)
    out = np.empty_like(arr)
    small = np.abs(arr) < 1e-6
    xs = arr[small]
    out[small] = 1.0 + xs / 2.0 + xs * xs / 12.0
    xl = arr[~small]
    out[~small] = -xl / np.expm1(-xl)
    return float(out[0]) if scalar else out


@dataclass(frozen=True)
class GaugeCapacitanceMatrix:
    """Dense capacitance matrix with its generating geometry.

    kind is "finite" for open chains (real tridiagonal entries) or
    "quasiperiodic" for a cell closed with Bloch corners (complex, carries
    alpha).
    """

    entries: np.ndarray
    geometry: ChainSpec | UnitCellSpec
    kind: str
    alpha: complex | None = None


def build_gauge_capacitance(chain: ChainSpec) -> GaugeCapacitanceMatrix:
    """Finite gauge capacitance matrix of an open chain.

    Tridiagonal and non-symmetric; row i carries gamma_i, off-diagonal
    entries scale with the column resonator's length. Row sums vanish for
    equal-length chains, which pins the kernel eigenvalue 0.
    """
    g = gauge_kernel
    n = chain.size
    ell = chain.lengths
    s = chain.spacings
    gam = chain.gammas
    C = np.zeros((n, n))
    if n == 1:
        return GaugeCapacitanceMatrix(C, chain, "finite")
    for i in range(n):
        gi = gam[i]
        if i == 0:
            C[0, 0] = g(gi * ell[0]) / s[0]
        elif i == n - 1:
            C[i, i] = g(-gi * ell[i]) / s[i - 1]
        else:
            C[i, i] = g(gi * ell[i]) / s[i] + g(-gi * ell[i]) / s[i - 1]
        if i + 1 < n:
            C[i, i + 1] = -g(gi * ell[i + 1]) / s[i]
        if i - 1 >= 0:
            C[i, i - 1] = -g(-gi * ell[i - 1]) / s[i - 1]
    return GaugeCapacitanceMatrix(C, chain, "finite")


def build_quasiperiodic_capacitance(cell: UnitCellSpec, alpha: complex) -> GaugeCapacitanceMatrix:
    """Quasiperiodic gauge capacitance matrix of one unit cell.

    Bulk entries follow the finite pattern with cyclic spacing indices
    (s_0 = s_K); the corners add -e^{-i alpha L} g(gamma ell_1)/s_K at
    (K,1) and -e^{+i alpha L} g(-gamma ell_K)/s_K at (1,K). The corner
    terms are added on top of the bulk so K = 1 and K = 2 keep both
    contributions. alpha may be complex; the matrix is 2pi/L-periodic in it.
    """
    g = gauge_kernel
    k = cell.size
    ell = cell.lengths
    sp = cell.spacings
    gam = cell.gamma
    L = cell.cell_length
    alpha = complex(alpha)
    C = np.zeros((k, k), dtype=complex)
    for i in range(k):
        si = sp[i % k]
        sim1 = sp[(i - 1) % k]
        C[i, i] = g(gam * ell[i]) / si + g(-gam * ell[i]) / sim1
        if i + 1 < k:
            C[i, i + 1] = -g(gam * ell[i + 1]) / si
        if i - 1 >= 0:
            C[i, i - 1] = -g(-gam * ell[i - 1]) / sim1
    C[k - 1, 0] += -np.exp(-1j * alpha * L) * g(gam * ell[0]) / sp[k - 1]
    C[0, k - 1] += -np.exp(1j * alpha * L) * g(-gam * ell[k - 1]) / sp[k - 1]
    return GaugeCapacitanceMatrix(C, cell, "quasiperiodic", alpha=alpha)


def volume_matrix(geometry: ChainSpec | UnitCellSpec) -> np.ndarray:
    """Diagonal matrix of resonator lengths."""
    return np.diag(np.asarray(geometry.lengths, dtype=float))


def positive_real_sqrt(z: complex) -> complex:
    """Square root with positive real part.

    Ties (purely imaginary roots, i.e. z real negative) resolve to positive
    imaginary part; z = 0 gives 0.
    """
    z = complex(z)
    if z == 0:
        return 0.0 + 0.0j
    root = np.sqrt(z)
    if root.real < 0 or (root.real == 0 and root.imag < 0):
        root = -root
    return complex(root)


@dataclass(frozen=True)
class SpectralResult:
    """Sorted eigenvalues, frequencies, eigenvectors and localization.

    vectors holds right eigenvectors as columns, each scaled to sup-norm 1
    with its largest-modulus entry real positive. localization is the
    per-mode sup-norm over 2-norm ratio. residuals records
    ||C v - lambda V v||_2 per mode.
    """

    lambdas: np.ndarray
    omegas: np.ndarray
    vectors: np.ndarray
    localization: np.ndarray
    residuals: np.ndarray


def _normalize_columns(vectors: np.ndarray) -> np.ndarray:
    out = np.array(vectors, dtype=complex, copy=True)
    for j in range(out.shape[1]):
        col = out[:, j]
        pivot = int(np.argmax(np.abs(col)))
        out[:, j] = col / col[pivot]
    return out


def solve_spectrum(C: GaugeCapacitanceMatrix, V: np.ndarray | None = None,
                   delta: float | None = None, v_b: float | None = None) -> SpectralResult:
    """Solve C a = lambda V a and map eigenvalues to frequencies.

    V defaults to the volume matrix of the generating geometry; delta and
    v_b default to the geometry's values. The generalized problem is solved
    as the standard problem V^{-1} C (V is diagonal and positive).
    Eigenvalues are sorted by (real, imaginary); every returned pair must
    satisfy ||C v - lambda V v|| <= 1e-10 ||C||_F or an ArithmeticError is
    raised.
    """
    geometry = C.geometry
    if V is None:
        V = volume_matrix(geometry)
    if delta is None:
        delta = geometry.delta
    if v_b is None:
        v_b = geometry.v_b
    A = C.entries / np.diag(V)[:, None]
    lambdas, vectors = np.linalg.eig(A)
    order = np.lexsort((lambdas.imag, lambdas.real))
    lambdas = lambdas[order]
    vectors = _normalize_columns(vectors[:, order])

    residuals = np.array([
        np.linalg.norm(C.entries @ vectors[:, j] - lambdas[j] * (np.diag(V) * vectors[:, j]))
        for j in range(len(lambdas))
    ])
    tol = RESIDUAL_RTOL * np.linalg.norm(C.entries)
    worst = float(residuals.max()) if len(residuals) else 0.0
    if worst > tol:
        raise ArithmeticError(
            f"eigenpair residual {worst:.3e} exceeds tolerance {tol:.3e}")

    omegas = np.array([v_b * positive_real_sqrt(delta * lam) for lam in lambdas])
    loc = np.array([localization_metric(vectors[:, j]) for j in range(vectors.shape[1])])
    if C.kind == "finite" and not np.iscomplexobj(C.entries):
        # finite chains with real gauge keep a real matrix; drop the zero
        # imaginary parts picked up by the complex eigensolver
        if np.allclose(lambdas.imag, 0.0, atol=tol if tol > 0 else 1e-14):
            lambdas = lambdas.real.astype(complex)
    return SpectralResult(lambdas=lambdas, omegas=omegas, vectors=vectors,
                          localization=loc, residuals=residuals)


def material_spectrum(chain: ChainSpec) -> SpectralResult:
    """Spectrum of a finite chain with per-resonator complex wave speeds.

    The mode problem is omega^2 a = D C a with D = diag(delta v_i^2 / ell_i)
    and C the gamma = 0 capacitance matrix; omega takes the positive-real
    branch. lambdas holds the eigenvalues of D C, i.e. the omega^2 values.
    """
    if chain.speeds is None:
        raise ValueError("chain carries no speeds")
    if any(g != 0.0 for g in chain.gammas):
        raise ValueError("complex-material chains use gamma = 0")
    C = build_gauge_capacitance(chain)
    d = chain.delta * np.asarray(chain.speeds, dtype=complex) ** 2 / np.asarray(chain.lengths)
    A = d[:, None] * C.entries
    lambdas, vectors = np.linalg.eig(A)
    order = np.lexsort((lambdas.imag, lambdas.real))
    lambdas = lambdas[order]
    vectors = _normalize_columns(vectors[:, order])
    residuals = np.array([
        np.linalg.norm(A @ vectors[:, j] - lambdas[j] * vectors[:, j])
        for j in range(len(lambdas))
    ])
    tol = RESIDUAL_RTOL * max(np.linalg.norm(A), 1.0)
    if len(residuals) and float(residuals.max()) > tol:
        raise ArithmeticError("eigenpair residual exceeds tolerance")
    omegas = np.array([positive_real_sqrt(lam) for lam in lambdas])
    loc = np.array([localization_metric(vectors[:, j]) for j in range(vectors.shape[1])])
    return SpectralResult(lambdas=lambdas, omegas=omegas, vectors=vectors,
                          localization=loc, residuals=residuals)


def reconstruct_mode(chain: ChainSpec, eigvec, grid) -> np.ndarray:
    """Sample the physical-space mode u(x) = sum_j a_j V_j(x) on a grid.

    V_j is 1 on resonator j, 0 on every other resonator, affine across the
    two gaps adjacent to resonator j, and constant on the unbounded exterior
    intervals. The superposition is therefore a_j on resonator j, a linear
    ramp between consecutive resonator values across each gap, and the
    nearest resonator's value outside the chain.
    """
    from .geometry import resonator_positions

    a = np.asarray(eigvec, dtype=complex)
    if a.shape != (chain.size,):
        raise ValueError("eigenvector length must match the chain")
    x = np.asarray(grid, dtype=float)
    if x.ndim != 1:
        raise ValueError("grid must be one-dimensional")
    if np.any(np.diff(x) < 0):
        raise ValueError("grid points must be sorted")
    positions = resonator_positions(chain)
    out = np.empty(len(x), dtype=complex)
    for m, xp in enumerate(x):
        if xp <= positions[0][0]:
            out[m] = a[0]
            continue
        if xp >= positions[-1][1]:
            out[m] = a[-1]
            continue
        for j, (xl, xr) in enumerate(positions):
            if xl <= xp <= xr:
                out[m] = a[j]
                break
            if j + 1 < len(positions) and xr < xp < positions[j + 1][0]:
                t = (xp - xr) / (positions[j + 1][0] - xr)
                out[m] = a[j] * (1 - t) + a[j + 1] * t
                break
    return out
