"""Generalised Brillouin zone, quasiperiodicity recovery, convergence study.

For a gauge cell the band eigenvalue at real quasiperiodicity alpha is
complex; shifting alpha into the complex plane by the right imaginary part
beta(alpha) forces it back onto the positive real axis. The resulting curve
alpha + i beta(alpha) is the generalised Brillouin zone, and the finite
open-chain eigenvalues accumulate on its image as the chain grows. The
inverse problem recovers, for each finite-chain eigenfrequency, the complex
quasiperiodicity whose band value matches it best.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq, minimize

from .bands import DimerParams, dimer_band_pair, material_band_eigs, monomer_band
from .capmat import (
    build_gauge_capacitance,
    build_quasiperiodic_capacitance,
    positive_real_sqrt,
    solve_spectrum,
)
from .geometry import ChainSpec, UnitCellSpec, chain_from_cells

REAL_PART_RTOL = 1e-9


@dataclass(frozen=True)
class GBZPoint:
    """One sample of the generalised Brillouin zone: at real quasiperiodicity
    alpha, the imaginary shift beta makes the band eigenvalue lam real and
    positive."""

    alpha: float
    beta: float
    lam: float
    band_index: int


@dataclass(frozen=True)
class RecoveredQuasiperiodicity:
    """Argmin location alpha_hat of |omega - omega^alpha| for one finite-chain
    mode; mirror_alpha records the reflected competitor -conj(alpha_hat) when
    it ties, and clipped flags a refinement that left the search window."""

    mode_index: int
    omega: complex
    alpha_hat: complex
    residual: float
    mirror_alpha: complex | None = None
    clipped: bool = False


def cell_band_eigs(cell: UnitCellSpec, alpha: complex) -> np.ndarray:
    """Band eigenvalues of the cell at (possibly complex) alpha, sorted by
    (real, imag). Closed forms serve one- and two-resonator cells with unit
    lengths; anything else goes through the dense quasiperiodic matrix."""
    if cell.size == 1:
        return np.array([monomer_band(cell.spacings[0], cell.gamma, alpha,
                                      ell=cell.lengths[0])])
    if cell.size == 2 and list(cell.lengths) == [1.0, 1.0]:
        p = DimerParams(cell.spacings[0], cell.spacings[1], cell.gamma)
        lam = np.array(dimer_band_pair(p, alpha))
    else:
        C = build_quasiperiodic_capacitance(cell, alpha).entries
        lam = np.linalg.eigvals(C / np.asarray(cell.lengths)[:, None])
    return lam[np.lexsort((lam.imag, lam.real))]


def _imag_part(cell: UnitCellSpec, alpha: float, beta: float, band_index: int) -> float:
    return float(cell_band_eigs(cell, alpha + 1j * beta)[band_index].imag)


def _validated_point(cell: UnitCellSpec, alpha: float, beta: float,
                     band_index: int) -> GBZPoint | None:
    lam = complex(cell_band_eigs(cell, alpha + 1j * beta)[band_index])
    if abs(lam.imag) >= REAL_PART_RTOL * max(abs(lam), 1e-300) or lam.real <= 0:
        return None
    return GBZPoint(alpha=alpha, beta=beta, lam=lam.real, band_index=band_index)


def _solve_beta(cell: UnitCellSpec, alpha: float, band_index: int,
                bound: float) -> GBZPoint | None:
    """Root of Im lambda(alpha + i beta) = 0 on [-bound, bound], one widening."""
    if bound == 0:
        return _validated_point(cell, alpha, 0.0, band_index)
    for b in (bound, 2.0 * bound):
        for count in (17, 81):
            betas = np.linspace(-b, b, count)
            lams = np.array([cell_band_eigs(cell, alpha + 1j * bt)[band_index]
                             for bt in betas])
            scale = max(1.0, float(np.max(np.abs(lams))))
            if np.max(np.abs(lams.imag)) <= 1e-10 * scale:
                return None  # degenerate in beta; caller re-solves off-sample
            vals = lams.imag
            for k in range(count - 1):
                if vals[k] == 0.0:
                    point = _validated_point(cell, alpha, float(betas[k]), band_index)
                    if point is not None:
                        return point
                    continue
                if np.sign(vals[k]) * np.sign(vals[k + 1]) < 0:
                    root = brentq(lambda bt: _imag_part(cell, alpha, bt, band_index),
                                  betas[k], betas[k + 1], xtol=1e-13)
                    point = _validated_point(cell, alpha, float(root), band_index)
                    if point is not None:
                        return point
            if vals[-1] == 0.0:
                point = _validated_point(cell, alpha, float(betas[-1]), band_index)
                if point is not None:
                    return point
    return None


def _is_degenerate(cell: UnitCellSpec, alpha: float, band_index: int,
                   bound: float) -> bool:
    betas = np.linspace(-max(bound, 1e-6), max(bound, 1e-6), 17)
    lams = np.array([cell_band_eigs(cell, alpha + 1j * bt)[band_index]
                     for bt in betas])
    scale = max(1.0, float(np.max(np.abs(lams))))
    return bool(np.max(np.abs(lams.imag)) <= 1e-10 * scale)


def gbz_curve(cell: UnitCellSpec, band_index: int = 0,
              alpha_samples: int = 256) -> list[GBZPoint]:
    """Sample the generalised Brillouin zone curve for one band sheet.

    Sweeps alpha over one full zone (-pi/L, pi/L] and root-finds the beta
    making the band eigenvalue real and positive, bracketing on
    [-|gamma| ell_max, +|gamma| ell_max] with one widening. At isolated
    alphas the eigenvalue is real for every beta (the imaginary part
    vanishes identically); there the solve is repeated a small step inward
    and its beta reused at the original alpha. Samples with no admissible
    root are skipped, never interpolated.
    """
    if alpha_samples < 16:
        raise ValueError("need at least 16 alpha samples")
    if not 0 <= band_index < cell.size:
        raise ValueError("band_index out of range")
    L = cell.cell_length
    bound = abs(cell.gamma) * max(cell.lengths)
    points: list[GBZPoint] = []
    for m in range(1, alpha_samples + 1):
        alpha = -np.pi / L + 2.0 * np.pi / L * m / alpha_samples
        point = _solve_beta(cell, float(alpha), band_index, bound)
        if point is None and _is_degenerate(cell, float(alpha), band_index, bound):
            step = 1e-3 * np.pi / L
            shifted = alpha - step if alpha + step > np.pi / L else alpha + step
            off = _solve_beta(cell, float(shifted), band_index, bound)
            if off is not None:
                point = _validated_point(cell, float(alpha), off.beta, band_index)
        if point is not None:
            points.append(point)
    return points


def _standard_band_evaluator(cell: UnitCellSpec):
    delta, v_b = cell.delta, cell.v_b

    def omegas_at(alpha: complex) -> np.ndarray:
        lam = cell_band_eigs(cell, alpha)
        return np.array([v_b * positive_real_sqrt(delta * z) for z in lam])

    return omegas_at


def band_frequency_evaluator(cell: UnitCellSpec):
    """alpha -> array of band frequencies omega^alpha over all sheets.

    Cells carrying material speeds use the complex-material eigenproblem;
    all others use the gauge capacitance bands.
    """
    if cell.speeds is not None:
        return lambda alpha: material_band_eigs(cell, alpha).omegas
    return _standard_band_evaluator(cell)


def _default_window(cell: UnitCellSpec) -> tuple[float, float, float, float]:
    L = cell.cell_length
    b = max(abs(cell.gamma) * max(cell.lengths), 0.5)
    return (-np.pi / L, np.pi / L, -b, b)


def _objective(evaluator, omega: complex):
    def f(alpha: complex) -> float:
        return float(np.min(np.abs(evaluator(alpha) - omega)))
    return f


def _grid_values(evaluator, window, shape=(64, 64)):
    re = np.linspace(window[0], window[1], shape[0])
    im = np.linspace(window[2], window[3], shape[1])
    nodes = (re[:, None] + 1j * im[None, :]).ravel()
    values = np.stack([evaluator(a) for a in nodes])
    return nodes, values


def recover_quasiperiodicity(omega: complex, cell: UnitCellSpec,
                             evaluator=None, window=None, mode_index: int = 0,
                             _grid=None) -> RecoveredQuasiperiodicity:
    """Best complex quasiperiodicity alpha_hat minimizing |omega - omega^alpha|.

    Coarse 64x64 grid search over the window (default: one zone width in the
    real direction, the gauge decay scale in the imaginary one) followed by
    Nelder-Mead refinement; the objective minimizes over every band sheet.
    Ties within 1e-12 between alpha_hat and its reflection -conj(alpha_hat)
    are broken toward Re alpha_hat >= 0 with the mirror recorded. A
    refinement that walks out of the window is clipped back and flagged.
    """
    if evaluator is None:
        evaluator = band_frequency_evaluator(cell)
    if window is None:
        window = _default_window(cell)
    f = _objective(evaluator, omega)
    if _grid is None:
        _grid = _grid_values(evaluator, window)
    nodes, values = _grid
    per_node = np.min(np.abs(values - omega), axis=1)
    start = nodes[int(np.argmin(per_node))]

    res = minimize(lambda v: f(v[0] + 1j * v[1]), x0=[start.real, start.imag],
                   method="Nelder-Mead",
                   options={"fatol": 1e-12, "xatol": 1e-12, "maxiter": 600})
    alpha_hat = complex(res.x[0], res.x[1])
    clipped = False
    if not (window[0] <= alpha_hat.real <= window[1]
            and window[2] <= alpha_hat.imag <= window[3]):
        alpha_hat = complex(min(max(alpha_hat.real, window[0]), window[1]),
                            min(max(alpha_hat.imag, window[2]), window[3]))
        clipped = True
    if f(alpha_hat) > per_node.min():
        alpha_hat = complex(start)
        clipped = clipped or not np.isfinite(res.fun)
    residual = f(alpha_hat)

    mirror = -np.conj(alpha_hat)
    mirror_alpha = None
    if window[0] <= mirror.real <= window[1]:
        f_mirror = f(complex(mirror))
        if abs(f_mirror - residual) <= 1e-12:
            mirror_alpha = complex(mirror)
            if alpha_hat.real < 0 <= mirror.real:
                alpha_hat, mirror_alpha = mirror_alpha, complex(alpha_hat)
                residual = f_mirror
    return RecoveredQuasiperiodicity(mode_index=mode_index, omega=complex(omega),
                                     alpha_hat=complex(alpha_hat),
                                     residual=float(residual),
                                     mirror_alpha=mirror_alpha, clipped=clipped)


def recover_modes(chain: ChainSpec, cell: UnitCellSpec,
                  window=None) -> list[RecoveredQuasiperiodicity]:
    """Recover quasiperiodicities of every eigenmode of a finite chain.

    The chain eigenfrequencies come from the matching spectral problem
    (material when the cell carries speeds, gauge capacitance otherwise);
    the coarse search grid is computed once and shared across modes.
    """
    from .capmat import material_spectrum

    if cell.speeds is not None:
        omegas = material_spectrum(chain).omegas
    else:
        omegas = solve_spectrum(build_gauge_capacitance(chain),
                                delta=chain.delta, v_b=chain.v_b).omegas
    evaluator = band_frequency_evaluator(cell)
    if window is None:
        window = _default_window(cell)
    grid = _grid_values(evaluator, window)
    return [recover_quasiperiodicity(complex(om), cell, evaluator=evaluator,
                                     window=window, mode_index=j, _grid=grid)
            for j, om in enumerate(omegas)]


def convergence_study(cell: UnitCellSpec, sizes) -> list[tuple[int, float]]:
    """Finite-spectrum to generalised-Brillouin-zone convergence table.

    For each chain of N cells, the nonzero eigenvalues of the open chain are
    assigned to the nearest band sheet (each sheet's image is a real
    interval, sampled densely with 1024 curve points) and the table reports
    how far the extreme assigned eigenvalues still sit from the sheet end
    points, maximized over sheets. The kernel eigenvalue 0 is exempt and
    excluded.
    """
    sizes = [int(n) for n in sizes]
    if sorted(sizes) != sizes or len(set(sizes)) != len(sizes):
        raise ValueError("sizes must be strictly increasing")
    if cell.size > 2:
        raise ValueError("convergence study covers one- and two-resonator cells")

    sheets = []
    for band in range(cell.size):
        pts = gbz_curve(cell, band_index=band, alpha_samples=1024)
        if not pts:
            raise ArithmeticError(f"band sheet {band} produced no curve points")
        lams = np.array([p.lam for p in pts])
        sheets.append((float(lams.min()), float(lams.max())))

    def interval_distance(z: complex, lo: float, hi: float) -> float:
        dx = max(0.0, lo - z.real, z.real - hi)
        return float(np.hypot(dx, z.imag))

    rows: list[tuple[int, float]] = []
    for n in sizes:
        chain = chain_from_cells(cell, n)
        lam = solve_spectrum(build_gauge_capacitance(chain),
                             delta=chain.delta, v_b=chain.v_b).lambdas
        lam = np.asarray(lam, dtype=complex)
        lam = lam[np.abs(lam) > 1e-8 * np.max(np.abs(lam))]
        assigned: list[list[complex]] = [[] for _ in sheets]
        for z in lam:
            dists = [interval_distance(complex(z), lo, hi) for lo, hi in sheets]
            assigned[int(np.argmin(dists))].append(complex(z))
        worst = 0.0
        for (lo, hi), values in zip(sheets, assigned):
            if not values:
                raise ArithmeticError("a band sheet received no eigenvalues")
            re = np.array([z.real for z in values])
            edge_lo = abs(values[int(np.argmin(re))] - lo)
            edge_hi = abs(values[int(np.argmax(re))] - hi)
            worst = max(worst, float(edge_lo), float(edge_hi))
        rows.append((n, worst))
    return rows
