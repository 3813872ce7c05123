"""Band functions over the Brillouin zone, exceptional points, vorticity.

Dimer cells (two resonators of unit length per period) admit closed-form
band eigenvalues; monomer cells reduce to a scalar. Everything else goes
through the dense quasiperiodic matrix. The two dimer bands may touch and
coalesce: at the zone edge alpha = pi/L this happens exactly at the
critical gauge strength gamma_c(s1, s2), an exceptional point where the
eigenvectors align as well. Below gamma_c the band difference winds around
zero (nonzero vorticity, the skin-effect phase); above it the winding is
trivial.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .capmat import build_quasiperiodic_capacitance, gauge_kernel, positive_real_sqrt
from .geometry import UnitCellSpec


@dataclass(frozen=True)
class BandSample:
    """Band eigenvalues and frequencies at one quasiperiodicity."""

    alpha: complex
    lambdas: np.ndarray
    omegas: np.ndarray


@dataclass(frozen=True)
class DimerParams:
    """Dimer unit cell: two unit-length resonators with spacings s1 (inside
    the cell) and s2 (linking to the next cell); closed forms hold for unit
    lengths only."""

    s1: float
    s2: float
    gamma: float

    def __post_init__(self):
        if not (self.s1 > 0 and self.s2 > 0):
            raise ValueError("spacings must be positive")

    @property
    def cell_length(self) -> float:
        return 2.0 + self.s1 + self.s2

    def cell(self, delta: float = 0.001, v_b: float = 1.0) -> UnitCellSpec:
        return UnitCellSpec(lengths=[1.0, 1.0], spacings=[self.s1, self.s2],
                            gamma=self.gamma, delta=delta, v_b=v_b)


def _sorted_sample(alpha: complex, lambdas, delta: float, v_b: float) -> BandSample:
    lam = np.asarray(lambdas, dtype=complex)
    order = np.lexsort((lam.imag, lam.real))
    lam = lam[order]
    omegas = np.array([v_b * positive_real_sqrt(delta * z) for z in lam])
    return BandSample(alpha=complex(alpha), lambdas=lam, omegas=omegas)


def dimer_band_pair(p: DimerParams, alpha: complex) -> tuple[complex, complex]:
    """The two dimer band eigenvalues in (minus, plus) square-root order.

    lambda_{1,2} = [(g(y)+g(-y))(s1+s2) -/+ sqrt(2 g(y) g(-y) (4 s1 s2
    cosh(y - i alpha L) + d))] / (2 s1 s2) with y the gauge value and
    d = cosh(y)(s1-s2)^2 + (s1+s2)^2. The kernel form g keeps the
    expression finite through gamma = 0, and lambda_1(0) = 0 exactly.
    """
    y = p.gamma
    s1, s2 = p.s1, p.s2
    L = p.cell_length
    gp = gauge_kernel(y)
    gm = gauge_kernel(-y)
    d = np.cosh(y) * (s1 - s2) ** 2 + (s1 + s2) ** 2
    radicand = 2.0 * gp * gm * (4.0 * s1 * s2 * np.cosh(y - 1j * complex(alpha) * L) + d)
    root = np.sqrt(radicand)
    base = (gp + gm) * (s1 + s2)
    lam1 = (base - root) / (2.0 * s1 * s2)
    lam2 = (base + root) / (2.0 * s1 * s2)
    return complex(lam1), complex(lam2)


def dimer_bands(p: DimerParams, alpha: complex, delta: float = 0.001,
                v_b: float = 1.0) -> BandSample:
    """Closed-form dimer band sample, eigenvalues sorted by (real, imag)."""
    return _sorted_sample(alpha, dimer_band_pair(p, alpha), delta, v_b)


def monomer_band(s: float, gamma: float, alpha: complex, ell: float = 1.0) -> complex:
    """Single-resonator band eigenvalue.

    lambda^alpha = [g(u)(1 - e^{-i alpha L}) + g(-u)(1 - e^{+i alpha L})] / (s ell)
    with u = gamma ell and L = ell + s. Finite through gamma = 0, where it
    reduces to the reciprocal band 2(1 - cos(alpha L))/(s ell).
    """
    u = gamma * ell
    L = ell + s
    phase = np.exp(1j * complex(alpha) * L)
    lam = (gauge_kernel(u) * (1.0 - 1.0 / phase) + gauge_kernel(-u) * (1.0 - phase)) / (s * ell)
    return complex(lam)


def critical_gamma(s1: float, s2: float) -> float:
    """Gauge strength where the dimer bands coalesce at the zone edge.

    gamma_c = arccosh((s1+s2)^2 / (6 s1 s2 - s1^2 - s2^2)); zero for equal
    spacings, and nonexistent (error) when the spacing ratio exceeds
    3 + 2 sqrt(2), where the denominator turns non-positive.
    """
    if not (s1 > 0 and s2 > 0):
        raise ValueError("spacings must be positive")
    if s1 == s2:
        return 0.0
    denom = 6.0 * s1 * s2 - s1 * s1 - s2 * s2
    if denom <= 0:
        raise ValueError("no exceptional point for this spacing ratio")
    return float(np.arccosh((s1 + s2) ** 2 / denom))


@dataclass(frozen=True)
class ExceptionalPointCheck:
    discriminant: complex
    coalesced: bool
    eigenvector_angle: float


def exceptional_point_check(p: DimerParams, alpha: complex,
                            tol_disc: float | None = None) -> ExceptionalPointCheck:
    """Discriminant and eigenvector angle of the 2x2 quasiperiodic matrix.

    The discriminant tr^2 - 4 det vanishes exactly at an exceptional point;
    coalesced means its magnitude sits below tol_disc (default
    1e-8 ||C||_F^2). The angle is the principal angle between the two
    computed eigenvectors, which collapses to ~0 at a genuine coalescence
    (geometric multiplicity 1).
    """
    C = build_quasiperiodic_capacitance(p.cell(), alpha).entries
    tr = np.trace(C)
    disc = tr * tr - 4.0 * np.linalg.det(C)
    if tol_disc is None:
        tol_disc = 1e-8 * np.linalg.norm(C) ** 2
    _, vecs = np.linalg.eig(C)
    v1 = vecs[:, 0] / np.linalg.norm(vecs[:, 0])
    v2 = vecs[:, 1] / np.linalg.norm(vecs[:, 1])
    cosang = min(1.0, abs(np.vdot(v1, v2)))
    angle = float(np.arccos(cosang))
    return ExceptionalPointCheck(discriminant=complex(disc),
                                 coalesced=bool(abs(disc) < tol_disc),
                                 eigenvector_angle=angle)


def _attenuation_ordered_difference(pairs: np.ndarray) -> np.ndarray:
    """Per-sample difference of band frequencies, ordered by attenuation.

    At each alpha the two omega^2 eigenvalues are labelled by imaginary
    part (decaying band below, growing band above; real-part tie-break on
    effectively real pairs), and the difference of their positive-real
    square roots is returned. This pointwise labelling, not continuity
    tracking, is what quantizes the winding to half-integers: the labels
    trade places through the real axis once per zone in the skin phase.
    """
    a, b = pairs[:, 0], pairs[:, 1]
    scale = float(np.max(np.abs(pairs)))
    tie = np.abs(b.imag - a.imag) <= 1e-12 * max(scale, 1e-300)
    swap = np.where(tie, b.real < a.real, b.imag < a.imag)
    lo = np.where(swap, b, a)
    hi = np.where(swap, a, b)
    return np.sqrt(hi.astype(complex)) - np.sqrt(lo.astype(complex))


def _difference_winding(pair_at, cell_length: float, samples: int,
                        max_refinements: int = 6) -> float:
    """Unwrapped-argument winding of the band difference across the zone.

    pair_at(alpha) returns the two omega^2 band eigenvalues in any order.
    The sweep runs over alpha in (-pi/L, pi/L) with the end samples pulled
    a relative 1e-9 inside the zone edges, where the attenuation ordering
    is still unambiguous; the total unwrapped phase increment divided by
    2 pi is the winding. A total that fails to sit within 1e-3 of a
    half-integer, or a vanishing difference on the grid, triggers sample
    doubling; after max_refinements doublings the raw total is returned
    for the caller to flag, or resolution fails if the difference still
    vanishes somewhere (a band touching on the path).
    """
    edge = (1.0 - 1e-9) * np.pi / cell_length
    count = samples
    nu = None
    for _ in range(max_refinements + 1):
        alphas = np.linspace(-edge, edge, count + 1)
        pairs = np.array([pair_at(al) for al in alphas])
        diffs = _attenuation_ordered_difference(pairs)
        if not np.all(np.isfinite(diffs)) or np.any(diffs == 0):
            count *= 2
            continue
        phase = np.unwrap(np.angle(diffs))
        nu = float((phase[-1] - phase[0]) / (2.0 * np.pi))
        if abs(nu - round(2.0 * nu) / 2.0) <= 1e-3:
            return nu
        count *= 2
    if nu is None:
        raise ArithmeticError("band difference vanished on the sweep path")
    return nu


def _round_half_integer(nu: float, tol: float = 1e-3) -> float:
    nearest = round(2.0 * nu) / 2.0 + 0.0
    if abs(nu - nearest) <= tol:
        return nearest
    warnings.warn(f"vorticity {nu} is not within {tol} of a half-integer; "
                  "returning the raw quadrature value")
    return nu


def vorticity(p: DimerParams, samples: int = 256) -> float:
    """Winding number of the dimer band-function difference over the zone.

    Nonzero (value +-1/2) exactly in the skin-effect phase
    0 < gamma < gamma_c(s1, s2), and zero above it or for equal spacings.
    The frequencies enter through the positive-real square root; positive
    prefactors drop out of the winding, so no delta or v_b is needed.
    """
    if samples < 64:
        raise ValueError("need at least 64 samples")
    if p.gamma == 0:
        raise ValueError("vorticity is undefined at gamma = 0 (bands touch)")
    if p.s1 != p.s2:
        denom = 6.0 * p.s1 * p.s2 - p.s1 ** 2 - p.s2 ** 2
        if denom > 0 and abs(abs(p.gamma) - critical_gamma(p.s1, p.s2)) < 1e-12:
            raise ValueError("vorticity is undefined at the exceptional point")

    def pair_at(alpha: float) -> tuple[complex, complex]:
        return dimer_band_pair(p, alpha)

    nu = _difference_winding(pair_at, p.cell_length, samples)
    return _round_half_integer(nu)


def material_band_eigs(cell: UnitCellSpec, alpha: complex, speeds=None,
                       delta: float | None = None) -> BandSample:
    """Band sample of a cell with complex material speeds and zero gauge.

    The mode problem is omega^2 a = D C^{0,alpha} a with
    D = diag(delta v_i^2 / ell_i); lambdas holds the eigenvalues of D C
    (the omega^2 values) and omegas their positive-real square roots.
    """
    if cell.gamma != 0:
        raise ValueError("complex-material bands use gamma = 0")
    if speeds is None:
        speeds = cell.speeds
    if speeds is None:
        raise ValueError("cell carries no speeds")
    if delta is None:
        delta = cell.delta
    C = build_quasiperiodic_capacitance(cell, alpha).entries
    d = delta * np.asarray(speeds, dtype=complex) ** 2 / np.asarray(cell.lengths)
    lam = np.linalg.eigvals(d[:, None] * C)
    order = np.lexsort((lam.imag, lam.real))
    lam = lam[order]
    omegas = np.array([positive_real_sqrt(z) for z in lam])
    return BandSample(alpha=complex(alpha), lambdas=lam, omegas=omegas)


def material_vorticity(cell: UnitCellSpec, samples: int = 256) -> float:
    """Band-difference winding for a two-resonator complex-material cell."""
    if cell.size != 2:
        raise ValueError("vorticity needs exactly two bands")
    if samples < 64:
        raise ValueError("need at least 64 samples")

    def pair_at(alpha: float) -> tuple[complex, complex]:
        sample = material_band_eigs(cell, alpha)
        return complex(sample.lambdas[0]), complex(sample.lambdas[1])

    nu = _difference_winding(pair_at, cell.cell_length, samples)
    return _round_half_integer(nu)
