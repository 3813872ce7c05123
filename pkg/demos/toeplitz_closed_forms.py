"""Closed-form eigenpairs of the tridiagonal Toeplitz model.

The gauge capacitance matrix of a uniform chain is a tridiagonal
Toeplitz matrix with rank-one corner corrections. Both the pure and the
corner-corrected matrix have explicit eigenpairs; this script checks
them against dense diagonalization and tracks how the two families
drift apart as the chain grows.
"""

from __future__ import annotations

import numpy as np

from skinfx import (
    build_gauge_capacitance,
    eigenpair_correspondence,
    perturbed_toeplitz_eigenpairs,
    toeplitz_eigenpairs,
    toeplitz_matrix,
    uniform_chain,
    uniform_chain_symbol,
)

GAMMA = 1.0


def main() -> None:
    sym = uniform_chain_symbol(GAMMA, 1.0, 1.0)
    print(f"symbol of the uniform chain, gamma={GAMMA}:")
    print(f"  sub-diagonal a = {sym.a:.12f}")
    print(f"  diagonal     b = {sym.b:.12f}")
    print(f"  super        c = {sym.c:.12f}")
    print(f"  a + b + c = {sym.a + sym.b + sym.c:.2e}  (row sums vanish, "
          "so the corrected matrix keeps the constant kernel)")

    n = 12
    C = build_gauge_capacitance(uniform_chain(n, GAMMA)).entries
    closed = np.sort([lam.real for lam, _ in perturbed_toeplitz_eigenpairs(sym, n)])
    dense = np.sort(np.linalg.eigvals(C).real)
    print(f"\nN={n}: corner-corrected closed forms vs dense eigenvalues")
    print(f"  max |difference| = {np.max(np.abs(closed - dense)):.2e}")

    pure = np.sort([lam.real for lam, _ in toeplitz_eigenpairs(sym, n)])
    T = toeplitz_matrix(sym, n)
    pure_dense = np.sort(np.linalg.eigvals(T).real)
    print(f"  pure Toeplitz closed forms vs dense: "
          f"{np.max(np.abs(pure - pure_dense)):.2e}")

    print("\npure vs corrected spectra as N grows "
          "(greedy matching, kernel mode left unmatched):")
    print("  N    max eigenvalue gap   max eigenvector gap")
    for size in (10, 20, 40, 80):
        report = eigenpair_correspondence(sym, size)
        print(f"  {size:3d}  {report.max_eigenvalue_gap:18.6e}  "
              f"{report.max_vector_gap:18.6e}")
    print("  the eigenvalue gap halves with every doubling of N; the")
    print("  eigenvector gap shrinks too, so mode by mode the corrected")
    print("  spectrum drifts onto the closed Toeplitz family.")


if __name__ == "__main__":
    main()
