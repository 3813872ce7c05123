"""Spectral toolkit for one-dimensional resonator chains with an imaginary
gauge potential: gauge capacitance matrices, skin-effect spectra and decay
bounds, Toeplitz closed forms, pseudospectra, dimer bands with exceptional
points and vorticity, and the generalised Brillouin zone."""

from .bands import (
    BandSample,
    DimerParams,
    critical_gamma,
    dimer_band_pair,
    dimer_bands,
    exceptional_point_check,
    material_band_eigs,
    material_vorticity,
    monomer_band,
    vorticity,
)
from .capmat import (
    GaugeCapacitanceMatrix,
    SpectralResult,
    build_gauge_capacitance,
    build_quasiperiodic_capacitance,
    gauge_kernel,
    material_spectrum,
    positive_real_sqrt,
    reconstruct_mode,
    solve_spectrum,
    volume_matrix,
)
from .gbz import (
    GBZPoint,
    RecoveredQuasiperiodicity,
    cell_band_eigs,
    convergence_study,
    gbz_curve,
    recover_modes,
    recover_quasiperiodicity,
)
from .geometry import (
    ChainSpec,
    UnitCellSpec,
    cell_from_config,
    chain_from_cells,
    chain_from_config,
    chain_to_config,
    interface_chain,
    resonator_positions,
    uniform_chain,
)
from .spectral_analysis import (
    PseudospectrumGrid,
    eigenmatrix_singular_values,
    hausdorff_distance,
    level_set_polylines,
    localization_metric,
    pseudospectrum,
    singular_profile_value,
    thread_budget,
)
from .toeplitz import (
    CorrespondenceReport,
    DecayReport,
    TridiagonalSymbol,
    decay_bound_check,
    eigenpair_correspondence,
    operator_spectrum_classify,
    perturbed_toeplitz_eigenpairs,
    perturbed_toeplitz_matrix,
    symbol_curve,
    symbol_winding,
    toeplitz_eigenpairs,
    toeplitz_matrix,
    uniform_chain_symbol,
    winding_number,
)

__all__ = [
    "BandSample",
    "ChainSpec",
    "CorrespondenceReport",
    "DecayReport",
    "DimerParams",
    "GBZPoint",
    "GaugeCapacitanceMatrix",
    "PseudospectrumGrid",
    "RecoveredQuasiperiodicity",
    "SpectralResult",
    "TridiagonalSymbol",
    "UnitCellSpec",
    "build_gauge_capacitance",
    "build_quasiperiodic_capacitance",
    "cell_band_eigs",
    "cell_from_config",
    "chain_from_cells",
    "chain_from_config",
    "chain_to_config",
    "convergence_study",
    "critical_gamma",
    "decay_bound_check",
    "dimer_band_pair",
    "dimer_bands",
    "eigenmatrix_singular_values",
    "eigenpair_correspondence",
    "exceptional_point_check",
    "gauge_kernel",
    "gbz_curve",
    "hausdorff_distance",
    "interface_chain",
    "level_set_polylines",
    "localization_metric",
    "material_band_eigs",
    "material_spectrum",
    "material_vorticity",
    "monomer_band",
    "operator_spectrum_classify",
    "perturbed_toeplitz_eigenpairs",
    "perturbed_toeplitz_matrix",
    "positive_real_sqrt",
    "pseudospectrum",
    "reconstruct_mode",
    "recover_modes",
    "recover_quasiperiodicity",
    "resonator_positions",
    "singular_profile_value",
    "solve_spectrum",
    "symbol_curve",
    "symbol_winding",
    "thread_budget",
    "toeplitz_eigenpairs",
    "toeplitz_matrix",
    "uniform_chain",
    "uniform_chain_symbol",
    "volume_matrix",
    "winding_number",
]
