"""One-atom maser: steady-state field and entanglement of successive atom pairs."""

from ._core import (
    DecompositionInvalid,
    InvalidState,
    LsResult,
    LsSearchOptions,
    MaserParams,
    NoValidRoot,
    PairCorrelations,
    Peak,
    PhotonDistribution,
    SweepConfig,
    SweepRecord,
    TruncationOverflow,
    TruncationPolicy,
    ValidityReport,
    apply_atom_passage,
    correlations,
    degree_of_correlation,
    delta_trace_norm,
    emit_csv,
    emit_plot_data,
    evaluate_point,
    find_peaks,
    is_separable,
    lambda_cap,
    ls_decompose,
    matrix_correlations,
    mean_photon,
    numeric_ls_search,
    numeric_trace_norm,
    partial_transpose,
    rabi_coefficients,
    run_sweep,
    solve_p,
    spectrum_4x4,
    steady_state,
    to_density_matrix,
    validate,
)

__all__ = [
    "DecompositionInvalid",
    "InvalidState",
    "LsResult",
    "LsSearchOptions",
    "MaserParams",
    "NoValidRoot",
    "PairCorrelations",
    "Peak",
    "PhotonDistribution",
    "SweepConfig",
    "SweepRecord",
    "TruncationOverflow",
    "TruncationPolicy",
    "ValidityReport",
    "apply_atom_passage",
    "correlations",
    "degree_of_correlation",
    "delta_trace_norm",
    "emit_csv",
    "emit_plot_data",
    "evaluate_point",
    "find_peaks",
    "is_separable",
    "lambda_cap",
    "ls_decompose",
    "matrix_correlations",
    "mean_photon",
    "numeric_ls_search",
    "numeric_trace_norm",
    "partial_transpose",
    "rabi_coefficients",
    "run_sweep",
    "solve_p",
    "spectrum_4x4",
    "steady_state",
    "to_density_matrix",
    "validate",
]

__version__ = "0.1.0"
