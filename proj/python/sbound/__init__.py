"""Explicit bounds for S(T), the argument of the Riemann zeta-function."""

from ._core import (
    AccuracyError,
    NoSignChangeError,
    CertKind,
    CriticalLineBound,
    LinearBound,
    MethodACoeffs,
    OptimizationResult,
    TableRow,
    ZeroScanResult,
    SEvaluation,
    build_table,
    check_lemmas,
    cheng_graham_raw,
    crossover_height,
    log_gamma,
    make_cheng_graham,
    make_convexity,
    make_custom,
    method_a_bound,
    method_a_coeffs,
    minimize_bound,
    rosser_bound,
    s_of_t,
    scan_zeros,
    theorem_b_bound,
    theorem_b_coeff_a,
    theorem_b_coeff_b,
    theorem_b_coeff_b_limit,
    theta_rs,
    z_function,
    zeta_complex,
    zeta_real,
)

__version__ = "0.1.0"
