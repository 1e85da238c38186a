"""Exact ghost-map calculus for Euler products.

The main objects are truncated power series with constant term 1, their ghost
sequences ``s_n`` (coefficients of ``-q A'/A``) and their Euler exponents
``f(d)`` in ``A = prod (1 - q^d)^{f(d)}``. Everything is exact rational arithmetic.
"""
from .errors import (
    DomainError,
    HypothesisNotMet,
    Indeterminate,
    InvariantViolation,
    NotCyclotomic,
    NotHyperbolicAtLevel,
    NotRationalSpectrum,
    Unsupported,
    WittGhostError,
)
from .series import (
    DEFAULT_ORDER,
    TruncSeries,
    binomial_factor,
    one,
    series,
    series_exp,
    series_inv,
    series_log,
    series_mul,
    series_pow,
    substitute_power,
)
from .arith import divisors, euler_phi, factorize, mobius, vp
from .ghost import (
    GhostSeq,
    coeffs_from_euler,
    euler_from_coeffs,
    euler_from_ghost,
    ghost,
    ghost_from_euler,
    sigma_from_coeffs,
    sigma_inverse,
)
from .congruence import (
    CongruenceReport,
    Witness,
    check_dold_plus,
    check_dold_tower,
    check_gauss_mobius,
    check_s_integral,
)
from .witt import (
    hadamard,
    hadamard_kernels,
    verify_ghost_multiplicativity,
    witt_product_exponents,
    witt_product_series,
)
from .residues import (
    RecurrenceData,
    ResidueData,
    classify,
    ghost_from_residues,
    necklace_exponents,
    power_sums_from_polynomial,
    rational_reconstruct,
    recurrence_from_residues,
)
from .cyclo import (
    cyclo_fit,
    cyclo_product,
    cyclo_to_euler,
    doldplus_cyclotomic_check,
    euler_to_cyclo,
    ghost_from_cyclo,
    periodicity_check,
    ramanujan_sum,
)
from .quad import (
    PrimeIdeal,
    QuadElem,
    euler_from_ghost_quad,
    hensel_lift_root,
    ideal_congruent,
    ideal_dold_mobius_check,
    norm_descent,
    norm_tower_check,
    quad,
    quad_frobenius_ladder,
    splitting_type,
)
from .ladders import frobenius_ladder_check, progression_zero_check, valuation_transfer_check
from .dynamics import (
    fix_from_matrix,
    orbit_counts,
    product_law_check,
    toral_fix,
    zeta_det_identity_check,
    zeta_from_fix,
)

__all__ = [
    "DomainError",
    "HypothesisNotMet",
    "Indeterminate",
    "InvariantViolation",
    "NotCyclotomic",
    "NotHyperbolicAtLevel",
    "NotRationalSpectrum",
    "Unsupported",
    "WittGhostError",
    "DEFAULT_ORDER",
    "TruncSeries",
    "binomial_factor",
    "one",
    "series",
    "series_exp",
    "series_inv",
    "series_log",
    "series_mul",
    "series_pow",
    "substitute_power",
    "divisors",
    "euler_phi",
    "factorize",
    "mobius",
    "vp",
    "GhostSeq",
    "coeffs_from_euler",
    "euler_from_coeffs",
    "euler_from_ghost",
    "ghost",
    "ghost_from_euler",
    "sigma_from_coeffs",
    "sigma_inverse",
    "CongruenceReport",
    "Witness",
    "check_dold_plus",
    "check_dold_tower",
    "check_gauss_mobius",
    "check_s_integral",
    "hadamard",
    "hadamard_kernels",
    "verify_ghost_multiplicativity",
    "witt_product_exponents",
    "witt_product_series",
    "RecurrenceData",
    "ResidueData",
    "classify",
    "ghost_from_residues",
    "necklace_exponents",
    "power_sums_from_polynomial",
    "rational_reconstruct",
    "recurrence_from_residues",
    "cyclo_fit",
    "cyclo_product",
    "cyclo_to_euler",
    "doldplus_cyclotomic_check",
    "euler_to_cyclo",
    "ghost_from_cyclo",
    "periodicity_check",
    "ramanujan_sum",
    "PrimeIdeal",
    "QuadElem",
    "euler_from_ghost_quad",
    "hensel_lift_root",
    "ideal_congruent",
    "ideal_dold_mobius_check",
    "norm_descent",
    "norm_tower_check",
    "quad",
    "quad_frobenius_ladder",
    "splitting_type",
    "frobenius_ladder_check",
    "progression_zero_check",
    "valuation_transfer_check",
    "fix_from_matrix",
    "orbit_counts",
    "product_law_check",
    "toral_fix",
    "zeta_det_identity_check",
    "zeta_from_fix",
]

__version__ = "0.1.0"
