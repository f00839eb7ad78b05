"""Exact slope-stability invariants of polarised varieties.

Thin wrapper over the C++ core. All rational values cross the boundary
as ``fractions.Fraction`` (or exact "p/q" strings); nothing is ever
rounded.
"""

from ._core import (
    HSModel,
    bernoulli_beta,
    brute_graded_weight,
    brute_normal_cone_weight,
    catalog_ids,
    catalog_run,
    chow_threshold_curve,
    combine_disjoint,
    concave_hull,
    curve_local_rho,
    curve_subscheme,
    cy_canonical_check,
    decide,
    decide_asymptotic_chow_curve,
    divisor_on_curve,
    divisor_tc_weight,
    eta_X,
    eta_coeffs,
    euler_maclaurin_sum,
    fit_weight_poly,
    futaki,
    h0_count,
    margin_poly,
    mu_X,
    mu_c_ideal,
    mu_c_quotient,
    normal_cone_weight,
    normalized_weight,
    p2_fat_point,
    point_on_smooth,
    quotient_of,
    run_oracle_suite,
    run_spec,
    scale_polarisation,
    seshadri_of_chain,
    sign_on_interval,
    thicken,
    uniform_constant_curve,
)

__version__ = "0.1.0"

__all__ = [
    "HSModel",
    "bernoulli_beta",
    "brute_graded_weight",
    "brute_normal_cone_weight",
    "catalog_ids",
    "catalog_run",
    "chow_threshold_curve",
    "combine_disjoint",
    "concave_hull",
    "curve_local_rho",
    "curve_subscheme",
    "cy_canonical_check",
    "decide",
    "decide_asymptotic_chow_curve",
    "divisor_on_curve",
    "divisor_tc_weight",
    "eta_X",
    "eta_coeffs",
    "euler_maclaurin_sum",
    "fit_weight_poly",
    "futaki",
    "h0_count",
    "margin_poly",
    "mu_X",
    "mu_c_ideal",
    "mu_c_quotient",
    "normal_cone_weight",
    "normalized_weight",
    "p2_fat_point",
    "point_on_smooth",
    "quotient_of",
    "run_oracle_suite",
    "run_spec",
    "scale_polarisation",
    "seshadri_of_chain",
    "sign_on_interval",
    "thicken",
    "uniform_constant_curve",
]
