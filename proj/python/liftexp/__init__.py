"""p-adic valuation identity toolkit: lifting-the-exponent defects, Wieferich
base pairs, Pythagorean criterion checks, and factor splitting of a^n - 1."""

from ._liftexp import (
    Error,
    InputError,
    InvariantViolation,
    ResourceError,
    avg_power,
    check_flt_candidate,
    construct_base,
    defect_report,
    direct_valuation,
    factor,
    factor_split,
    is_prime,
    lemma13_check,
    modpow,
    multiplicative_order,
    power_diff_valuation,
    predicted_valuation,
    primes_upto,
    primitive_triples,
    radical,
    scan_pair,
    survey,
    verify_triple,
    vp,
    wa_spectrum,
    wieferich_order,
)

__all__ = [
    "Error",
    "InputError",
    "InvariantViolation",
    "ResourceError",
    "avg_power",
    "check_flt_candidate",
    "construct_base",
    "defect_report",
    "direct_valuation",
    "factor",
    "factor_split",
    "is_prime",
    "lemma13_check",
    "modpow",
    "multiplicative_order",
    "power_diff_valuation",
    "predicted_valuation",
    "primes_upto",
    "primitive_triples",
    "radical",
    "scan_pair",
    "survey",
    "verify_triple",
    "vp",
    "wa_spectrum",
    "wieferich_order",
]
