"""Exact Alexander and Seiberg-Witten invariants of the knot-surgery family X_p."""

from ._core import (
    Certificate,
    KnotSurgeryError,
    LaurentPoly,
    alexander,
    alexander_fox_torus,
    alexander_torus,
    analyze_family,
    basic_class_lower_bound,
    certify_unbounded,
    equal_up_to_units,
    evaluate_at_one,
    exact_divide,
    family_csv,
    genus_torus,
    substitute,
    sw_link_surgery,
    sw_specialized,
    symmetrize,
    torres_specialize,
    verify_certificate,
)

__all__ = [
    "Certificate",
    "KnotSurgeryError",
    "LaurentPoly",
    "alexander",
    "alexander_fox_torus",
    "alexander_torus",
    "analyze_family",
    "basic_class_lower_bound",
    "certify_unbounded",
    "equal_up_to_units",
    "evaluate_at_one",
    "exact_divide",
    "family_csv",
    "genus_torus",
    "substitute",
    "sw_link_surgery",
    "sw_specialized",
    "symmetrize",
    "torres_specialize",
    "verify_certificate",
]
