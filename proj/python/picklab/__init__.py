"""Boundary-regularity toolkit for Pick functions.

Thin Python facade over the C++ core: measures, rate functions, Julia
quotients and their amortized averages, regularity classification, and the
spiking counterexample constructions.
"""

try:
    from . import _core
except ImportError:  # in-tree builds leave the extension beside the build dir
    import _core

__all__ = [
    "IntegrabilityVerdict",
    "Measure",
    "NevanlinnaRep",
    "PicklabError",
    "RateFunction",
    "RegularityReport",
    "ScanVerdict",
    "Tag",
    "aj_scan",
    "amortized_jq",
    "analytic_determinacy",
    "aronszajn_krein",
    "augur_bounds",
    "constructed_augury",
    "evaluate",
    "evaluate_reduced",
    "fractional_laplacian_jq",
    "gamma_regular",
    "horocyclic_failure_measure",
    "is_augury",
    "julia_quotient",
    "julia_quotient_measure",
    "nontangential_polynomial",
    "nontangential_value",
    "order_of_regularity",
    "pitting_measure",
]

globals().update({name: getattr(_core, name) for name in __all__})
