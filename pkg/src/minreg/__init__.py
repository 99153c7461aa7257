"""Minimal Castelnuovo-Mumford regularity for schemes with a given
Hilbert polynomial, with strongly stable witness ideals.

The central objects are admissible Hilbert polynomials, Hilbert functions
written as a finite prefix plus a polynomial tail, strongly stable
monomial ideals, and verified witness certificates.  The regularity
module answers "how small can the regularity be" (globally, at a fixed
function regularity, for a fixed function, inside a fixed projective
space) and the constructions module produces ideals achieving it.
"""

from .borel import (BorelSet, StronglyStableIdeal, artinian_lift, borel_leq,
                    extend_variables, degree_slice, growth_vector,
                    height_vector, hilbert_function_of, lex_segment_ideal,
                    lgh, regularity, saturate, truncate_below)
from .constructions import (VerificationReport, WitnessCertificate,
                            certificate_from_dict, expanded_lifting,
                            ideal_graft, remove_minimal_term, verify_witness,
                            witness_min_reg)
from .errors import (AmbientTooSmall, DegreeMismatch, DomainError, EmptyClass,
                     InputError, InternalInconsistency, LinearVariety,
                     MinregError, NegativeDerivative, NoRemovableTerm,
                     NotAdmissible, NotBorel, NotSaturated, NotSchemeHF,
                     NotStronglyStable, ParseError, PreconditionViolation,
                     RhoTooSmall, VerificationFailure)
from .functions import (HilbertFunction, is_admissible_function,
                        is_scheme_function, min_function_regularity,
                        min_scheme_regularity, minimal_function,
                        minimal_function_exact, minimal_scheme_function,
                        parse_hilbert_function)
from .polynomials import (AdmissiblePolynomial, parse_polynomial,
                          polynomial_from_coefficients)
from .regularity import (RegularityReport, min_regularity, min_regularity_at,
                         min_regularity_in_space, min_regularity_of_function)

__version__ = "0.1.0"

__all__ = [
    "AdmissiblePolynomial",
    "AmbientTooSmall",
    "BorelSet",
    "DegreeMismatch",
    "DomainError",
    "EmptyClass",
    "HilbertFunction",
    "InputError",
    "InternalInconsistency",
    "LinearVariety",
    "MinregError",
    "NegativeDerivative",
    "NoRemovableTerm",
    "NotAdmissible",
    "NotBorel",
    "NotSaturated",
    "NotSchemeHF",
    "NotStronglyStable",
    "ParseError",
    "PreconditionViolation",
    "RegularityReport",
    "RhoTooSmall",
    "StronglyStableIdeal",
    "VerificationFailure",
    "VerificationReport",
    "WitnessCertificate",
    "artinian_lift",
    "borel_leq",
    "certificate_from_dict",
    "degree_slice",
    "expanded_lifting",
    "extend_variables",
    "growth_vector",
    "height_vector",
    "hilbert_function_of",
    "ideal_graft",
    "is_admissible_function",
    "is_scheme_function",
    "lex_segment_ideal",
    "lgh",
    "min_function_regularity",
    "min_regularity",
    "min_regularity_at",
    "min_regularity_in_space",
    "min_regularity_of_function",
    "min_scheme_regularity",
    "minimal_function",
    "minimal_function_exact",
    "minimal_scheme_function",
    "parse_hilbert_function",
    "parse_polynomial",
    "polynomial_from_coefficients",
    "regularity",
    "remove_minimal_term",
    "saturate",
    "truncate_below",
    "verify_witness",
    "witness_min_reg",
]
