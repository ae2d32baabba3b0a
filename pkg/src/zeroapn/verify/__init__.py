"""Family catalog checks and certificate replay."""

from ..families import (
    FamilySpec,
    all_families,
    constraint_gcd_check,
    family_instantiate,
    get_family,
    subfield_membership_check,
)
from .certificates import Certificate, Step, replay, verify_theorem_symbolic
from .exhaustive import verify_conjugate_system, verify_family_exhaustive
from .theorems import printed_cases, resolve

__all__ = [
    "Certificate",
    "FamilySpec",
    "Step",
    "all_families",
    "constraint_gcd_check",
    "family_instantiate",
    "get_family",
    "printed_cases",
    "replay",
    "resolve",
    "subfield_membership_check",
    "verify_conjugate_system",
    "verify_family_exhaustive",
    "verify_theorem_symbolic",
]
