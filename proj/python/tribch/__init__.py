"""Triple-error-correcting codes from pairs of power maps over GF(2^n)."""

from ._core import (
    Code,
    CollisionDetected,
    ConditionViolated,
    DegeneratePair,
    Field,
    InvalidArgument,
    NonIntegralResult,
    RankDefect,
    TribchError,
    family_exponents,
    is_apn_power,
    krawtchouk,
    macwilliams,
    smallest_irreducible,
    verify_distance7,
)

FAMILIES = ("gold2", "gold3", "th", "kasami5")

__all__ = [
    "FAMILIES",
    "Code",
    "Field",
    "TribchError",
    "InvalidArgument",
    "ConditionViolated",
    "DegeneratePair",
    "RankDefect",
    "NonIntegralResult",
    "CollisionDetected",
    "family_exponents",
    "is_apn_power",
    "krawtchouk",
    "macwilliams",
    "smallest_irreducible",
    "verify_distance7",
]
