"""Presentation algebra, abelianization, finite-quotient counts and the minimal presentation."""
from .presentation import (
    Presentation,
    PresentationError,
    cyclic_reduce,
    free_reduce,
    invert,
    parse_presentation,
    tietze_eliminate,
)
from .abelian import AbelianInvariants, abelianization, invariant_factors, mod2_betti1
from .homs import (
    CapExceeded,
    FiniteGroupTable,
    count_homs,
    cyclic_group,
    elementary_abelian,
    symmetric_group,
    target_group,
)
from .minimal import Certificate, MinimalResult, PostCheckError, WordGrowthError, minimal_presentation

__all__ = [
    "AbelianInvariants", "CapExceeded", "Certificate", "FiniteGroupTable", "MinimalResult",
    "PostCheckError", "Presentation", "PresentationError", "WordGrowthError", "abelianization",
    "count_homs", "cyclic_group", "cyclic_reduce", "elementary_abelian", "free_reduce",
    "invariant_factors", "invert", "minimal_presentation", "mod2_betti1", "parse_presentation",
    "symmetric_group", "target_group", "tietze_eliminate",
]
