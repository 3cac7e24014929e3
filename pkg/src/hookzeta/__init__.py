"""Exact symmetric functions, Schur-hook identities and Bernoulli numbers."""

__version__ = "0.1.0"

from .bernoulli import bernoulli, check_identity, corollary_recurrence, harmonic
from .checks import CheckResult
from .partition import (
    SkewShape,
    addable_rim_hooks,
    conjugate,
    hook,
    is_rim_hook,
    partition,
    partitions_of,
    z,
)
from .symexpr import SymExpr, e, equal, h, hook_to_he, p, s, to_h_basis, to_s_basis
from .transition import CharacterTable, char_table, character, mn_multiply, power_to_schur
from .zeta import ZetaValue, derive_bernoulli, spec_e, spec_h, spec_p, specialize

__all__ = [
    "bernoulli",
    "check_identity",
    "corollary_recurrence",
    "harmonic",
    "CheckResult",
    "SkewShape",
    "addable_rim_hooks",
    "conjugate",
    "hook",
    "is_rim_hook",
    "partition",
    "partitions_of",
    "z",
    "SymExpr",
    "e",
    "equal",
    "h",
    "hook_to_he",
    "p",
    "s",
    "to_h_basis",
    "to_s_basis",
    "CharacterTable",
    "char_table",
    "character",
    "mn_multiply",
    "power_to_schur",
    "ZetaValue",
    "derive_bernoulli",
    "spec_e",
    "spec_h",
    "spec_p",
    "specialize",
]
