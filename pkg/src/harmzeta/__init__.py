"""Dirichlet series generated by powers of harmonic numbers: exact values,
Laurent data, high-precision constants and the identities tying them together."""

from harmzeta.constants import ConstCombo, constcombo_eval
from harmzeta.exact import GammaPoly, RationalFunction, bernoulli, eta_nonpos, polylog_neg, zeta_nonpos
from harmzeta.numeric import DEFAULT_PREC, SumResult, euler_transform_sum, harmonic_number, stieltjes_gamma

__version__ = "0.1.0"

__all__ = [
    "ConstCombo",
    "constcombo_eval",
    "GammaPoly",
    "RationalFunction",
    "bernoulli",
    "eta_nonpos",
    "polylog_neg",
    "zeta_nonpos",
    "DEFAULT_PREC",
    "SumResult",
    "euler_transform_sum",
    "harmonic_number",
    "stieltjes_gamma",
]
