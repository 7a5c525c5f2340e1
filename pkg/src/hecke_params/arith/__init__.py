"""Exact coefficient tower: Q -> Q(zeta_N) -> Laurent polynomials in v -> B -> K(B)."""

from .cyclotomic import CycScalar, as_scalar, cyclotomic_poly, totient
from .fraction import BFrac, Coeff, frac, frac_is_polynomial
from .laurent import BPoly, LaurentPoly, VLaurent, exact_div, grlex_key, q_power, v_power

__all__ = [
    "CycScalar",
    "as_scalar",
    "cyclotomic_poly",
    "totient",
    "BFrac",
    "Coeff",
    "frac",
    "frac_is_polynomial",
    "BPoly",
    "LaurentPoly",
    "VLaurent",
    "exact_div",
    "grlex_key",
    "q_power",
    "v_power",
    "specialize_v",
]


def specialize_v(p, v0, unit_values=None):
    """
    Evaluate v -> v0 and y_k -> unit_values[k] (0-based coordinates).

    Returns a CycScalar when every variable occurring in p was substituted,
    otherwise the partially specialized polynomial (or fraction).

    >>> specialize_v(q_power(3), 2)
    CycScalar(64)
    """
    out = p.specialize(v0, unit_values)
    if isinstance(out, LaurentPoly) and out.is_constant():
        return out.constant_value()
    return out
