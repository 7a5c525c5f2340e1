"""The intertwining algebra as a Hecke algebra with parameters, in normal form."""

from .context import AlgebraCtx, CtxMismatch, ExactnessViolation, HeckeError, NotSpecializable
from .element import (
    HeckeElem,
    Mode,
    b_mono,
    basis_symbols,
    bernstein_correction,
    block_projection,
    coefficients_mode,
    j_gen,
    mul,
    phi_gen,
    scalar,
    t_gen,
    t_word,
    unit,
)

__all__ = [
    "AlgebraCtx",
    "CtxMismatch",
    "ExactnessViolation",
    "HeckeError",
    "NotSpecializable",
    "HeckeElem",
    "Mode",
    "b_mono",
    "basis_symbols",
    "bernstein_correction",
    "block_projection",
    "coefficients_mode",
    "j_gen",
    "mul",
    "phi_gen",
    "scalar",
    "t_gen",
    "t_word",
    "unit",
]
