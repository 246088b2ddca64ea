"""Nonnegative integer solutions of A x = b by lattice box reduction."""

from ._core import (
    BoxdiophError,
    box_shape,
    brauer_G,
    deep_cone_condition,
    det,
    f_chain,
    frobenius_number,
    gcd_max_minors,
    hnf,
    shifted_cone_condition_m2,
    solve,
    solve_json,
    special_basis,
    verify,
)

try:
    from ._core import __version__
except ImportError:  # built without VERSION_INFO
    __version__ = "0.0.0"

__all__ = [
    "BoxdiophError",
    "box_shape",
    "brauer_G",
    "deep_cone_condition",
    "det",
    "f_chain",
    "frobenius_number",
    "gcd_max_minors",
    "hnf",
    "shifted_cone_condition_m2",
    "solve",
    "solve_json",
    "special_basis",
    "verify",
]
