"""Extremal problems, growth bounds, and density certificates in weighted
Bergman and Fock-type spaces.

The heavy lifting lives in the compiled ``_core`` extension; this package
re-exports its functions. Weights are addressed by strings such as
``"fock:alpha=1"``, ``"affine:a=2,b=1,R=1"``, or ``"power:beta=2,R=1"``;
polynomials are lists of complex coefficients in the monomial basis.
"""

from ._core import (
    check_plane_density,
    fock_density_certificate,
    means_profile,
    norm,
    residual,
    s_integral,
    solve,
    solve_p2,
    verify_base_identity,
    verify_disc_bound,
    verify_plane_bound,
)

__all__ = [
    "check_plane_density",
    "fock_density_certificate",
    "means_profile",
    "norm",
    "residual",
    "s_integral",
    "solve",
    "solve_p2",
    "verify_base_identity",
    "verify_disc_bound",
    "verify_plane_bound",
]

__version__ = "0.1.0"
