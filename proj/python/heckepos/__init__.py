"""Trace polynomials N^{w,w'} on Iwahori-Hecke algebras and positive classes of Weyl groups."""

from ._core import (
    ConfigurationError,
    Error,
    IntegrityError,
    ResourceError,
    UsageError,
    WeylGroup,
    classify,
    coxeter_fixture,
    nww,
    regular_degrees,
    render,
)

__all__ = [
    "ConfigurationError",
    "Error",
    "IntegrityError",
    "ResourceError",
    "UsageError",
    "WeylGroup",
    "classify",
    "coxeter_fixture",
    "nww",
    "regular_degrees",
    "render",
]
