"""Prime simplicial complexes of finite groups.

The complex of a group G has as faces the sets of primes whose product is the
order of some element of G.  This package builds these complexes for several
families of groups, checks them against brute-force enumeration, and runs the
purity and recognisability analyses built on them.
"""
from __future__ import annotations

from .complexes import PrimeComplex, PrimeGraph, equal, from_spectrum, join
from .errors import (
    InvalidInput,
    InvariantViolation,
    MissingFixture,
    ParseError,
    PscError,
    ResourceLimit,
    UnsupportedFamily,
)
from .groups import GroupSpec, complex_of

__version__ = "0.1.0"

__all__ = [
    "GroupSpec",
    "InvalidInput",
    "InvariantViolation",
    "MissingFixture",
    "ParseError",
    "PrimeComplex",
    "PrimeGraph",
    "PscError",
    "ResourceLimit",
    "UnsupportedFamily",
    "complex_of",
    "equal",
    "from_spectrum",
    "join",
]
