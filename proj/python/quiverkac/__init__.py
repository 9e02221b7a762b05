"""Kac polynomials, Kac-Moody multiplicities and Betti numbers of quiver varieties."""

from ._core import (
    InvariantError,
    Quiver,
    UsageError,
    betti_numbers,
    character_multiplicities,
    count_bruteforce,
    count_fourier,
    group_order,
    hua_series,
    kac_polynomials,
    load_quiver,
    pairing,
    parse_quiver,
    poincare_polynomials,
    root_multiplicities,
)

__all__ = [
    "InvariantError",
    "Quiver",
    "UsageError",
    "betti_numbers",
    "character_multiplicities",
    "count_bruteforce",
    "count_fourier",
    "group_order",
    "hua_series",
    "kac_polynomials",
    "load_quiver",
    "pairing",
    "parse_quiver",
    "poincare_polynomials",
    "root_multiplicities",
]
