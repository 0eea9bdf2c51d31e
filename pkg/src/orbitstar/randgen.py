"""Seeded random inputs with a frozen, documented distribution.

The draw protocol is part of the reproducibility contract and must never
change:

* monomials are scanned with ``iter_monomials`` (ascending total degree,
  then ascending lexicographic exponent tuple);
* for each monomial one bit decides inclusion (1 = include, probability
  one half);
* an included monomial draws ``randrange(18)`` indexing the coefficient
  table (-9 .. -1, 1 .. 9).

``gen_random_ncpoly`` additionally draws ``randrange(max_h + 1)`` for the
h power of each included monomial, after the coefficient draw.
"""

from __future__ import annotations

import random

from .enveloping import NCPoly
from .liealg import LieAlgebraSpec
from .poly import CPoly, iter_monomials
from .rationals import rat

COEFF_TABLE = tuple(range(-9, 0)) + tuple(range(1, 10))


def gen_random_poly(rng: random.Random, algebra: LieAlgebraSpec, max_degree: int) -> CPoly:
    """Random h-free polynomial; deterministic per stream position."""
    coeffs = {}
    for xm in iter_monomials(algebra.dim, max_degree):
        if rng.getrandbits(1):
            coeffs[xm + (0,)] = rat(COEFF_TABLE[rng.randrange(18)])
    return CPoly(algebra, coeffs, _normalized=True)


def gen_random_ncpoly(
    rng: random.Random, algebra: LieAlgebraSpec, max_degree: int, max_h: int = 2
) -> NCPoly:
    """Random ordered-basis element with bounded h powers."""
    coeffs = {}
    for xm in iter_monomials(algebra.dim, max_degree):
        if rng.getrandbits(1):
            c = rat(COEFF_TABLE[rng.randrange(18)])
            hp = rng.randrange(max_h + 1)
            key = xm + (hp,)
            coeffs[key] = coeffs.get(key, 0) + c
    return NCPoly(algebra, coeffs)


def gen_random_word(rng: random.Random, algebra: LieAlgebraSpec, max_length: int) -> tuple:
    """Random generator word of length 1 .. max_length."""
    length = rng.randrange(1, max_length + 1)
    return tuple(rng.randrange(algebra.dim) for _ in range(length))
