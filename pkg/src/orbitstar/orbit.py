"""Orbit-level algebra: the deformed Casimir ideal, its quotient, and the
products that live on the sphere.

Everything here is specific to the three dimensional case with the
quadratic invariant p = x^2 + y^2 + z^2; the generic enveloping pipeline
(normal forms, symmetrization, centrality) works for any algebra, but the
quotient basis [X^m Y^n Z^nu] with nu in {0, 1} presumes a single
quadratic Casimir in orthonormal coordinates.

Maps provided, all exact and h-linear:

* ``quotient_normal_form``: reduction of an enveloping element modulo the
  two-sided ideal generated by (Casimir element - c(h)).
* ``sphere_to_quotient`` / ``quotient_to_sphere``: the basis bijection
  between sphere polynomials (z-exponent at most 1) and quotient classes.
* ``harmonic_decompose``: the classical splitting f = sum_k p^k eta_k
  into invariant powers times harmonic polynomials.
* ``harmonic_lift`` / ``harmonic_lower``: the quantization adapted to that
  splitting, powers of (p - c0) going to powers of (P - c(h)); conjugation
  gives ``star_tangential``.
* ``ideal_section``: the basis-wise module section sending the classical
  orbit ideal at level c0 into the deformed ideal.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .enveloping import NCPoly, _poly_rmul_gen, is_central, nc_mul, weyl_map
from .liealg import LieAlgebraSpec, su2
from .poly import CPoly, laplacian, merge_scaled
from .rationals import ONE, ZERO, rat
from .scalars import HScalar


@dataclass(frozen=True, eq=True)
class CasimirSpec:
    """The data cutting out one deformed orbit.

    ``p`` is the invariant polynomial, ``P`` its image under the
    symmetrization map (always central), ``c`` the h-polynomial value the
    Casimir is pinned to, and ``c0 = c(0)`` the classical orbit level.
    """

    algebra: LieAlgebraSpec
    p: CPoly
    P: NCPoly
    c: HScalar
    c0: object  # exact rational

    def __hash__(self):
        cached = self.__dict__.get("_hash_cache")
        if cached is None:
            cached = hash((self.algebra, self.p, self.P, self.c, self.c0))
            object.__setattr__(self, "_hash_cache", cached)
        return cached

    @property
    def is_regular(self) -> bool:
        return self.c0 > 0


def quadratic_invariant(algebra: LieAlgebraSpec) -> CPoly:
    """The sum of squares of the coordinates."""
    out = CPoly.zero(algebra)
    for i in range(algebra.dim):
        v = CPoly.variable(algebra, i)
        out = out + v * v
    return out


def sphere_casimir(c, algebra: LieAlgebraSpec | None = None, require_regular: bool = True) -> CasimirSpec:
    """Build the Casimir data for the sphere quotient.

    ``c`` may be anything HScalar accepts (a rational for the constant
    choice, or a genuine h-polynomial of degree at most 2).  Setting
    ``require_regular=False`` admits levels with c(0) <= 0; those define a
    perfectly good quotient algebra but no regular classical orbit, which
    is exactly the situation of the representation-pinned values.
    """
    if algebra is None:
        algebra = su2()
    if algebra.dim != 3:
        raise ValueError("the quotient machinery supports only the 3-dimensional context")
    if not isinstance(c, HScalar):
        c = HScalar.constant(c) if not isinstance(c, (tuple, list)) else HScalar(c)
    p = quadratic_invariant(algebra)
    big = weyl_map(p)
    if not is_central(big):
        raise ValueError("the quadratic invariant is not central for these structure constants")
    if c.degree > p.x_degree:
        raise ValueError("deg_h c(h) must not exceed the degree of the invariant")
    c0 = c.constant_term
    if require_regular and not c0 > 0:
        raise ValueError("classical level c(0) must be positive for a regular orbit")
    return CasimirSpec(algebra=algebra, p=p, P=big, c=c, c0=c0)


class QuotientElement:
    """Normal-form element of the quotient algebra in the basis
    [X^m Y^n Z^nu], nu in {0, 1}; doubles as a sphere polynomial."""

    __slots__ = ("spec", "coeffs", "_hash")

    def __init__(self, spec: CasimirSpec, coeffs=None, *, _normalized=False):
        self.spec = spec
        if coeffs is None:
            coeffs = {}
        if not _normalized:
            clean = {}
            for key, value in coeffs.items():
                key = tuple(key)
                if len(key) != 4 or any(e < 0 for e in key):
                    raise ValueError(f"bad quotient key {key!r}")
                value = rat(value)
                if value:
                    clean[key] = value
            coeffs = clean
        for key in coeffs:
            if key[2] > 1:
                raise ValueError(f"quotient basis admits z-exponent at most 1, got {key}")
        self.coeffs = coeffs
        self._hash = None

    @classmethod
    def zero(cls, spec):
        return cls(spec, {}, _normalized=True)

    def __add__(self, other):
        if not isinstance(other, QuotientElement) or other.spec != self.spec:
            raise TypeError("can only add quotient elements over the same Casimir data")
        acc = dict(self.coeffs)
        merge_scaled(acc, other.coeffs.items(), ONE)
        return QuotientElement(self.spec, acc, _normalized=True)

    def __sub__(self, other):
        if not isinstance(other, QuotientElement) or other.spec != self.spec:
            raise TypeError("can only subtract quotient elements over the same Casimir data")
        acc = dict(self.coeffs)
        merge_scaled(acc, other.coeffs.items(), -ONE)
        return QuotientElement(self.spec, acc, _normalized=True)

    def __neg__(self):
        return QuotientElement(self.spec, {k: -v for k, v in self.coeffs.items()}, _normalized=True)

    def __eq__(self, other):
        return (
            isinstance(other, QuotientElement)
            and self.spec == other.spec
            and self.coeffs == other.coeffs
        )

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.spec, frozenset(self.coeffs.items())))
        return self._hash

    def __bool__(self):
        return bool(self.coeffs)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, mnv) -> HScalar:
        m, n, v = mnv
        out = {}
        for key, c in self.coeffs.items():
            if key[:3] == (m, n, v):
                out[key[3]] = c
        if not out:
            return HScalar(())
        top = max(out)
        return HScalar(tuple(out.get(p, ZERO) for p in range(top + 1)))

    def lift(self) -> NCPoly:
        """The canonical enveloping representative X^m Y^n Z^nu."""
        return NCPoly(self.spec.algebra, dict(self.coeffs), _normalized=True)

    def specialize_h(self, h0) -> "QuotientElement":
        h0 = rat(h0)
        acc = {}
        for key, v in self.coeffs.items():
            nk = key[:-1] + (0,)
            nv = acc.get(nk, ZERO) + v * h0 ** key[-1]
            if nv:
                acc[nk] = nv
            else:
                acc.pop(nk, None)
        return QuotientElement(self.spec, acc, _normalized=True)

    def __str__(self):
        return str(self.lift())

    def __repr__(self):
        return f"QuotientElement<{self}>"


@lru_cache(maxsize=None)
def _qnf_mono(spec: CasimirSpec, xm: tuple) -> tuple:
    """Normal form of the PBW monomial X^a Y^b Z^c modulo the ideal.

    Z^2 is eliminated through Z^2 = P - X^2 - Y^2 with P replaced by the
    pinned scalar c(h) (legal anywhere since P is central).  The measure
    (total degree, z-degree) drops strictly, so this terminates.
    Returns ((m, n, nu, dh), coefficient) pairs.
    """
    a, b, cz = xm
    if cz <= 1:
        return (((a, b, cz, 0), ONE),)
    rest = (a, b, cz - 2)
    acc = {}
    sub0 = _qnf_mono(spec, rest)
    for e, coef in enumerate(spec.c):
        if coef:
            merge_scaled(acc, sub0, coef, e)
    algebra = spec.algebra
    for i in (0, 1):
        t = {rest + (0,): ONE}
        t = _poly_rmul_gen(t, i, algebra)
        t = _poly_rmul_gen(t, i, algebra)
        for key, c in t.items():
            merge_scaled(acc, _qnf_mono(spec, key[:-1]), -c, key[-1])
    return tuple(acc.items())


def quotient_normal_form(a: NCPoly, spec: CasimirSpec) -> QuotientElement:
    """Reduce an enveloping element modulo the two-sided deformed ideal.

    Coset invariant: adding any multiple L (P - c(h)) R of the generator
    does not change the result.
    """
    if a.algebra != spec.algebra:
        raise ValueError("element and Casimir data use different algebras")
    acc = {}
    for key, c in a.coeffs.items():
        merge_scaled(acc, _qnf_mono(spec, key[:-1]), c, key[-1])
    return QuotientElement(spec, acc, _normalized=True)


def ideal_membership(a: NCPoly, spec: CasimirSpec) -> bool:
    """True exactly when the element lies in the deformed ideal."""
    return quotient_normal_form(a, spec).is_zero


def sphere_to_quotient(f: CPoly, spec: CasimirSpec) -> QuotientElement:
    """Basis bijection x^m y^n z^nu -> [X^m Y^n Z^nu] (linear over h).

    Inputs with a z-exponent of 2 or more are rejected; reduce them
    classically first (z^2 = c0 - x^2 - y^2 on the sphere).
    """
    if f.algebra != spec.algebra:
        raise ValueError("polynomial and Casimir data use different algebras")
    for key in f.coeffs:
        if key[2] > 1:
            raise ValueError(
                "not a sphere polynomial: z-exponent >= 2; reduce via z^2 = c0 - x^2 - y^2 first"
            )
    return QuotientElement(spec, dict(f.coeffs), _normalized=True)


def quotient_to_sphere(q: QuotientElement) -> CPoly:
    """Inverse of ``sphere_to_quotient``; exact basis relabeling."""
    return CPoly(q.spec.algebra, dict(q.coeffs), _normalized=True)


def star_quotient(f: CPoly, g: CPoly, spec: CasimirSpec) -> CPoly:
    """The sphere product transported from the quotient algebra.

    Associative by construction; at h = 0 with classical level c0 it
    reproduces the pointwise product on the sphere.
    """
    qf = sphere_to_quotient(f, spec)
    qg = sphere_to_quotient(g, spec)
    prod = quotient_normal_form(nc_mul(qf.lift(), qg.lift()), spec)
    return quotient_to_sphere(prod)


# -- classical reduction ---------------------------------------------------


@lru_cache(maxsize=None)
def _classical_mono(algebra: LieAlgebraSpec, c0, xm: tuple) -> tuple:
    a, b, cz = xm
    if cz <= 1:
        return ((xm + (0,), ONE),)
    acc = {}
    merge_scaled(acc, _classical_mono(algebra, c0, (a, b, cz - 2)), c0)
    merge_scaled(acc, _classical_mono(algebra, c0, (a + 2, b, cz - 2)), -ONE)
    merge_scaled(acc, _classical_mono(algebra, c0, (a, b + 2, cz - 2)), -ONE)
    return tuple(acc.items())


def classical_project(f: CPoly, c0) -> CPoly:
    """Reduce modulo the classical orbit ideal at level c0.

    Rewrites z^2 -> c0 - x^2 - y^2 until every monomial has z-exponent at
    most 1; the result is the representative of f on the sphere.
    """
    c0 = rat(c0)
    acc = {}
    for key, c in f.coeffs.items():
        merge_scaled(acc, _classical_mono(f.algebra, c0, key[:-1]), c, key[-1])
    return CPoly(f.algebra, acc, _normalized=True)


def in_classical_ideal(f: CPoly, c0) -> bool:
    return classical_project(f, c0).is_zero


# -- harmonic decomposition ------------------------------------------------


@dataclass(frozen=True)
class HarmonicDecomposition:
    """f = sum_k p^k eta_k with every eta_k annihilated by the Laplacian."""

    algebra: LieAlgebraSpec
    parts: tuple  # ((k, CPoly), ...) sorted by k, zero parts dropped

    def __iter__(self):
        return iter(self.parts)

    def component(self, k: int) -> CPoly:
        for kk, eta in self.parts:
            if kk == k:
                return eta
        return CPoly.zero(self.algebra)

    def reconstruct(self) -> CPoly:
        p = quadratic_invariant(self.algebra)
        out = CPoly.zero(self.algebra)
        for k, eta in self.parts:
            out = out + p**k * eta
        return out


@lru_cache(maxsize=None)
def _p_power(algebra: LieAlgebraSpec, k: int) -> CPoly:
    return quadratic_invariant(algebra) ** k


@lru_cache(maxsize=None)
def _harm_mono(algebra: LieAlgebraSpec, xm: tuple) -> tuple:
    """Harmonic decomposition of a single generator monomial.

    Recursion through the Laplacian: if Delta f = sum_k p^k mu_k then the
    invariant-power parts of f are fixed by Delta(p^m eta) =
    2m(2d - 2m + 1) p^{m-1} eta for eta harmonic of degree d - 2m, and the
    harmonic head is whatever remains.  Exact at every step.
    """
    d = sum(xm)
    mono = CPoly.monomial(algebra, xm)
    if d <= 1:
        return ((0, mono),)
    lap = laplacian(mono)
    sub = {}
    for key, c in lap.coeffs.items():
        for k, eta in _harm_mono(algebra, key[:-1]):
            acc = sub.setdefault(k, {})
            merge_scaled(acc, eta.coeffs.items(), c)
    parts = {}
    for k, mu in sub.items():
        m = k + 1
        lam = rat(1, 2 * m * (2 * d - 2 * m + 1))
        parts[m] = CPoly(algebra, {kk: v * lam for kk, v in mu.items()}, _normalized=True)
    head = mono
    for m, eta in parts.items():
        head = head - _p_power(algebra, m) * eta
    out = []
    if not head.is_zero:
        out.append((0, head))
    for m in sorted(parts):
        if not parts[m].is_zero:
            out.append((m, parts[m]))
    return tuple(out)


def harmonic_decompose(f: CPoly) -> HarmonicDecomposition:
    """Split f into invariant powers times harmonic polynomials; exact and
    unique per homogeneous component."""
    if f.algebra.dim != 3:
        raise ValueError("harmonic decomposition is only configured for the 3-dimensional context")
    buckets = {}
    for key, c in f.coeffs.items():
        for k, eta in _harm_mono(f.algebra, key[:-1]):
            acc = buckets.setdefault(k, {})
            merge_scaled(acc, eta.coeffs.items(), c, key[-1])
    parts = []
    for k in sorted(buckets):
        poly = CPoly(f.algebra, buckets[k], _normalized=True)
        if not poly.is_zero:
            parts.append((k, poly))
    return HarmonicDecomposition(f.algebra, tuple(parts))


# -- the adapted quantization and the tangential product -------------------


@lru_cache(maxsize=None)
def _casimir_power(spec: CasimirSpec, m: int) -> NCPoly:
    """(P - c(h))^m, cached per Casimir data."""
    if m == 0:
        return NCPoly.constant(spec.algebra, 1)
    gen = spec.P - NCPoly.constant(spec.algebra, spec.c)
    return nc_mul(_casimir_power(spec, m - 1), gen)


@lru_cache(maxsize=None)
def _lift_mono(spec: CasimirSpec, xm: tuple) -> NCPoly:
    """Image of a generator monomial under the adapted quantization."""
    algebra = spec.algebra
    c0 = spec.c0
    buckets = {}
    for k, eta in _harm_mono(algebra, xm):
        # (p)^k = ((p - c0) + c0)^k spread over powers of (p - c0)
        for m in range(k + 1):
            coef = rat(comb(k, m)) * c0 ** (k - m)
            if not coef:
                continue
            acc = buckets.setdefault(m, {})
            merge_scaled(acc, eta.coeffs.items(), coef)
    out = NCPoly.zero(algebra)
    for m, xi in buckets.items():
        xi_poly = CPoly(algebra, xi, _normalized=True)
        if xi_poly.is_zero:
            continue
        out = out + nc_mul(_casimir_power(spec, m), weyl_map(xi_poly))
    return out


def harmonic_lift(f: CPoly, spec: CasimirSpec) -> NCPoly:
    """Quantization adapted to the harmonic splitting.

    Linear over h-polynomials; sends (p - c0)^m eta to
    (P - c(h))^m W(eta), hence maps the classical ideal at level c0 into
    the deformed ideal.
    """
    if f.algebra != spec.algebra:
        raise ValueError("polynomial and Casimir data use different algebras")
    acc = {}
    for key, c in f.coeffs.items():
        merge_scaled(acc, _lift_mono(spec, key[:-1]).coeffs.items(), c, key[-1])
    return NCPoly(spec.algebra, acc, _normalized=True)


@lru_cache(maxsize=None)
def _lower_mono(spec: CasimirSpec, xm: tuple) -> CPoly:
    # triangular inversion: lift(x^m) = X^m + (strictly lower degree)
    lead = xm + (0,)
    acc = {lead: ONE}
    for key, c in _lift_mono(spec, xm).coeffs.items():
        if key == lead:
            continue
        merge_scaled(acc, _lower_mono(spec, key[:-1]).coeffs.items(), -c, key[-1])
    return CPoly(spec.algebra, acc, _normalized=True)


def harmonic_lower(a: NCPoly, spec: CasimirSpec) -> CPoly:
    """Exact inverse of ``harmonic_lift``."""
    if a.algebra != spec.algebra:
        raise ValueError("element and Casimir data use different algebras")
    acc = {}
    for key, c in a.coeffs.items():
        merge_scaled(acc, _lower_mono(spec, key[:-1]).coeffs.items(), c, key[-1])
    return CPoly(spec.algebra, acc, _normalized=True)


def star_tangential(f: CPoly, g: CPoly, spec: CasimirSpec, allow_varying_c: bool = False) -> CPoly:
    """The tangential star product on the full coordinate algebra.

    Pulls the enveloping product back through the adapted quantization.
    Multiplication by the invariant is undeformed (p * f stays p f), so
    the classical ideal of every nearby level is respected and the product
    restricts to the orbits.

    The standard choice keeps c(h) = c0 constant; pass
    ``allow_varying_c=True`` to run the same conjugation for an
    h-dependent level (a strict extension of the standard construction).
    """
    if not allow_varying_c and not spec.c.is_constant:
        raise ValueError(
            "the tangential product expects a constant level c(h) = c0; "
            "pass allow_varying_c=True to override"
        )
    return harmonic_lower(nc_mul(harmonic_lift(f, spec), harmonic_lift(g, spec)), spec)


# -- the basis-wise module section ------------------------------------------


def _section_split(f: CPoly, c0):
    """Split f = sphere part + sum gamma_{mnr} x^m y^n z^r (p - c0).

    The sphere part has z-exponent at most 1; the second factor collects
    the basis coefficients of the classical ideal component.
    """
    work = dict(f.coeffs)
    sphere = {}
    ideal = {}
    while work:
        key, c = work.popitem()
        if not c:
            continue
        a, b, cz, he = key
        if cz <= 1:
            nv = sphere.get(key, ZERO) + c
            if nv:
                sphere[key] = nv
            else:
                sphere.pop(key, None)
            continue
        base = (a, b, cz - 2, he)
        nv = ideal.get(base, ZERO) + c
        if nv:
            ideal[base] = nv
        else:
            ideal.pop(base, None)
        for shift, coef in (((0, 0, 0), c * c0), ((2, 0, 0), -c), ((0, 2, 0), -c)):
            nk = (a + shift[0], b + shift[1], cz - 2 + shift[2], he)
            nv = work.get(nk, ZERO) + coef
            if nv:
                work[nk] = nv
            else:
                work.pop(nk, None)
    return sphere, ideal


def ideal_section(f: CPoly, spec: CasimirSpec) -> NCPoly:
    """Module section sending basis monomials to their ordered images and
    the classical ideal factor (p - c0) to the deformed one (P - c(h)).

    Passing to the quotients reproduces the sphere/quotient bijection.
    The map is tied to the level c0 it was built for: it does not respect
    the classical ideals of shifted levels.
    """
    if f.algebra != spec.algebra:
        raise ValueError("polynomial and Casimir data use different algebras")
    algebra = spec.algebra
    sphere, ideal = _section_split(f, spec.c0)
    acc = dict(sphere)
    if ideal:
        gen = spec.P - NCPoly.constant(algebra, spec.c)
        groups = {}
        for key, c in ideal.items():
            groups.setdefault(key[:-1], []).append((key[-1], c))
        for xm, variants in groups.items():
            term = nc_mul(NCPoly.monomial(algebra, xm), gen)
            for he, c in variants:
                merge_scaled(acc, term.coeffs.items(), c, he)
    return NCPoly(algebra, acc, _normalized=True)


def sphere_basis_size(max_degree: int) -> int:
    """Number of (m, n, nu) basis triples with m + n + nu <= max_degree."""
    count = 0
    for m in range(max_degree + 1):
        for n in range(max_degree + 1 - m):
            for nu in (0, 1):
                if m + n + nu <= max_degree:
                    count += 1
    return count
