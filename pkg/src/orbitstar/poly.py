"""Commutative polynomials on the dual of a Lie algebra.

Representation: a ``CPoly`` maps packed exponent keys to exact rational
coefficients.  A key is a tuple of length n+1 whose first n slots are the
exponents of the coordinate generators and whose last slot is the power of
the deformation parameter h.  Packing h into the key keeps every
coefficient a bare rational, which is what makes large exact products
affordable.

The canonical term order used everywhere (printing, hashing, leading-term
extraction) is graded lexicographic on the generator exponents with the
first generator most significant, highest degree first; h powers ascend
within a fixed generator monomial.
"""

from __future__ import annotations

from .liealg import LieAlgebraSpec
from .rationals import ZERO, is_rational, rat
from .scalars import HS_ZERO, HScalar


def grlex_key(xm):
    return (sum(xm), xm)


def merge_scaled(acc: dict, items, coeff, h_shift: int = 0) -> None:
    """In place: acc[key shifted by h_shift] += coeff * value, dropping zeros."""
    if not coeff:
        return
    if h_shift:
        for key, v in items:
            k = key[:-1] + (key[-1] + h_shift,)
            nv = acc.get(k, ZERO) + coeff * v
            if nv:
                acc[k] = nv
            else:
                acc.pop(k, None)
    else:
        for key, v in items:
            nv = acc.get(key, ZERO) + coeff * v
            if nv:
                acc[key] = nv
            else:
                acc.pop(key, None)


def _scalar_items(value):
    """View an int/rational/HScalar as (h_power, rational) pairs."""
    if isinstance(value, HScalar):
        return [(p, c) for p, c in enumerate(value) if c]
    if is_rational(value):
        value = rat(value)
        return [(0, value)] if value else []
    return None


class PackedPoly:
    """Shared machinery of the commutative and PBW-ordered polynomials."""

    __slots__ = ("algebra", "coeffs", "_hash")

    _display_upper = False

    def __init__(self, algebra: LieAlgebraSpec, coeffs=None, *, _normalized=False):
        self.algebra = algebra
        if coeffs is None:
            coeffs = {}
        if not _normalized:
            width = algebra.dim + 1
            clean = {}
            for key, value in coeffs.items():
                key = tuple(key)
                if len(key) != width or any(e < 0 for e in key):
                    raise ValueError(f"bad exponent key {key!r} for dimension {algebra.dim}")
                value = rat(value)
                if value:
                    clean[key] = clean.get(key, ZERO) + value
                    if not clean[key]:
                        del clean[key]
            coeffs = clean
        self.coeffs = coeffs
        self._hash = None

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, algebra):
        return cls(algebra, {}, _normalized=True)

    @classmethod
    def constant(cls, algebra, value):
        unit = (0,) * (algebra.dim + 1)
        items = _scalar_items(value)
        if items is None:
            raise TypeError(f"cannot use {value!r} as a scalar")
        return cls(algebra, {unit[:-1] + (p,): c for p, c in items}, _normalized=True)

    @classmethod
    def monomial(cls, algebra, exps, coeff=1, h_power: int = 0):
        exps = tuple(exps)
        if len(exps) != algebra.dim or any(e < 0 for e in exps):
            raise ValueError(f"bad exponent vector {exps!r}")
        coeff = rat(coeff)
        if not coeff:
            return cls.zero(algebra)
        return cls(algebra, {exps + (h_power,): coeff}, _normalized=True)

    @classmethod
    def variable(cls, algebra, which):
        index = which if isinstance(which, int) else algebra.generator_index(which)
        exps = tuple(1 if i == index else 0 for i in range(algebra.dim))
        return cls.monomial(algebra, exps)

    def _wrap(self, coeffs):
        return type(self)(self.algebra, coeffs, _normalized=True)

    def _check_partner(self, other):
        if type(other) is not type(self):
            raise TypeError(f"cannot combine {type(self).__name__} with {type(other).__name__}")
        if other.algebra != self.algebra:
            raise ValueError("operands live over different algebras")

    # -- ring operations shared by both polynomial types ------------------

    def __add__(self, other):
        if _scalar_items(other) is not None:
            other = type(self).constant(self.algebra, other)
        self._check_partner(other)
        acc = dict(self.coeffs)
        merge_scaled(acc, other.coeffs.items(), rat(1))
        return self._wrap(acc)

    __radd__ = __add__

    def __neg__(self):
        return self._wrap({k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other):
        if isinstance(other, PackedPoly):
            self._check_partner(other)
            acc = dict(self.coeffs)
            merge_scaled(acc, other.coeffs.items(), rat(-1))
            return self._wrap(acc)
        if _scalar_items(other) is None:
            return NotImplemented
        neg = -other if isinstance(other, HScalar) else -rat(other)
        return self + type(self).constant(self.algebra, neg)

    def __rsub__(self, other):
        return (-self) + other

    def _scaled(self, value):
        items = _scalar_items(value)
        if items is None:
            return None
        acc = {}
        for p, c in items:
            merge_scaled(acc, self.coeffs.items(), c, p)
        return self._wrap(acc)

    def __eq__(self, other):
        if _scalar_items(other) is not None:
            other = type(self).constant(self.algebra, other)
        if type(other) is not type(self):
            return NotImplemented
        return self.algebra == other.algebra and self.coeffs == other.coeffs

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(
                (type(self).__name__, self.algebra, frozenset(self.coeffs.items()))
            )
        return self._hash

    def __bool__(self):
        return bool(self.coeffs)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    # -- structure queries -------------------------------------------------

    @property
    def x_degree(self) -> int:
        """Total degree in the generators; -1 for the zero polynomial."""
        return max((sum(k[:-1]) for k in self.coeffs), default=-1)

    @property
    def h_degree(self) -> int:
        return max((k[-1] for k in self.coeffs), default=-1)

    def coefficient(self, exps) -> HScalar:
        """The full h-polynomial coefficient of a generator monomial."""
        exps = tuple(exps)
        out = {}
        for key, v in self.coeffs.items():
            if key[:-1] == exps:
                out[key[-1]] = v
        if not out:
            return HS_ZERO
        top = max(out)
        return HScalar(tuple(out.get(p, ZERO) for p in range(top + 1)))

    def hscalar_terms(self):
        """Terms grouped per generator monomial: (exps, HScalar) pairs, canonical order."""
        groups = {}
        for key, v in self.coeffs.items():
            groups.setdefault(key[:-1], {})[key[-1]] = v
        out = []
        for xm in sorted(groups, key=grlex_key, reverse=True):
            hs = groups[xm]
            top = max(hs)
            out.append((xm, HScalar(tuple(hs.get(p, ZERO) for p in range(top + 1)))))
        return out

    def homogeneous_component(self, degree: int):
        return self._wrap({k: v for k, v in self.coeffs.items() if sum(k[:-1]) == degree})

    def x_degrees(self):
        return sorted({sum(k[:-1]) for k in self.coeffs})

    def specialize_h(self, h0):
        """Evaluate h at the rational h0; a ring homomorphism."""
        h0 = rat(h0)
        acc = {}
        for key, v in self.coeffs.items():
            nk = key[:-1] + (0,)
            nv = acc.get(nk, ZERO) + v * h0 ** key[-1]
            if nv:
                acc[nk] = nv
            else:
                acc.pop(nk, None)
        return self._wrap(acc)

    def truncate_h(self, order: int):
        """Drop every term of h-degree >= order (reduction mod h^order)."""
        return self._wrap({k: v for k, v in self.coeffs.items() if k[-1] < order})

    def _display_names(self):
        names = self.algebra.names
        return tuple(n.upper() for n in names) if self._display_upper else names

    def __str__(self):
        return format_packed(self.coeffs, self._display_names())

    def __repr__(self):
        return f"{type(self).__name__}<{self}>"


class CPoly(PackedPoly):
    """Commutative polynomial in the coordinates with h-polynomial coefficients."""

    __slots__ = ()

    def __mul__(self, other):
        if isinstance(other, CPoly):
            self._check_partner(other)
            if len(self.coeffs) > len(other.coeffs):
                big, small = self.coeffs, other.coeffs
            else:
                big, small = other.coeffs, self.coeffs
            acc = {}
            for ks, vs in small.items():
                for kb, vb in big.items():
                    key = tuple(a + b for a, b in zip(ks, kb))
                    nv = acc.get(key, ZERO) + vs * vb
                    if nv:
                        acc[key] = nv
                    else:
                        del acc[key]
            return self._wrap(acc)
        scaled = self._scaled(other)
        if scaled is None:
            return NotImplemented
        return scaled

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = CPoly.constant(self.algebra, 1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def diff(self, index: int) -> "CPoly":
        """Partial derivative with respect to generator ``index``."""
        acc = {}
        for key, v in self.coeffs.items():
            e = key[index]
            if e:
                nk = key[:index] + (e - 1,) + key[index + 1 :]
                nv = acc.get(nk, ZERO) + v * e
                if nv:
                    acc[nk] = nv
                else:
                    del acc[nk]
        return self._wrap(acc)


def cpoly_mul(f: CPoly, g: CPoly) -> CPoly:
    """Exact commutative product (the undeformed multiplication)."""
    return f * g


def gradient(f: CPoly):
    return tuple(f.diff(i) for i in range(f.algebra.dim))


def laplacian(f: CPoly) -> CPoly:
    """Sum of second partials.

    Only defined for the three dimensional context whose quadratic
    invariant is the plain sum of squares; that is the case the harmonic
    machinery supports.
    """
    if f.algebra.dim != 3:
        raise ValueError("the Laplacian is only configured for the 3-dimensional context")
    out = CPoly.zero(f.algebra)
    for i in range(3):
        out = out + f.diff(i).diff(i)
    return out


def kirillov_bracket(f: CPoly, g: CPoly, algebra: LieAlgebraSpec | None = None) -> CPoly:
    """The linear Poisson bracket {f, g} = sum_{ijk} c_ij^k x_k (d_i f)(d_j g).

    Bilinear, antisymmetric, a derivation in each slot; satisfies Jacobi
    whenever the structure constants do.
    """
    if algebra is None:
        algebra = f.algebra
    if f.algebra != algebra or g.algebra != algebra:
        raise ValueError("bracket operands must live over the given algebra")
    n = algebra.dim
    df = [f.diff(i) for i in range(n)]
    dg = [g.diff(i) for i in range(n)]
    acc = {}
    for i in range(n):
        for j in range(i + 1, n):
            terms = algebra.bracket_terms(i, j)
            if not terms:
                continue
            part = df[i] * dg[j] - df[j] * dg[i]
            if part.is_zero:
                continue
            for k, c in terms:
                for key, v in part.coeffs.items():
                    nk = key[:k] + (key[k] + 1,) + key[k + 1 :]
                    nv = acc.get(nk, ZERO) + c * v
                    if nv:
                        acc[nk] = nv
                    else:
                        del acc[nk]
    return CPoly(algebra, acc, _normalized=True)


def specialize_h(value, h0):
    """Evaluate h at a rational for any value that carries h."""
    if isinstance(value, HScalar):
        return value.evaluate(h0)
    return value.specialize_h(h0)


def iter_monomials(nvars: int, max_degree: int):
    """Generator-exponent tuples of total degree <= max_degree.

    Order: ascending total degree, then ascending lexicographic exponent
    tuple (first generator most significant).  This order is part of the
    documented random-polynomial protocol, so it must never change.
    """
    for total in range(max_degree + 1):
        batch = []

        def rec(prefix, remaining, slots):
            if slots == 1:
                batch.append(prefix + (remaining,))
                return
            for e in range(remaining + 1):
                rec(prefix + (e,), remaining - e, slots - 1)

        if nvars == 0:
            if total == 0:
                yield ()
            continue
        rec((), total, nvars)
        for item in sorted(batch):
            yield item


def format_packed(coeffs: dict, names, h_name: str = "h") -> str:
    """Canonical string form shared by both polynomial types."""
    if not coeffs:
        return "0"
    groups = {}
    for key, c in coeffs.items():
        groups.setdefault(key[:-1], []).append((key[-1], c))
    pieces = []
    for xm in sorted(groups, key=grlex_key, reverse=True):
        for he, c in sorted(groups[xm]):
            pieces.append((c, he, xm))
    out = []
    for idx, (c, he, xm) in enumerate(pieces):
        neg = c < 0
        mag = -c if neg else c
        factors = []
        if mag != 1 or (he == 0 and not any(xm)):
            factors.append(str(mag))
        if he == 1:
            factors.append(h_name)
        elif he > 1:
            factors.append(f"{h_name}^{he}")
        for nm, e in zip(names, xm):
            if e == 1:
                factors.append(nm)
            elif e > 1:
                factors.append(f"{nm}^{e}")
        term = "*".join(factors)
        if idx == 0:
            out.append(f"-{term}" if neg else term)
        else:
            out.append(f" - {term}" if neg else f" + {term}")
    return "".join(out)
