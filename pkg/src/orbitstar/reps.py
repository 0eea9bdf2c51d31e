"""Exact spin representations and the matrix-algebra quantization check.

The ladder basis is rescaled so every entry is rational: the lowering
operator acts with coefficient 1 and the raising operator carries the full
product k(2j + 1 - k).  This similarity transform of the usual unitary
ladder keeps all three generator images Gaussian rational, at the price of
not being skew-hermitian; none of the algebraic checks care.

With that basis, the generator images are

    R_X = -i h0 (J+ + J-) / 2,   R_Y = h0 (J- - J+) / 2,   R_Z = -i h0 J_z,

which satisfy R_X R_Y - R_Y R_X = h0 R_Z and cyclic exactly, and
R_X^2 + R_Y^2 + R_Z^2 = -h0^2 j(j+1) times the identity.  The measured
Casimir is therefore negative; it matches the positive geometric value
l(l + h0) at l = j h0 only after absorbing a factor of i into the
generator images (equivalently a sign flip of the invariant).  The
reconciliation is reported by the harness, never asserted.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .liealg import LieAlgebraSpec, su2
from .orbit import CasimirSpec, QuotientElement, sphere_casimir
from .rationals import ONE, ZERO, rat
from .scalars import HScalar


class GaussianRational:
    """Exact complex number a + b*i with rational a, b."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", rat(re))
        object.__setattr__(self, "im", rat(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @staticmethod
    def _coerce(value):
        if isinstance(value, GaussianRational):
            return value
        try:
            return GaussianRational(rat(value))
        except TypeError:
            return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        norm = other.re * other.re + other.im * other.im
        if not norm:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return GaussianRational(
            (self.re * other.re + self.im * other.im) / norm,
            (self.im * other.re - self.re * other.im) / norm,
        )

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.re, self.im))

    def __str__(self):
        if not self.im:
            return str(self.re)
        ipart = "i" if self.im == 1 else ("-i" if self.im == -1 else f"{self.im}*i")
        if not self.re:
            return ipart
        sign = " - " if self.im < 0 else " + "
        mag = -self.im if self.im < 0 else self.im
        itxt = "i" if mag == 1 else f"{mag}*i"
        return f"{self.re}{sign}{itxt}"

    def __repr__(self):
        return f"GaussianRational<{self}>"


_GZERO = GaussianRational()
_GONE = GaussianRational(1)


class GaussMatrix:
    """Square matrix over the Gaussian rationals; all arithmetic exact."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = tuple(
            tuple(e if isinstance(e, GaussianRational) else GaussianRational(e) for e in row)
            for row in rows
        )
        n = len(rows)
        if any(len(row) != n for row in rows):
            raise ValueError("matrix must be square")
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("GaussMatrix is immutable")

    @property
    def dim(self) -> int:
        return len(self.rows)

    @classmethod
    def identity(cls, n: int) -> "GaussMatrix":
        return cls(tuple(
            tuple(_GONE if i == j else _GZERO for j in range(n)) for i in range(n)
        ))

    @classmethod
    def zero(cls, n: int) -> "GaussMatrix":
        return cls(tuple(tuple(_GZERO for _ in range(n)) for _ in range(n)))

    def __add__(self, other):
        return GaussMatrix(tuple(
            tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(self.rows, other.rows)
        ))

    def __sub__(self, other):
        return GaussMatrix(tuple(
            tuple(a - b for a, b in zip(ra, rb)) for ra, rb in zip(self.rows, other.rows)
        ))

    def __neg__(self):
        return GaussMatrix(tuple(tuple(-a for a in row) for row in self.rows))

    def __mul__(self, other):
        if isinstance(other, GaussMatrix):
            if other.dim != self.dim:
                raise ValueError("dimension mismatch")
            n = self.dim
            cols = tuple(zip(*other.rows))
            return GaussMatrix(tuple(
                tuple(sum((a * b for a, b in zip(row, col)), _GZERO) for col in cols)
                for row in self.rows
            ))
        scalar = GaussianRational._coerce(other)
        if scalar is None:
            return NotImplemented
        return GaussMatrix(tuple(tuple(a * scalar for a in row) for row in self.rows))

    def __rmul__(self, other):
        scalar = GaussianRational._coerce(other)
        if scalar is None:
            return NotImplemented
        return self * scalar

    def __eq__(self, other):
        return isinstance(other, GaussMatrix) and self.rows == other.rows

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self.rows)

    def scalar_of_identity(self):
        """The scalar s with self = s * I, or None when not a multiple."""
        n = self.dim
        s = self.rows[0][0]
        for i in range(n):
            for j in range(n):
                if (self.rows[i][j] != s) if i == j else bool(self.rows[i][j]):
                    return None
        return s

    def flat(self):
        return tuple(e for row in self.rows for e in row)

    def __str__(self):
        return "\n".join("[" + ", ".join(str(e) for e in row) + "]" for row in self.rows)

    def __repr__(self):
        return f"GaussMatrix({self.rows!r})"


@dataclass(frozen=True)
class SpinRep:
    """Generator images of one irreducible spin representation at a fixed
    value h0 of the deformation parameter."""

    j2: int  # twice the spin
    h0: object  # exact rational, nonzero
    rx: GaussMatrix
    ry: GaussMatrix
    rz: GaussMatrix

    @property
    def dim(self) -> int:
        return self.j2 + 1

    @property
    def j(self):
        return rat(self.j2, 2)


def spin_rep(j, h0) -> SpinRep:
    """Build the spin-j representation with exact entries.

    ``j`` must be a nonnegative half-integer; ``h0`` a nonzero rational.
    The defining relations R_X R_Y - R_Y R_X = h0 R_Z (and cyclic) are
    verified exactly before returning.
    """
    j = rat(j)
    j2 = j * 2
    if j2 != int(j2) or j < 0:
        raise ValueError(f"j must be a nonnegative half-integer, got {j}")
    j2 = int(j2)
    h0 = rat(h0)
    if not h0:
        raise ValueError("h0 must be nonzero")
    n = j2 + 1
    half = rat(1, 2)
    raise_rows = [[ZERO] * n for _ in range(n)]
    lower_rows = [[ZERO] * n for _ in range(n)]
    for k in range(1, n):
        raise_rows[k - 1][k] = rat(k * (j2 + 1 - k))
    for k in range(n - 1):
        lower_rows[k + 1][k] = ONE
    jz_diag = [j - k for k in range(n)]

    def build(entry):
        return GaussMatrix(tuple(tuple(entry(i, k) for k in range(n)) for i in range(n)))

    rx = build(lambda i, k: GaussianRational(0, -h0 * half * (raise_rows[i][k] + lower_rows[i][k])))
    ry = build(lambda i, k: GaussianRational(h0 * half * (lower_rows[i][k] - raise_rows[i][k])))
    rz = build(lambda i, k: GaussianRational(0, -h0 * jz_diag[i]) if i == k else _GZERO)

    rep = SpinRep(j2=j2, h0=h0, rx=rx, ry=ry, rz=rz)
    scaled = [(rep.rx, rep.ry, rep.rz), (rep.ry, rep.rz, rep.rx), (rep.rz, rep.rx, rep.ry)]
    for a, b, c in scaled:
        if a * b - b * a != c * GaussianRational(h0):
            raise AssertionError("spin representation violates the deformed relations")
    rep_casimir_scalar(rep)  # raises when the Casimir is not scalar
    return rep


def rep_casimir_scalar(rep: SpinRep) -> GaussianRational:
    """The scalar value of R_X^2 + R_Y^2 + R_Z^2 (Schur); raises if the
    constructor produced a non-scalar Casimir."""
    total = rep.rx * rep.rx + rep.ry * rep.ry + rep.rz * rep.rz
    s = total.scalar_of_identity()
    if s is None:
        raise ValueError("representation Casimir is not a scalar matrix")
    return s


class CasimirMismatchError(ValueError):
    """The quotient level and the representation Casimir disagree at h0."""

    def __init__(self, expected, measured):
        self.expected = expected
        self.measured = measured
        super().__init__(
            f"quotient level c(h0) = {expected} does not match the representation "
            f"Casimir {measured}; the evaluation map is not defined on the quotient"
        )


def rep_apply(q: QuotientElement, rep: SpinRep, spec: CasimirSpec | None = None) -> GaussMatrix:
    """Evaluate a quotient class on the representation.

    [X^m Y^n Z^nu] goes to R_X^m R_Y^n R_Z^nu with h specialized at h0.
    Well defined (and exactly multiplicative) precisely because the pinned
    c(h) evaluates at h0 to the representation Casimir; a mismatch raises
    ``CasimirMismatchError`` carrying both scalars.
    """
    if spec is None:
        spec = q.spec
    measured = rep_casimir_scalar(rep)
    expected = spec.c.evaluate(rep.h0)
    if measured != expected:
        raise CasimirMismatchError(expected, measured)
    n = rep.dim
    pow_cache = {}

    def power(mat, e, tag):
        key = (tag, e)
        if key not in pow_cache:
            if e == 0:
                pow_cache[key] = GaussMatrix.identity(n)
            else:
                pow_cache[key] = power(mat, e - 1, tag) * mat
        return pow_cache[key]

    acc = GaussMatrix.zero(n)
    for (m, nn, nu, he), c in q.coeffs.items():
        mat = power(rep.rx, m, "x") * power(rep.ry, nn, "y") * power(rep.rz, nu, "z")
        acc = acc + mat * GaussianRational(c * rep.h0**he)
    return acc


def basis_image(rep: SpinRep, m: int, n: int, nu: int) -> GaussMatrix:
    """Image of the basis monomial without any quotient-level checking."""
    out = GaussMatrix.identity(rep.dim)
    for mat, e in ((rep.rx, m), (rep.ry, n), (rep.rz, nu)):
        for _ in range(e):
            out = out * mat
    return out


def _rank(vectors) -> int:
    rows = [list(v) for v in vectors]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for col in range(ncols):
        pivot = None
        for r in range(rank, len(rows)):
            if rows[r][col]:
                pivot = r
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = _GONE / rows[rank][col]
        rows[rank] = [e * inv for e in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                factor = rows[r][col]
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
        if rank == len(rows):
            break
    return rank


def image_dimension(rep: SpinRep, maxdeg: int) -> int:
    """Rank of the span of basis-monomial images with m + n + nu <= maxdeg."""
    vectors = []
    for m in range(maxdeg + 1):
        for n in range(maxdeg + 1 - m):
            for nu in (0, 1):
                if m + n + nu <= maxdeg:
                    vectors.append(basis_image(rep, m, n, nu).flat())
    return _rank(vectors)


def pinned_casimir(rep: SpinRep) -> HScalar:
    """The degree-2 level c(h) = c_rep * (h / h0)^2 matching the measured
    representation Casimir; it scales the way the generators do."""
    measured = rep_casimir_scalar(rep)
    if measured.im:
        raise ValueError("representation Casimir is not real")
    return HScalar((0, 0, measured.re / (rep.h0 * rep.h0)))


def pinned_spec(rep: SpinRep, algebra: LieAlgebraSpec | None = None) -> CasimirSpec:
    """Casimir data whose level is pinned to the measured representation
    Casimir.  c(0) = 0 here, so this is not a regular classical orbit."""
    return sphere_casimir(pinned_casimir(rep), algebra or su2(), require_regular=False)


@lru_cache(maxsize=None)
def reconciliation_line(j2: int, h0_text: str) -> str:
    """Human-readable note tying the measured Casimir to the geometric
    quantization value l(l + h0)."""
    rep = spin_rep(rat(j2, 2), rat(h0_text))
    measured = rep_casimir_scalar(rep)
    l = rep.j * rep.h0
    geom = l * (l + rep.h0)
    return (
        f"measured c_rep = {measured} = -j(j+1) h0^2; "
        f"with l = j*h0 = {l} the geometric value l(l+h0) = {geom} equals -c_rep, "
        f"the sign being the usual factor of i between the compact generators and "
        f"the positive invariant convention"
    )
