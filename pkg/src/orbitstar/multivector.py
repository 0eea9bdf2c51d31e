"""Polynomial multivector fields and the Schouten bracket.

A degree-k multivector is stored as a map from strictly increasing index
k-tuples to polynomial coefficients; antisymmetry is normalized away.
Degree 0 is a plain polynomial under the hood.

Sign conventions.  The bracket is computed on decomposable terms: a term
f d_{i1} ^ d_{i2} ^ ... factors as the vector fields u_1 = f d_{i1},
u_2 = d_{i2}, ..., and for P = u_1 ^ ... ^ u_p, Q = v_1 ^ ... ^ v_q

    [P, Q] = sum_{i,j} (-1)^{i+j} [u_i, v_j] ^ u_1 ^...(drop u_i)...^ v_q
    [P, f] = sum_i (-1)^{p-i} u_i(f) u_1 ^ ...(drop u_i)... ^ u_p
    [f, Q] = -(-1)^{q-1} [Q, f]

with [u, v] the vector field commutator.  Identities pinned by tests: on
vector fields the bracket is the commutator, against a function it
differentiates, [beta, beta] = 0 exactly characterizes the Jacobi
identity of the induced bracket, graded antisymmetry
[A,B] = -(-1)^{(a-1)(b-1)}[B,A], and the graded Leibniz rule
[A, B ^ C] = [A,B] ^ C + (-1)^{(a-1) b} B ^ [A,C].
"""

from __future__ import annotations

from .liealg import LieAlgebraSpec
from .poly import CPoly


def _merge_indices(left: tuple, right: tuple):
    """Concatenate two sorted disjoint index tuples; returns (sign, tuple)
    or None when they overlap."""
    if set(left) & set(right):
        return None
    sign = 0
    for x in left:
        for y in right:
            if x > y:
                sign += 1
    merged = tuple(sorted(left + right))
    return (-1 if sign % 2 else 1), merged


class MultiVector:
    """Alternating polynomial-coefficient k-vector field."""

    __slots__ = ("algebra", "degree", "coeffs")

    def __init__(self, algebra: LieAlgebraSpec, degree: int, coeffs=None):
        # degree above the dimension is legal but forces the zero multivector
        if degree < 0:
            raise ValueError("degree must be nonnegative")
        self.algebra = algebra
        self.degree = degree
        clean = {}
        if coeffs:
            for ids, poly in coeffs.items():
                ids = tuple(ids)
                if len(ids) != degree or list(ids) != sorted(set(ids)):
                    raise ValueError(f"index tuple {ids!r} must be strictly increasing of length {degree}")
                if any(not 0 <= i < algebra.dim for i in ids):
                    raise ValueError(f"index tuple {ids!r} out of range")
                if not isinstance(poly, CPoly):
                    poly = CPoly.constant(algebra, poly)
                if poly.algebra != algebra:
                    raise ValueError("coefficient polynomial uses a different algebra")
                if not poly.is_zero:
                    clean[ids] = poly
        self.coeffs = clean

    @classmethod
    def zero(cls, algebra, degree: int = 0):
        return cls(algebra, degree, {})

    @classmethod
    def from_function(cls, f: CPoly):
        return cls(f.algebra, 0, {(): f})

    @classmethod
    def term(cls, algebra, ids, poly):
        """Single term with arbitrary (possibly unsorted) indices."""
        ids = tuple(ids)
        if len(set(ids)) != len(ids):
            return cls.zero(algebra, len(ids))
        perm_sign = 1
        ids_list = list(ids)
        for i in range(len(ids_list)):
            for j in range(len(ids_list) - 1 - i):
                if ids_list[j] > ids_list[j + 1]:
                    ids_list[j], ids_list[j + 1] = ids_list[j + 1], ids_list[j]
                    perm_sign = -perm_sign
        if not isinstance(poly, CPoly):
            poly = CPoly.constant(algebra, poly)
        return cls(algebra, len(ids), {tuple(ids_list): poly * perm_sign})

    def _check(self, other):
        if not isinstance(other, MultiVector) or other.algebra != self.algebra:
            raise TypeError("operands must be multivectors over the same algebra")
        if other.degree != self.degree:
            raise ValueError("cannot combine multivectors of different degrees")

    def __add__(self, other):
        # the zero multivector has no well-defined degree; let it absorb
        if isinstance(other, MultiVector) and other.algebra == self.algebra:
            if not self.coeffs:
                return other
            if not other.coeffs:
                return self
        self._check(other)
        acc = dict(self.coeffs)
        for ids, poly in other.coeffs.items():
            total = acc.get(ids)
            total = poly if total is None else total + poly
            if total.is_zero:
                acc.pop(ids, None)
            else:
                acc[ids] = total
        out = MultiVector.zero(self.algebra, self.degree)
        out.coeffs = acc
        return out

    def __neg__(self):
        out = MultiVector.zero(self.algebra, self.degree)
        out.coeffs = {ids: -poly for ids, poly in self.coeffs.items()}
        return out

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        if isinstance(scalar, MultiVector):
            return NotImplemented
        acc = {}
        for ids, poly in self.coeffs.items():
            scaled = poly * scalar
            if not scaled.is_zero:
                acc[ids] = scaled
        out = MultiVector.zero(self.algebra, self.degree)
        out.coeffs = acc
        return out

    __rmul__ = __mul__

    def wedge(self, other: "MultiVector") -> "MultiVector":
        if not isinstance(other, MultiVector) or other.algebra != self.algebra:
            raise TypeError("wedge expects multivectors over the same algebra")
        degree = self.degree + other.degree
        acc = {}
        for ida, fa in self.coeffs.items():
            for idb, fb in other.coeffs.items():
                merged = _merge_indices(ida, idb)
                if merged is None:
                    continue
                sign, ids = merged
                term = fa * fb * sign
                total = acc.get(ids)
                total = term if total is None else total + term
                if total.is_zero:
                    acc.pop(ids, None)
                else:
                    acc[ids] = total
        out = MultiVector.zero(self.algebra, degree)
        out.coeffs = acc
        return out

    def __eq__(self, other):
        if not isinstance(other, MultiVector) or self.algebra != other.algebra:
            return NotImplemented
        if not self.coeffs and not other.coeffs:
            return True
        return self.degree == other.degree and self.coeffs == other.coeffs

    def __ne__(self, other):
        return not self.__eq__(other)

    def __bool__(self):
        return bool(self.coeffs)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, ids) -> CPoly:
        return self.coeffs.get(tuple(ids), CPoly.zero(self.algebra))

    def __str__(self):
        if not self.coeffs:
            return "0"
        names = self.algebra.names
        parts = []
        for ids in sorted(self.coeffs):
            poly = self.coeffs[ids]
            dvecs = " ^ ".join(f"d/d{names[i]}" for i in ids)
            if not ids:
                parts.append(str(poly))
                continue
            text = str(poly)
            if poly == 1:
                parts.append(dvecs)
            elif len(poly.coeffs) == 1 and not text.startswith("-"):
                parts.append(f"{text} * {dvecs}")
            else:
                parts.append(f"({text}) * {dvecs}")
        return " + ".join(parts)

    def __repr__(self):
        return f"MultiVector<{self}>"


def _as_multivector(value, algebra=None) -> MultiVector:
    if isinstance(value, MultiVector):
        return value
    if isinstance(value, CPoly):
        return MultiVector.from_function(value)
    raise TypeError(f"cannot interpret {value!r} as a multivector")


def kirillov_bivector(algebra: LieAlgebraSpec) -> MultiVector:
    """The linear bivector beta = sum_{i<j} (sum_k c_ij^k x_k) d_i ^ d_j
    whose pairing with two differentials is the linear Poisson bracket."""
    coeffs = {}
    for i in range(algebra.dim):
        for j in range(i + 1, algebra.dim):
            terms = algebra.bracket_terms(i, j)
            if not terms:
                continue
            poly = CPoly.zero(algebra)
            for k, c in terms:
                poly = poly + CPoly.variable(algebra, k) * c
            coeffs[(i, j)] = poly
    return MultiVector(algebra, 2, coeffs)


def bivector_pairing(beta: MultiVector, f: CPoly, g: CPoly) -> CPoly:
    """Contraction of a bivector with df ^ dg."""
    if beta.degree != 2:
        raise ValueError("pairing expects a bivector")
    out = CPoly.zero(beta.algebra)
    for (i, j), poly in beta.coeffs.items():
        out = out + poly * (f.diff(i) * g.diff(j) - f.diff(j) * g.diff(i))
    return out


def _term_vectors(algebra, ids, poly):
    """View f d_{i1} ^ d_{i2} ^ ... as the vector field list
    [(f, i1), (1, i2), ...]."""
    one = CPoly.constant(algebra, 1)
    return [(poly, ids[0])] + [(one, i) for i in ids[1:]]


def _add_term(algebra, acc, ids, poly, sign):
    """acc += sign * poly * d_ids with ids arbitrary (sorted in place)."""
    if len(set(ids)) != len(ids):
        return
    perm = list(ids)
    for i in range(len(perm)):
        for j in range(len(perm) - 1 - i):
            if perm[j] > perm[j + 1]:
                perm[j], perm[j + 1] = perm[j + 1], perm[j]
                sign = -sign
    key = tuple(perm)
    term = poly * sign
    total = acc.get(key)
    total = term if total is None else total + term
    if total.is_zero:
        acc.pop(key, None)
    else:
        acc[key] = total


def _bracket_with_function(algebra, mv, g):
    """[P, g] = sum_i (-1)^{p-i} u_i(g) u_1 ^ ...(drop u_i)... ^ u_p."""
    acc = {}
    p = mv.degree
    for ids, f in mv.coeffs.items():
        vecs = _term_vectors(algebra, ids, f)
        for i, (cf, ci) in enumerate(vecs, start=1):
            d = cf * g.diff(ci)
            if d.is_zero:
                continue
            poly = d
            rest = []
            for t, (rf, ri) in enumerate(vecs, start=1):
                if t == i:
                    continue
                poly = poly * rf
                rest.append(ri)
            _add_term(algebra, acc, tuple(rest), poly, (-1) ** (p - i))
    return acc


def schouten_bracket(a, b) -> MultiVector:
    """The Schouten bracket, computed on decomposable terms; accepts plain
    polynomials as degree 0.

    Degree of the result is deg a + deg b - 1; for two functions it is the
    zero function.
    """
    a = _as_multivector(a)
    b = _as_multivector(b)
    if a.algebra != b.algebra:
        raise ValueError("operands live over different algebras")
    algebra = a.algebra
    da, db = a.degree, b.degree
    if da == 0 and db == 0:
        return MultiVector.zero(algebra, 0)
    degree = max(da + db - 1, 0)
    if db == 0:
        g = b.coeffs.get((), CPoly.zero(algebra))
        return _finish(algebra, degree, _bracket_with_function(algebra, a, g))
    if da == 0:
        flip = -((-1) ** (db - 1))
        return schouten_bracket(b, a) * flip
    acc = {}
    one = CPoly.constant(algebra, 1)
    for ids_a, f in a.coeffs.items():
        vecs_a = _term_vectors(algebra, ids_a, f)
        for ids_b, g in b.coeffs.items():
            vecs_b = _term_vectors(algebra, ids_b, g)
            for i, (af, ai) in enumerate(vecs_a, start=1):
                for j, (bf, bi) in enumerate(vecs_b, start=1):
                    # [af d_ai, bf d_bi] = af (d_ai bf) d_bi - bf (d_bi af) d_ai
                    pieces = []
                    d1 = af * bf.diff(ai)
                    if not d1.is_zero:
                        pieces.append((d1, bi))
                    d2 = bf * af.diff(bi)
                    if not d2.is_zero:
                        pieces.append((-d2, ai))
                    if not pieces:
                        continue
                    sign = -1 if (i + j) % 2 else 1
                    rest = []
                    scale = one
                    for t, (rf, ri) in enumerate(vecs_a, start=1):
                        if t != i:
                            scale = scale * rf
                            rest.append(ri)
                    for t, (rf, ri) in enumerate(vecs_b, start=1):
                        if t != j:
                            scale = scale * rf
                            rest.append(ri)
                    for cp, ci in pieces:
                        _add_term(algebra, acc, (ci,) + tuple(rest), cp * scale, sign)
    return _finish(algebra, degree, acc)


def _finish(algebra, degree, acc):
    out = MultiVector.zero(algebra, degree)
    out.coeffs = acc
    return out


def formal_poisson_check(alphas, order: int):
    """Check [alpha, alpha] = 0 through the requested h-order for
    alpha = h a_1 + h^2 a_2 + ...

    ``alphas`` lists the bivectors a_1, a_2, ... (missing tail entries are
    zero).  Returns (True, None) when every coefficient of h^k for
    k <= order vanishes, else (False, k) with the first failing order.
    """
    alphas = list(alphas)
    if not alphas:
        return True, None
    algebra = alphas[0].algebra
    for mv in alphas:
        if mv.degree != 2:
            raise ValueError("formal structures must consist of bivectors")
        if mv.algebra != algebra:
            raise ValueError("bivectors live over different algebras")
    for k in range(2, order + 1):
        total = MultiVector.zero(algebra, 3)
        seen = False
        for i in range(1, k):
            j = k - i
            if i <= len(alphas) and j <= len(alphas):
                term = schouten_bracket(alphas[i - 1], alphas[j - 1])
                total = term if not seen else total + term
                seen = True
        if seen and not total.is_zero:
            return False, k
    return True, None
