"""Scalars that are polynomials in the deformation parameter h.

Every coefficient anywhere in the package is either a bare rational or an
``HScalar``: a dense tuple of rationals indexed by the power of h.  The
deformation parameter is a formal commuting variable, never a number, so
ring operations stay exact.
"""

from __future__ import annotations

from .rationals import ONE, ZERO, is_rational, rat


class HScalar(tuple):
    """Exact polynomial in h, stored densely by power of h.

    Index ``i`` holds the coefficient of ``h**i``.  Trailing zero
    coefficients are stripped on construction so equal values compare
    equal; the empty tuple is zero.  Instances are immutable and hashable.

    Note the tuple operators are repurposed: ``+`` and ``*`` are ring
    operations, not concatenation/repetition.
    """

    __slots__ = ()

    def __new__(cls, coeffs=()):
        if type(coeffs) is cls:
            return coeffs
        vals = [rat(c) for c in coeffs]
        while vals and not vals[-1]:
            vals.pop()
        return tuple.__new__(cls, vals)

    @classmethod
    def _wrap(cls, vals):
        # internal: vals already normalized (rationals, no trailing zeros)
        return tuple.__new__(cls, vals)

    @classmethod
    def constant(cls, value) -> "HScalar":
        value = rat(value)
        return cls._wrap((value,)) if value else cls._wrap(())

    @classmethod
    def h_power(cls, power: int = 1, coeff=1) -> "HScalar":
        coeff = rat(coeff)
        if not coeff:
            return cls._wrap(())
        return cls._wrap((ZERO,) * power + (coeff,))

    # -- ring structure -------------------------------------------------

    def _coerce(self, other):
        if type(other) is HScalar:
            return other
        if is_rational(other):
            return HScalar.constant(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if len(self) < len(other):
            self, other = other, self
        vals = list(self)
        for i, c in enumerate(other):
            vals[i] = vals[i] + c
        while vals and not vals[-1]:
            vals.pop()
        return HScalar._wrap(tuple(vals))

    __radd__ = __add__

    def __neg__(self):
        return HScalar._wrap(tuple(-c for c in self))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if is_rational(other):
            r = rat(other)
            if not r:
                return HS_ZERO
            return HScalar._wrap(tuple(c * r for c in self))
        if type(other) is HScalar:
            if not self or not other:
                return HS_ZERO
            out = [ZERO] * (len(self) + len(other) - 1)
            for i, a in enumerate(self):
                if not a:
                    continue
                for j, b in enumerate(other):
                    if b:
                        out[i + j] += a * b
            while out and not out[-1]:
                out.pop()
            return HScalar._wrap(tuple(out))
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = HS_ONE
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if is_rational(other):
            other = HScalar.constant(other)
        return tuple.__eq__(self, other)

    def __ne__(self, other):
        return not self.__eq__(other)

    __hash__ = tuple.__hash__

    # -- queries --------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree in h; -1 for the zero scalar."""
        return len(self) - 1

    @property
    def constant_term(self):
        return self[0] if self else ZERO

    @property
    def is_constant(self) -> bool:
        return len(self) <= 1

    def evaluate(self, h0):
        """Value at h = h0 (exact rational)."""
        h0 = rat(h0)
        acc = ZERO
        for c in reversed(self):
            acc = acc * h0 + c
        return acc

    def truncated(self, order: int) -> "HScalar":
        """Drop every term of h-degree >= order."""
        if order <= 0:
            return HS_ZERO
        return HScalar(self[:order])

    def shifted(self, k: int) -> "HScalar":
        """Multiply by h**k."""
        if not self:
            return HS_ZERO
        return HScalar._wrap((ZERO,) * k + tuple(self))

    def divided_by_h(self, k: int = 1) -> "HScalar":
        """Exact division by h**k; raises if the scalar is not divisible."""
        if not self:
            return HS_ZERO
        if any(self[i] for i in range(min(k, len(self)))):
            raise ValueError(f"{self} is not divisible by h^{k}")
        return HScalar._wrap(tuple(self[k:]))

    def __str__(self):
        if not self:
            return "0"
        parts = []
        for power, c in enumerate(self):
            if not c:
                continue
            mag = -c if c < 0 else c
            factors = []
            if mag != 1 or power == 0:
                factors.append(str(mag))
            if power == 1:
                factors.append("h")
            elif power > 1:
                factors.append(f"h^{power}")
            term = "*".join(factors)
            if not parts:
                parts.append(f"-{term}" if c < 0 else term)
            else:
                parts.append(f" - {term}" if c < 0 else f" + {term}")
        return "".join(parts)

    def __repr__(self):
        return f"HScalar<{self}>"


HS_ZERO = HScalar._wrap(())
HS_ONE = HScalar._wrap((ONE,))
H = HScalar._wrap((ZERO, ONE))
