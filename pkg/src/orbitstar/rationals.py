"""Exact rational arithmetic backend.

Uses gmpy2's mpq when available (noticeably faster once numerators grow),
otherwise falls back to the standard library Fraction.  Both expose
``.numerator``/``.denominator`` and interoperate with int, which is all
the rest of the package relies on.
"""

from __future__ import annotations

try:
    from gmpy2 import mpq as _rational

    BACKEND = "gmpy2"
except ImportError:  # pragma: no cover
    from fractions import Fraction as _rational

    BACKEND = "fractions"


def rat(value=0, den=None):
    """Coerce ``value`` to an exact rational.

    Accepts int, an existing rational, or a string such as ``-3/4``.
    Floats are rejected: the whole engine is exact and a float sneaking
    in would silently poison results.
    """
    if isinstance(value, float):
        raise TypeError("floating point input is not allowed in exact arithmetic")
    if den is not None:
        return _rational(value, den)
    if isinstance(value, str):
        text = value.strip()
        if text.startswith("+"):
            text = text[1:]
        return _rational(text)
    return _rational(value)


ZERO = rat(0)
ONE = rat(1)

RATIONAL_TYPES = (int, type(ZERO))


def is_rational(value) -> bool:
    return isinstance(value, RATIONAL_TYPES)
