"""Lie algebra data: structure constants, validation, file format.

A ``LieAlgebraSpec`` is a frozen value object carrying the dimension, the
generator names and the full antisymmetric structure-constant tensor
c[i][j][k] with ``[X_i, X_j] = sum_k c[i][j][k] X_k``.  It is hashable so
it can key the memoization caches of the rewriting kernel.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache

from .rationals import ZERO, rat

_RESERVED_NAMES = {"h", "l"}


@dataclass(frozen=True, eq=True)
class LieAlgebraSpec:
    dim: int
    names: tuple
    constants: tuple  # constants[i][j][k], exact rationals, antisymmetric in (i, j)

    def __hash__(self):
        # hot path: this value keys every rewriting cache, so memoize it
        cached = self.__dict__.get("_hash_cache")
        if cached is None:
            cached = hash((self.dim, self.names, self.constants))
            object.__setattr__(self, "_hash_cache", cached)
        return cached

    def __post_init__(self):
        n = self.dim
        if n < 1:
            raise ValueError("algebra dimension must be positive")
        if len(self.names) != n:
            raise ValueError("need exactly one name per generator")
        if len(set(self.names)) != n:
            raise ValueError("generator names must be distinct")
        for name in self.names:
            if not name.isidentifier():
                raise ValueError(f"generator name {name!r} is not an identifier")
            if name.lower() in _RESERVED_NAMES:
                raise ValueError(f"generator name {name!r} is reserved")
        if len(self.constants) != n or any(
            len(row) != n or any(len(cell) != n for cell in row) for row in self.constants
        ):
            raise ValueError("structure constants must form an n*n*n tensor")
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    if self.constants[i][j][k] != -self.constants[j][i][k]:
                        raise ValueError(
                            f"structure constants not antisymmetric at ({i}, {j}, {k})"
                        )

    def structure_constant(self, i: int, j: int, k: int):
        return self.constants[i][j][k]

    def bracket_terms(self, i: int, j: int) -> tuple:
        """Nonzero components of [X_i, X_j] as (k, coefficient) pairs."""
        row = self.constants[i][j]
        return tuple((k, c) for k, c in enumerate(row) if c)

    def generator_index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise ValueError(f"unknown generator {name!r}") from None

    # -- construction -----------------------------------------------------

    @classmethod
    def from_brackets(cls, dim: int, names, brackets) -> "LieAlgebraSpec":
        """Build from bracket entries {(i, j): {k: coeff}} with i < j."""
        table = [[[ZERO] * dim for _ in range(dim)] for _ in range(dim)]
        for (i, j), coeffs in brackets.items():
            if not (0 <= i < j < dim):
                raise ValueError(f"bracket entry requires 0 <= i < j < dim, got ({i}, {j})")
            for k, value in coeffs.items():
                if not 0 <= k < dim:
                    raise ValueError(f"bracket target index {k} out of range")
                value = rat(value)
                table[i][j][k] = value
                table[j][i][k] = -value
        constants = tuple(tuple(tuple(cell) for cell in row) for row in table)
        return cls(dim, tuple(names), constants)

    @classmethod
    def from_dict(cls, data: dict, require_jacobi: bool = True) -> "LieAlgebraSpec":
        try:
            dim = int(data["dim"])
            names = tuple(str(s) for s in data["names"])
            entries = data["brackets"]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"algebra description missing field: {exc}") from exc
        brackets = {}
        for entry in entries:
            i, j = int(entry["i"]), int(entry["j"])
            coeffs = {int(k): rat(v) for k, v in entry["coeffs"].items()}
            if (i, j) in brackets:
                raise ValueError(f"duplicate bracket entry for ({i}, {j})")
            brackets[(i, j)] = coeffs
        spec = cls.from_brackets(dim, names, brackets)
        if require_jacobi:
            ok, witness = jacobi_check(spec)
            if not ok:
                raise ValueError(f"structure constants violate the Jacobi identity at {witness}")
        return spec

    @classmethod
    def from_json(cls, text: str, require_jacobi: bool = True) -> "LieAlgebraSpec":
        return cls.from_dict(json.loads(text), require_jacobi=require_jacobi)

    @classmethod
    def from_file(cls, path, require_jacobi: bool = True) -> "LieAlgebraSpec":
        with open(path, "r", encoding="utf-8") as fh:
            return cls.from_json(fh.read(), require_jacobi=require_jacobi)

    def to_dict(self) -> dict:
        entries = []
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                coeffs = {
                    str(k): str(c) for k, c in enumerate(self.constants[i][j]) if c
                }
                if coeffs:
                    entries.append({"i": i, "j": j, "coeffs": coeffs})
        return {"dim": self.dim, "names": list(self.names), "brackets": entries}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)


def jacobi_check(algebra: LieAlgebraSpec):
    """Check the Jacobi identity on the structure constants.

    Returns ``(True, None)`` when
    ``sum_m (c[i][j][m] c[m][k][l] + c[j][k][m] c[m][i][l] + c[k][i][m] c[m][j][l]) = 0``
    holds for every (i, j, k, l); otherwise ``(False, (i, j, k, l))`` with the
    first violating index tuple in lexicographic scan order.
    """
    n = algebra.dim
    c = algebra.constants
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    total = ZERO
                    for m in range(n):
                        total += (
                            c[i][j][m] * c[m][k][l]
                            + c[j][k][m] * c[m][i][l]
                            + c[k][i][m] * c[m][j][l]
                        )
                    if total:
                        return False, (i, j, k, l)
    return True, None


@lru_cache(maxsize=None)
def su2() -> LieAlgebraSpec:
    """The built-in three dimensional algebra with [X,Y]=Z, [Y,Z]=X, [Z,X]=Y."""
    return LieAlgebraSpec.from_brackets(
        3,
        ("x", "y", "z"),
        {(0, 1): {2: 1}, (1, 2): {0: 1}, (0, 2): {1: -1}},
    )


def load_algebra_file(path, require_jacobi: bool = True):
    """Load an algebra file, returning (spec, casimir_fragment_or_None)."""
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    spec = LieAlgebraSpec.from_dict(data, require_jacobi=require_jacobi)
    fragment = data.get("casimir")
    return spec, fragment
