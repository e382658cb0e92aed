"""Exact rational scalars, coordinate vectors and square rational matrices.

Scalars are :class:`fractions.Fraction`, which already keeps a reduced form
with a positive denominator.  Vectors are tuples of fractions.  Column ``j``
of a :class:`LinearMap` is the image of the basis vector ``e_j``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .errors import DimensionMismatchError, MalformedScalarError

Rational = Fraction
Vector = tuple  # tuple[Fraction, ...]

_RATIONAL_RE = re.compile(r"^([-−]?)(\d+)(?:/(\d+))?$")


def rat_canonical(num: int, den: int) -> Fraction:
    if den == 0:
        raise MalformedScalarError(f"zero denominator in {num}/{den}")
    return Fraction(int(num), int(den))


def parse_rational(text: str) -> Fraction:
    """Parse ``p`` or ``p/q``; only ``p`` may carry a sign and ``q`` must be positive."""
    if not isinstance(text, str):
        raise MalformedScalarError(f"rational must be given as a string, got {text!r}")
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise MalformedScalarError(f"not a rational: {text!r}")
    sign, p, q = m.groups()
    num = -int(p) if sign else int(p)
    den = int(q) if q is not None else 1
    if den == 0:
        raise MalformedScalarError(f"zero denominator: {text!r}")
    return Fraction(num, den)


def format_rational(q: Fraction) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def as_rational(value) -> Fraction:
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, float):
        raise MalformedScalarError("floating point values are not accepted")
    return Fraction(value)


# -- vectors -------------------------------------------------------------------

def vector(coords: Iterable) -> Vector:
    return tuple(as_rational(c) for c in coords)


def zero_vector(n: int) -> Vector:
    return (Fraction(0),) * n


def basis_vector(n: int, i: int) -> Vector:
    return tuple(Fraction(1 if k == i else 0) for k in range(n))


def vec_add(x: Vector, y: Vector) -> Vector:
    _check_same(len(x), len(y))
    return tuple(a + b for a, b in zip(x, y))


def vec_sub(x: Vector, y: Vector) -> Vector:
    _check_same(len(x), len(y))
    return tuple(a - b for a, b in zip(x, y))


def vec_scale(c, x: Vector) -> Vector:
    c = Fraction(c)
    return tuple(c * a for a in x)


def is_zero(x: Vector) -> bool:
    return all(a == 0 for a in x)


def _check_same(a: int, b: int) -> None:
    if a != b:
        raise DimensionMismatchError(f"dimension mismatch: {a} vs {b}")


# -- linear maps ---------------------------------------------------------------

def _frozen(arr: np.ndarray) -> np.ndarray:
    arr.flags.writeable = False
    return arr


class LinearMap:
    """An immutable ``n x n`` rational matrix acting on column vectors."""

    __slots__ = ("entries",)

    def __init__(self, rows: Sequence[Sequence] | np.ndarray):
        arr = np.array(rows, dtype=object)
        if arr.size == 0 and (arr.ndim < 2 or arr.shape == (0, 0)):
            arr = np.empty((0, 0), dtype=object)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise DimensionMismatchError(f"linear map must be square, got shape {arr.shape}")
        out = np.empty(arr.shape, dtype=object)
        for idx, v in np.ndenumerate(arr):
            out[idx] = as_rational(v)
        self.entries = _frozen(out)

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    @classmethod
    def identity(cls, n: int) -> "LinearMap":
        return cls.scalar(n, 1)

    @classmethod
    def zero(cls, n: int) -> "LinearMap":
        return cls.scalar(n, 0)

    @classmethod
    def scalar(cls, n: int, c) -> "LinearMap":
        c = as_rational(c)
        return cls([[c if r == k else Fraction(0) for k in range(n)] for r in range(n)])

    @classmethod
    def diagonal(cls, values: Sequence) -> "LinearMap":
        n = len(values)
        return cls([[as_rational(values[r]) if r == k else Fraction(0) for k in range(n)]
                    for r in range(n)])

    @classmethod
    def permutation(cls, perm: Sequence[int], signs: Sequence[int] | None = None) -> "LinearMap":
        """Map ``e_j -> signs[j] * e_{perm[j]}``."""
        n = len(perm)
        if sorted(perm) != list(range(n)):
            raise ValueError(f"not a permutation: {perm}")
        signs = signs or [1] * n
        rows = [[Fraction(0)] * n for _ in range(n)]
        for j, p in enumerate(perm):
            rows[p][j] = Fraction(signs[j])
        return cls(rows)

    def column(self, j: int) -> Vector:
        return tuple(self.entries[:, j])

    def rows(self) -> list[list[Fraction]]:
        return [list(r) for r in self.entries]

    def __call__(self, x: Vector) -> Vector:
        return map_apply(self, x)

    def __matmul__(self, other: "LinearMap") -> "LinearMap":
        return map_compose(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinearMap):
            return NotImplemented
        return self.entries.shape == other.entries.shape and bool(np.all(self.entries == other.entries))

    def __hash__(self) -> int:
        return hash((self.dim, tuple(self.entries.flat)))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(format_rational(v) for v in row) for row in self.entries)
        return f"LinearMap([{body}])"


def map_apply(m: LinearMap, x: Vector) -> Vector:
    _check_same(m.dim, len(x))
    n = m.dim
    e = m.entries
    return tuple(sum((e[r, k] * x[k] for k in range(n)), Fraction(0)) for r in range(n))


def map_compose(m1: LinearMap, m2: LinearMap) -> LinearMap:
    """``m1 o m2``, i.e. apply ``m2`` first."""
    _check_same(m1.dim, m2.dim)
    if m1.dim == 0:
        return LinearMap(np.empty((0, 0), dtype=object))
    return LinearMap(np.dot(m1.entries, m2.entries))


def map_power(m: LinearMap, k: int) -> LinearMap:
    if k < 0:
        raise ValueError("map_power needs a non-negative exponent")
    result = LinearMap.identity(m.dim)
    base = m
    while k:
        if k & 1:
            result = map_compose(result, base)
        k >>= 1
        if k:
            base = map_compose(base, base)
    return result


def maps_commute(m1: LinearMap, m2: LinearMap) -> bool:
    _check_same(m1.dim, m2.dim)
    return map_compose(m1, m2) == map_compose(m2, m1)
