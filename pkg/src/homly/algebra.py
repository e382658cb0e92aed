"""Binary-ternary Hom-algebras given by structure constants on a fixed basis."""

from __future__ import annotations

import dataclasses
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from .errors import DimensionMismatchError
from .exact import LinearMap, Vector, as_rational, basis_vector

# c[i, j, k]: e_i * e_j = sum_k c[i, j, k] e_k
BinaryTable = np.ndarray
# d[i, j, k, l]: {e_i, e_j, e_k} = sum_l d[i, j, k, l] e_l
TernaryTable = np.ndarray


def rational_table(values, shape: tuple[int, ...]) -> np.ndarray:
    """Read-only object array of fractions with the given shape."""
    arr = np.asarray(values, dtype=object)
    if arr.size == 0 and 0 in shape:
        arr = np.empty(shape, dtype=object)
    if arr.shape != shape:
        raise DimensionMismatchError(f"table shape {arr.shape}, expected {shape}")
    out = np.empty(shape, dtype=object)
    for idx, v in np.ndenumerate(arr):
        out[idx] = as_rational(v)
    out.flags.writeable = False
    return out


def zero_table(n: int, arity: int) -> np.ndarray:
    return rational_table(np.zeros((n,) * (arity + 1), dtype=int).astype(object), (n,) * (arity + 1))


@dataclass(frozen=True, eq=False)
class Algebra:
    """A vector space with optional binary and ternary operations and a twist map.

    An absent table stands for the zero operation.  ``alpha`` defaults to the
    identity.
    """

    dim: int
    binary: Optional[BinaryTable] = None
    ternary: Optional[TernaryTable] = None
    alpha: Optional[LinearMap] = None
    name: str = ""
    basis: tuple[str, ...] = field(default=())

    def __post_init__(self):
        n = self.dim
        if n < 0:
            raise ValueError("dimension must be non-negative")
        basis = tuple(self.basis) if self.basis else tuple(f"e{i + 1}" for i in range(n))
        if len(basis) != n or len(set(basis)) != n:
            raise ValueError(f"basis must have {n} distinct labels")
        object.__setattr__(self, "basis", basis)
        if self.binary is not None:
            object.__setattr__(self, "binary", rational_table(self.binary, (n,) * 3))
        if self.ternary is not None:
            object.__setattr__(self, "ternary", rational_table(self.ternary, (n,) * 4))
        alpha = self.alpha if self.alpha is not None else LinearMap.identity(n)
        if not isinstance(alpha, LinearMap):
            alpha = LinearMap(alpha)
        if alpha.dim != n:
            raise DimensionMismatchError(f"alpha is {alpha.dim}x{alpha.dim}, algebra has dim {n}")
        object.__setattr__(self, "alpha", alpha)

    def replace(self, **changes) -> "Algebra":
        return dataclasses.replace(self, **changes)

    def e(self, i: int) -> Vector:
        return basis_vector(self.dim, i)

    def binary_or_zero(self) -> BinaryTable:
        return self.binary if self.binary is not None else zero_table(self.dim, 2)

    def ternary_or_zero(self) -> TernaryTable:
        return self.ternary if self.ternary is not None else zero_table(self.dim, 3)

    def __repr__(self) -> str:
        parts = [f"dim={self.dim}"]
        if self.name:
            parts.insert(0, repr(self.name))
        parts.append(f"binary={'yes' if self.binary is not None else 'no'}")
        parts.append(f"ternary={'yes' if self.ternary is not None else 'no'}")
        return f"Algebra({', '.join(parts)})"


def _check_dims(A: Algebra, *xs: Vector) -> None:
    for x in xs:
        if len(x) != A.dim:
            raise DimensionMismatchError(f"element of dim {len(x)} in algebra of dim {A.dim}")


def eval_binary(A: Algebra, x: Vector, y: Vector) -> Vector:
    _check_dims(A, x, y)
    n = A.dim
    out = [Fraction(0)] * n
    if A.binary is None:
        return tuple(out)
    c = A.binary
    for i in range(n):
        if x[i] == 0:
            continue
        for j in range(n):
            s = x[i] * y[j]
            if s == 0:
                continue
            for k in range(n):
                if c[i, j, k]:
                    out[k] += s * c[i, j, k]
    return tuple(out)


def eval_ternary(A: Algebra, x: Vector, y: Vector, z: Vector) -> Vector:
    _check_dims(A, x, y, z)
    n = A.dim
    out = [Fraction(0)] * n
    if A.ternary is None:
        return tuple(out)
    d = A.ternary
    for i in range(n):
        if x[i] == 0:
            continue
        for j in range(n):
            s = x[i] * y[j]
            if s == 0:
                continue
            for k in range(n):
                t = s * z[k]
                if t == 0:
                    continue
                for l in range(n):
                    if d[i, j, k, l]:
                        out[l] += t * d[i, j, k, l]
    return tuple(out)


def is_multiplicative(A: Algebra, max_counterexamples: int = 5):
    from .suites import check_multiplicativity

    return check_multiplicativity(A, max_counterexamples=max_counterexamples)


def random_algebra(
    dim: int,
    seed: int,
    *,
    skew_binary: bool = False,
    with_ternary: bool = False,
    alpha: str = "identity",
    low: int = -3,
    high: int = 3,
) -> Algebra:
    """Seeded random algebra with integer structure constants in ``[low, high]``."""
    if dim < 0:
        raise ValueError("dimension must be non-negative")
    if alpha not in ("identity", "random"):
        raise ValueError(f"alpha must be 'identity' or 'random', got {alpha!r}")
    rng = random.Random(seed)
    n = dim
    c = np.zeros((n, n, n), dtype=object)
    for i in range(n):
        for j in range(n):
            if skew_binary and j < i:
                c[i, j, :] = -c[j, i, :]
                continue
            if skew_binary and i == j:
                continue
            for k in range(n):
                c[i, j, k] = rng.randint(low, high)
    d = None
    if with_ternary:
        d = np.array([rng.randint(low, high) for _ in range(n ** 4)], dtype=object).reshape((n,) * 4)
    a = None
    if alpha == "random":
        a = LinearMap([[rng.randint(low, high) for _ in range(n)] for _ in range(n)])
    return Algebra(dim=n, binary=c, ternary=d, alpha=a, name=f"random-{n}-{seed}")


def algebras_equal(A1: Algebra, A2: Algebra) -> bool:
    if A1.dim != A2.dim:
        return False
    if not np.array_equal(A1.binary_or_zero(), A2.binary_or_zero()):
        return False
    if not np.array_equal(A1.ternary_or_zero(), A2.ternary_or_zero()):
        return False
    return A1.alpha == A2.alpha


def cyclic_rotation(n: int) -> LinearMap:
    """e1 -> e2 -> ... -> en -> e1."""
    return LinearMap.permutation([(j + 1) % n for j in range(n)])


def from_products(dim: int, products: Sequence[tuple[int, int, Sequence]], **kw) -> Algebra:
    """Build a binary-only algebra from ``(i, j, coords)`` triples; unlisted products are zero."""
    c = np.zeros((dim, dim, dim), dtype=object)
    for i, j, coords in products:
        c[i, j, :] = list(coords)
    return Algebra(dim=dim, binary=c, **kw)
