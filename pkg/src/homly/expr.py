"""Multilinear expressions over basis variables, evaluated as exact tensors.

Every identity handled by the package is multilinear in its variables, so it
is decided by its values on basis tuples.  An expression such as
``t(x, y, b(u, v)) - b(t(x, y, u), A2(v))`` is evaluated once into a tensor
whose leading axes run over the basis index of each variable and whose last
axis holds output coordinates.  Entries are Python integers over a single
common denominator, so contractions stay exact without ``Fraction`` overhead.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import numpy as np

from .exact import LinearMap

# -- scaled integer tensors ----------------------------------------------------


@dataclass(frozen=True)
class QTensor:
    """``num / den`` with ``num`` an object array of ints and ``den > 0``."""

    num: np.ndarray
    den: int

    @classmethod
    def from_rationals(cls, arr: np.ndarray) -> "QTensor":
        flat = [Fraction(v) for v in arr.flat]
        den = math.lcm(*(q.denominator for q in flat)) if flat else 1
        num = np.array([q.numerator * (den // q.denominator) for q in flat], dtype=object)
        return cls(num.reshape(arr.shape), den)

    def to_rationals(self) -> np.ndarray:
        out = np.empty(self.num.shape, dtype=object)
        for idx, v in np.ndenumerate(self.num):
            out[idx] = Fraction(int(v), self.den)
        return out

    def scaled(self, c: int) -> "QTensor":
        return QTensor(self.num * c, self.den)


def _lin_combine(parts: list[tuple[int, QTensor]]) -> QTensor:
    den = math.lcm(*(q.den for _, q in parts))
    num = None
    for c, q in parts:
        term = q.num * (c * (den // q.den))
        num = term if num is None else num + term
    return QTensor(num, den)


def _contract(a: QTensor, b: QTensor, axis_a: int, axis_b: int) -> QTensor:
    num = np.tensordot(a.num, b.num, axes=([axis_a], [axis_b]))
    if not isinstance(num, np.ndarray):
        num = np.array(num, dtype=object)
    return QTensor(num.astype(object, copy=False), a.den * b.den)


# -- expression nodes ----------------------------------------------------------


class Node:
    def __add__(self, other: "Node") -> "Lin":
        return Lin(_terms(self) + _terms(other))

    def __sub__(self, other: "Node") -> "Lin":
        return Lin(_terms(self) + tuple((-c, n) for c, n in _terms(other)))

    def __neg__(self) -> "Lin":
        return Lin(tuple((-c, n) for c, n in _terms(self)))

    def __rmul__(self, c: int) -> "Lin":
        return Lin(tuple((c * k, n) for k, n in _terms(self)))

    def variables(self) -> tuple[str, ...]:
        raise NotImplementedError


def _terms(node: Node) -> tuple[tuple[int, Node], ...]:
    if isinstance(node, Lin):
        return node.terms
    return ((1, node),)


@dataclass(frozen=True, eq=False)
class Var(Node):
    name: str

    def variables(self):
        return (self.name,)


@dataclass(frozen=True, eq=False)
class Map(Node):
    key: str
    arg: Node

    def variables(self):
        return self.arg.variables()


@dataclass(frozen=True, eq=False)
class Bin(Node):
    left: Node
    right: Node
    op: str = "*"

    def variables(self):
        return _union(self.left.variables(), self.right.variables())


@dataclass(frozen=True, eq=False)
class Ter(Node):
    a: Node
    b: Node
    c: Node
    op: str = "{}"

    def variables(self):
        return _union(self.a.variables(), self.b.variables(), self.c.variables())


@dataclass(frozen=True, eq=False)
class Lin(Node):
    terms: tuple[tuple[int, Node], ...]

    def variables(self):
        return _union(*(n.variables() for _, n in self.terms))


def _union(*groups: tuple[str, ...]) -> tuple[str, ...]:
    seen: list[str] = []
    for g in groups:
        for v in g:
            if v not in seen:
                seen.append(v)
    return tuple(seen)


# -- builders ------------------------------------------------------------------

def variables(names: str) -> tuple[Var, ...]:
    return tuple(Var(s) for s in names.split())


def b(x: Node, y: Node, op: str = "*") -> Bin:
    return Bin(x, y, op)


def t(x: Node, y: Node, z: Node, op: str = "{}") -> Ter:
    return Ter(x, y, z, op)


def alpha(x: Node, power: int = 1, key: str = "alpha") -> Node:
    if power == 0:
        return x
    return Map(key if power == 1 else f"{key}^{power}", x)


def cyc(f: Callable[[Node, Node, Node], Node], x: Node, y: Node, z: Node) -> Lin:
    """Sum of ``f`` over the cyclic permutations of ``(x, y, z)``."""
    return f(x, y, z) + f(y, z, x) + f(z, x, y)


def comm(x: Node, y: Node, op: str = "*") -> Lin:
    return b(x, y, op) - b(y, x, op)


def hom_assoc(x: Node, y: Node, z: Node, op: str = "*") -> Lin:
    return b(b(x, y, op), alpha(z), op) - b(alpha(x), b(y, z, op), op)


def jacobian(x: Node, y: Node, z: Node, op: str = "*") -> Lin:
    """Twisted Jacobian: sum over cyclic shifts of ``[[x, y], alpha(z)]``."""
    return cyc(lambda p, q, r: b(b(p, q, op), alpha(r), op), x, y, z)


# -- evaluation ----------------------------------------------------------------


class Context:
    """Tables and maps an expression is evaluated against, cached as QTensors."""

    def __init__(self, n: int, binary=None, ternary=None, maps=None):
        self.n = n
        self._raw = {}
        self._cache: dict[tuple[str, str], QTensor] = {}
        for key, tab in (binary or {}).items():
            self._raw[("bin", key)] = tab
        for key, tab in (ternary or {}).items():
            self._raw[("ter", key)] = tab
        for key, m in (maps or {}).items():
            self._raw[("map", key)] = m

    def add(self, kind: str, key: str, value) -> None:
        self._raw[(kind, key)] = value
        self._cache.pop((kind, key), None)

    def get(self, kind: str, key: str) -> QTensor:
        slot = (kind, key)
        if slot not in self._cache:
            if slot not in self._raw:
                raise KeyError(f"no {kind} operand named {key!r} in context")
            raw = self._raw[slot]
            if isinstance(raw, QTensor):
                q = raw
            elif isinstance(raw, LinearMap):
                q = QTensor.from_rationals(raw.entries)
            else:
                q = QTensor.from_rationals(np.asarray(raw, dtype=object))
            self._cache[slot] = q
        return self._cache[slot]

    def identity(self) -> QTensor:
        slot = ("id", "")
        if slot not in self._cache:
            self._cache[slot] = QTensor(np.eye(self.n, dtype=int).astype(object), 1)
        return self._cache[slot]


def _dedup(names: list[str], q: QTensor) -> tuple[tuple[str, ...], QTensor]:
    """Collapse repeated variable axes onto their diagonal."""
    names = list(names)
    num = q.num
    while True:
        dup = next(((i, j) for i in range(len(names)) for j in range(i + 1, len(names))
                    if names[i] == names[j]), None)
        if dup is None:
            return tuple(names), QTensor(num, q.den)
        i, j = dup
        num = np.diagonal(num, axis1=i, axis2=j)  # diagonal goes last
        num = np.moveaxis(num, -1, i)
        del names[j]


def evaluate(node: Node, ctx: Context) -> tuple[tuple[str, ...], QTensor]:
    """Tensor of ``node`` with one axis per distinct variable, then the output axis."""
    if isinstance(node, Var):
        return (node.name,), ctx.identity()
    if isinstance(node, Map):
        names, q = evaluate(node.arg, ctx)
        m = ctx.get("map", node.key)
        # result[..., r] = sum_k q[..., k] * M[r, k]
        return names, _contract(q, m, q.num.ndim - 1, 1)
    if isinstance(node, Bin):
        c = ctx.get("bin", node.op)
        n1, q1 = evaluate(node.left, ctx)
        n2, q2 = evaluate(node.right, ctx)
        r = _contract(q1, c, q1.num.ndim - 1, 0)          # [V1..., j, k]
        r = _contract(q2, r, q2.num.ndim - 1, len(n1))    # [V2..., V1..., k]
        return _dedup(list(n2) + list(n1), r)
    if isinstance(node, Ter):
        d = ctx.get("ter", node.op)
        n1, q1 = evaluate(node.a, ctx)
        n2, q2 = evaluate(node.b, ctx)
        n3, q3 = evaluate(node.c, ctx)
        r = _contract(q1, d, q1.num.ndim - 1, 0)                    # [V1, j, k, l]
        r = _contract(q2, r, q2.num.ndim - 1, len(n1))              # [V2, V1, k, l]
        r = _contract(q3, r, q3.num.ndim - 1, len(n1) + len(n2))    # [V3, V2, V1, l]
        return _dedup(list(n3) + list(n2) + list(n1), r)
    if isinstance(node, Lin):
        if not node.terms:
            raise ValueError("empty linear combination")
        parts = []
        order = None
        for coeff, sub in node.terms:
            names, q = evaluate(sub, ctx)
            if order is None:
                order = names
            q = _align(names, q, order)
            parts.append((coeff, q))
        return order, _lin_combine(parts)
    raise TypeError(f"not an expression node: {node!r}")


def _align(names: tuple[str, ...], q: QTensor, order: tuple[str, ...]) -> QTensor:
    if names == order:
        return q
    if sorted(names) != sorted(order):
        raise ValueError(f"terms over different variables: {names} vs {order}")
    perm = [names.index(v) for v in order] + [len(names)]
    return QTensor(np.transpose(q.num, perm), q.den)


def evaluate_ordered(node: Node, ctx: Context, order: tuple[str, ...]) -> QTensor:
    names, q = evaluate(node, ctx)
    return _align(names, q, tuple(order))


def tabulate(node: Node, ctx: Context, order: tuple[str, ...]) -> np.ndarray:
    """Structure constants of ``node`` as an object array of fractions."""
    return evaluate_ordered(node, ctx, order).to_rationals()
