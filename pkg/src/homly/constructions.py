"""Derived operations and twisting constructions.

Every construction returns a new :class:`Algebra`.  Hypotheses (input axiom
systems, endomorphism and commutation conditions) are checked up front and a
:class:`PreconditionError` carrying the failing report is raised when they do
not hold.
"""

from __future__ import annotations

import numpy as np

from .algebra import Algebra, BinaryTable, TernaryTable
from .errors import PreconditionError, SuiteInapplicableError
from .exact import LinearMap, map_compose, map_power, maps_commute
from .expr import Context, alpha, b, comm, hom_assoc, jacobian, t, tabulate, variables
from .morphisms import is_endomorphism
from .report import CheckReport
from .suites import (
    algebra_context,
    check_hom_jacobi,
    check_hom_ly,
    check_hom_malcev,
    check_ly,
    ternary_33_expr,
    ternary_41_expr,
)

_x, _y, _z = variables("x y z")
_XYZ = ("x", "y", "z")


def _need_binary(A: Algebra, what: str) -> Context:
    if A.binary is None:
        raise SuiteInapplicableError(f"{what} needs a binary operation")
    return algebra_context(A)


def commutator_product(A: Algebra) -> BinaryTable:
    ctx = _need_binary(A, "commutator_product")
    return tabulate(comm(_x, _y), ctx, ("x", "y"))


def hom_associator(A: Algebra) -> TernaryTable:
    """Table of ``(x*y)*alpha(z) - alpha(x)*(y*z)``."""
    ctx = _need_binary(A, "hom_associator")
    return tabulate(hom_assoc(_x, _y, _z), ctx, _XYZ)


def prop24_triple(A: Algebra) -> Algebra:
    """Ternary-only algebra ``[[x,y], alpha z] - as(x,y,z) + as(y,x,z)`` with the same twist."""
    ctx = _need_binary(A, "prop24_triple")
    ctx.add("bin", "[]", commutator_product(A))
    ctx.add("ter", "as", hom_associator(A))
    node = (b(b(_x, _y, "[]"), alpha(_z), "[]")
            - _as(_x, _y, _z) + _as(_y, _x, _z))
    table = tabulate(node, ctx, _XYZ)
    return Algebra(A.dim, None, table, A.alpha, _derived_name(A, "prop24"), A.basis)


def _as(p, q, r):
    return t(p, q, r, "as")


def j_alpha(A: Algebra) -> TernaryTable:
    ctx = _need_binary(A, "j_alpha")
    return tabulate(jacobian(_x, _y, _z), ctx, _XYZ)


def ternary_41(A: Algebra) -> TernaryTable:
    """``{x,y,z} = -J_alpha(x,y,z) + 2[[x,y], alpha(z)]``."""
    ctx = _need_binary(A, "ternary_41")
    return tabulate(ternary_41_expr(_x, _y, _z), ctx, _XYZ)


def ternary_33(A: Algebra) -> TernaryTable:
    """``(x*y)*z - (y*z)*x - (z*x)*y``."""
    ctx = _need_binary(A, "ternary_33")
    return tabulate(ternary_33_expr(_x, _y, _z), ctx, _XYZ)


def _apply_to_outputs(table: np.ndarray, m: LinearMap) -> np.ndarray:
    # table[..., k] -> sum_k M[r, k] table[..., k]
    if table.size == 0:
        return table
    return np.tensordot(table, m.entries.T, axes=([-1], [0]))


def _derived_name(A: Algebra, tag: str) -> str:
    return f"{A.name}|{tag}" if A.name else tag


def _require(report: CheckReport, message: str) -> None:
    if not report.passed:
        axiom, cex = report.first_failure()
        raise PreconditionError(f"{message} (axiom {axiom} fails at {cex.indices})", report)


def _twist_tables(A: Algebra, beta: LinearMap, name: str) -> Algebra:
    binary = None if A.binary is None else _apply_to_outputs(A.binary, beta)
    ternary = None if A.ternary is None else _apply_to_outputs(A.ternary, map_power(beta, 2))
    return Algebra(A.dim, binary, ternary, map_compose(beta, A.alpha), name, A.basis)


def yau_twist(A: Algebra, beta: LinearMap) -> Algebra:
    """Twist by a commuting endomorphism: ``beta(x*y)``, ``beta^2{x,y,z}``, twist ``beta alpha``."""
    _require(is_endomorphism(A, beta), "beta is not an endomorphism of the algebra")
    if not maps_commute(beta, A.alpha):
        raise PreconditionError("beta does not commute with alpha")
    return _twist_tables(A, beta, _derived_name(A, "twist"))


def twist_ly(A: Algebra, beta: LinearMap) -> Algebra:
    _require(check_ly(A), "input is not a Lie-Yamaguti algebra")
    untwisted = A.replace(alpha=LinearMap.identity(A.dim))
    _require(is_endomorphism(untwisted, beta), "beta is not an endomorphism of the algebra")
    return _twist_tables(untwisted, beta, _derived_name(A, "twist-ly"))


def twist_malcev(A: Algebra, beta: LinearMap) -> Algebra:
    """Hom-LY algebra ``(beta(x*y), beta^2((x*y)*z - (y*z)*x - (z*x)*y), beta)`` from a Malcev algebra.

    ``beta`` is only required to preserve the binary product.
    """
    plain = Algebra(A.dim, A.binary, None, None, A.name, A.basis)
    if plain.binary is None:
        raise SuiteInapplicableError("twist_malcev needs a binary operation")
    _require(check_hom_malcev(plain), "input is not a Malcev algebra")
    _require(is_endomorphism(plain, beta), "beta is not an endomorphism of the product")
    ly = plain.replace(ternary=ternary_33(plain))
    return _twist_tables(ly, beta, _derived_name(A, "twist-malcev"))


def lie_to_ly(A: Algebra) -> Algebra:
    """Lie algebra with ternary ``[[x,y],z]`` and identity twist."""
    plain = Algebra(A.dim, A.binary, None, None, A.name, A.basis)
    if plain.binary is None:
        raise SuiteInapplicableError("lie_to_ly needs a binary operation")
    _require(check_hom_jacobi(plain), "input is not a Lie algebra")
    ctx = algebra_context(plain)
    ternary = tabulate(b(b(_x, _y), _z), ctx, _XYZ)
    return plain.replace(ternary=ternary, name=_derived_name(A, "lie-ly"))


def eq41_algebra(A: Algebra) -> Algebra:
    """Binary part of ``A`` with the ternary operation built from it by ``ternary_41``."""
    return Algebra(A.dim, A.binary, ternary_41(A), A.alpha, _derived_name(A, "eq41"), A.basis)


def probe_homly_from_hommalcev(A: Algebra, max_counterexamples: int = 5) -> CheckReport:
    """Run the strict Hom-LY suite on a Hom-Malcev algebra carrying the ``ternary_41`` operation.

    No verdict is expected; the report is returned as is.
    """
    if A.binary is None:
        raise SuiteInapplicableError("probe needs a binary operation")
    _require(check_hom_malcev(A), "input is not a Hom-Malcev algebra")
    report = check_hom_ly(eq41_algebra(A), "strict", max_counterexamples)
    return CheckReport("probe", report.axiom_verdicts, report.informational)
