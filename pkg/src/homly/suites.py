"""Exhaustive identity checkers over basis tuples.

Each axiom is written as a multilinear expression that must vanish; its
residual tensor is computed exactly and every nonzero basis tuple becomes a
counterexample.
"""

from __future__ import annotations

from typing import Callable

from .algebra import Algebra
from .errors import SuiteInapplicableError, UnknownSuiteError
from .exact import LinearMap, map_power
from .expr import (
    Context,
    Node,
    alpha,
    b,
    comm,
    cyc,
    evaluate_ordered,
    hom_assoc,
    jacobian,
    t,
    tabulate,
    variables,
)
from .report import DEFAULT_MAX_COUNTEREXAMPLES, CheckReport, verdict_from_residual

x, y, z, u, v, w = variables("x y z u v w")


def a(node: Node, k: int = 1) -> Node:
    return alpha(node, k)


# Each axiom: (id, variable order, expression that must vanish).
Axiom = tuple[str, tuple[str, ...], Node]

LY_AXIOMS: list[Axiom] = [
    ("A1", ("x", "y"), b(x, y) + b(y, x)),
    ("A2", ("x", "y", "z"), t(x, y, z) + t(y, x, z)),
    ("A3", ("x", "y", "z"), cyc(lambda p, q, r: b(b(p, q), r) + t(p, q, r), x, y, z)),
    ("A4", ("x", "y", "z", "u"), cyc(lambda p, q, r: t(b(p, q), r, u), x, y, z)),
    ("A5", ("x", "y", "u", "v"), t(x, y, b(u, v)) - b(t(x, y, u), v) - b(u, t(x, y, v))),
    ("A6", ("x", "y", "u", "v", "w"),
     t(x, y, t(u, v, w)) - t(t(x, y, u), v, w) - t(u, t(x, y, v), w) - t(u, v, t(x, y, w))),
]

MULT_BIN: Axiom = ("B1", ("x", "y"), a(b(x, y)) - b(a(x), a(y)))
MULT_TER: Axiom = ("B2", ("x", "y", "z"), a(t(x, y, z)) - t(a(x), a(y), a(z)))

B6_STRICT = cyc(lambda p, q, r: t(b(p, q), a(r), a(u)), x, y, z)
B6_PRINTED = cyc(lambda p, q, r: t(b(p, q), a(r), a(u)) + t(b(r, q), a(p), a(u)), x, y, z)

HOM_LY_AXIOMS: list[Axiom] = [
    MULT_BIN,
    MULT_TER,
    ("B3", ("x", "y"), b(x, y) + b(y, x)),
    ("B4", ("x", "y", "z"), t(x, y, z) + t(y, x, z)),
    ("B5", ("x", "y", "z"), cyc(lambda p, q, r: b(b(p, q), a(r)) + t(p, q, r), x, y, z)),
    ("B6", ("x", "y", "z", "u"), B6_STRICT),
    ("B7", ("x", "y", "u", "v"),
     t(a(x), a(y), b(u, v)) - b(t(x, y, u), a(v, 2)) - b(a(u, 2), t(x, y, v))),
    ("B8", ("x", "y", "u", "v", "w"),
     t(a(x, 2), a(y, 2), t(a(u, 2), a(v, 2), w))
     - t(t(x, y, a(u, 2)), a(v, 4), a(w, 2))
     - t(a(u, 4), t(x, y, a(v, 2)), a(w, 2))
     - t(a(u, 4), a(v, 4), t(x, y, w))),
]

HOM_NAMBU: Axiom = (
    "HN", ("x", "y", "u", "v", "w"),
    t(a(x), a(y), t(u, v, w))
    - t(t(x, y, u), a(v), a(w))
    - t(a(u), t(x, y, v), a(w))
    - t(a(u), a(v), t(x, y, w)),
)

TRIPLE_SKEW: Axiom = ("T1", ("u", "v", "w"), t(u, v, w) + t(v, u, w))
TRIPLE_CYCLIC: Axiom = ("T2", ("u", "v", "w"), cyc(t, u, v, w))

SKEW: Axiom = ("SKEW", ("x", "y"), b(x, y) + b(y, x))

HOM_JACOBI: Axiom = ("HJ", ("x", "y", "z"), jacobian(x, y, z))

HOM_MALCEV: Axiom = (
    "M", ("x", "y", "z"),
    jacobian(a(x), a(y), b(x, z)) - b(jacobian(x, y, z), a(x, 2)),
)

EQ44: Axiom = (
    "E44", ("x", "y", "u", "v"),
    jacobian(a(x), a(y), b(u, v))
    - b(jacobian(x, y, u), a(v, 2))
    - b(a(u, 2), jacobian(x, y, v))
    + 2 * jacobian(a(u), a(v), b(x, y)),
)

EQ45: Axiom = (
    "E45", ("x", "y", "u", "v"),
    t(a(x), a(y), b(u, v), "t41") - b(t(x, y, u, "t41"), a(v, 2)) - b(a(u, 2), t(x, y, v, "t41")),
)

# Hom-Akivis identity, written with the commutator "[]" and Hom-associator "as" tables.
HOM_AKIVIS: Axiom = (
    "AK", ("x", "y", "z"),
    cyc(lambda p, q, r: b(b(p, q, "[]"), a(r), "[]"), x, y, z)
    - cyc(lambda p, q, r: t(p, q, r, "as"), x, y, z)
    + cyc(lambda p, q, r: t(q, p, r, "as"), x, y, z),
)


def ternary_41_expr(p: Node, q: Node, r: Node) -> Node:
    return -jacobian(p, q, r) + 2 * b(b(p, q), a(r))


def ternary_33_expr(p: Node, q: Node, r: Node) -> Node:
    return b(b(p, q), r) - b(b(q, r), p) - b(b(r, p), q)


def algebra_context(A: Algebra, twist: LinearMap | None = None) -> Context:
    """Context with the algebra's tables and alpha powers 1, 2, 4."""
    al = twist if twist is not None else A.alpha
    a2 = map_power(al, 2)
    return Context(
        A.dim,
        binary={"*": A.binary_or_zero()},
        ternary={"{}": A.ternary_or_zero()},
        maps={"alpha": al, "alpha^2": a2, "alpha^4": map_power(a2, 2)},
    )


def run_axioms(suite_id: str, axioms: list[Axiom], ctx: Context,
               max_counterexamples: int = DEFAULT_MAX_COUNTEREXAMPLES,
               informational: list[Axiom] = ()) -> CheckReport:
    def run(ax: Axiom):
        axiom_id, order, node = ax
        res = evaluate_ordered(node, ctx, order)
        return verdict_from_residual(axiom_id, order, res, max_counterexamples)

    return CheckReport(suite_id, tuple(run(ax) for ax in axioms),
                       tuple(run(ax) for ax in informational))


def _need(A: Algebra, suite: str, binary: bool = False, ternary: bool = False) -> None:
    if binary and A.binary is None:
        raise SuiteInapplicableError(f"suite {suite!r} needs a binary operation")
    if ternary and A.ternary is None:
        raise SuiteInapplicableError(f"suite {suite!r} needs a ternary operation")


def _mult_axioms(A: Algebra) -> list[Axiom]:
    axioms = []
    if A.binary is not None:
        axioms.append(MULT_BIN)
    if A.ternary is not None:
        axioms.append(MULT_TER)
    return axioms


def check_ly(A: Algebra, max_counterexamples: int = DEFAULT_MAX_COUNTEREXAMPLES) -> CheckReport:
    _need(A, "ly", binary=True, ternary=True)
    return run_axioms("ly", LY_AXIOMS, algebra_context(A), max_counterexamples)


def check_hom_ly(A: Algebra, b6_mode: str = "strict",
                 max_counterexamples: int = DEFAULT_MAX_COUNTEREXAMPLES) -> CheckReport:
    if b6_mode not in ("strict", "printed"):
        raise ValueError(f"b6_mode must be 'strict' or 'printed', got {b6_mode!r}")
    suite_id = "hom-ly" if b6_mode == "strict" else "hom-ly-printed-b6"
    _need(A, suite_id, binary=True, ternary=True)
    axioms = list(HOM_LY_AXIOMS)
    if b6_mode == "printed":
        axioms[5] = ("B6", ("x", "y", "z", "u"), B6_PRINTED)
    return run_axioms(suite_id, axioms, algebra_context(A), max_counterexamples)


def check_multiplicativity(A: Algebra,
                           max_counterexamples: int = DEFAULT_MAX_COUNTEREXAMPLES) -> CheckReport:
    return run_axioms("multiplicativity", _mult_axioms(A), algebra_context(A), max_counterexamples)


def check_hom_nambu(A: Algebra, max_counterexamples: int = DEFAULT_MAX_COUNTEREXAMPLES) -> CheckReport:
    _need(A, "hom-nambu", ternary=True)
    return run_axioms("hom-nambu", [HOM_NAMBU], algebra_context(A), max_counterexamples,
                      informational=[MULT_TER])


def check_hom_triple(A: Algebra, max_counterexamples: int = DEFAULT_MAX_COUNTEREXAMPLES) -> CheckReport:
    _need(A, "hom-triple", ternary=True)
    return run_axioms("hom-triple", [TRIPLE_SKEW, TRIPLE_CYCLIC], algebra_context(A),
                      max_counterexamples, informational=[MULT_TER])


def check_hom_lie_triple(A: Algebra,
                         max_counterexamples: int = DEFAULT_MAX_COUNTEREXAMPLES) -> CheckReport:
    _need(A, "hom-lts", ternary=True)
    return run_axioms("hom-lts", [TRIPLE_SKEW, TRIPLE_CYCLIC, HOM_NAMBU], algebra_context(A),
                      max_counterexamples, informational=[MULT_TER])


def check_hom_akivis(A: Algebra, max_counterexamples: int = DEFAULT_MAX_COUNTEREXAMPLES) -> CheckReport:
    _need(A, "hom-akivis", binary=True)
    ctx = algebra_context(A)
    ctx.add("bin", "[]", tabulate(comm(x, y), ctx, ("x", "y")))
    ctx.add("ter", "as", tabulate(hom_assoc(x, y, z), ctx, ("x", "y", "z")))
    return run_axioms("hom-akivis", [HOM_AKIVIS], ctx, max_counterexamples,
                      informational=[MULT_BIN])


def check_hom_jacobi(A: Algebra, max_counterexamples: int = DEFAULT_MAX_COUNTEREXAMPLES) -> CheckReport:
    _need(A, "hom-lie", binary=True)
    return run_axioms("hom-lie", [SKEW, HOM_JACOBI], algebra_context(A), max_counterexamples,
                      informational=[MULT_BIN])


def check_hom_malcev(A: Algebra, max_counterexamples: int = DEFAULT_MAX_COUNTEREXAMPLES) -> CheckReport:
    _need(A, "hom-malcev", binary=True)
    return run_axioms("hom-malcev", [SKEW, HOM_MALCEV], algebra_context(A), max_counterexamples,
                      informational=[MULT_BIN])


def check_eq44(A: Algebra, max_counterexamples: int = DEFAULT_MAX_COUNTEREXAMPLES) -> CheckReport:
    _need(A, "eq44", binary=True)
    return run_axioms("eq44", [SKEW, EQ44], algebra_context(A), max_counterexamples,
                      informational=[MULT_BIN])


def check_eq45(A: Algebra, max_counterexamples: int = DEFAULT_MAX_COUNTEREXAMPLES) -> CheckReport:
    _need(A, "eq45", binary=True)
    ctx = algebra_context(A)
    ctx.add("ter", "t41", tabulate(ternary_41_expr(x, y, z), ctx, ("x", "y", "z")))
    return run_axioms("eq45", [SKEW, EQ45], ctx, max_counterexamples, informational=[MULT_BIN])


def _hom_ly_printed(A: Algebra, max_counterexamples: int = DEFAULT_MAX_COUNTEREXAMPLES):
    return check_hom_ly(A, "printed", max_counterexamples)


SUITES: dict[str, tuple[Callable[..., CheckReport], bool, bool]] = {
    # id: (checker, needs binary, needs ternary)
    "ly": (check_ly, True, True),
    "hom-ly": (check_hom_ly, True, True),
    "hom-ly-printed-b6": (_hom_ly_printed, True, True),
    "hom-nambu": (check_hom_nambu, False, True),
    "hom-triple": (check_hom_triple, False, True),
    "hom-lts": (check_hom_lie_triple, False, True),
    "hom-akivis": (check_hom_akivis, True, False),
    "hom-lie": (check_hom_jacobi, True, False),
    "hom-malcev": (check_hom_malcev, True, False),
    "eq44": (check_eq44, True, False),
    "eq45": (check_eq45, True, False),
    "multiplicativity": (check_multiplicativity, False, False),
}

SUITE_IDS = tuple(SUITES) + ("all",)


def run_suite(A: Algebra, suite_id: str,
              max_counterexamples: int = DEFAULT_MAX_COUNTEREXAMPLES) -> CheckReport:
    if suite_id == "all":
        from .report import merge_reports

        reports = []
        for sid, (checker, need_bin, need_ter) in SUITES.items():
            if (need_bin and A.binary is None) or (need_ter and A.ternary is None):
                continue
            reports.append(checker(A, max_counterexamples=max_counterexamples))
        return merge_reports("all", reports)
    if suite_id not in SUITES:
        raise UnknownSuiteError(f"unknown suite {suite_id!r}; choose from {', '.join(SUITE_IDS)}")
    checker, _, _ = SUITES[suite_id]
    return checker(A, max_counterexamples=max_counterexamples)
