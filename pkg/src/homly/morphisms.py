"""Endomorphism checks and small candidate-family searches."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .algebra import Algebra
from .errors import DimensionMismatchError, TooManyCandidatesError
from .exact import LinearMap, as_rational, maps_commute
from .expr import Context, Map, b, t, variables
from .report import DEFAULT_MAX_COUNTEREXAMPLES, CheckReport
from .suites import run_axioms

DEFAULT_CANDIDATE_CAP = 50_000
PROVENANCES = ("user", "permutation", "signed-permutation", "scalar", "diagonal-grid")

_x, _y, _z = variables("x y z")


def _beta(node):
    return Map("beta", node)


END_BIN = ("END-BIN", ("x", "y"), _beta(b(_x, _y)) - b(_beta(_x), _beta(_y)))
END_TER = ("END-TER", ("x", "y", "z"),
           _beta(t(_x, _y, _z)) - t(_beta(_x), _beta(_y), _beta(_z)))


@dataclass(frozen=True)
class CandidateSet:
    dim: int
    maps: tuple[LinearMap, ...]
    provenance: str = "user"

    def __post_init__(self):
        if self.provenance not in PROVENANCES:
            raise ValueError(f"unknown provenance {self.provenance!r}")
        seen = set()
        unique = []
        for m in self.maps:
            if m.dim != self.dim:
                raise DimensionMismatchError(f"candidate of dim {m.dim} in a set of dim {self.dim}")
            if m not in seen:
                seen.add(m)
                unique.append(m)
        object.__setattr__(self, "maps", tuple(unique))

    def __len__(self) -> int:
        return len(self.maps)

    def __iter__(self):
        return iter(self.maps)


def is_endomorphism(A: Algebra, beta: LinearMap,
                    max_counterexamples: int = DEFAULT_MAX_COUNTEREXAMPLES) -> CheckReport:
    """Does ``beta`` preserve every operation present on ``A``?"""
    if beta.dim != A.dim:
        raise DimensionMismatchError(f"map of dim {beta.dim} on algebra of dim {A.dim}")
    axioms = []
    if A.binary is not None:
        axioms.append(END_BIN)
    if A.ternary is not None:
        axioms.append(END_TER)
    ctx = Context(A.dim, binary={"*": A.binary_or_zero()}, ternary={"{}": A.ternary_or_zero()},
                  maps={"beta": beta})
    return run_axioms("endomorphism", axioms, ctx, max_counterexamples)


def filter_endomorphisms(A: Algebra, cands: CandidateSet,
                         require_commute_with_alpha: bool = False) -> CandidateSet:
    if cands.dim != A.dim:
        raise DimensionMismatchError(f"candidates of dim {cands.dim} for algebra of dim {A.dim}")
    kept = []
    for m in cands:
        if require_commute_with_alpha and not maps_commute(m, A.alpha):
            continue
        if is_endomorphism(A, m, max_counterexamples=0).passed:
            kept.append(m)
    return CandidateSet(cands.dim, tuple(kept), cands.provenance)


def permutation_candidates(dim: int, signed: bool = False,
                           cap: int = DEFAULT_CANDIDATE_CAP) -> CandidateSet:
    count = math.factorial(dim) * (2 ** dim if signed else 1)
    if count > cap:
        raise TooManyCandidatesError(
            f"{count} {'signed ' if signed else ''}permutations of dim {dim} exceed the cap of {cap}")
    maps = []
    for perm in itertools.permutations(range(dim)):
        if signed:
            for signs in itertools.product((1, -1), repeat=dim):
                maps.append(LinearMap.permutation(perm, signs))
        else:
            maps.append(LinearMap.permutation(perm))
    return CandidateSet(dim, tuple(maps), "signed-permutation" if signed else "permutation")


def scalar_candidates(dim: int, values: Iterable) -> CandidateSet:
    return CandidateSet(dim, tuple(LinearMap.scalar(dim, as_rational(c)) for c in values), "scalar")


def diagonal_candidates(dim: int, values: Sequence, cap: int = DEFAULT_CANDIDATE_CAP) -> CandidateSet:
    """Every diagonal map whose entries are drawn from ``values``."""
    vals = list(dict.fromkeys(as_rational(c) for c in values))
    count = len(vals) ** dim
    if count > cap:
        raise TooManyCandidatesError(f"{count} diagonal maps exceed the cap of {cap}")
    maps = tuple(LinearMap.diagonal(d) for d in itertools.product(vals, repeat=dim))
    return CandidateSet(dim, maps, "diagonal-grid")
