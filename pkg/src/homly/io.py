"""JSON documents for algebras, maps, candidate sets and check reports.

Rationals are always strings (``"3"``, ``"-1/2"``) so that no float ever
enters a table.  Tables are stored sparsely: one entry per index group with
its nonzero output coefficients.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

import numpy as np

from .algebra import Algebra
from .errors import DocumentError, MalformedScalarError
from .exact import LinearMap, format_rational, parse_rational
from .morphisms import CandidateSet
from .report import AxiomVerdict, CheckReport

FORMAT_VERSION = 1


def _rat(value: Any, path: str) -> Fraction:
    try:
        return parse_rational(value)
    except MalformedScalarError as exc:
        raise DocumentError(path, str(exc)) from None


def _int(value: Any, path: str, lo: int | None = None, hi: int | None = None) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise DocumentError(path, f"expected an integer, got {value!r}")
    if lo is not None and value < lo or hi is not None and value >= hi:
        raise DocumentError(path, f"index {value} out of range [{lo}, {hi})")
    return value


def _load(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError("", f"invalid JSON: {exc}") from None


def _matrix(rows: Any, n: int, path: str) -> LinearMap:
    if not isinstance(rows, list) or len(rows) != n:
        raise DocumentError(path, f"expected {n} rows")
    out = []
    for r, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != n:
            raise DocumentError(f"{path}[{r}]", f"expected {n} entries")
        out.append([_rat(v, f"{path}[{r}][{c}]") for c, v in enumerate(row)])
    return LinearMap(out) if n else LinearMap.identity(0)


def _table(entries: Any, n: int, arity: int, path: str) -> np.ndarray:
    if not isinstance(entries, list):
        raise DocumentError(path, "expected a list of entries")
    keys = "ijk"[:arity]
    table = np.zeros((n,) * (arity + 1), dtype=int).astype(object)
    seen = set()
    for e, entry in enumerate(entries):
        epath = f"{path}[{e}]"
        if not isinstance(entry, dict):
            raise DocumentError(epath, "expected an object")
        unknown = set(entry) - set(keys) - {"coeffs"}
        if unknown:
            raise DocumentError(epath, f"unexpected keys {sorted(unknown)}")
        idx = []
        for key in keys:
            if key not in entry:
                raise DocumentError(epath, f"missing index {key!r}")
            idx.append(_int(entry[key], f"{epath}.{key}", 0, n))
        idx = tuple(idx)
        if idx in seen:
            raise DocumentError(epath, f"duplicate entry for indices {list(idx)}")
        seen.add(idx)
        coeffs = entry.get("coeffs")
        if not isinstance(coeffs, dict):
            raise DocumentError(f"{epath}.coeffs", "expected an object mapping output index to rational")
        for k, val in coeffs.items():
            try:
                out = int(k)
            except ValueError:
                raise DocumentError(f"{epath}.coeffs", f"output index {k!r} is not an integer") from None
            if str(out) != k or not 0 <= out < n:
                raise DocumentError(f"{epath}.coeffs.{k}", f"output index out of range [0, {n})")
            table[idx + (out,)] = _rat(val, f"{epath}.coeffs.{k}")
    return table


def parse_algebra(text: str) -> Algebra:
    return algebra_from_doc(_load(text))


def algebra_from_doc(doc: Any) -> Algebra:
    if not isinstance(doc, dict):
        raise DocumentError("", "algebra document must be a JSON object")
    if doc.get("format", "homly-algebra") != "homly-algebra":
        raise DocumentError("format", f"expected 'homly-algebra', got {doc['format']!r}")
    allowed = {"format", "version", "name", "dim", "basis", "binary", "ternary", "alpha"}
    unknown = set(doc) - allowed
    if unknown:
        raise DocumentError("", f"unexpected keys {sorted(unknown)}")
    if "dim" not in doc:
        raise DocumentError("dim", "missing")
    n = _int(doc["dim"], "dim", 0)
    name = doc.get("name", "")
    if not isinstance(name, str):
        raise DocumentError("name", "expected a string")
    basis = doc.get("basis", [f"e{i + 1}" for i in range(n)])
    if (not isinstance(basis, list) or len(basis) != n
            or not all(isinstance(s, str) for s in basis) or len(set(basis)) != n):
        raise DocumentError("basis", f"expected {n} distinct string labels")
    binary = _table(doc["binary"], n, 2, "binary") if "binary" in doc else None
    ternary = _table(doc["ternary"], n, 3, "ternary") if "ternary" in doc else None
    alpha = _matrix(doc["alpha"], n, "alpha") if "alpha" in doc else None
    return Algebra(n, binary, ternary, alpha, name, tuple(basis))


def _sparse(table: np.ndarray, arity: int) -> list[dict]:
    keys = "ijk"[:arity]
    n = table.shape[0] if table.ndim else 0
    out = []
    for idx in np.ndindex(*(n,) * arity):
        coeffs = {str(k): format_rational(table[idx + (k,)]) for k in range(n) if table[idx + (k,)] != 0}
        if coeffs:
            entry = dict(zip(keys, (int(i) for i in idx)))
            entry["coeffs"] = coeffs
            out.append(entry)
    return out


def _rows(m: LinearMap) -> list[list[str]]:
    return [[format_rational(v) for v in row] for row in m.entries]


def algebra_to_doc(A: Algebra) -> dict:
    doc: dict[str, Any] = {"format": "homly-algebra", "version": FORMAT_VERSION,
                           "name": A.name, "dim": A.dim, "basis": list(A.basis)}
    if A.binary is not None:
        doc["binary"] = _sparse(A.binary, 2)
    if A.ternary is not None:
        doc["ternary"] = _sparse(A.ternary, 3)
    if A.alpha != LinearMap.identity(A.dim):
        doc["alpha"] = _rows(A.alpha)
    return doc


def dumps(doc: dict) -> str:
    """One top-level key per line, list items one per line, each item inline."""
    def inline(v):
        return json.dumps(v, ensure_ascii=False, separators=(", ", ": "))

    lines = []
    for key, value in doc.items():
        if isinstance(value, list) and value and isinstance(value[0], (dict, list)):
            body = ",\n".join(f"  {inline(item)}" for item in value)
            lines.append(f" {inline(key)}: [\n{body}\n ]")
        else:
            lines.append(f" {inline(key)}: {inline(value)}")
    return "{\n" + ",\n".join(lines) + "\n}\n"


def emit_algebra(A: Algebra) -> str:
    return dumps(algebra_to_doc(A))


def parse_map(text: str) -> LinearMap:
    doc = _load(text)
    if not isinstance(doc, dict):
        raise DocumentError("", "map document must be a JSON object")
    n = _int(doc.get("dim"), "dim", 0)
    return _matrix(doc.get("matrix"), n, "matrix")


def emit_map(m: LinearMap) -> str:
    return dumps({"format": "homly-map", "version": FORMAT_VERSION, "dim": m.dim, "matrix": _rows(m)})


def parse_candidates(text: str) -> CandidateSet:
    doc = _load(text)
    if not isinstance(doc, dict):
        raise DocumentError("", "candidate document must be a JSON object")
    n = _int(doc.get("dim"), "dim", 0)
    maps = doc.get("maps")
    if not isinstance(maps, list):
        raise DocumentError("maps", "expected a list of matrices")
    provenance = doc.get("provenance", "user")
    try:
        return CandidateSet(n, tuple(_matrix(m, n, f"maps[{i}]") for i, m in enumerate(maps)), provenance)
    except ValueError as exc:
        raise DocumentError("provenance", str(exc)) from None


def emit_candidates(cs: CandidateSet) -> str:
    return dumps({"format": "homly-candidates", "version": FORMAT_VERSION, "dim": cs.dim,
                  "provenance": cs.provenance, "maps": [_rows(m) for m in cs.maps]})


# -- reports -------------------------------------------------------------------

def _verdict_doc(v: AxiomVerdict) -> dict:
    return {
        "axiom_id": v.axiom_id,
        "passed": v.passed,
        "variables": list(v.variables),
        "checked_tuples": v.checked_tuples,
        "failure_count": v.failure_count,
        "counterexamples": [
            {"indices": list(c.indices), "residual": [format_rational(q) for q in c.residual]}
            for c in v.counterexamples
        ],
    }


def report_to_doc(r: CheckReport) -> dict:
    return {
        "format": "homly-report",
        "version": FORMAT_VERSION,
        "suite_id": r.suite_id,
        "passed": r.passed,
        "checked_tuples": r.checked_tuples,
        "axioms": [_verdict_doc(v) for v in r.axiom_verdicts],
        "informational": [_verdict_doc(v) for v in r.informational],
    }


def _fmt_vec(vec) -> str:
    return "[" + ", ".join(format_rational(q) for q in vec) + "]"


def _verdict_lines(v: AxiomVerdict, basis: tuple[str, ...] | None, note: str = "") -> list[str]:
    lines = [f"  {v.axiom_id:<12} {v.checked_tuples:>8} tuples{note}  {'PASS' if v.passed else 'FAIL'}"]
    if not v.passed:
        shown = len(v.counterexamples)
        lines.append(f"    {v.failure_count} failing tuple(s), showing {shown}")
        for c in v.counterexamples:
            names = ", ".join(f"{var}={basis[i] if basis else i}" for var, i in zip(v.variables, c.indices))
            lines.append(f"    {list(c.indices)} ({names}) residual {_fmt_vec(c.residual)}")
    return lines


def emit_report(r: CheckReport, format: str = "text", basis: tuple[str, ...] | None = None) -> str:
    if format == "json":
        return json.dumps(report_to_doc(r), indent=2) + "\n"
    if format != "text":
        raise ValueError(f"unknown report format {format!r}")
    head = f"suite {r.suite_id}: {'PASS' if r.passed else 'FAIL'} ({r.checked_tuples} tuples checked)"
    lines = [head]
    for v in r.axiom_verdicts:
        lines.extend(_verdict_lines(v, basis))
    for v in r.informational:
        lines.extend(_verdict_lines(v, basis, " [info]"))
    return "\n".join(lines) + "\n"
