"""File formats and deterministic JSON output.

JSON is emitted by a small canonical writer: keys keep insertion order and
every float is rendered with 17 significant digits ('%.17g'), which
round-trips float64 exactly and makes repeated runs byte-identical.

Matrix files come in two flavors, sniffed by the first character:
JSON {"n": int, "entries": [[...], ...]} or plain text (first line n,
then n rows of n space-separated decimals).
"""

from __future__ import annotations

import json

import numpy as np

from .curvature import CurvatureReport, FundamentalReport, SecondFundamentalForm
from .ddvv import CanonicalForm, SymmetricTuple
from .copositive import CopositivityVerdict
from .errors import InputRejected
from .report import SlackReport


def _format_float(v: float) -> str:
    if not np.isfinite(v):
        raise InputRejected("cannot serialize non-finite number")
    return format(float(v), ".17g")


def dumps(obj) -> str:
    """Canonical JSON: insertion-ordered keys, '%.17g' floats, no spaces."""
    out: list = []
    _write(obj, out)
    return "".join(out)


def _write(obj, out: list) -> None:
    if obj is None:
        out.append("null")
    elif isinstance(obj, bool):
        out.append("true" if obj else "false")
    elif isinstance(obj, (int, np.integer)):
        out.append(str(int(obj)))
    elif isinstance(obj, (float, np.floating)):
        out.append(_format_float(float(obj)))
    elif isinstance(obj, str):
        out.append(json.dumps(obj))
    elif isinstance(obj, np.ndarray):
        _write(obj.tolist(), out)
    elif isinstance(obj, (list, tuple)):
        out.append("[")
        for k, item in enumerate(obj):
            if k:
                out.append(",")
            _write(item, out)
        out.append("]")
    elif isinstance(obj, dict):
        out.append("{")
        for k, (key, value) in enumerate(obj.items()):
            if k:
                out.append(",")
            out.append(json.dumps(str(key)))
            out.append(":")
            _write(value, out)
        out.append("}")
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")


# ---------------------------------------------------------------------------
# matrices

def matrix_json(a: np.ndarray) -> dict:
    return {"n": int(a.shape[0]), "entries": a.tolist()}


def parse_matrix_json(obj) -> np.ndarray:
    if not isinstance(obj, dict):
        raise InputRejected("matrix JSON must be an object")
    for key in ("n", "entries"):
        if key not in obj:
            raise InputRejected(f"matrix JSON missing field '{key}'")
    n = obj["n"]
    if not isinstance(n, int) or n < 1:
        raise InputRejected(f"field 'n' must be a positive integer, got {n!r}")
    try:
        entries = np.asarray(obj["entries"], dtype=float)
    except (TypeError, ValueError) as exc:
        raise InputRejected(f"field 'entries' is not a numeric array: {exc}") from exc
    if entries.shape != (n, n):
        raise InputRejected(f"field 'entries' has shape {entries.shape}, expected ({n}, {n})")
    return entries


def parse_matrix_text(text: str) -> np.ndarray:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise InputRejected("empty matrix file")
    try:
        n = int(lines[0].strip())
    except ValueError as exc:
        raise InputRejected(f"line 1: expected the dimension n, got {lines[0]!r}") from exc
    if n < 1:
        raise InputRejected("line 1: n must be positive")
    if len(lines) != n + 1:
        raise InputRejected(f"expected {n} rows after the header, found {len(lines) - 1}")
    rows = []
    for k, line in enumerate(lines[1:], start=2):
        parts = line.split()
        if len(parts) != n:
            raise InputRejected(f"line {k}: expected {n} values, found {len(parts)}")
        try:
            rows.append([float(p) for p in parts])
        except ValueError as exc:
            raise InputRejected(f"line {k}: {exc}") from exc
    return np.array(rows)


def loads_matrix(text: str) -> np.ndarray:
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputRejected(f"invalid JSON: {exc}") from exc
        return parse_matrix_json(obj)
    return parse_matrix_text(text)


def read_matrix_file(path: str) -> np.ndarray:
    with open(path, "r", encoding="utf-8") as fh:
        return loads_matrix(fh.read())


# ---------------------------------------------------------------------------
# tuples

def tuple_json(t: SymmetricTuple) -> dict:
    return {"n": t.n, "m": t.m, "matrices": [matrix_json(a) for a in t.matrices]}


def parse_tuple_json(obj) -> SymmetricTuple:
    if not isinstance(obj, dict):
        raise InputRejected("tuple JSON must be an object")
    for key in ("n", "m", "matrices"):
        if key not in obj:
            raise InputRejected(f"tuple JSON missing field '{key}'")
    mats = obj["matrices"]
    if not isinstance(mats, list) or len(mats) != obj["m"]:
        raise InputRejected("field 'matrices' must be a list of length m")
    t = SymmetricTuple.from_matrices([parse_matrix_json(mj) for mj in mats])
    if t.n != obj["n"]:
        raise InputRejected(f"field 'n' = {obj['n']} does not match matrices ({t.n})")
    return t


def read_tuple_file(path: str) -> SymmetricTuple:
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputRejected(f"invalid JSON: {exc}") from exc
    return parse_tuple_json(obj)


# ---------------------------------------------------------------------------
# pairs

def pair_json(x: np.ndarray, y: np.ndarray) -> dict:
    return {"n": int(x.shape[0]), "x": matrix_json(x), "y": matrix_json(y)}


def parse_pair_json(obj):
    if not isinstance(obj, dict):
        raise InputRejected("pair JSON must be an object")
    for key in ("n", "x", "y"):
        if key not in obj:
            raise InputRejected(f"pair JSON missing field '{key}'")
    x = parse_matrix_json(obj["x"])
    y = parse_matrix_json(obj["y"])
    if x.shape[0] != obj["n"] or y.shape[0] != obj["n"]:
        raise InputRejected("fields 'x' and 'y' must match the declared n")
    return x, y


def read_pair_file(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputRejected(f"invalid JSON: {exc}") from exc
    return parse_pair_json(obj)


# ---------------------------------------------------------------------------
# second fundamental forms

def sff_json(form: SecondFundamentalForm) -> dict:
    return {"n": form.n, "m": form.m, "c": form.c, "h": form.h.tolist()}


def parse_sff_json(obj) -> SecondFundamentalForm:
    if not isinstance(obj, dict):
        raise InputRejected("h JSON must be an object")
    for key in ("n", "m", "c", "h"):
        if key not in obj:
            raise InputRejected(f"h JSON missing field '{key}'")
    try:
        arr = np.asarray(obj["h"], dtype=float)
    except (TypeError, ValueError) as exc:
        raise InputRejected(f"field 'h' is not a numeric array: {exc}") from exc
    if arr.ndim != 3:
        raise InputRejected(f"field 'h' must have axes (alpha, i, j), got shape {arr.shape}")
    form = SecondFundamentalForm.from_array(arr, c=obj["c"])
    if form.n != obj["n"] or form.m != obj["m"]:
        raise InputRejected("fields 'n'/'m' do not match the shape of 'h'")
    return form


def read_sff_file(path: str) -> SecondFundamentalForm:
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputRejected(f"invalid JSON: {exc}") from exc
    return parse_sff_json(obj)


# ---------------------------------------------------------------------------
# reports and verdicts

def report_json(rep: SlackReport) -> dict:
    return {
        "inequality": rep.inequality,
        "lhs": rep.lhs,
        "rhs": rep.rhs,
        "slack": rep.slack,
        "tol": rep.tol,
        "holds": rep.holds,
    }


def verdict_json(v: CopositivityVerdict) -> dict:
    return {
        "copositive": v.copositive,
        "certificate": None if v.certificate is None else v.certificate.tolist(),
        "failing_submatrix": None if v.failing_submatrix is None else list(v.failing_submatrix),
    }


def canonical_form_json(cf: CanonicalForm, before: SlackReport, after: SlackReport) -> dict:
    return {
        "tuple": tuple_json(cf.reduced),
        "p": matrix_json(cf.p),
        "q": matrix_json(cf.q),
        "degenerate": cf.degenerate,
        "slack_before": report_json(before),
        "slack_after": report_json(after),
    }


def curvature_json(rep: CurvatureReport) -> dict:
    return {
        "rho": rep.rho,
        "rho_perp": rep.rho_perp,
        "mean_curv_sq": rep.mean_curv_sq,
        "geometric_slack": rep.geometric_slack,
        "shape_slack": rep.shape_slack,
    }


def fundamental_json(rep: FundamentalReport, boundary_n: int) -> dict:
    return {
        "s": rep.s.tolist(),
        "eigenvalues": rep.eigenvalues.tolist(),
        "sigma_sq": rep.sigma_sq,
        "pinch": rep.pinch,
        "pinch_boundary": int(boundary_n),
        "within_boundary": bool(rep.pinch <= boundary_n + 1e-9 * (1 + abs(rep.pinch))),
    }
