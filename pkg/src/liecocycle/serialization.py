"""Reading and writing algebras, cochains, words, representations and fixtures as JSON.

Every loader accepts either a path or an already-parsed document; malformed
input raises :class:`~liecocycle.errors.InputError` naming the source and the
offending field.
"""

from __future__ import annotations

import json
import math
from importlib import resources
from pathlib import Path
from typing import Any

import numpy as np

from .cohomology import TwoCochain
from .errors import InputError, LieCocycleError
from .fixtures import PhaseSpaceFixture
from .lie_core import GroupWord, LieAlgebra, MatrixRep

SHIPPED = (
    "abelian_r2",
    "so3",
    "sl2",
    "galilei_1d",
    "heisenberg_cocycle",
    "galilei_mass_cocycle",
    "torus_rep",
    "torus_loop_word",
    "translations_fixture",
    "translations_c0_fixture",
    "galilei_translations_fixture",
)


def shipped_path(name: str) -> Path:
    """Path of a data file bundled with the package, e.g. ``shipped_path("so3")``."""
    if name not in SHIPPED:
        raise KeyError(f"no shipped data named {name!r}; choose from {', '.join(SHIPPED)}")
    return Path(str(resources.files("liecocycle") / "data" / f"{name}.json"))


def _read(source: Any) -> tuple[str, Any]:
    if isinstance(source, (str, Path)):
        path = str(source)
        try:
            with open(path, encoding="utf-8") as fh:
                return path, json.load(fh)
        except OSError as exc:
            raise InputError(path, "<file>", exc.strerror or str(exc)) from exc
        except json.JSONDecodeError as exc:
            raise InputError(path, "<json>", f"line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    return "<document>", source


def _get(doc: Any, key: str, path: str, field: str) -> Any:
    if not isinstance(doc, dict):
        raise InputError(path, field.rsplit(".", 1)[0] or "<root>", "expected a JSON object")
    if key not in doc:
        raise InputError(path, field, "missing")
    return doc[key]


def _int(value: Any, path: str, field: str, minimum: int = 0) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise InputError(path, field, f"expected an integer, got {value!r}")
    if value < minimum:
        raise InputError(path, field, f"must be at least {minimum}, got {value}")
    return value


def _real(value: Any, path: str, field: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)) or not math.isfinite(value):
        raise InputError(path, field, f"expected a finite real number, got {value!r}")
    return float(value)


def _array(value: Any, shape: tuple[int, ...], path: str, field: str) -> np.ndarray:
    try:
        arr = np.array(value, dtype=float)
    except (TypeError, ValueError) as exc:
        raise InputError(path, field, f"expected numbers: {exc}") from exc
    if arr.shape != shape:
        raise InputError(path, field, f"expected shape {shape}, got {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise InputError(path, field, "contains non-finite values")
    return arr


def _wrap(path: str, field: str, fn, *args, **kwargs):
    # validation failures of the constructed object are input errors too
    try:
        return fn(*args, **kwargs)
    except LieCocycleError as exc:
        if isinstance(exc, InputError):
            raise
        raise InputError(path, field, str(exc)) from exc


def algebra_from_doc(doc: Any, path: str = "<document>", prefix: str = "") -> LieAlgebra:
    n = _int(_get(doc, "dim", path, prefix + "dim"), path, prefix + "dim", 1)
    name = doc.get("name", "")
    if not isinstance(name, str):
        raise InputError(path, prefix + "name", "expected a string")
    basis = doc.get("basis")
    if basis is not None:
        if not isinstance(basis, list) or len(basis) != n or not all(isinstance(b, str) for b in basis):
            raise InputError(path, prefix + "basis", f"expected {n} string labels")
        if len(set(basis)) != n:
            raise InputError(path, prefix + "basis", "labels must be distinct")
    raw = _get(doc, "brackets", path, prefix + "brackets")
    if not isinstance(raw, list):
        raise InputError(path, prefix + "brackets", "expected a list")
    brackets: dict[tuple[int, int], dict[int, float]] = {}
    for idx, entry in enumerate(raw):
        f = f"{prefix}brackets[{idx}]"
        i = _int(_get(entry, "i", path, f + ".i"), path, f + ".i")
        j = _int(_get(entry, "j", path, f + ".j"), path, f + ".j")
        if not i < j < n:
            raise InputError(path, f, f"need 0 <= i < j < {n}, got i={i}, j={j}")
        if (i, j) in brackets:
            raise InputError(path, f, f"duplicate pair ({i}, {j})")
        coeffs = _get(entry, "coeffs", path, f + ".coeffs")
        if not isinstance(coeffs, dict):
            raise InputError(path, f + ".coeffs", "expected an object mapping index to coefficient")
        parsed = {}
        for k, v in coeffs.items():
            try:
                kk = int(k)
            except ValueError:
                raise InputError(path, f"{f}.coeffs.{k}", "key must be an integer index") from None
            if not 0 <= kk < n:
                raise InputError(path, f"{f}.coeffs.{k}", f"index out of range 0..{n - 1}")
            parsed[kk] = _real(v, path, f"{f}.coeffs.{k}")
        brackets[(i, j)] = parsed
    return _wrap(path, prefix + "brackets", LieAlgebra.from_brackets, n, brackets, basis=basis, name=name)


def load_algebra(source: Any) -> LieAlgebra:
    path, doc = _read(source)
    return algebra_from_doc(doc, path)


def load_cochain(source: Any, dim: int) -> TwoCochain:
    path, doc = _read(source)
    raw = _get(doc, "entries", path, "entries")
    if not isinstance(raw, list):
        raise InputError(path, "entries", "expected a list")
    entries: dict[tuple[int, int], float] = {}
    for idx, entry in enumerate(raw):
        f = f"entries[{idx}]"
        i = _int(_get(entry, "i", path, f + ".i"), path, f + ".i")
        j = _int(_get(entry, "j", path, f + ".j"), path, f + ".j")
        if not i < j < dim:
            raise InputError(path, f, f"need 0 <= i < j < {dim}, got i={i}, j={j}")
        if (i, j) in entries:
            raise InputError(path, f, f"duplicate pair ({i}, {j})")
        entries[(i, j)] = _real(_get(entry, "value", path, f + ".value"), path, f + ".value")
    return TwoCochain.from_entries(dim, entries)


def load_word(source: Any, dim: int) -> GroupWord:
    path, doc = _read(source)
    raw = _get(doc, "letters", path, "letters")
    if not isinstance(raw, list):
        raise InputError(path, "letters", "expected a list")
    letters = [_array(x, (dim,), path, f"letters[{k}]") for k, x in enumerate(raw)]
    return GroupWord.of(letters, dim)


def load_rep(source: Any, algebra: LieAlgebra) -> MatrixRep:
    path, doc = _read(source)
    d = _int(_get(doc, "dim_rep", path, "dim_rep"), path, "dim_rep", 1)
    gens = _get(doc, "generators", path, "generators")
    if not isinstance(gens, list) or len(gens) != algebra.dim:
        raise InputError(path, "generators", f"expected {algebra.dim} matrices")
    mats = np.array([_array(g, (d, d), path, f"generators[{k}]") for k, g in enumerate(gens)])
    faithful = doc.get("faithful", False)
    return _wrap(path, "generators", MatrixRep, algebra, mats, faithful=bool(faithful))


def load_fixture(source: Any) -> PhaseSpaceFixture:
    path, doc = _read(source)
    L = algebra_from_doc(_get(doc, "algebra", path, "algebra"), path, "algebra.")
    d = _int(_get(doc, "phase_dim", path, "phase_dim"), path, "phase_dim", 2)
    if d % 2:
        raise InputError(path, "phase_dim", f"must be even, got {d}")
    omega = _array(_get(doc, "omega", path, "omega"), (d, d), path, "omega")
    action = _get(doc, "action", path, "action")
    comom = _get(doc, "comoment", path, "comoment")
    for key, val in (("action", action), ("comoment", comom)):
        if not isinstance(val, list) or len(val) != L.dim:
            raise InputError(path, key, f"expected one entry per basis element ({L.dim})")
    linear = np.array([
        _array(_get(a, "linear", path, f"action[{k}].linear"), (d, d), path, f"action[{k}].linear")
        for k, a in enumerate(action)
    ])
    trans = np.array([
        _array(_get(a, "translation", path, f"action[{k}].translation"), (d,), path, f"action[{k}].translation")
        for k, a in enumerate(action)
    ])
    ca = np.array([
        _array(_get(c, "a", path, f"comoment[{k}].a"), (d,), path, f"comoment[{k}].a")
        for k, c in enumerate(comom)
    ])
    cb = np.array([_real(_get(c, "b", path, f"comoment[{k}].b"), path, f"comoment[{k}].b") for k, c in enumerate(comom)])
    name = doc.get("name", "")
    return _wrap(path, "action", PhaseSpaceFixture, L, omega, linear, trans, ca, cb, name=str(name))


def parse_covector(text: str, dim: int, field: str = "--alpha") -> np.ndarray:
    """Parse ``"x1,...,xn"``."""
    try:
        vals = [float(t) for t in text.split(",")]
    except ValueError:
        raise InputError("<argv>", field, f"expected comma-separated reals, got {text!r}") from None
    if len(vals) != dim:
        raise InputError("<argv>", field, f"expected {dim} components, got {len(vals)}")
    if not all(math.isfinite(v) for v in vals):
        raise InputError("<argv>", field, "components must be finite")
    return np.array(vals)


def dump(obj: Any, path: str | Path) -> None:
    """Write any object with a ``to_json`` method."""
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(obj.to_json(), fh, indent=2, sort_keys=True)
        fh.write("\n")
