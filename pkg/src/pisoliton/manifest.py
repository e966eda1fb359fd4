"""Instance manifests: a JSON object describing one left-invariant structure.

Fields::

    name                 optional label
    dim                  2n + 1
    structure_constants  [[i, j, k, value], ...]   (c_ij^k, 1-based)
    chart_frame          dim x dim matrix of expression strings (rows = e_i)
    g, phi, xi, eta      frame components; g defaults to the identity,
                         eta to g xi; phi[i][j] is the e_i component of phi e_j
    parameters           declared parameter symbols
    potential            frame coefficients of the potential vector field
    expected             optional block of reference values

Exactly one of ``structure_constants`` and ``chart_frame`` is present.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Any

from .exact import frac

__all__ = ["ManifestError", "Manifest", "parse_manifest", "load_manifest", "golden_manifest", "GOLDEN_NAME"]

GOLDEN_NAME = "solvable_example.json"

_FIELDS = {
    "name",
    "dim",
    "structure_constants",
    "chart_frame",
    "g",
    "phi",
    "xi",
    "eta",
    "parameters",
    "potential",
    "expected",
}

EXPECTED_KEYS = {
    "structure_constants",
    "connection",
    "curvature",
    "rho",
    "tau",
    "tau_assoc",
    "sectional",
    "einstein_like",
    "nabla_potential",
    "lie_derivative_metric",
    "soliton",
}


class ManifestError(ValueError):
    """Malformed manifest; the message names the offending field."""


@dataclass
class Manifest:
    dim: int
    phi: list
    xi: list
    g: list | None = None
    eta: list | None = None
    structure_constants: list | None = None
    chart_frame: list | None = None
    parameters: list = field(default_factory=list)
    potential: list | None = None
    expected: dict = field(default_factory=dict)
    name: str = ""

    def to_dict(self) -> dict:
        out = {"name": self.name, "dim": self.dim}
        for key in ("structure_constants", "chart_frame", "g", "phi", "xi", "eta", "potential"):
            value = getattr(self, key)
            if value is not None:
                out[key] = value
        if self.parameters:
            out["parameters"] = list(self.parameters)
        if self.expected:
            out["expected"] = self.expected
        return out


def _matrix(data: dict, key: str, dim: int, exact: bool = True):
    value = data.get(key)
    if value is None:
        return None
    if not isinstance(value, list) or len(value) != dim or any(
        not isinstance(row, list) or len(row) != dim for row in value
    ):
        raise ManifestError(f"field '{key}': expected a {dim}x{dim} matrix")
    if exact:
        for i, row in enumerate(value):
            for j, entry in enumerate(row):
                _rational(entry, f"{key}[{i + 1}][{j + 1}]")
    return value


def _vector(data: dict, key: str, dim: int, exact: bool = True):
    value = data.get(key)
    if value is None:
        return None
    if not isinstance(value, list) or len(value) != dim:
        raise ManifestError(f"field '{key}': expected a vector of length {dim}")
    if exact:
        for i, entry in enumerate(value):
            _rational(entry, f"{key}[{i + 1}]")
    return value


def _rational(value, where: str):
    try:
        return frac(value)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise ManifestError(f"field '{where}': {value!r} is not an exact rational ({exc})") from None


def parse_manifest(data: Any) -> Manifest:
    if not isinstance(data, dict):
        raise ManifestError("manifest must be a JSON object")
    unknown = set(data) - _FIELDS
    if unknown:
        raise ManifestError(f"unknown field(s): {', '.join(sorted(unknown))}")
    dim = data.get("dim")
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 3 or dim % 2 == 0:
        raise ManifestError(f"field 'dim': expected an odd integer >= 3, got {dim!r}")
    has_sc = data.get("structure_constants") is not None
    has_cf = data.get("chart_frame") is not None
    if has_sc == has_cf:
        raise ManifestError("exactly one of 'structure_constants' and 'chart_frame' must be given")
    sc = data.get("structure_constants")
    if has_sc:
        if not isinstance(sc, list):
            raise ManifestError("field 'structure_constants': expected a list of [i, j, k, value]")
        for n, entry in enumerate(sc):
            if not isinstance(entry, list) or len(entry) != 4:
                raise ManifestError(f"field 'structure_constants[{n}]': expected [i, j, k, value]")
            if not all(isinstance(v, int) and 1 <= v <= dim for v in entry[:3]):
                raise ManifestError(f"field 'structure_constants[{n}]': indices must be integers in 1..{dim}")
            _rational(entry[3], f"structure_constants[{n}]")
    cf = _matrix(data, "chart_frame", dim, exact=False)
    for key in ("phi", "xi"):
        if data.get(key) is None:
            raise ManifestError(f"missing required field '{key}'")
    parameters = data.get("parameters", [])
    if not isinstance(parameters, list) or not all(isinstance(p, str) and p.isidentifier() for p in parameters):
        raise ManifestError("field 'parameters': expected a list of identifiers")
    clash = [p for p in parameters if p in ("sinh", "cosh") or (p.startswith("x") and p[1:].isdigit())]
    if clash:
        raise ManifestError(f"field 'parameters': {clash[0]!r} clashes with a reserved symbol")
    expected = data.get("expected", {})
    if not isinstance(expected, dict) or set(expected) - EXPECTED_KEYS:
        bad = sorted(set(expected) - EXPECTED_KEYS) if isinstance(expected, dict) else []
        raise ManifestError(f"field 'expected': unknown key(s) {', '.join(bad)}")
    name = data.get("name", "")
    if not isinstance(name, str):
        raise ManifestError("field 'name': expected a string")
    return Manifest(
        dim=dim,
        phi=_matrix(data, "phi", dim),
        xi=_vector(data, "xi", dim),
        g=_matrix(data, "g", dim),
        eta=_vector(data, "eta", dim),
        structure_constants=sc,
        chart_frame=cf,
        parameters=list(parameters),
        potential=_vector(data, "potential", dim, exact=False),
        expected=expected,
        name=name,
    )


def _loads(text: str, source: str) -> Manifest:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ManifestError(f"{source}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    try:
        return parse_manifest(data)
    except ManifestError as exc:
        raise ManifestError(f"{source}: {exc}") from None


def load_manifest(path) -> Manifest:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ManifestError(f"{path}: {exc.strerror}") from None
    return _loads(text, str(path))


def golden_text() -> str:
    return resources.files("pisoliton.data").joinpath(GOLDEN_NAME).read_text(encoding="utf-8")


def golden_manifest() -> Manifest:
    return _loads(golden_text(), f"<built-in {GOLDEN_NAME}>")
