"""JSON input documents: parsing, validation and canonical re-emission.

One document holds one instance.  The ``mode`` key selects the payload:

``coxeter``
    ``generators`` (names) and ``matrix`` (rows of integers, ``0`` for infinity).
``graph_product``
    ``vertices`` as ``{"name", "order"}`` objects and ``edges`` as name pairs.
``poset_omega``
    ``elements``, generating ``relations`` (pairs ``[a, b]`` meaning a < b),
    and optional ``omega_classes``; without them every element is its own class.
``finite_development``
    ``degree``, ``group`` (``{"generators": [...]}``), ``elements``,
    ``relations`` and ``locals`` mapping each element to ``{"generators": [...]}``.
    Permutations are 0-indexed image arrays.

An optional ``name`` string is carried through unchanged.
"""

from __future__ import annotations

import json
import sys
from dataclasses import dataclass
from typing import Any

from .cog import SimpleComplexOfGroups, abstract_complex, finite_complex
from .coxeter import CoxeterMatrix, coxeter_matrix, graph_product_to_coxeter
from .errors import InputError
from .pgroup import PermGroup, group
from .poset import FinitePoset, build_poset

MODES = ("coxeter", "graph_product", "poset_omega", "finite_development")

_KEYS = {
    "coxeter": {"generators", "matrix"},
    "graph_product": {"vertices", "edges"},
    "poset_omega": {"elements", "relations", "omega_classes"},
    "finite_development": {"degree", "group", "elements", "relations", "locals"},
}
_REQUIRED = {
    "coxeter": {"generators", "matrix"},
    "graph_product": {"vertices"},
    "poset_omega": {"elements"},
    "finite_development": {"degree", "group", "elements", "locals"},
}


@dataclass(frozen=True)
class InputDocument:
    mode: str
    payload: dict
    name: str | None = None

    def coxeter(self) -> CoxeterMatrix:
        p = self.payload
        if self.mode == "coxeter":
            return coxeter_matrix(p["generators"], p["matrix"])
        if self.mode == "graph_product":
            return graph_product_to_coxeter([(v["name"], v["order"]) for v in p["vertices"]],
                                            [tuple(e) for e in p["edges"]])
        raise InputError(f"mode {self.mode!r} has no Coxeter matrix")

    def poset(self) -> FinitePoset:
        return build_poset(self.payload["elements"], [tuple(r) for r in self.payload["relations"]])

    def complex_of_groups(self) -> SimpleComplexOfGroups:
        p = self.payload
        Q = self.poset()
        if self.mode == "poset_omega":
            return abstract_complex(Q, p.get("omega_classes"))
        if self.mode == "finite_development":
            d = p["degree"]
            G = group(d, p["group"]["generators"])
            return finite_complex(Q, G, {J: group(d, spec["generators"]) for J, spec in p["locals"].items()})
        raise InputError(f"mode {self.mode!r} is not a complex of groups")

    def group(self) -> PermGroup:
        return group(self.payload["degree"], self.payload["group"]["generators"])


def _expect(cond: bool, msg: str):
    if not cond:
        raise InputError(msg)


def _is_str_list(x) -> bool:
    return isinstance(x, list) and all(isinstance(s, str) for s in x)


def _pairs(x, what: str) -> list[list[str]]:
    _expect(isinstance(x, list), f"{what} must be a list of pairs")
    for r in x:
        _expect(isinstance(r, list) and len(r) == 2 and all(isinstance(s, str) for s in r),
                f"{what} entries must be [a, b] string pairs, got {r!r}")
    return x


def _perm_list(x, what: str) -> list[list[int]]:
    _expect(isinstance(x, list), f"{what} must be a list of permutations")
    for g in x:
        _expect(isinstance(g, list) and all(isinstance(i, int) and not isinstance(i, bool) for i in g),
                f"{what} entries must be integer image arrays, got {g!r}")
    return x


def parse_document(data: Any) -> InputDocument:
    """Check the shape of a decoded JSON document; mathematical validation comes later."""
    _expect(isinstance(data, dict), "document must be a JSON object")
    mode = data.get("mode")
    _expect(mode in MODES, f"mode must be one of {list(MODES)}, got {mode!r}")
    name = data.get("name")
    _expect(name is None or isinstance(name, str), "name must be a string")
    extra = set(data) - _KEYS[mode] - {"mode", "name", "schema_version"}
    _expect(not extra, f"unknown keys for mode {mode}: {sorted(extra)}")
    missing = _REQUIRED[mode] - set(data)
    _expect(not missing, f"missing keys for mode {mode}: {sorted(missing)}")

    p: dict[str, Any] = {}
    if mode == "coxeter":
        _expect(_is_str_list(data["generators"]), "generators must be a list of strings")
        m = data["matrix"]
        _expect(isinstance(m, list) and all(isinstance(r, list) and all(isinstance(v, int) for v in r) for r in m),
                "matrix must be a list of integer rows (0 encodes infinity)")
        p = {"generators": list(data["generators"]), "matrix": [list(r) for r in m]}
    elif mode == "graph_product":
        vs = data["vertices"]
        _expect(isinstance(vs, list), "vertices must be a list")
        for v in vs:
            _expect(isinstance(v, dict) and set(v) == {"name", "order"} and isinstance(v["name"], str)
                    and isinstance(v["order"], int), f"vertex must be {{name, order}}, got {v!r}")
        p = {"vertices": [dict(v) for v in vs], "edges": _canonical_pairs(_pairs(data.get("edges", []), "edges"), unordered=True)}
    else:
        _expect(_is_str_list(data["elements"]), "elements must be a list of strings")
        p = {"elements": list(data["elements"]),
             "relations": _canonical_pairs(_pairs(data.get("relations", []), "relations"))}
        if mode == "poset_omega":
            if data.get("omega_classes") is not None:
                oc = data["omega_classes"]
                _expect(isinstance(oc, list) and all(_is_str_list(c) for c in oc),
                        "omega_classes must be a list of string lists")
                p["omega_classes"] = [list(c) for c in oc]
        else:
            d = data["degree"]
            _expect(isinstance(d, int) and d >= 1, "degree must be a positive integer")
            g = data["group"]
            _expect(isinstance(g, dict) and set(g) == {"generators"}, "group must be {generators}")
            loc = data["locals"]
            _expect(isinstance(loc, dict), "locals must map elements to {generators}")
            for J, spec in loc.items():
                _expect(isinstance(spec, dict) and set(spec) == {"generators"},
                        f"local group at {J!r} must be {{generators}}")
            p["degree"] = d
            p["group"] = {"generators": [list(x) for x in _perm_list(g["generators"], "group generators")]}
            order = {x: i for i, x in enumerate(p["elements"])}
            p["locals"] = {
                J: {"generators": [list(x) for x in _perm_list(loc[J]["generators"], f"generators of {J}")]}
                for J in sorted(loc, key=lambda J: (order.get(J, len(order)), J))
            }
    return InputDocument(mode, p, name)


def _canonical_pairs(pairs: list[list[str]], unordered: bool = False) -> list[list[str]]:
    seen = []
    for a, b in pairs:
        r = sorted([a, b]) if unordered else [a, b]
        if r not in seen:
            seen.append(r)
    return seen


def load_document(path: str) -> InputDocument:
    try:
        if path == "-":
            data = json.load(sys.stdin)
        else:
            with open(path, encoding="utf-8") as fh:
                data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    return parse_document(data)


def to_json(doc: InputDocument) -> dict:
    out = {"mode": doc.mode, **doc.payload}
    if doc.name is not None:
        out["name"] = doc.name
    return out


def dump_document(doc: InputDocument) -> str:
    """Canonical text: sorted keys, two-space indent, trailing newline."""
    return json.dumps(to_json(doc), sort_keys=True, indent=2) + "\n"
