"""JSON instance and result formats, and seeded random instances.

Files use 1-based vertex indices; the Python API is 0-based.

Instance file::

    {"kind": "path" | "tree",
     "points": [[x, y], ...]          # or "distance_matrix": [[...], ...]
     "edges": [[i, j], ...],          # trees only
     "order": [i, ...]}               # paths only, optional

Result file::

    {"algorithm": str, "shortcut": [k, l] | null, "diameter": float,
     "original_diameter": float, "runtime_ms": float,
     "lambda": float, "eps": float, "seed": int}   # last three optional

For paths ``shortcut`` holds path positions; ``shortcut_points`` holds the
corresponding point indices (they coincide for the default order).
"""
from __future__ import annotations

import json
import math

import networkx as nx
import numpy as np

from .metric import MetricInstance, PathInstance, TreeInstance

DISTRIBUTIONS = ("uniform-square", "collinear", "circle")


class InstanceError(ValueError):
    """Malformed instance data."""


INSTANCE_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["kind"],
    "properties": {
        "kind": {"enum": ["path", "tree"]},
        "points": {"type": "array", "minItems": 1,
                   "items": {"type": "array", "minItems": 1, "items": {"type": "number"}}},
        "distance_matrix": {"type": "array", "minItems": 1,
                            "items": {"type": "array", "items": {"type": "number", "minimum": 0}}},
        "edges": {"type": "array",
                  "items": {"type": "array", "minItems": 2, "maxItems": 2,
                            "items": {"type": "integer", "minimum": 1}}},
        "order": {"type": "array", "items": {"type": "integer", "minimum": 1}},
        "seed": {"type": ["integer", "null"]},
        "dist": {"type": "string"},
    },
    "oneOf": [{"required": ["points"]}, {"required": ["distance_matrix"]}],
    "if": {"properties": {"kind": {"const": "tree"}}},
    "then": {"required": ["edges"]},
}

RESULT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["algorithm", "shortcut", "diameter", "original_diameter", "runtime_ms"],
    "properties": {
        "algorithm": {"type": "string"},
        "shortcut": {"oneOf": [
            {"type": "null"},
            {"type": "array", "minItems": 2, "maxItems": 2,
             "items": {"type": "integer", "minimum": 1}},
        ]},
        "shortcut_points": {"oneOf": [
            {"type": "null"},
            {"type": "array", "minItems": 2, "maxItems": 2,
             "items": {"type": "integer", "minimum": 1}},
        ]},
        "diameter": {"type": "number", "minimum": 0},
        "original_diameter": {"type": "number", "minimum": 0},
        "lambda": {"type": "number", "exclusiveMinimum": 0},
        "eps": {"type": "number", "exclusiveMinimum": 0, "exclusiveMaximum": 1},
        "runtime_ms": {"type": "number", "minimum": 0},
        "seed": {"type": ["integer", "null"]},
    },
}


def _metric_from(data: dict) -> MetricInstance:
    has_pts = "points" in data
    has_mat = "distance_matrix" in data
    if has_pts == has_mat:
        raise InstanceError("give exactly one of 'points' or 'distance_matrix'")
    try:
        if has_pts:
            pts = data["points"]
            if not isinstance(pts, list) or not pts or len({len(p) for p in pts}) != 1:
                raise InstanceError("'points' must be a non-empty list of equal-length vectors")
            return MetricInstance(coords=pts)
        return MetricInstance(matrix=data["distance_matrix"])
    except (TypeError, ValueError) as exc:
        if isinstance(exc, InstanceError):
            raise
        raise InstanceError(str(exc)) from exc


def _indices(raw, n: int, what: str) -> list[int]:
    try:
        idx = [int(i) for i in raw]
    except (TypeError, ValueError) as exc:
        raise InstanceError(f"'{what}' must hold integers") from exc
    if any(not 1 <= i <= n for i in idx):
        raise InstanceError(f"'{what}' has an index outside 1..{n}")
    return [i - 1 for i in idx]


def parse_instance(data: dict):
    """``(kind, instance)`` from a decoded instance file."""
    if not isinstance(data, dict):
        raise InstanceError("instance must be a JSON object")
    kind = data.get("kind")
    if kind not in ("path", "tree"):
        raise InstanceError("'kind' must be 'path' or 'tree'")
    metric = _metric_from(data)
    try:
        if kind == "path":
            order = data.get("order")
            if order is not None:
                order = _indices(order, metric.n, "order")
            return kind, PathInstance(metric, order)
        if "edges" not in data:
            raise InstanceError("tree instances need 'edges'")
        edges = data["edges"]
        if not isinstance(edges, list) or any(not isinstance(e, (list, tuple)) or len(e) != 2 for e in edges):
            raise InstanceError("'edges' must be a list of [i, j] pairs")
        flat = _indices([i for e in edges for i in e], metric.n, "edges")
        return kind, TreeInstance(metric, list(zip(flat[::2], flat[1::2])))
    except InstanceError:
        raise
    except (TypeError, ValueError) as exc:
        raise InstanceError(str(exc)) from exc


def load_instance(fp):
    """Parse an instance from a path or an open text file."""
    try:
        if hasattr(fp, "read"):
            data = json.load(fp)
        else:
            with open(fp) as fh:
                data = json.load(fh)
    except json.JSONDecodeError as exc:
        raise InstanceError(f"invalid JSON: {exc}") from exc
    return parse_instance(data)


def _metric_to_dict(metric: MetricInstance) -> dict:
    if metric.coords is not None:
        return {"points": metric.coords.tolist()}
    return {"distance_matrix": metric.matrix.tolist()}


def path_to_dict(path: PathInstance) -> dict:
    out = {"kind": "path", **_metric_to_dict(path.metric)}
    if not np.array_equal(path.order, np.arange(path.n)):
        out["order"] = (path.order + 1).tolist()
    return out


def tree_to_dict(tree: TreeInstance) -> dict:
    return {"kind": "tree", **_metric_to_dict(tree.metric),
            "edges": [[u + 1, v + 1] for u, v in tree.edges]}


def random_points(n: int, rng: np.random.Generator, dist: str = "uniform-square") -> np.ndarray:
    if dist == "uniform-square":
        return rng.random((n, 2))
    if dist == "collinear":
        return np.column_stack([np.sort(rng.random(n)), np.zeros(n)])
    if dist == "circle":
        theta = np.sort(rng.random(n)) * 2 * math.pi
        return np.column_stack([np.cos(theta), np.sin(theta)])
    raise ValueError(f"unknown distribution {dist!r}; choose from {DISTRIBUTIONS}")


def random_path(n: int, seed: int, dist: str = "uniform-square") -> PathInstance:
    if n < 1:
        raise ValueError("n must be positive")
    rng = np.random.default_rng(seed)
    return PathInstance(MetricInstance(coords=random_points(n, rng, dist)))


def random_tree(n: int, seed: int, dist: str = "uniform-square") -> TreeInstance:
    """Uniformly random labelled tree (random Pruefer sequence) over random points."""
    if n < 1:
        raise ValueError("n must be positive")
    rng = np.random.default_rng(seed)
    pts = random_points(n, rng, dist)
    if n == 1:
        edges = []
    elif n == 2:
        edges = [(0, 1)]
    else:
        g = nx.from_prufer_sequence(rng.integers(0, n, n - 2).tolist())
        edges = sorted((min(u, v), max(u, v)) for u, v in g.edges())
    return TreeInstance(MetricInstance(coords=pts), edges)


def generate(kind: str, n: int, seed: int, dist: str = "uniform-square") -> dict:
    if kind == "path":
        out = path_to_dict(random_path(n, seed, dist))
    elif kind == "tree":
        out = tree_to_dict(random_tree(n, seed, dist))
    else:
        raise ValueError("kind must be 'path' or 'tree'")
    out["seed"] = seed
    out["dist"] = dist
    return out


def result_dict(algorithm: str, shortcut, diameter: float, original: float, runtime_ms: float,
                order=None, **extra) -> dict:
    """Result-file payload; ``shortcut`` is a 0-based pair or ``None``."""
    out = {"algorithm": algorithm,
           "shortcut": None if shortcut is None else [int(shortcut[0]) + 1, int(shortcut[1]) + 1],
           "diameter": float(diameter),
           "original_diameter": float(original),
           "runtime_ms": float(runtime_ms)}
    if shortcut is not None and order is not None:
        out["shortcut_points"] = [int(order[shortcut[0]]) + 1, int(order[shortcut[1]]) + 1]
    out.update({k: v for k, v in extra.items() if v is not None})
    return out
