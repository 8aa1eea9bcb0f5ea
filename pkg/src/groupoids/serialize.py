"""JSON wire formats.

Complexes:  {"kind": "simplicial", "facets": [[0,1,2], ...]}
            {"kind": "cubical", "dim": k, "cubes": [{"00": 0, ...}, ...]}
            {"kind": "builtin", "name": "tribar"}
Corner keys are binary strings of length k; character j is coordinate j.

Puzzle states:  {"hole": 15, "placement": {"1": 0, ...}}
Connections:    {"edges": [[x, y], ...], "nabla": {"x,y": {"x,z": "y,w"}}}
Permutations serialize as image arrays, signed permutations as
{"perm": [...], "signs": [1, -1, ...]}; group orders as decimal strings
since they outgrow fixed-width integers quickly.
"""

from __future__ import annotations

import json
from pathlib import Path

from .complexes import CubicalComplex, SimplicialComplex, build_cubical, build_simplicial
from .games import LabelledState
from .graphconn import GraphConnection
from .groupoid import Groupoid, TransportPath, tribar_groupoid
from .holonomy import HolonomyResult
from .homcx import Graph
from .permgroup import Perm, SignedPerm


class ParseError(ValueError):
    """Malformed or invalid input file."""


def load_json(path: str | Path):
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e}") from e
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"{path}: invalid JSON at line {e.lineno}, column {e.colno}: {e.msg}") from e


def parse_complex(obj) -> SimplicialComplex | CubicalComplex | Groupoid:
    if not isinstance(obj, dict) or "kind" not in obj:
        raise ParseError("complex object needs a 'kind' field")
    kind = obj["kind"]
    try:
        if kind == "simplicial":
            return build_simplicial(obj["facets"])
        if kind == "cubical":
            cubes = obj["cubes"]
            k = obj.get("dim")
            if k is not None and cubes and any(len(key) != k for key in cubes[0]):
                raise ParseError("corner keys do not match the declared dim")
            return build_cubical(cubes)
        if kind == "builtin":
            if obj.get("name") == "tribar":
                return tribar_groupoid()
            raise ParseError(f"unknown builtin {obj.get('name')!r}")
    except ParseError:
        raise
    except (KeyError, TypeError, ValueError) as e:
        raise ParseError(f"invalid {kind} complex: {e}") from e
    raise ParseError(f"unknown complex kind {kind!r}")


def complex_to_dict(K) -> dict:
    if isinstance(K, SimplicialComplex):
        return {"kind": "simplicial", "facets": [list(f) for f in K.facets]}
    if isinstance(K, CubicalComplex):
        k = K.dim
        cubes = []
        for corners in K.cubes:
            cubes.append({
                "".join(str((idx >> j) & 1) for j in range(k)): v
                for idx, v in enumerate(corners)
            })
        return {"kind": "cubical", "dim": k, "cubes": cubes}
    if isinstance(K, Groupoid):
        return {"kind": "builtin", "name": "tribar"}
    raise TypeError(f"cannot serialize {type(K).__name__}")


def load_complex(path: str | Path):
    return parse_complex(load_json(path))


def parse_state(obj) -> LabelledState:
    try:
        return LabelledState.from_mapping(obj["hole"], obj["placement"])
    except (KeyError, TypeError, ValueError) as e:
        raise ParseError(f"invalid puzzle state: {e}") from e


def state_to_dict(s: LabelledState) -> dict:
    return {"hole": s.hole, "placement": {p: c for p, c in s.placement}}


def _oriented(text: str) -> tuple[int, int]:
    a, b = text.split(",")
    return int(a), int(b)


def parse_connection(obj) -> GraphConnection:
    try:
        edges = [tuple(e) for e in obj["edges"]]
        n = max(max(e) for e in edges) + 1
        graph = Graph(n, tuple(edges))
        nabla = {
            _oriented(edge): {_oriented(k): _oriented(v) for k, v in table.items()}
            for edge, table in obj["nabla"].items()
        }
        return GraphConnection(graph, nabla)
    except (KeyError, TypeError, ValueError) as e:
        raise ParseError(f"invalid connection: {e}") from e


def connection_to_dict(c: GraphConnection) -> dict:
    return {
        "edges": [list(e) for e in c.graph.edges],
        "nabla": {
            f"{x},{y}": {f"{a},{b}": f"{p},{q}" for (a, b), (p, q) in table.items()}
            for (x, y), table in c.nabla.items()
        },
    }


def perm_to_list(p: Perm) -> list[int]:
    return list(p.images)


def signed_perm_to_dict(s: SignedPerm) -> dict:
    return {"perm": list(s.perm.images), "signs": list(s.signs)}


def transport_to_wire(t: TransportPath) -> list[int]:
    return t.to_wire()


def holonomy_to_dict(r: HolonomyResult) -> dict:
    out = {
        "base": r.base,
        "order": str(r.order),
        "tag": r.tag,
        "generators": [perm_to_list(g) for g in r.generators],
        "outer_order": str(r.outer_order),
    }
    if r.signed_generators is not None:
        out["signed_generators"] = [signed_perm_to_dict(s) for s in r.signed_generators]
    return out
