"""Obstruction invariants for cubical complexes and transport colorings.

Two Z_2-valued invariants are computed and compared: the holonomy
parity invariant (0 iff every transport loop is an even signed
permutation of cube directions) and the salt-crystal invariant ``nacl``
(0 iff the vertex-edge graph is bipartite).  The first never exceeds
the second, and under global plus local strong connectivity they agree;
vertex identifications build complexes where they differ.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .complexes import (
    CubicalComplex,
    SimplicialComplex,
    build_cubical,
    facet_adjacency,
)
from .groupoid import Groupoid
from .holonomy import NotConnected, holonomy
from .permgroup import signed_parity


class AdjacentVertices(ValueError):
    """Identification endpoints share an edge."""


class SharedCell(ValueError):
    """Identification endpoints lie in a common closed cell."""


class NontrivialHolonomy(ValueError):
    """Transport coloring needs trivial holonomy."""


class NotLocallyConnected(ValueError):
    """Some vertex star is not connected as a groupoid."""


class InconsistentExtension(RuntimeError):
    """Path-extended coloring disagreed with itself; a hypothesis of the
    construction is violated.  Reported, never silently repaired."""


@dataclass(frozen=True)
class TwoColoring:
    color: dict[int, int]

    def is_proper(self, edges: Sequence[tuple[int, int]]) -> bool:
        return all(self.color[a] != self.color[b] for a, b in edges)


@dataclass(frozen=True)
class RainbowColoring:
    """Vertex coloring in which every facet sees each color exactly once."""

    color: dict[int, int]

    def is_rainbow(self, K) -> bool:
        for facet in K.facets:
            if len({self.color[v] for v in facet}) != len(facet):
                return False
        return True


@dataclass(frozen=True)
class NaclResult:
    value: int
    coloring: TwoColoring | None
    odd_cycle: tuple[int, ...] | None


def nacl(K: SimplicialComplex | CubicalComplex) -> NaclResult:
    """0 iff the vertex-edge graph is bipartite.

    Carries a witness either way: the 2-coloring, or an odd cycle.
    """
    adj: dict[int, list[int]] = {v: [] for v in range(K.vertex_count)}
    for a, b in K.skeleton_edges:
        adj[a].append(b)
        adj[b].append(a)
    color: dict[int, int] = {}
    parent: dict[int, int | None] = {}
    for start in range(K.vertex_count):
        if start in color:
            continue
        color[start] = 0
        parent[start] = None
        queue = [start]
        while queue:
            u = queue.pop(0)
            for v in adj[u]:
                if v not in color:
                    color[v] = 1 - color[u]
                    parent[v] = u
                    queue.append(v)
                elif color[v] == color[u]:
                    return NaclResult(1, None, _odd_cycle(parent, u, v))
    return NaclResult(0, TwoColoring(color), None)


def _odd_cycle(parent: dict, u: int, v: int) -> tuple[int, ...]:
    up, vp = [u], [v]
    while parent[up[-1]] is not None:
        up.append(parent[up[-1]])
    while parent[vp[-1]] is not None:
        vp.append(parent[vp[-1]])
    # trim the common tail above the least common ancestor
    while len(up) > 1 and len(vp) > 1 and up[-2] == vp[-2]:
        up.pop()
        vp.pop()
    cycle = up + vp[:-1][::-1]
    assert len(cycle) % 2 == 1, "witness cycle must be odd"
    return tuple(cycle)


def i_invariant(K: CubicalComplex) -> int:
    """0 iff every holonomy generator is an even signed permutation.

    Sign parity is a homomorphism onto Z_2, so checking generators
    settles the whole group.  Disconnected complexes are checked one
    dual component at a time.
    """
    g = Groupoid.from_complex(K)
    for component in g.dual.components():
        base = min(component)
        result = holonomy(g, base, require_connected=False)
        if any(signed_parity(s) == 1 for s in result.signed_generators):
            return 1
    return 0


def locally_strongly_connected(K: SimplicialComplex | CubicalComplex) -> bool:
    """Every vertex star connected through ridges containing the vertex."""
    dual = facet_adjacency(K)
    for v in range(K.vertex_count):
        star = [i for i, f in enumerate(K.facets) if v in f]
        if len(star) <= 1:
            continue
        allowed = {
            (i, j) for i, j, rid in dual.edges
            if v in dual.ridges[rid]
        }
        seen = {star[0]}
        queue = [star[0]]
        while queue:
            u = queue.pop(0)
            for w in star:
                if w not in seen and ((u, w) in allowed or (w, u) in allowed):
                    seen.add(w)
                    queue.append(w)
        if len(seen) != len(star):
            return False
    return True


@dataclass(frozen=True)
class InvariantComparison:
    i: int
    nacl: int
    equal: bool
    strongly_connected: bool
    locally_strongly_connected: bool
    witness_odd_cycle: tuple[int, ...] | None


def compare_invariants(K: CubicalComplex) -> InvariantComparison:
    """Both invariants plus the connectivity hypotheses under which they
    must coincide."""
    n = nacl(K)
    i = i_invariant(K)
    return InvariantComparison(
        i=i,
        nacl=n.value,
        equal=i == n.value,
        strongly_connected=facet_adjacency(K).is_connected(),
        locally_strongly_connected=locally_strongly_connected(K),
        witness_odd_cycle=n.odd_cycle,
    )


def quotient_identify(K: CubicalComplex, u: int, v: int) -> CubicalComplex:
    """Identify two vertices, keeping every cell's corner structure.

    The endpoints must be non-adjacent and must not share a closed
    cell; the merged complex is fully revalidated, so an identification
    that destroys the cell structure fails loudly.
    """
    if u == v:
        raise ValueError("identification endpoints must differ")
    if tuple(sorted((u, v))) in K.skeleton_edges:
        raise AdjacentVertices(f"vertices {u} and {v} share an edge")
    for cube in K.cubes:
        if u in cube and v in cube:
            raise SharedCell(f"vertices {u} and {v} lie in a common cell")
    keep = min(u, v)
    drop = max(u, v)

    def relabel(w: int) -> int:
        if w == drop:
            w = keep
        return w - 1 if w > drop else w

    k = K.dim
    cubes = []
    for cube in K.cubes:
        cubes.append({
            tuple((idx >> j) & 1 for j in range(k)): relabel(vert)
            for idx, vert in enumerate(cube)
        })
    return build_cubical(cubes)


def lattice_parity_coloring(vertices: Sequence[tuple[int, ...]],
                            mode: str = "auto") -> TwoColoring:
    """Parity 2-coloring of lattice or sign-vector coordinates.

    Sign vectors (every entry +-1) are colored by the parity of their
    -1 count; integer lattice points by coordinate-sum parity.  Either
    rule flips across any lattice edge, so the coloring is proper on
    the 1-skeleton of any complex drawn in the lattice.
    """
    if mode == "auto":
        sign_form = all(all(c in (-1, 1) for c in v) for v in vertices)
        mode = "signs" if sign_form else "sum"
    if mode == "signs":
        color = {i: sum(1 for c in v if c < 0) % 2 for i, v in enumerate(vertices)}
    elif mode == "sum":
        color = {i: sum(v) % 2 for i, v in enumerate(vertices)}
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return TwoColoring(color)


def transport_coloring(K: SimplicialComplex | CubicalComplex) -> RainbowColoring:
    """Color all vertices by transporting a base facet's slot labels.

    Needs a strongly connected complex, connected vertex stars, and
    trivial holonomy; each is checked, and the extension is re-validated
    over every dual edge rather than trusted.  Simplicial complexes end
    up with d+1 colors and every facet rainbow.
    """
    g = Groupoid.from_complex(K)
    if not g.dual.is_connected():
        raise NotConnected("transport coloring needs a strongly connected complex")
    if not locally_strongly_connected(K):
        raise NotLocallyConnected("some vertex star is disconnected")
    base_hol = holonomy(g, 0)
    if base_hol.order != 1:
        raise NontrivialHolonomy(f"holonomy has order {base_hol.order}")

    base_verts = g.object_vertices[0]
    color: dict[int, int] = {v: i for i, v in enumerate(base_verts)}
    parent, seen, order = _bfs_tree(g)
    for node in order[1:]:
        up, rid = parent[node]
        step = g.flips[(up, node, rid)]
        for src, dst in step.items():
            c = color[src]
            if dst in color and color[dst] != c:
                raise InconsistentExtension(
                    f"vertex {dst} received colors {color[dst]} and {c}")
            color[dst] = c
    # re-validate across every flip, tree or not
    for i, j, rid in g.dual.edges:
        step = g.flips[(i, j, rid)]
        for src, dst in step.items():
            if color[src] != color[dst]:
                raise InconsistentExtension(
                    f"flip {i}->{j} moves color {color[src]} onto {color[dst]}")
    coloring = RainbowColoring(color)
    if not coloring.is_rainbow(K):
        raise InconsistentExtension("a facet failed the rainbow check")
    return coloring


def _bfs_tree(g: Groupoid):
    parent: dict[int, tuple[int, int]] = {}
    seen = {0}
    order = [0]
    queue = [0]
    while queue:
        u = queue.pop(0)
        for rid, v in g.dual.adjacency[u]:
            if v not in seen:
                seen.add(v)
                parent[v] = (u, rid)
                order.append(v)
                queue.append(v)
    return parent, seen, order
