"""Holonomy groups of facet-flip groupoids.

The vertex group at a base object is realized through spanning-tree
fundamental cycles: each non-tree edge of the dual multigraph closes a
loop whose transport permutation is one generator.  Generators act on
the vertex SLOTS of the base object (positions 0..d in sorted vertex
order), not on global ids, so groups are comparable across complexes
and directly track a slot pattern carried around a loop.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .complexes import (
    CubicalComplex,
    SimplicialComplex,
    VertexMap,
    check_nondegenerate,
)
from .groupoid import Groupoid, corner_map_signed, transport
from .permgroup import Perm, PermGroup, SignedPerm, recognize, schreier_sims


class NotConnected(ValueError):
    """The dual multigraph is not connected."""


class NotNondegenerate(ValueError):
    """The supplied vertex map is degenerate."""


@dataclass(frozen=True)
class HolonomyResult:
    base: int
    generators: tuple[Perm, ...]
    group: PermGroup
    tree_edges: tuple[tuple[int, int, int], ...]
    vertex_bijections: tuple[dict[int, int], ...]
    signed_generators: tuple[SignedPerm, ...] | None
    outer_order: int

    @property
    def order(self) -> int:
        return self.group.order

    @property
    def tag(self) -> str:
        return recognize(self.group)

    @property
    def is_proper_subgroup_of_outer(self) -> bool:
        """Whether transport realizes strictly less than every symmetry
        of the object (the obstruction phenomenon)."""
        return self.order < self.outer_order


def is_strongly_connected(K: SimplicialComplex | CubicalComplex) -> bool:
    """Any two facets joined by a chain of ridge-adjacent facets."""
    return Groupoid.from_complex(K).dual.is_connected()


def slot_perm(g: Groupoid, obj: int, bijection: dict[int, int]) -> Perm:
    """Convert a self-bijection of an object's vertices to a slot
    permutation in sorted-vertex order."""
    verts = g.object_vertices[obj]
    index = {v: i for i, v in enumerate(verts)}
    return Perm(tuple(index[bijection[v]] for v in verts))


def _spanning_tree(g: Groupoid, base: int, rng: random.Random | None):
    """BFS tree from the base with lowest-ridge-id tie-breaking, or a
    seeded shuffle of the exploration order when rng is given."""
    parent: dict[int, tuple[int, int]] = {}  # node -> (parent, ridge)
    seen = {base}
    order = [base]
    queue = [base]
    while queue:
        u = queue.pop(0)
        edges = list(g.dual.adjacency[u])
        if rng is not None:
            rng.shuffle(edges)
        for rid, v in edges:
            if v not in seen:
                seen.add(v)
                parent[v] = (u, rid)
                order.append(v)
                queue.append(v)
    return parent, seen, order


def _tree_transport(g: Groupoid, base: int, parent, node: int) -> dict[int, int]:
    path = []
    while node != base:
        up, rid = parent[node]
        path.append((up, node, rid))
        node = up
    bij = {v: v for v in g.object_vertices[base]}
    for up, down, rid in reversed(path):
        step = g.flips[(up, down, rid)]
        bij = {x: step[y] for x, y in bij.items()}
    return bij


def holonomy(g: Groupoid, base: int = 0, rng: random.Random | None = None,
             require_connected: bool = True) -> HolonomyResult:
    """Holonomy group at a base object of a groupoid.

    With ``require_connected`` unset, a disconnected dual graph yields
    the holonomy of the base's component.
    """
    parent, seen, _ = _spanning_tree(g, base, rng)
    if require_connected and len(seen) != g.object_count:
        raise NotConnected(
            f"dual graph reaches {len(seen)} of {g.object_count} objects from base")
    tree = {(min(u, v), max(u, v), rid) for v, (u, rid) in parent.items()}
    to_base: dict[int, dict[int, int]] = {}
    for node in seen:
        to_base[node] = _tree_transport(g, base, parent, node)

    gens: list[Perm] = []
    bijections: list[dict[int, int]] = []
    for i, j, rid in g.dual.edges:
        if i not in seen or (i, j, rid) in tree:
            continue
        flip = g.flips[(i, j, rid)]
        forward = to_base[i]
        back = {v: u for u, v in to_base[j].items()}
        loop = {x: back[flip[forward[x]]] for x in g.object_vertices[base]}
        bijections.append(loop)
        gens.append(slot_perm(g, base, loop))

    degree = len(g.object_vertices[base])
    group = schreier_sims(gens, degree=degree)

    signed = None
    outer = math.factorial(degree)
    if g.corner_maps is not None:
        base_corners = g.corner_maps[base]
        signed = tuple(corner_map_signed(base_corners, base_corners, b)
                       for b in bijections)
        k = g.cube_dim
        outer = (1 << k) * math.factorial(k)
    return HolonomyResult(
        base=base,
        generators=tuple(gens),
        group=group,
        tree_edges=tuple(sorted(tree)),
        vertex_bijections=tuple(bijections),
        signed_generators=signed,
        outer_order=outer,
    )


def holonomy_group(K: SimplicialComplex | CubicalComplex,
                   base: int = 0) -> HolonomyResult:
    """Holonomy of the facet-flip groupoid of a complex."""
    return holonomy(Groupoid.from_complex(K), base)


def holonomy_order_invariance(K, seeds=(1, 2, 3)) -> bool:
    """Test helper: the order and recognition tag must agree across all
    base facets and across several randomized spanning trees."""
    g = Groupoid.from_complex(K)
    if not g.dual.is_connected():
        raise NotConnected("invariance check needs a connected dual graph")
    reference = holonomy(g, 0)
    want = (reference.order, reference.tag)
    for base in range(g.object_count):
        r = holonomy(g, base)
        if (r.order, r.tag) != want:
            return False
    for seed in seeds:
        r = holonomy(g, 0, rng=random.Random(seed))
        if (r.order, r.tag) != want:
            return False
    return True


def closed_path_oracle(g: Groupoid, base: int, max_len: int | None = None) -> frozenset[Perm]:
    """Transport permutations of every closed path at the base up to a
    length bound, closed under composition.

    Brute force; intended for complexes with few facets as an
    independent cross-check of the fundamental-cycle generators.
    """
    if max_len is None:
        max_len = 2 * g.object_count
    degree = len(g.object_vertices[base])
    found: set[Perm] = set()
    start = {v: v for v in g.object_vertices[base]}
    stack = [(base, start, 0)]
    while stack:
        node, bij, length = stack.pop()
        if node == base:
            found.add(slot_perm(g, base, bij))
        if length == max_len:
            continue
        for rid, nxt in g.dual.adjacency[node]:
            step = g.flips[(node, nxt, rid)]
            stack.append((nxt, {x: step[y] for x, y in bij.items()}, length + 1))
    # close under composition
    frontier = list(found)
    while frontier:
        fresh = []
        for a in frontier:
            for b in list(found):
                for c in (a * b, b * a):
                    if c not in found:
                        found.add(c)
                        fresh.append(c)
        frontier = fresh
    return frozenset(found)


def induced_embedding_check(f: VertexMap, base: int = 0) -> bool:
    """Does the functor induced by a non-degenerate map embed holonomy?

    Each holonomy generator of the source, renamed through f, must lie
    in the holonomy group of the target at the image facet, and the
    image subgroup must have the full source order (trivial kernel).
    """
    report = check_nondegenerate(f)
    if not report:
        raise NotNondegenerate(f"map degenerates on face {report.witness}")
    src, dst = f.source, f.target
    if src.dim != dst.dim:
        raise NotNondegenerate(
            f"complexes have different depths {src.dim} and {dst.dim}")
    src_hol = holonomy_group(src, base)
    base_verts = Groupoid.from_complex(src).object_vertices[base]
    image_set = frozenset(f(v) for v in base_verts)
    dst_g = Groupoid.from_complex(dst)
    target_base = next(i for i, verts in enumerate(dst_g.object_vertices)
                       if frozenset(verts) == image_set)
    dst_hol = holonomy(dst_g, target_base)

    image_perms = []
    for bij in src_hol.vertex_bijections:
        renamed = {f(u): f(v) for u, v in bij.items()}
        image_perms.append(slot_perm(dst_g, target_base, renamed))
    if not all(dst_hol.group.contains(p) for p in image_perms):
        return False
    image_group = schreier_sims(image_perms, degree=len(image_set))
    return image_group.order == src_hol.order
