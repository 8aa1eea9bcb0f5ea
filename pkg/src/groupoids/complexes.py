"""Validated combinatorial ground objects.

Ranked posets, pure simplicial complexes, cubical complexes given by
corner-address maps, vertex maps between complexes, and the dual
multigraph of facet adjacencies.  Construction validates everything up
front; afterwards all values are immutable and safe to share.

Vertex identifiers are dense integers 0..n-1 throughout.  A k-cube is a
map from corner addresses {0,1}^k to vertices; internally an address is
a tuple of bits, and bit j of the flat corner index is coordinate j.
Faces arise by freezing coordinates, which pins the whole face lattice
without any geometric embedding.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Mapping, Sequence


class ComplexError(ValueError):
    """Invalid complex construction."""


class NonPure(ComplexError):
    """Mixed facet dimensions."""


class DegenerateFacet(ComplexError):
    """A facet repeats a vertex."""


class DominatedFacet(ComplexError):
    """A facet is contained in another."""


class CornerCollision(ComplexError):
    """A cube maps two corners to one vertex."""


class SemilatticeViolation(ComplexError):
    """Two closed cells meet in something other than a single common face."""


@dataclass(frozen=True)
class RankedPoset:
    """A finite poset given by its covering relation and a rank function.

    Ranks strictly increase by exactly one along covers, which also
    forces acyclicity.
    """

    elements: tuple
    rank: dict
    covers: tuple[tuple, ...]  # (lower, upper) pairs

    def __post_init__(self):
        elems = set(self.elements)
        for lo, hi in self.covers:
            if lo not in elems or hi not in elems:
                raise ComplexError("cover endpoint not an element")
            if self.rank[hi] != self.rank[lo] + 1:
                raise ComplexError("cover must raise rank by exactly 1")

    @property
    def depth(self) -> int:
        return max(self.rank.values()) if self.rank else 0

    @cached_property
    def lower_covers(self) -> dict:
        out: dict = {e: [] for e in self.elements}
        for lo, hi in self.covers:
            out[hi].append(lo)
        return out

    def down_set(self, x) -> set:
        """All elements <= x."""
        seen = {x}
        stack = [x]
        while stack:
            y = stack.pop()
            for z in self.lower_covers[y]:
                if z not in seen:
                    seen.add(z)
                    stack.append(z)
        return seen

    def maximal_elements(self) -> tuple:
        uppers = {lo for lo, _ in self.covers}
        return tuple(e for e in self.elements if e not in uppers)


def _check_dense_vertices(vertices: set[int]) -> int:
    if not vertices:
        raise ComplexError("complex has no vertices")
    n = max(vertices) + 1
    if vertices != set(range(n)):
        missing = sorted(set(range(n)) - vertices)
        raise ComplexError(f"vertex ids must be dense 0..{n - 1}; missing {missing}")
    return n


@dataclass(frozen=True)
class SimplicialComplex:
    """A pure simplicial complex listed by its facets."""

    vertex_count: int
    facets: tuple[tuple[int, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.facets[0]) - 1

    @cached_property
    def faces(self) -> dict[frozenset, int]:
        """Every face (as a frozenset) mapped to its dimension."""
        out: dict[frozenset, int] = {}
        for facet in self.facets:
            for size in range(1, len(facet) + 1):
                for sub in combinations(facet, size):
                    out[frozenset(sub)] = size - 1
        return out

    @cached_property
    def skeleton_edges(self) -> tuple[tuple[int, int], ...]:
        """Edges of the vertex-edge graph (the 1-skeleton)."""
        if self.dim == 0:
            return ()
        edges = {fs for fs, d in self.faces.items() if d == 1}
        return tuple(sorted(tuple(sorted(e)) for e in edges))


def build_simplicial(facets: Iterable[Sequence[int]]) -> SimplicialComplex:
    """Validate and build a pure simplicial complex.

    Impure, degenerate, or dominated input aborts construction; silent
    repair would hide modeling errors.
    """
    raw = [tuple(f) for f in facets]
    if not raw:
        raise ComplexError("facet list is empty")
    for f in raw:
        if len(set(f)) != len(f):
            raise DegenerateFacet(f"repeated vertex in facet {f}")
    sizes = {len(f) for f in raw}
    if len(sizes) != 1:
        raise NonPure(f"mixed facet sizes {sorted(sizes)}")
    sets = [frozenset(f) for f in raw]
    for i, a in enumerate(sets):
        for j, b in enumerate(sets):
            if i != j and a <= b:
                raise DominatedFacet(f"facet {raw[i]} contained in {raw[j]}")
    n = _check_dense_vertices(set().union(*sets))
    canon = tuple(sorted(tuple(sorted(f)) for f in raw))
    return SimplicialComplex(vertex_count=n, facets=canon)


def _addr_index(bits: tuple[int, ...]) -> int:
    idx = 0
    for j, b in enumerate(bits):
        idx |= b << j
    return idx


def _index_bits(idx: int, k: int) -> tuple[int, ...]:
    return tuple((idx >> j) & 1 for j in range(k))


def _cube_faces(corners: tuple[int, ...], k: int):
    """Yield (free_coords, fixed_bits, vertex frozenset) for every face.

    free_coords is a sorted tuple of coordinates left to vary; fixed_bits
    maps each frozen coordinate to its pinned bit.
    """
    coords = range(k)
    for r in range(k + 1):
        for free in combinations(coords, r):
            frozen = [c for c in coords if c not in free]
            for mask in range(1 << len(frozen)):
                fixed = {c: (mask >> i) & 1 for i, c in enumerate(frozen)}
                verts = []
                for sub in range(1 << r):
                    bits = [0] * k
                    for c, b in fixed.items():
                        bits[c] = b
                    for i, c in enumerate(free):
                        bits[c] = (sub >> i) & 1
                    verts.append(corners[_addr_index(tuple(bits))])
                yield free, fixed, frozenset(verts)


@dataclass(frozen=True)
class CubicalComplex:
    """A pure cubical complex: each top cell is a corner-address map."""

    vertex_count: int
    dim: int
    cubes: tuple[tuple[int, ...], ...]  # cubes[c][flat corner index] = vertex

    @property
    def facets(self) -> tuple[tuple[int, ...], ...]:
        return self.cubes

    def corner_bits(self, cube: int, vertex: int) -> tuple[int, ...]:
        return _index_bits(self.corner_index[cube][vertex], self.dim)

    @cached_property
    def corner_index(self) -> tuple[dict[int, int], ...]:
        return tuple({v: i for i, v in enumerate(c)} for c in self.cubes)

    @cached_property
    def cube_face_lists(self) -> tuple[tuple, ...]:
        return tuple(tuple(_cube_faces(c, self.dim)) for c in self.cubes)

    @cached_property
    def faces(self) -> dict[frozenset, int]:
        out: dict[frozenset, int] = {}
        for flist in self.cube_face_lists:
            for free, _fixed, verts in flist:
                out[verts] = len(free)
        return out

    @cached_property
    def skeleton_edges(self) -> tuple[tuple[int, int], ...]:
        edges = {fs for fs, d in self.faces.items() if d == 1}
        return tuple(sorted(tuple(sorted(e)) for e in edges))


def build_cubical(cubes: Iterable[Mapping]) -> CubicalComplex:
    """Validate and build a cubical complex from corner-address maps.

    Corner keys may be bit tuples or binary strings ("01" means
    coordinate 0 is 0 and coordinate 1 is 1).  Cells must pairwise meet
    in a single common face or not at all; this is a deliberately
    stronger, checkable stand-in for the semilattice condition, standard
    for regular CW complexes.
    """
    normalized: list[tuple[int, ...]] = []
    k = None
    for cube in cubes:
        entries = {}
        for key, v in cube.items():
            bits = tuple(int(ch) for ch in key) if isinstance(key, str) else tuple(key)
            if any(b not in (0, 1) for b in bits):
                raise ComplexError(f"bad corner address {key!r}")
            entries[bits] = int(v)
        if k is None:
            k = len(next(iter(entries)))
            if k < 1:
                raise ComplexError("cube dimension must be at least 1")
        if {len(b) for b in entries} != {k}:
            raise NonPure("mixed cube dimensions")
        if len(entries) != 1 << k:
            raise ComplexError(f"cube needs all {1 << k} corners")
        corners = [0] * (1 << k)
        for bits, v in entries.items():
            corners[_addr_index(bits)] = v
        if len(set(corners)) != len(corners):
            raise CornerCollision(f"repeated vertex in cube {cube}")
        normalized.append(tuple(corners))
    if k is None:
        raise ComplexError("cube list is empty")

    n = _check_dense_vertices({v for c in normalized for v in c})

    vertex_sets = [frozenset(c) for c in normalized]
    if len(set(vertex_sets)) != len(vertex_sets):
        raise SemilatticeViolation("two cells share all their vertices")

    complex_ = CubicalComplex(vertex_count=n, dim=k, cubes=tuple(normalized))
    _check_semilattice(complex_)
    _check_cube_poset_counts(complex_)
    return complex_


def _check_semilattice(K: CubicalComplex) -> None:
    """Pairwise cell intersections must each be a single common face.

    The check runs over every derived face of every cube so that two
    cells sharing a vertex set also agree on its internal face
    structure.
    """
    facesets: list[set[frozenset]] = [
        {verts for _, _, verts in flist} for flist in K.cube_face_lists
    ]
    owners: dict[frozenset, list[int]] = {}
    for c, fset in enumerate(facesets):
        for verts in fset:
            owners.setdefault(verts, []).append(c)
    all_faces = sorted(owners, key=lambda fs: (len(fs), sorted(fs)))
    for a, b in combinations(all_faces, 2):
        inter = a & b
        if not inter:
            continue
        for c in owners[a] + owners[b]:
            if inter not in facesets[c]:
                raise SemilatticeViolation(
                    f"cells {sorted(a)} and {sorted(b)} meet in {sorted(inter)}, "
                    "which is not a common face")


def _check_cube_poset_counts(K: CubicalComplex) -> None:
    # Below a k-cell the derived poset must count like a cube's face
    # lattice: C(k, j) * 2^(k-j) faces of dimension j.
    from math import comb
    k = K.dim
    for flist in K.cube_face_lists:
        by_dim: dict[int, set[frozenset]] = {}
        for free, _, verts in flist:
            by_dim.setdefault(len(free), set()).add(verts)
        for j in range(k + 1):
            expect = comb(k, j) * (1 << (k - j))
            if len(by_dim.get(j, ())) != expect:
                raise SemilatticeViolation(
                    f"cell has {len(by_dim.get(j, ()))} faces of dim {j}, expected {expect}")


def face_poset(K: SimplicialComplex | CubicalComplex) -> RankedPoset:
    """The face poset: elements are faces, rank is dimension, covers are
    codimension-1 containments."""
    faces = K.faces
    elements = tuple(sorted(faces, key=lambda fs: (faces[fs], sorted(fs))))
    rank = {fs: faces[fs] for fs in elements}
    covers = set()
    if isinstance(K, SimplicialComplex):
        for fs in elements:
            if len(fs) > 1:
                for v in fs:
                    covers.add((fs - {v}, fs))
    else:
        for flist in K.cube_face_lists:
            lookup = {(free, tuple(sorted(fixed.items()))): verts
                      for free, fixed, verts in flist}
            for free, fixed, verts in flist:
                for c in free:
                    sub_free = tuple(x for x in free if x != c)
                    for b in (0, 1):
                        sub_fixed = dict(fixed)
                        sub_fixed[c] = b
                        sub = lookup[(sub_free, tuple(sorted(sub_fixed.items())))]
                        covers.add((sub, verts))
    return RankedPoset(elements=elements, rank=rank, covers=tuple(sorted(
        covers, key=lambda p: (rank[p[1]], sorted(p[1]), sorted(p[0])))))


@dataclass(frozen=True)
class DualMultigraph:
    """Facet-adjacency multigraph: one edge per shared ridge per pair.

    Parallel edges are kept apart by ridge id; collapsing them would
    lose holonomy (which ridge is crossed matters).
    """

    node_count: int
    edges: tuple[tuple[int, int, int], ...]  # (facet_i, facet_j, ridge_id), i < j
    ridges: tuple[tuple[int, ...], ...]      # ridge_id -> sorted vertex tuple

    @cached_property
    def adjacency(self) -> dict[int, tuple[tuple[int, int], ...]]:
        """node -> ((ridge_id, neighbor), ...) sorted by lowest ridge id."""
        out: dict[int, list[tuple[int, int]]] = {i: [] for i in range(self.node_count)}
        for i, j, r in self.edges:
            out[i].append((r, j))
            out[j].append((r, i))
        return {i: tuple(sorted(v)) for i, v in out.items()}

    def components(self) -> list[list[int]]:
        seen: set[int] = set()
        comps = []
        for start in range(self.node_count):
            if start in seen:
                continue
            comp = [start]
            seen.add(start)
            queue = [start]
            while queue:
                u = queue.pop(0)
                for _, v in self.adjacency[u]:
                    if v not in seen:
                        seen.add(v)
                        comp.append(v)
                        queue.append(v)
            comps.append(comp)
        return comps

    def is_connected(self) -> bool:
        return self.node_count <= 1 or len(self.components()) == 1


def _facet_ridges(K: SimplicialComplex | CubicalComplex) -> list[list[frozenset]]:
    """Per facet, its codimension-1 faces."""
    if isinstance(K, SimplicialComplex):
        return [[frozenset(f) - {v} for v in f] for f in K.facets]
    out = []
    for flist in K.cube_face_lists:
        out.append([verts for free, _, verts in flist if len(free) == K.dim - 1])
    return out


def facet_adjacency(K: SimplicialComplex | CubicalComplex) -> DualMultigraph:
    """One dual edge per unordered facet pair per shared ridge."""
    per_facet = _facet_ridges(K)
    all_ridges = sorted({r for lst in per_facet for r in lst},
                        key=lambda fs: sorted(fs))
    ridge_id = {r: i for i, r in enumerate(all_ridges)}
    holders: dict[int, list[int]] = {}
    for f, lst in enumerate(per_facet):
        for r in lst:
            holders.setdefault(ridge_id[r], []).append(f)
    edges = []
    for rid, fs in holders.items():
        for a, b in combinations(sorted(fs), 2):
            edges.append((a, b, rid))
    return DualMultigraph(
        node_count=len(K.facets),
        edges=tuple(sorted(edges)),
        ridges=tuple(tuple(sorted(r)) for r in all_ridges),
    )


@dataclass(frozen=True)
class VertexMap:
    """A total map of vertices between two complexes."""

    source: SimplicialComplex | CubicalComplex
    target: SimplicialComplex | CubicalComplex
    assignment: dict[int, int]

    def __post_init__(self):
        missing = set(range(self.source.vertex_count)) - set(self.assignment)
        if missing:
            raise ComplexError(f"assignment not total; missing {sorted(missing)}")

    def __call__(self, v: int) -> int:
        return self.assignment[v]


@dataclass(frozen=True)
class NondegeneracyResult:
    ok: bool
    witness: tuple[int, ...] | None = None  # offending face, if any

    def __bool__(self) -> bool:
        return self.ok


def check_nondegenerate(f: VertexMap) -> NondegeneracyResult:
    """Does f restrict to an isomorphism on every cell's face lattice?

    Equivalently: every face maps injectively onto a face of equal
    dimension of the target.  On failure the witness is the first face
    that degenerates or misses.
    """
    src, dst = f.source, f.target
    if isinstance(src, SimplicialComplex) != isinstance(dst, SimplicialComplex):
        raise ComplexError("source and target must be complexes of the same kind")
    if isinstance(src, SimplicialComplex):
        for facet in src.facets:
            image = [f(v) for v in facet]
            if len(set(image)) != len(image):
                return NondegeneracyResult(False, facet)
            if frozenset(image) not in dst.faces:
                return NondegeneracyResult(False, facet)
        return NondegeneracyResult(True)
    for c, flist in enumerate(src.cube_face_lists):
        corners = src.cubes[c]
        image = [f(v) for v in corners]
        if len(set(image)) != len(image):
            return NondegeneracyResult(False, tuple(sorted(corners)))
        for _, _, verts in flist:
            img = frozenset(f(v) for v in verts)
            if img not in dst.faces or dst.faces[img] != src.faces[verts]:
                return NondegeneracyResult(False, tuple(sorted(verts)))
    return NondegeneracyResult(True)


def compose_maps(f: VertexMap, g: VertexMap) -> VertexMap:
    """The composite map applying f first, then g."""
    if f.target is not g.source and f.target != g.source:
        raise ComplexError("maps are not composable")
    return VertexMap(source=f.source, target=g.target,
                     assignment={v: g(f(v)) for v in f.assignment})
