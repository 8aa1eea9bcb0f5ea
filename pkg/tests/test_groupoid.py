from itertools import permutations

import pytest

from groupoids.complexes import build_cubical, build_simplicial
from groupoids.corpus import (
    cycle_complex,
    grid_patch,
    simplex_boundary,
    strip_complex,
    triangle_strip,
)
from groupoids.groupoid import (
    BaseMismatch,
    BrokenPath,
    Groupoid,
    NotAdjacent,
    corner_map_signed,
    elementary_morphisms,
    identity_pattern,
    transport,
    transport_pattern,
    tribar_groupoid,
)
from groupoids.permgroup import signed_parity


def test_flip_two_triangles():
    K = build_simplicial([[0, 1, 2], [1, 2, 3]])
    (m,) = elementary_morphisms(K, 0, 1, [1, 2])
    assert m.bijection == {0: 3, 1: 1, 2: 2}


def test_flip_two_edges():
    K = build_simplicial([[0, 1], [1, 2]])
    (m,) = elementary_morphisms(K, 0, 1, [1])
    assert m.bijection == {0: 2, 1: 1}


def brute_force_square_flips(K, i, j, ridge):
    """Oracle: all vertex bijections of two squares that fix the ridge
    pointwise and carry faces onto faces."""
    src, dst = K.cubes[i], K.cubes[j]
    faces_i = {verts for _, _, verts in K.cube_face_lists[i]}
    faces_j = {verts for _, _, verts in K.cube_face_lists[j]}
    found = []
    rest_src = [v for v in src if v not in ridge]
    rest_dst = [v for v in dst if v not in ridge]
    for image in permutations(rest_dst):
        bij = {v: v for v in ridge}
        bij.update(dict(zip(rest_src, image)))
        if {frozenset(bij[v] for v in f) for f in faces_i} == faces_j:
            found.append(bij)
    return found


def test_flip_two_squares_matches_brute_force():
    K = build_cubical([
        {"00": 0, "01": 1, "10": 2, "11": 3},
        {"00": 2, "01": 3, "10": 4, "11": 5},
    ])
    ridge = frozenset({2, 3})
    oracle = brute_force_square_flips(K, 0, 1, ridge)
    assert len(oracle) == 1
    (m,) = elementary_morphisms(K, 0, 1, [2, 3])
    assert m.bijection == oracle[0]
    # the flat crossing reverses the crossing direction
    sp = corner_map_signed(K.cubes[0], K.cubes[1], m.bijection)
    assert signed_parity(sp) == 1


def test_flip_around_cube_corner_is_even():
    from groupoids.corpus import cube_skeleton
    K, _ = cube_skeleton(3, 2)
    g = Groupoid.from_complex(K)
    i, j, rid = g.dual.edges[0]
    sp = corner_map_signed(K.cubes[i], K.cubes[j], g.flips[(i, j, rid)])
    assert signed_parity(sp) == 0


def test_not_adjacent():
    K = simplex_boundary(3)
    with pytest.raises(NotAdjacent):
        elementary_morphisms(K, 0, 1, [0])


@pytest.mark.parametrize("K", [
    simplex_boundary(3),
    cycle_complex(5),
    grid_patch(2, 2)[0],
    strip_complex(4, twisted=True),
])
def test_flip_uniqueness_and_ridge_fixing(K):
    g = Groupoid.from_complex(K)
    for i, j, rid in g.dual.edges:
        ridge = g.dual.ridges[rid]
        morphisms = elementary_morphisms(K, i, j, ridge)
        assert len(morphisms) == 1
        bij = morphisms[0].bijection
        for v in ridge:
            assert bij[v] == v
        # stored flips agree and invert each other
        assert g.flips[(i, j, rid)] == bij
        assert g.flips[(j, i, rid)] == {v: u for u, v in bij.items()}


def test_transport_empty_path_is_identity():
    g = Groupoid.from_complex(simplex_boundary(3))
    t = transport(g, [2])
    assert t.bijection == {v: v for v in g.object_vertices[2]}


def test_transport_fan_and_back():
    g = Groupoid.from_complex(triangle_strip(3))
    out = transport(g, [0, 1, 2])
    # by hand: {0,1,2}->{1,2,3} sends 0 to 3, then {1,2,3}->{2,3,4}
    # sends 1 to 4 and fixes the rest
    assert out.bijection == {0: 3, 1: 4, 2: 2}
    back = transport(g, [2, 1, 0])
    roundtrip = {v: back.bijection[out.bijection[v]] for v in g.object_vertices[0]}
    assert roundtrip == {v: v for v in g.object_vertices[0]}


def test_transport_matches_stepwise_flips():
    g = Groupoid.from_complex(simplex_boundary(3))
    path = [0, 1, 3, 0]
    t = transport(g, path)
    bij = {v: v for v in g.object_vertices[0]}
    for u, v in zip(path, path[1:]):
        rid = next(r for r, w in g.dual.adjacency[u] if w == v)
        step = g.flips[(u, v, rid)]
        bij = {x: step[y] for x, y in bij.items()}
    assert t.bijection == bij
    assert t.to_wire()[0::2] == list(path)


def test_transport_closed_loop_lands_in_oracle():
    from groupoids.holonomy import closed_path_oracle, slot_perm
    g = Groupoid.from_complex(simplex_boundary(3))
    t = transport(g, [0, 1, 2, 0])
    oracle = closed_path_oracle(g, 0)
    assert slot_perm(g, 0, t.bijection) in oracle


def test_transport_reversal_is_inverse_on_random_paths():
    import random
    rng = random.Random(4)
    for K in (simplex_boundary(3), grid_patch(2, 2)[0], cycle_complex(6)):
        g = Groupoid.from_complex(K)
        for _ in range(10):
            path = [rng.randrange(g.object_count)]
            ridges = []
            for _ in range(rng.randint(1, 6)):
                choices = g.dual.adjacency[path[-1]]
                rid, nxt = rng.choice(choices)
                ridges.append(rid)
                path.append(nxt)
            forward = transport(g, path, ridges)
            backward = transport(g, path[::-1], ridges[::-1])
            for v in g.object_vertices[path[0]]:
                assert backward.bijection[forward.bijection[v]] == v


def test_broken_path():
    g = Groupoid.from_complex(cycle_complex(5))
    # facet 0 is {0,1} and facet 3 is {2,3}: disjoint
    with pytest.raises(BrokenPath):
        transport(g, [0, 3])
    with pytest.raises(BrokenPath):
        transport(g, [])


def test_pattern_transport():
    g = Groupoid.from_complex(triangle_strip(2))
    p = identity_pattern(g, 0)
    ident = transport(g, [0])
    assert transport_pattern(p, ident) == p

    step = transport(g, [0, 1])
    q = transport_pattern(p, step)
    assert q.facet == 1
    assert q.labelling == {slot: step.bijection[v] for slot, v in p.labelling.items()}

    back = transport(g, [1, 0])
    assert transport_pattern(q, back) == p


def test_pattern_concatenation_matches_stepwise():
    g = Groupoid.from_complex(simplex_boundary(3))
    p = identity_pattern(g, 0)
    ab = transport(g, [0, 1])
    bc = transport(g, [1, 2])
    both = transport(g, [0, 1, 2])
    assert transport_pattern(transport_pattern(p, ab), bc) == transport_pattern(p, both)


def test_pattern_base_mismatch():
    g = Groupoid.from_complex(triangle_strip(2))
    p = identity_pattern(g, 1)
    with pytest.raises(BaseMismatch):
        transport_pattern(p, transport(g, [0, 1]))


def test_tribar_loop_is_order_four():
    g = tribar_groupoid()
    ab = g.flips[(0, 1, 0)]
    bc = g.flips[(1, 2, 1)]
    ca = g.flips[(2, 0, 2)]
    eta = {v: ca[bc[ab[v]]] for v in g.object_vertices[0]}
    power = dict(eta)
    orders = []
    for n in range(1, 6):
        orders.append(all(k == v for k, v in power.items()))
        power = {k: eta[v] for k, v in power.items()}
    # identity first at the fourth power
    assert orders == [False, False, False, True, False]
