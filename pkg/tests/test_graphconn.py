import random

import pytest

from groupoids.graphconn import (
    GraphConnection,
    InvalidConnection,
    NotRegular,
    connection_holonomy,
    cycle_connection,
    rotation_connection,
    star,
    validate_connection,
)
from groupoids.homcx import Graph, complete_graph, cycle_graph, path_graph
from groupoids.permgroup import recognize


def test_cycle_connection_forced_and_valid():
    c = cycle_connection(4)
    assert validate_connection(c)
    # with two-element stars the whole table is forced
    assert c.nabla[(0, 1)][(0, 1)] == (1, 0)
    assert c.nabla[(0, 1)][(0, 3)] == (1, 2)


@pytest.mark.parametrize("n", [3, 4, 5, 6, 8])
def test_cycle_connection_always_validates(n):
    assert validate_connection(cycle_connection(n))


def test_axiom_violation_witnessed():
    c = cycle_connection(4)
    nabla = {k: dict(v) for k, v in c.nabla.items()}
    nabla[(0, 1)][(0, 1)] = (1, 2)
    nabla[(0, 1)][(0, 3)] = (1, 0)
    report = validate_connection(GraphConnection(c.graph, nabla))
    assert not report
    assert "(0, 1)" in report.witness


def test_not_regular():
    with pytest.raises(NotRegular):
        validate_connection(rotation_connection(path_graph(4)))


def test_k4_rotation_connection():
    c = rotation_connection(complete_graph(4))
    assert validate_connection(c)
    group = connection_holonomy(c, 0)
    assert group.degree == 3
    assert group.order == 3


def test_cycle_holonomies():
    # odd cycles swap the two star slots, even cycles do not
    assert connection_holonomy(cycle_connection(3)).order == 2
    assert recognize(connection_holonomy(cycle_connection(3))) == "cyclic(2)"
    assert connection_holonomy(cycle_connection(4)).order == 1
    assert connection_holonomy(cycle_connection(5)).order == 2
    assert connection_holonomy(cycle_connection(6)).order == 1


def test_smallest_regular_tree_is_trivial():
    # the one-edge graph is the only regular tree; no cycles, no holonomy
    c = rotation_connection(complete_graph(2))
    assert validate_connection(c)
    assert connection_holonomy(c).order == 1


def test_holonomy_base_independence():
    for build in (lambda: cycle_connection(5),
                  lambda: rotation_connection(complete_graph(4))):
        c = build()
        n = c.graph.vertex_count
        orders = {connection_holonomy(c, base).order for base in range(n)}
        assert len(orders) == 1


def test_holonomy_degree_equals_regularity():
    c = rotation_connection(complete_graph(5))
    assert connection_holonomy(c).degree == 4


def test_fuzzed_perturbations_rejected():
    rng = random.Random(12)
    c = rotation_connection(complete_graph(4))
    oriented = list(c.nabla)
    rejected = 0
    for _ in range(20):
        nabla = {k: dict(v) for k, v in c.nabla.items()}
        edge = rng.choice(oriented)
        keys = list(nabla[edge])
        a, b = rng.sample(keys, 2)
        nabla[edge][a], nabla[edge][b] = nabla[edge][b], nabla[edge][a]
        if not validate_connection(GraphConnection(c.graph, nabla)):
            rejected += 1
    assert rejected == 20


def test_invalid_connection_raises_on_holonomy():
    c = cycle_connection(4)
    nabla = {k: dict(v) for k, v in c.nabla.items()}
    nabla[(0, 1)][(0, 1)] = (1, 2)
    nabla[(0, 1)][(0, 3)] = (1, 0)
    with pytest.raises(InvalidConnection):
        connection_holonomy(GraphConnection(c.graph, nabla))


def test_star_ordering():
    g = complete_graph(4)
    assert star(g, 2) == ((2, 0), (2, 1), (2, 3))
