import random

import networkx as nx
import pytest

import inducedcycles as ic


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.order))
    h.add_edges_from(g.edges())
    return h


def test_graph_round_trip():
    rng = random.Random(1)
    for _ in range(50):
        n = rng.randint(1, 30)
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.3]
        g = ic.Graph(n, edges)
        code = g.to_graph6()
        assert ic.Graph.from_graph6(code) == g
        assert nx.to_graph6_bytes(to_nx(g), header=False).strip().decode() == code


def test_census_matches_networkx():
    rng = random.Random(2)
    for _ in range(30):
        n = rng.randint(3, 11)
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.4]
        g = ic.Graph(n, edges)
        lengths = {}
        for cyc in nx.chordless_cycles(to_nx(g)):
            if len(cyc) >= 3:
                lengths[len(cyc)] = lengths.get(len(cyc), 0) + 1
        census = ic.count_induced_cycles(g)
        assert {k: v for k, v in census["by_length"].items() if v} == lengths
        assert census == ic.slow_census(g)


def test_families_and_formulas():
    g, part = ic.construct("H", 13)
    assert sorted(len(c) for c in part["clusters"]) == [3, 3, 3, 4]
    assert ic.count_induced_cycles(g)["f"] == 315 == ic.m_lower(13)
    assert [ic.f2(n) for n in range(4, 8)] == [2, 3, 4, 6]
    assert ic.f2_odd(10) == 18
    assert ic.short_cycle_mass(30) == 4525
    assert ic.vertex_cycle_bound(13, 6) == pytest.approx(135.0)
    f8, _ = ic.build_braid([1, 3, 3, 1], False)
    assert ic.count_induced_paths(f8, 0, 7)["p2"] == 9
    assert ic.path_tree_stats(f8, 0, 7)["balanced"]


def test_recognition_and_game():
    g, _ = ic.construct("G", 16)
    assert ic.matching_families(g)[0] == "G"
    found = ic.discover_cyclic_braid(g)
    assert ic.verify_braid(g, found["clusters"], found["cyclic"])["verified"]
    p10 = ic.Graph(10, [(i, i + 1) for i in range(9)])
    assert ic.solve_typical_game(p10, 0, 9)["winner"] == "Adversary"
    h15, _ = ic.construct("H", 15)
    assert ic.local_structure(h15, 0)["Z"] == [0, 1, 2]


def test_sweep_and_errors():
    assert ic.exhaustive_max(5, "p2")["max"] == 3
    with pytest.raises(ValueError):
        ic.Graph(3, [(0, 3)])
    with pytest.raises(ValueError):
        ic.Graph.from_graph6("B")
    h18, _ = ic.construct("H", 18)
    with pytest.raises(ValueError, match="distance"):
        ic.solve_typical_game(h18, 0, 9)
