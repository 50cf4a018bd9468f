import math

import networkx as nx
import pytest

import spectool


def test_graph6_round_trip():
    k3 = spectool.from_graph6("Bw")
    assert k3.order == 3 and k3.edge_count == 3
    assert spectool.to_graph6(spectool.complete(3)) == "Bw"
    with pytest.raises(ValueError):
        spectool.from_graph6("B!")


def test_spectrum_against_networkx():
    g = spectool.gnp(20, 0.4, 11)
    ref = nx.Graph()
    ref.add_nodes_from(range(20))
    ref.add_edges_from(g.edges())
    want = sorted(nx.adjacency_spectrum(ref).real, reverse=True)
    got = spectool.eigenvalues(g)
    assert all(abs(a - b) < 1e-9 for a, b in zip(got, want))
    assert spectool.count_triangles(g) == sum(nx.triangles(ref).values()) // 3


def test_analyze_triangle():
    a = spectool.analyze("Bw")
    assert math.isclose(a["spectrum"]["lambda1"], 2.0, abs_tol=1e-9)
    assert a["stats"]["triangles"] == 1
    assert a["spectral_mantel"]["outcome"] == "HasTriangle"
    assert {b["id"] for b in a["bounds"]} == {"nosal", "stanley", "hong", "hsf", "lemma3", "thm11"}


def test_walks_and_cycles():
    assert spectool.walk_counts(spectool.complete(3), 3) == [3, 6, 12, 24]
    assert spectool.walk_counts(spectool.complete(30), 20)[20] == 30 * 29**20
    assert spectool.has_cycle_of_length(spectool.petersen(), 4) is None
    assert len(spectool.has_cycle_of_length(spectool.petersen(), 9)) == 9
    survivors, min_degree = spectool.degree_peel(spectool.cycle(8), 1)
    assert len(survivors) == 8 and min_degree == 2


def test_verify_and_fuzz():
    report = spectool.verify(5, theorems=["spectral-mantel", "hsf"])
    assert report["totals"]["spectral-mantel"]["violated"] == 0
    assert report["graphs_checked"] == 1 + 2 + 8 + 64 + 1024
    assert spectool.verify(5, jobs=1) == spectool.verify(5, jobs=4)
    a = spectool.fuzz("gnp:12,0.5", count=40, seed=3)
    assert a == spectool.fuzz("gnp:12,0.5", count=40, seed=3)
    with pytest.raises(ValueError):
        spectool.fuzz("gnp:30,1.5")
    assert spectool.check_theorem(spectool.star(5), "spectral-mantel")["status"] == "holds"
