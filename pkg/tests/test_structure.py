from fractions import Fraction

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings

from swapnet import generators as gen
from swapnet.errors import Disconnected, MinDegreeTooLow
from swapnet.graph import Graph, diameter, is_connected
from swapnet.structure import (
    all_checks_hold,
    analyze,
    check_degree2_diameter,
    check_distance_difference_bound,
    check_first_edge_redundancy,
    check_mean_distance_difference,
    density_diameter_bound,
    difference_histogram,
    max_vicinity_size,
    vicinity_diameter_bound,
)
from swapnet.sumgame import check_sse

from conftest import graphs


def nx_histogram(g, u, v):
    h = g.to_networkx()
    du = nx.single_source_shortest_path_length(h, u)
    dv = nx.single_source_shortest_path_length(h, v)
    out = {}
    for z in range(g.n):
        if z not in (u, v):
            c = abs(du[z] - dv[z])
            out[c] = out.get(c, 0) + 1
    return out


def test_histogram_examples():
    assert difference_histogram(gen.complete(4), 0, 3).counts == {0: 2}
    assert difference_histogram(gen.cycle(5), 0, 2).counts == {0: 1, 1: 2}
    assert difference_histogram(gen.star(4), 0, 1).counts == {1: 2}
    assert nx_histogram(gen.cycle(5), 0, 2) == {0: 1, 1: 2}
    with pytest.raises(Disconnected):
        difference_histogram(Graph(3, [(0, 1)]), 0, 1)
    with pytest.raises(ValueError):
        difference_histogram(gen.cycle(5), 1, 1)


@settings(max_examples=150, deadline=None)
@given(graphs(min_n=3, max_n=9))
def test_histogram_properties(g):
    if not is_connected(g):
        return
    for u in range(g.n):
        for v in range(u + 1, g.n):
            h = difference_histogram(g, u, v)
            assert h.counts == difference_histogram(g, v, u).counts
            assert h.total == g.n - 2
            assert h.counts == nx_histogram(g, u, v)


def test_distance_difference_examples():
    rep = check_distance_difference_bound(gen.complete(4))
    assert rep.pairs == [] and rep.satisfied and len(rep.skipped) == 6

    rep = check_distance_difference_bound(gen.cycle(4))
    pair = {(p.u, p.v): p for p in rep.pairs}[(0, 2)]
    assert (pair.lhs, pair.delta_prime, pair.rhs) == (0, 2, 12) and pair.satisfied
    assert check_sse(gen.cycle(4)).is_equilibrium

    rep = check_distance_difference_bound(gen.cycle(5))
    pair = {(p.u, p.v): p for p in rep.pairs}[(0, 2)]
    assert (pair.lhs, pair.delta_prime, pair.rhs) == (2, 2, 15) and pair.satisfied
    assert pair.mean_abs_difference == Fraction(2, 3)


def test_rhs_is_exact_rational():
    # robust degree 4 on both ends: (4+1)/(4-1) * n
    g = gen.complete(6)
    g = Graph(6, [e for e in g.edges() if e != (0, 1)])
    rep = check_distance_difference_bound(g)
    (p,) = rep.pairs
    assert p.delta_prime == 4 and p.rhs == Fraction(5, 3) * 6 and isinstance(p.rhs, Fraction)


def test_mean_difference_examples():
    for m in check_mean_distance_difference(gen.complete(6)):
        assert m.mean == 0 and m.satisfied
    means = {(m.u, m.v): m.mean for m in check_mean_distance_difference(gen.cycle(4))}
    assert means[(0, 2)] == 0
    assert means[(0, 1)] == 1


def test_first_edge_redundancy_examples():
    res = check_first_edge_redundancy(gen.cycle(4))
    assert res[(0, 2)] and all(res.values())
    assert check_first_edge_redundancy(gen.star(6)) == {}

    # triangles {0,1,2} and {3,4,5} joined by the bridge {2,3}
    bb = gen.barbell(3, 3, 1)
    res = check_first_edge_redundancy(bb)
    assert res[(2, 3)] is False
    assert res[(2, 4)] is False
    # the far triangle vertex still has two first edges towards the other bridge end
    assert res[(0, 3)] is True
    assert not check_sse(bb).is_equilibrium


def test_degree2_diameter_examples():
    assert check_degree2_diameter(gen.cycle(4))
    assert diameter(gen.cycle(25)) == 12
    assert not check_degree2_diameter(gen.cycle(25))
    assert check_degree2_diameter(gen.complete(5))
    assert check_degree2_diameter(gen.cycle(19))
    assert not check_degree2_diameter(gen.cycle(20))


def test_vicinity_bound_examples():
    assert max_vicinity_size(gen.cycle(4), 1) == 3
    assert vicinity_diameter_bound(gen.cycle(4), 1) == 14
    assert max_vicinity_size(gen.star(10), 1) == 10
    assert vicinity_diameter_bound(gen.star(10), 1) == 12
    for n in (2, 5, 9):
        assert vicinity_diameter_bound(gen.complete(n), 1) == 12
    assert vicinity_diameter_bound(gen.cycle(7), 2) == Fraction(42, 5) + 10
    with pytest.raises(ValueError):
        vicinity_diameter_bound(gen.cycle(4), 0)


def test_density_bound_examples():
    assert density_diameter_bound(gen.complete(4)) == 16
    assert density_diameter_bound(gen.cycle(4)) == 20
    with pytest.raises(MinDegreeTooLow):
        density_diameter_bound(gen.star(5))
    with pytest.raises(Disconnected):
        density_diameter_bound(Graph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]))


def test_analyze_document():
    doc = analyze(gen.cycle(4), ks=[1, 2])
    assert doc["sse"] is True
    assert doc["theorem1"] == {"pairs_checked": 2, "pairs_skipped": 4, "worst_slack": 12, "holds": True}
    assert doc["corollary"]["max_meanD"] == 1
    assert doc["lemma1A"] and doc["lemma1B"]
    assert [b["k"] for b in doc["theorem2"]] == [1, 2]
    assert doc["theorem2"][0] == {"k": 1, "delta_k": 3, "bound": 14, "diam": 2, "holds": True}
    assert doc["theorem3"] == {"bound": 20, "diam": 2, "holds": True}
    assert analyze(gen.star(5))["theorem3"] == "n/a"
    assert all_checks_hold(doc)


def _certified_corpus():
    corpus = [gen.star(n) for n in (3, 10, 25, 40)]
    corpus += [gen.complete(n) for n in (2, 10, 25, 40)]
    corpus += [gen.cycle(n) for n in range(3, 41) if check_sse(gen.cycle(n)).is_equilibrium]
    rng = np.random.default_rng(5)
    for i in range(40):
        n = int(rng.integers(5, 41))
        g = gen.gnp(n, float(rng.uniform(0.3, 0.9)), rng)
        if is_connected(g) and check_sse(g).is_equilibrium:
            corpus.append(g)
    return corpus


def test_checkers_hold_on_certified_sse_graphs():
    corpus = _certified_corpus()
    assert any(g.n > 20 and 0 < g.num_edges < g.n * (g.n - 1) // 2 for g in corpus)
    for g in corpus:
        doc = analyze(g, ks=[1, 2], sse=True)
        assert all_checks_hold(doc), (g, doc)


@settings(max_examples=150, deadline=None)
@given(graphs(min_n=3, max_n=8))
def test_checkers_hold_on_small_sse_graphs(g):
    if not is_connected(g) or not check_sse(g).is_equilibrium:
        return
    assert all_checks_hold(analyze(g, ks=[1, 2], sse=True))
