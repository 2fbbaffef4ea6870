import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from swapnet import generators as gen
from swapnet.errors import InvalidSwap
from swapnet.graph import INFINITE, Graph, SwapMove, apply_swap, is_connected, sum_of_distances
from swapnet.sumgame import (
    check_sse,
    enumerate_swaps,
    find_improving_swap,
    improving_swaps,
    report_to_json,
    swap_cost_delta,
)

from conftest import graphs, nx_cost


def oracle_is_sse(g: Graph) -> bool:
    """Rebuild every post-swap graph and price it with networkx."""
    n = g.n
    for v in range(n):
        before = nx_cost(g, v)
        nbrs = g.neighbors(v)
        for r in nbrs:
            for a in range(n):
                if a == v or a in nbrs:
                    continue
                edges = [e for e in g.edges() if set(e) != {v, r}] + [(v, a)]
                after = nx_cost(Graph(n, edges), v)
                if math.isinf(after) and math.isinf(before):
                    continue
                if after < before:
                    return False
    return True


def test_enumerate_counts():
    assert enumerate_swaps(gen.complete(5), 0) == []
    assert len(enumerate_swaps(gen.cycle(4), 0)) == 2
    s = gen.star(5)
    assert enumerate_swaps(s, 0) == []
    assert len(enumerate_swaps(s, 1)) == 3
    assert enumerate_swaps(Graph(3), 0) == []


def test_swap_cost_delta_examples():
    p4 = gen.path(4)
    assert sum_of_distances(p4, 0) == 6
    assert swap_cost_delta(p4, SwapMove(0, 1, 2)) == -1
    assert swap_cost_delta(gen.cycle(4), SwapMove(0, 1, 2)) == 0
    assert swap_cost_delta(gen.star(5), SwapMove(1, 0, 2)) > 0
    with pytest.raises(InvalidSwap):
        swap_cost_delta(p4, SwapMove(0, 2, 3))


def test_disconnected_start_semantics():
    # staying disconnected: inf - inf counts as 0
    h = Graph(4, [(0, 1), (0, 2)])
    assert swap_cost_delta(h, SwapMove(0, 1, 3)) == 0
    # reconnecting everyone: finite - inf
    h2 = Graph(4, [(0, 1), (1, 2), (0, 2)])
    assert swap_cost_delta(h2, SwapMove(0, 1, 3)) == -INFINITE
    assert find_improving_swap(h2, 0) == SwapMove(0, 1, 3)


def test_disconnecting_swap_is_plus_infinite():
    g = Graph(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)])
    assert swap_cost_delta(g, SwapMove(3, 4, 0)) == INFINITE
    assert swap_cost_delta(g, SwapMove(2, 3, 4)) == 0


def test_find_improving_swap_examples():
    assert find_improving_swap(gen.path(4), 0) == SwapMove(0, 1, 2)
    assert find_improving_swap(gen.path(4), 0, "best") == SwapMove(0, 1, 2)
    assert find_improving_swap(gen.path(4), 0, "random", 3) == SwapMove(0, 1, 2)
    for v in range(4):
        assert find_improving_swap(gen.cycle(4), v) is None
    assert find_improving_swap(gen.complete(5), 2) is None
    with pytest.raises(ValueError):
        find_improving_swap(gen.path(4), 0, "worst")


def test_best_policy_picks_most_negative():
    g = gen.path(7)
    found = improving_swaps(g, 0)
    best = find_improving_swap(g, 0, "best")
    assert dict(found)[best] == min(d for _, d in found)


def test_random_policy_uniform_and_seeded():
    g = gen.path(7)
    found = [m for m, _ in improving_swaps(g, 0)]
    picks = [find_improving_swap(g, 0, "random", s) for s in range(400)]
    assert set(picks) == set(found)
    assert find_improving_swap(g, 0, "random", 11) == find_improving_swap(g, 0, "random", 11)


def test_check_sse_examples():
    for n in range(2, 10):
        assert check_sse(gen.star(n)).is_equilibrium
    assert check_sse(gen.cycle(4)).is_equilibrium
    rep = check_sse(gen.path(4))
    assert not rep.is_equilibrium
    assert rep.witness == SwapMove(0, 1, 2) and rep.delta == -1
    full = check_sse(gen.path(4), exhaustive=True)
    assert full.witness == rep.witness and len(full.witnesses) >= 2
    assert all(d < 0 for _, d in full.witnesses)


def test_report_json_shape():
    doc = report_to_json(gen.path(4), check_sse(gen.path(4)))
    assert doc == {
        "n": 4,
        "m": 3,
        "is_equilibrium": False,
        "witness": {"player": 0, "removed": 1, "added": 2, "delta": -1},
        "costs": [6, 4, 4, 6],
    }
    doc = report_to_json(Graph(3, [(0, 1)]), check_sse(Graph(3, [(0, 1)])))
    assert doc["costs"] == ["inf", "inf", "inf"]


def test_sse_matches_oracle_on_fixed_random_family():
    rng = np.random.default_rng(7)
    for i in range(300):
        n = int(rng.integers(2, 8))
        g = gen.gnp(n, float(rng.uniform(0.2, 0.9)), rng)
        assert check_sse(g).is_equilibrium == oracle_is_sse(g), g


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=7))
def test_sse_matches_oracle(g):
    assert check_sse(g).is_equilibrium == oracle_is_sse(g)


@settings(max_examples=150, deadline=None)
@given(graphs(min_n=2, max_n=7))
def test_witness_really_improves(g):
    rep = check_sse(g)
    if rep.witness is None:
        return
    p = rep.witness.player
    after = sum_of_distances(apply_swap(g, rep.witness), p)
    before = sum_of_distances(g, p)
    assert after < before or (before == INFINITE and after != INFINITE)


@settings(max_examples=100, deadline=None)
@given(graphs(min_n=2, max_n=7))
def test_equilibrium_round_trip(g):
    if not is_connected(g) or not check_sse(g).is_equilibrium:
        return
    for v in range(g.n):
        for m in enumerate_swaps(g, v):
            assert sum_of_distances(apply_swap(g, m), v) >= sum_of_distances(g, v)


@settings(max_examples=100, deadline=None)
@given(graphs(min_n=2, max_n=7), st.randoms(use_true_random=False))
def test_relabeling_maps_improving_swaps(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    h = Graph(g.n, [(perm[u], perm[v]) for u, v in g.edges()])
    for v in range(g.n):
        mapped = {SwapMove(perm[m.player], perm[m.removed], perm[m.added]): d for m, d in improving_swaps(g, v)}
        assert mapped == dict(improving_swaps(h, perm[v]))
