import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from swapnet import generators as gen
from swapnet.errors import BadSpec
from swapnet.graph import diameter, is_connected


def test_shapes():
    s = gen.generate(gen.GeneratorSpec("star", {"n": 5}))
    assert s.num_edges == 4 and s.max_degree() == 4
    c = gen.generate(gen.GeneratorSpec("cycle", {"n": 6}))
    assert c.num_edges == 6 and set(c.degrees()) == {2}
    assert gen.complete(5).num_edges == 10
    assert gen.path(5).num_edges == 4


def test_gnp_deterministic():
    spec = gen.GeneratorSpec("gnp", {"n": 20, "p": 0.3}, seed=7)
    assert gen.generate(spec).edges() == gen.generate(spec).edges()
    assert gen.gnp(20, 0.3, 7) != gen.gnp(20, 0.3, 8)


def test_barbell_has_bridge():
    g = gen.barbell(3, 3, 1)
    assert g.n == 6 and g.num_edges == 7 and g.has_edge(2, 3)
    g = gen.barbell(4, 3, 3)
    assert g.n == 9 and diameter(g) == 5


@pytest.mark.parametrize(
    "spec",
    [
        gen.GeneratorSpec("nope", {"n": 3}),
        gen.GeneratorSpec("gnp", {"n": 3, "p": 1.5}),
        gen.GeneratorSpec("gnp", {"n": 3}),
        gen.GeneratorSpec("cycle", {"n": 2}),
        gen.GeneratorSpec("star", {"n": 0}),
        gen.GeneratorSpec("barbell", {"n1": 3}),
    ],
)
def test_bad_specs(spec):
    with pytest.raises(BadSpec):
        gen.generate(spec)


@settings(max_examples=300, deadline=None)
@given(
    st.sampled_from(gen.FAMILIES),
    st.integers(1, 25),
    st.floats(0, 1),
    st.integers(0, 2**32),
)
def test_generators_produce_valid_graphs(family, n, p, seed):
    if family == "barbell":
        params = {"n1": max(1, n // 3), "n2": max(1, n // 4), "bridge_length": 1 + n % 3}
    else:
        params = {"n": max(n, 3) if family == "cycle" else n, "p": p}
    g = gen.generate(gen.GeneratorSpec(family, params, seed))
    edges = g.edges()
    assert len(edges) == len(set(edges)) == g.num_edges
    assert all(0 <= u < v < g.n for u, v in edges)
    if family == "random-tree":
        assert g.num_edges == g.n - 1 and is_connected(g)


def test_ten_thousand_random_specs():
    import numpy as np

    rng = np.random.default_rng(2024)
    for i in range(10_000):
        family = gen.FAMILIES[i % len(gen.FAMILIES)]
        n = int(rng.integers(1, 12))
        if family == "barbell":
            params = {"n1": int(rng.integers(1, 5)), "n2": int(rng.integers(1, 5)),
                      "bridge_length": int(rng.integers(1, 4))}
        else:
            params = {"n": max(n, 3) if family == "cycle" else n, "p": float(rng.random())}
        g = gen.generate(gen.GeneratorSpec(family, params, int(rng.integers(2**32))))
        assert all(0 <= u < v < g.n for u, v in g.edges())
        assert sum(g.degrees()) == 2 * g.num_edges
