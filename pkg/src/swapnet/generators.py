"""Deterministic graph generators for experiments and tests."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .errors import BadSpec
from .graph import Graph, is_connected

FAMILIES = ("gnp", "random-tree", "path", "cycle", "star", "complete", "barbell")


def path(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise BadSpec("a cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star(n: int) -> Graph:
    """Vertex 0 is the center."""
    return Graph(n, [(0, i) for i in range(1, n)])


def complete(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def gnp(n: int, p: float, seed=None) -> Graph:
    """Erdos-Renyi G(n, p); pairs are drawn in lexicographic order from one stream."""
    if not 0.0 <= p <= 1.0:
        raise BadSpec(f"p={p} outside [0, 1]")
    rng = np.random.default_rng(seed)
    pairs = list(combinations(range(n), 2))
    keep = rng.random(len(pairs)) < p
    return Graph(n, [e for e, k in zip(pairs, keep) if k])


def random_tree(n: int, seed=None) -> Graph:
    """Uniform labeled tree via a random Pruefer sequence."""
    if n <= 2:
        return path(n)
    rng = np.random.default_rng(seed)
    seq = [int(x) for x in rng.integers(0, n, size=n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = min(i for i in range(n) if degree[i] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = [i for i in range(n) if degree[i] == 1]
    edges.append((u, v))
    return Graph(n, edges)


def barbell(n1: int, n2: int, bridge_length: int = 1) -> Graph:
    """Cliques on ``n1`` and ``n2`` vertices joined by a path of ``bridge_length`` edges.

    Vertices ``0..n1-1`` form the first clique, the path runs from ``n1-1``
    through fresh vertices to ``n1+L-1``, and the second clique follows.
    """
    if n1 < 1 or n2 < 1 or bridge_length < 1:
        raise BadSpec("barbell needs n1, n2, bridge_length >= 1")
    n = n1 + n2 + bridge_length - 1
    edges = list(combinations(range(n1), 2))
    chain = list(range(n1 - 1, n1 + bridge_length))
    edges += list(zip(chain, chain[1:]))
    edges += list(combinations(range(n1 + bridge_length - 1, n), 2))
    return Graph(n, edges)


def random_connected(n: int, p: float, seed=None, max_tries: int = 1000) -> Graph:
    """G(n, p) conditioned on connectivity by rejection; tries draw from one seeded stream."""
    ss = np.random.SeedSequence(seed)
    for child in ss.spawn(max_tries):
        g = gnp(n, p, np.random.default_rng(child))
        if is_connected(g):
            return g
    raise BadSpec(f"no connected G({n}, {p}) in {max_tries} tries")


@dataclass(frozen=True)
class GeneratorSpec:
    family: str
    params: dict = field(default_factory=dict)
    seed: int | None = None


def generate(spec: GeneratorSpec) -> Graph:
    """Build the graph described by ``spec``; same spec, same graph."""
    f, p = spec.family, dict(spec.params)
    if f not in FAMILIES:
        raise BadSpec(f"unknown family {f!r}")
    try:
        if f == "barbell":
            n1, n2 = int(p["n1"]), int(p["n2"])
            return barbell(n1, n2, int(p.get("bridge_length", 1)))
        n = int(p["n"])
    except KeyError as e:
        raise BadSpec(f"{f} needs parameter {e.args[0]!r}") from None
    if n < 1:
        raise BadSpec("n must be at least 1")
    if f == "gnp":
        if "p" not in p:
            raise BadSpec("gnp needs parameter 'p'")
        return gnp(n, float(p["p"]), spec.seed)
    if f == "random-tree":
        return random_tree(n, spec.seed)
    return {"path": path, "cycle": cycle, "star": star, "complete": complete}[f](n)
