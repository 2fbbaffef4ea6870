"""Checkable structural properties of sum-swap equilibrium graphs.

Each checker takes a concrete connected graph and evaluates one property that
every SSE graph must satisfy: the distance-difference bound for pairs of
non-adjacent vertices, the mean distance-difference bound, first-edge
redundancy, the diameter bound in the presence of a degree-2 vertex, and the
two diameter bounds in terms of vicinity size and edge density.  All
comparisons are exact (:class:`fractions.Fraction`).
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .errors import Disconnected, MinDegreeTooLow
from .graph import Graph, bfs_distances, diameter, is_connected, robust_degree

__all__ = [
    "CharacterizationReport",
    "DifferenceHistogram",
    "MeanDifference",
    "PairVerdict",
    "analyze",
    "check_degree2_diameter",
    "check_distance_difference_bound",
    "check_first_edge_redundancy",
    "check_mean_distance_difference",
    "density_diameter_bound",
    "density_bound_holds",
    "difference_histogram",
    "max_vicinity_size",
    "vicinity_bound_holds",
    "vicinity_diameter_bound",
]


def _require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise Disconnected("graph must be connected")


@dataclass(frozen=True)
class DifferenceHistogram:
    """``counts[c]`` is the number of third vertices whose distances to ``u`` and ``v`` differ by ``c``."""

    pair: tuple[int, int]
    counts: dict[int, int]

    @property
    def weighted_sum(self) -> int:
        return sum(c * k for c, k in self.counts.items())

    @property
    def total(self) -> int:
        return sum(self.counts.values())


def _histogram(du: list[int], dv: list[int], u: int, v: int) -> dict[int, int]:
    counts = Counter(abs(a - b) for z, (a, b) in enumerate(zip(du, dv)) if z != u and z != v)
    return dict(sorted(counts.items()))


def difference_histogram(g: Graph, u: int, v: int) -> DifferenceHistogram:
    if u == v:
        raise ValueError("u and v must differ")
    _require_connected(g)
    return DifferenceHistogram((u, v), _histogram(bfs_distances(g, u), bfs_distances(g, v), u, v))


@dataclass(frozen=True)
class PairVerdict:
    u: int
    v: int
    lhs: int
    delta_prime: int
    rhs: Fraction
    mean_abs_difference: Fraction

    @property
    def satisfied(self) -> bool:
        return self.lhs <= self.rhs

    @property
    def slack(self) -> Fraction:
        return self.rhs - self.lhs


@dataclass
class CharacterizationReport:
    """Per-pair verdicts of the distance-difference bound.

    Only non-adjacent pairs whose smaller robust degree is at least 2 are
    eligible; the rest are listed in ``skipped``.
    """

    pairs: list[PairVerdict] = field(default_factory=list)
    skipped: list[tuple[int, int]] = field(default_factory=list)

    @property
    def satisfied(self) -> bool:
        return all(p.satisfied for p in self.pairs)

    @property
    def worst_slack(self) -> Optional[Fraction]:
        return min((p.slack for p in self.pairs), default=None)

    def violations(self) -> list[PairVerdict]:
        return [p for p in self.pairs if not p.satisfied]


def _mean(lhs: int, n: int) -> Fraction:
    return Fraction(lhs, n - 2) if n > 2 else Fraction(0)


def check_distance_difference_bound(g: Graph) -> CharacterizationReport:
    """Check ``sum_c c*|A(c)| <= (d'+1)/(d'-1) * n`` for every eligible pair.

    ``d'`` is the smaller robust degree of the two vertices.
    """
    _require_connected(g)
    n = g.n
    rdeg = [robust_degree(g, v) for v in range(n)]
    dist = [bfs_distances(g, v) for v in range(n)]
    rep = CharacterizationReport()
    for u in range(n):
        for v in range(u + 1, n):
            dp = min(rdeg[u], rdeg[v])
            if g.has_edge(u, v) or dp < 2:
                rep.skipped.append((u, v))
                continue
            lhs = sum(c * k for c, k in _histogram(dist[u], dist[v], u, v).items())
            rhs = Fraction(dp + 1, dp - 1) * n
            rep.pairs.append(PairVerdict(u, v, lhs, dp, rhs, _mean(lhs, n)))
    return rep


@dataclass(frozen=True)
class MeanDifference:
    u: int
    v: int
    mean: Fraction

    @property
    def satisfied(self) -> bool:
        return self.mean <= 3


def check_mean_distance_difference(g: Graph) -> list[MeanDifference]:
    """Mean ``|dist(u,z) - dist(v,z)|`` over third vertices ``z``, for pairs of degree >= 2.

    Each entry is satisfied when the mean is at most 3.
    """
    _require_connected(g)
    n = g.n
    big = [v for v in range(n) if g.degree(v) >= 2]
    dist = {v: bfs_distances(g, v) for v in big}
    out = []
    for i, u in enumerate(big):
        for v in big[i + 1:]:
            lhs = sum(c * k for c, k in _histogram(dist[u], dist[v], u, v).items())
            out.append(MeanDifference(u, v, _mean(lhs, n)))
    return out


def _components_without(g: Graph, u: int) -> list[int]:
    comp = [-1] * g.n
    comp[u] = -2
    label = 0
    for s in range(g.n):
        if comp[s] != -1:
            continue
        comp[s] = label
        stack = [s]
        while stack:
            x = stack.pop()
            for y in g.iter_neighbors(x):
                if comp[y] == -1:
                    comp[y] = label
                    stack.append(y)
        label += 1
    return comp


def check_first_edge_redundancy(g: Graph) -> dict[tuple[int, int], bool]:
    """For ordered pairs of degree-2+ vertices, do two distinct first edges lead from ``u`` to ``v``?

    A neighbor ``x`` of ``u`` starts a ``u``-``v`` path iff ``x == v`` or ``x``
    reaches ``v`` once ``u`` is deleted.  An empty result means the property
    holds vacuously.
    """
    _require_connected(g)
    big = [v for v in range(g.n) if g.degree(v) >= 2]
    out = {}
    for u in big:
        comp = _components_without(g, u)
        nbrs = list(g.iter_neighbors(u))
        for v in big:
            if v == u:
                continue
            starts = sum(1 for x in nbrs if x == v or comp[x] == comp[v])
            out[(u, v)] = starts >= 2
    return out


def check_degree2_diameter(g: Graph) -> bool:
    """False only when some vertex has degree exactly 2 and the diameter exceeds 9."""
    _require_connected(g)
    if all(g.degree(v) != 2 for v in range(g.n)):
        return True
    return diameter(g) <= 9


def max_vicinity_size(g: Graph, k: int) -> int:
    """Largest number of vertices within distance ``k`` of a single vertex."""
    return max(sum(1 for d in bfs_distances(g, u) if 0 <= d <= k) for u in range(g.n))


def vicinity_diameter_bound(g: Graph, k: int) -> Fraction:
    """``6n / max_vicinity_size(k) + 2 + 4k``."""
    if k < 1:
        raise ValueError("k must be at least 1")
    _require_connected(g)
    return Fraction(6 * g.n, max_vicinity_size(g, k)) + 2 + 4 * k


def vicinity_bound_holds(g: Graph, k: int) -> bool:
    return diameter(g) <= vicinity_diameter_bound(g, k)


def density_diameter_bound(g: Graph) -> Fraction:
    """``6n^2 / (e + n/2) + 4`` for graphs of minimum degree at least 2."""
    _require_connected(g)
    if g.n == 0 or min(g.degrees()) < 2:
        raise MinDegreeTooLow("every vertex needs degree at least 2")
    n = g.n
    return Fraction(6 * n * n) / (g.num_edges + Fraction(n, 2)) + 4


def density_bound_holds(g: Graph) -> bool:
    return diameter(g) <= density_diameter_bound(g)


def _frac(x: Fraction):
    return int(x) if x.denominator == 1 else str(x)


def analyze(g: Graph, ks=(1, 2), sse: Optional[bool] = None) -> dict:
    """Run every checker and assemble the ``analyze`` JSON document.

    ``sse`` is computed by brute force when not supplied.
    """
    from .sumgame import check_sse

    _require_connected(g)
    if sse is None:
        sse = check_sse(g).is_equilibrium
    diam = diameter(g)

    t1 = check_distance_difference_bound(g)
    means = check_mean_distance_difference(g)
    redundancy = check_first_edge_redundancy(g)
    worst = t1.worst_slack
    max_mean = max((m.mean for m in means), default=None)

    bounds = []
    for k in ks:
        b = vicinity_diameter_bound(g, k)
        bounds.append({"k": k, "delta_k": max_vicinity_size(g, k), "bound": _frac(b), "diam": diam,
                       "holds": diam <= b})
    try:
        b3 = density_diameter_bound(g)
        dense = {"bound": _frac(b3), "diam": diam, "holds": diam <= b3}
    except MinDegreeTooLow:
        dense = "n/a"

    return {
        "sse": sse,
        "theorem1": {
            "pairs_checked": len(t1.pairs),
            "pairs_skipped": len(t1.skipped),
            "worst_slack": None if worst is None else _frac(worst),
            "holds": t1.satisfied,
        },
        "corollary": {
            "max_meanD": None if max_mean is None else _frac(max_mean),
            "holds": all(m.satisfied for m in means),
        },
        "lemma1A": all(redundancy.values()),
        "lemma1B": check_degree2_diameter(g),
        "theorem2": bounds,
        "theorem3": dense,
    }


def all_checks_hold(doc: dict) -> bool:
    """True iff every applicable checker in an :func:`analyze` document is satisfied."""
    ok = doc["theorem1"]["holds"] and doc["corollary"]["holds"] and doc["lemma1A"] and doc["lemma1B"]
    ok = ok and all(b["holds"] for b in doc["theorem2"])
    if doc["theorem3"] != "n/a":
        ok = ok and doc["theorem3"]["holds"]
    return ok
