"""The sum version of the swap game.

A vertex pays the sum of its distances to all other vertices and may replace
one incident edge by an edge to a current non-neighbor.  A graph is a
sum-swap equilibrium (SSE) when no vertex can strictly lower its cost with a
single swap.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .graph import (
    INFINITE,
    Graph,
    SwapMove,
    _cost_from_dist,
    bfs_distances,
    check_swap,
    ext_sub,
    sum_of_distances,
)

POLICIES = ("first", "best", "random")


@dataclass
class EquilibriumReport:
    """Outcome of an equilibrium check.

    ``values`` is the per-vertex payoff vector (connection costs for the sum
    game, profits for the local-cost game).  ``witness`` and ``delta`` are set
    iff the graph is not an equilibrium; ``witnesses`` holds every deviation
    when the check ran in exhaustive mode.
    """

    is_equilibrium: bool
    values: list
    witness: Optional[SwapMove] = None
    delta: Optional[float] = None
    witnesses: list = field(default_factory=list)


def enumerate_swaps(g: Graph, v: int) -> list[SwapMove]:
    """All legal swaps of ``v``, removed-neighbor major, both ascending."""
    removed = sorted(g.iter_neighbors(v))
    if not removed:
        return []
    added = g.non_neighbors(v)
    return [SwapMove(v, r, a) for r in removed for a in added]


def _cost_after(g: Graph, m: SwapMove):
    # swap in place, BFS from the deviator, undo; g is restored before returning
    p, r, a = m
    g._swap_inplace(p, r, a)
    try:
        return _cost_from_dist(bfs_distances(g, p))
    finally:
        g._swap_inplace(p, a, r)


def swap_cost_delta(g: Graph, m: SwapMove, cost_before=None):
    """Change in the deviator's connection cost if ``m`` is played.

    Negative means the swap helps.  ``cost_before`` may be passed to skip
    recomputing the deviator's current cost.
    """
    check_swap(g, m)
    if cost_before is None:
        cost_before = sum_of_distances(g, m.player)
    return ext_sub(_cost_after(g, m), cost_before)


def _rng(rng):
    if isinstance(rng, np.random.Generator):
        return rng
    return np.random.default_rng(rng)


def improving_swaps(g: Graph, v: int) -> list[tuple[SwapMove, float]]:
    """Every strictly improving swap of ``v`` with its delta, in enumeration order."""
    before = sum_of_distances(g, v)
    out = []
    for m in enumerate_swaps(g, v):
        d = ext_sub(_cost_after(g, m), before)
        if d < 0:
            out.append((m, d))
    return out


def find_improving_swap(g: Graph, v: int, policy: str = "first", rng=None) -> Optional[SwapMove]:
    """A swap that strictly lowers ``v``'s cost, or None if there is none.

    ``policy`` is ``"first"`` (enumeration order), ``"best"`` (most negative
    delta, earliest on ties) or ``"random"`` (uniform over improving swaps,
    drawn from ``rng``, a numpy Generator or seed).
    """
    if policy not in POLICIES:
        raise ValueError(f"unknown policy {policy!r}")
    if policy == "first":
        before = sum_of_distances(g, v)
        for m in enumerate_swaps(g, v):
            if ext_sub(_cost_after(g, m), before) < 0:
                return m
        return None
    found = improving_swaps(g, v)
    if not found:
        return None
    if policy == "best":
        return min(found, key=lambda md: md[1])[0]
    return found[int(_rng(rng).integers(len(found)))][0]


def check_sse(g: Graph, exhaustive: bool = False) -> EquilibriumReport:
    """Brute-force SSE test over every vertex and every legal swap.

    The first improving swap in (vertex, enumeration) order is the witness.
    With ``exhaustive=True`` all improving swaps are collected as well.
    """
    costs = [sum_of_distances(g, v) for v in range(g.n)]
    witnesses = []
    for v in range(g.n):
        for m in enumerate_swaps(g, v):
            d = ext_sub(_cost_after(g, m), costs[v])
            if d < 0:
                witnesses.append((m, d))
                if not exhaustive:
                    break
        if witnesses and not exhaustive:
            break
    if not witnesses:
        return EquilibriumReport(True, costs)
    m, d = witnesses[0]
    return EquilibriumReport(False, costs, m, d, witnesses if exhaustive else [])


def report_to_json(g: Graph, rep: EquilibriumReport) -> dict:
    """The ``check-sse`` JSON document."""

    def num(x):
        if x == INFINITE:
            return "inf"
        if x == -INFINITE:
            return "-inf"
        return int(x)

    witness = None
    if rep.witness is not None:
        p, r, a = rep.witness
        witness = {"player": p, "removed": r, "added": a, "delta": num(rep.delta)}
    out = {
        "n": g.n,
        "m": g.num_edges,
        "is_equilibrium": rep.is_equilibrium,
        "witness": witness,
        "costs": [num(c) for c in rep.values],
    }
    if rep.witnesses:
        out["witnesses"] = [
            {"player": m[0], "removed": m[1], "added": m[2], "delta": num(d)} for m, d in rep.witnesses
        ]
    return out
