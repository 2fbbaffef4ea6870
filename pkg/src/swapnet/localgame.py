"""The local-cost swap game.

A vertex's profit is the sum of its neighbors' degrees.  Swapping neighbor
``v`` for non-neighbor ``w`` changes the deviator's profit by
``deg(w) + 1 - deg(v)``, which is also the change in half the sum of squared
degrees, so that quantity is an exact potential for the game.
"""
from __future__ import annotations

from typing import Optional

import numpy as np

from .graph import Graph, SwapMove, check_swap
from .sumgame import POLICIES, EquilibriumReport, _rng


def profit(g: Graph, u: int) -> int:
    return sum(g.degree(v) for v in g.iter_neighbors(u))


def profits(g: Graph) -> list[int]:
    deg = g.degrees()
    return [sum(deg[v] for v in g.iter_neighbors(u)) for u in range(g.n)]


def potential(g: Graph) -> int:
    """Half the sum of squared degrees (always an integer)."""
    s = sum(d * d for d in g.degrees())
    return s // 2


def profit_delta(g: Graph, m: SwapMove) -> int:
    check_swap(g, m)
    return g.degree(m.added) + 1 - g.degree(m.removed)


def profitable_swaps(g: Graph, u: int) -> list[tuple[SwapMove, int]]:
    """Every swap of ``u`` with positive profit change, in enumeration order."""
    deg = g.degrees()
    removed = sorted(g.iter_neighbors(u))
    if not removed:
        return []
    added = g.non_neighbors(u)
    return [(SwapMove(u, r, a), deg[a] + 1 - deg[r]) for r in removed for a in added if deg[a] >= deg[r]]


def find_profitable_swap(g: Graph, u: int, policy: str = "first", rng=None) -> Optional[SwapMove]:
    """A swap that strictly raises ``u``'s profit, chosen per ``policy``; None if none exists."""
    if policy not in POLICIES:
        raise ValueError(f"unknown policy {policy!r}")
    if policy == "first":
        nbrs = g.neighbors(u)
        if not nbrs:
            return None
        deg = g.degrees()
        added = g.non_neighbors(u)
        for r in sorted(nbrs):
            for a in added:
                if deg[a] >= deg[r]:
                    return SwapMove(u, r, a)
        return None
    found = profitable_swaps(g, u)
    if not found:
        return None
    if policy == "best":
        return max(found, key=lambda md: md[1])[0]
    return found[int(_rng(rng).integers(len(found)))][0]


def has_profitable_swap(g: Graph, u: int) -> bool:
    # cheaper than enumerating: compare weakest neighbor with strongest non-neighbor
    nbrs = g.neighbors(u)
    others = g.non_neighbors(u)
    if not nbrs or not others:
        return False
    return max(g.degree(w) for w in others) >= min(g.degree(v) for v in nbrs)


def check_local_equilibrium(g: Graph, exhaustive: bool = False) -> EquilibriumReport:
    """Is there a vertex with a profitable swap?  Witness is the first in vertex order."""
    vals = profits(g)
    witnesses = []
    for u in range(g.n):
        if exhaustive:
            witnesses += profitable_swaps(g, u)
        elif has_profitable_swap(g, u):
            m = find_profitable_swap(g, u)
            witnesses.append((m, g.degree(m.added) + 1 - g.degree(m.removed)))
            break
    if not witnesses:
        return EquilibriumReport(True, vals)
    m, d = witnesses[0]
    return EquilibriumReport(False, vals, m, d, witnesses if exhaustive else [])


def is_local_equilibrium(g: Graph) -> bool:
    return not any(has_profitable_swap(g, u) for u in range(g.n))


def has_spanning_star(g: Graph) -> bool:
    """True iff some vertex is adjacent to every other vertex."""
    if g.n <= 1:
        return True
    return g.max_degree() == g.n - 1


def report_to_json(g: Graph, rep: EquilibriumReport) -> dict:
    """The ``check-local`` JSON document."""
    witness = None
    if rep.witness is not None:
        p, r, a = rep.witness
        witness = {"player": p, "removed": r, "added": a, "delta": int(rep.delta)}
    return {
        "is_equilibrium": rep.is_equilibrium,
        "has_spanning_star": has_spanning_star(g),
        "potential": potential(g),
        "profits": list(rep.values),
        "witness": witness,
    }
