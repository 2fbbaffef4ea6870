"""Better-response and limited-query dynamics for the local-cost game.

Every run draws from a single ``numpy.random.Generator`` seeded by
``DynamicsConfig.seed``.  Draw order per step:

* limited-query mode: the acting vertex ``u = rng.integers(n)``; then, only
  if ``u`` has a neighbor and more than ``c`` non-neighbors, the queried
  positions ``rng.choice(len(non_neighbors), size=c, replace=False)`` into
  the ascending non-neighbor list.  With ``c`` or fewer non-neighbors all of
  them are queried and nothing is drawn.
* full-knowledge mode: ``u = rng.integers(n)`` under the random scheduler
  (round-robin draws nothing); then one ``rng.integers`` call when the
  ``random`` policy has to pick among profitable swaps.

Same graph, same config, same seed: identical trace.
"""
from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import NamedTuple, Optional

import numpy as np

from .errors import MixedConfig
from .graph import Graph, SwapMove
from .localgame import find_profitable_swap, has_spanning_star, is_local_equilibrium, potential
from .sumgame import POLICIES

ABSORBED = "Absorbed"
STEP_LIMIT = "StepLimit"
SILENCE = "SilenceDetected"


@dataclass(frozen=True)
class DynamicsConfig:
    """Run parameters.

    ``max_steps`` and ``silence_window`` default to values derived from ``n``
    (see :func:`default_max_steps` and :func:`default_silence_window`).
    """

    mode: str = "full"
    c: int = 1
    policy: str = "first"
    seed: int = 0
    max_steps: Optional[int] = None
    silence_window: Optional[int] = None
    scheduler: str = "round-robin"
    halt_on_silence: bool = True

    def __post_init__(self):
        if self.mode not in ("full", "query"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.c < 1:
            raise ValueError("query budget c must be at least 1")
        if self.silence_window is not None and self.silence_window < 1:
            raise ValueError("silence window must be at least 1")
        if self.policy not in POLICIES:
            raise ValueError(f"unknown policy {self.policy!r}")
        if self.scheduler not in ("round-robin", "random"):
            raise ValueError(f"unknown scheduler {self.scheduler!r}")


def default_silence_window(n: int) -> int:
    return max(1, n ** 3)


def default_max_steps(n: int, cfg: DynamicsConfig) -> int:
    if cfg.mode == "query":
        return max(1, math.ceil(10 * n ** 5 / (2 * cfg.c)))
    # at most n(n-1)^2/2 moves, each preceded by fewer than n silent turns, plus one silent round
    return n * (n * (n - 1) ** 2 // 2 + 1) + n


class Step(NamedTuple):
    t: int
    u: int
    queried: Optional[tuple[int, ...]]
    move: Optional[SwapMove]
    potential: int


@dataclass
class DynamicsTrace:
    initial: Graph
    config: DynamicsConfig
    initial_potential: int
    steps: list[Step] = field(default_factory=list)
    status: str = STEP_LIMIT
    final: Optional[Graph] = None
    # (t, graph was an equilibrium) each time a silent streak reached the window
    firings: list[tuple[int, bool]] = field(default_factory=list)

    @property
    def silence_at(self) -> Optional[int]:
        return self.firings[0][0] if self.firings else None

    @property
    def n(self) -> int:
        return self.initial.n

    @property
    def applied_moves(self) -> int:
        return sum(1 for s in self.steps if s.move is not None)

    @property
    def final_potential(self) -> int:
        return self.steps[-1].potential if self.steps else self.initial_potential

    @property
    def last_move_at(self) -> int:
        """Time of the last applied move, 0 if none was applied."""
        for s in reversed(self.steps):
            if s.move is not None:
                return s.t
        return 0

    @property
    def absorbed_at(self) -> Optional[int]:
        """First time the configuration was an equilibrium, or None if it never got there."""
        if not is_local_equilibrium(self.final):
            return None
        return self.last_move_at

    def replay(self) -> Graph:
        g = self.initial.copy()
        for s in self.steps:
            if s.move is not None:
                g._swap_inplace(*s.move)
        return g

    def records(self) -> list[dict]:
        return [
            {
                "t": s.t,
                "u": s.u,
                "queried": None if s.queried is None else list(s.queried),
                "move": None if s.move is None else {"removed": s.move.removed, "added": s.move.added},
                "potential": s.potential,
            }
            for s in self.steps
        ]

    def to_jsonl(self) -> str:
        return "".join(json.dumps(r, sort_keys=True) + "\n" for r in self.records())

    def summary(self) -> dict:
        return {
            "status": self.status,
            "steps": len(self.steps),
            "applied_moves": self.applied_moves,
            "final_potential": self.final_potential,
            "final_is_equilibrium": is_local_equilibrium(self.final),
            "final_has_spanning_star": has_spanning_star(self.final),
        }


def query_response(g: Graph, u: int, queried) -> Optional[SwapMove]:
    """The swap ``u`` makes after learning the degrees of ``queried`` non-neighbors.

    Drops its lowest-degree neighbor and links to the highest-degree queried
    vertex (smallest id on ties) when that is profitable, else None.
    """
    nbrs = g.neighbors(u)
    if not nbrs or not queried:
        return None
    deg = g.degree
    w = min(nbrs, key=lambda x: (deg(x), x))
    v = min(queried, key=lambda x: (-deg(x), x))
    if deg(v) >= deg(w):
        return SwapMove(u, w, v)
    return None


def _apply(g: Graph, m: SwapMove, x: int) -> int:
    gain = g.degree(m.added) + 1 - g.degree(m.removed)
    g._swap_inplace(*m)
    return x + gain


def run_better_response(g0: Graph, cfg: DynamicsConfig = DynamicsConfig()) -> DynamicsTrace:
    """Full-knowledge better-response dynamics until no vertex can improve.

    Under round-robin, a full round of silent turns means absorption; under
    the random scheduler every silent turn triggers an equilibrium check.
    """
    n = g0.n
    g = g0.copy()
    rng = np.random.default_rng(cfg.seed)
    max_steps = cfg.max_steps if cfg.max_steps is not None else default_max_steps(n, cfg)
    x = potential(g)
    trace = DynamicsTrace(g0.copy(), cfg, x)
    if n == 0:
        trace.status, trace.final = ABSORBED, g
        return trace
    silent = 0
    for t in range(1, max_steps + 1):
        u = (t - 1) % n if cfg.scheduler == "round-robin" else int(rng.integers(n))
        m = find_profitable_swap(g, u, cfg.policy, rng)
        if m is not None:
            x = _apply(g, m, x)
            silent = 0
        else:
            silent += 1
        trace.steps.append(Step(t, u, None, m, x))
        if m is None:
            if cfg.scheduler == "round-robin":
                if silent >= n:
                    trace.status = ABSORBED
                    break
            elif is_local_equilibrium(g):
                trace.status = ABSORBED
                break
    trace.final = g
    return trace


def run_limited_query(g0: Graph, cfg: DynamicsConfig) -> DynamicsTrace:
    """Randomized dynamics where each step's vertex sees only ``c`` random non-neighbors.

    Each time ``silence_window`` consecutive steps pass without a move the
    firing is logged in ``trace.firings``; with ``halt_on_silence`` the run
    then ends with status SilenceDetected, otherwise only the step limit
    ends it.
    """
    n = g0.n
    g = g0.copy()
    rng = np.random.default_rng(cfg.seed)
    max_steps = cfg.max_steps if cfg.max_steps is not None else default_max_steps(n, cfg)
    window = cfg.silence_window if cfg.silence_window is not None else default_silence_window(n)
    x = potential(g)
    trace = DynamicsTrace(g0.copy(), cfg, x)
    adj = g._adj
    silent = 0
    for t in range(1, max_steps + 1):
        u = int(rng.integers(n))
        queried: tuple[int, ...] = ()
        m = None
        if adj[u] and len(adj[u]) < n - 1:
            others = [w for w in range(n) if w != u and w not in adj[u]]
            if cfg.c >= len(others):
                queried = tuple(others)
            else:
                idx = rng.choice(len(others), size=cfg.c, replace=False)
                queried = tuple(sorted(others[i] for i in idx))
            m = query_response(g, u, queried)
        if m is not None:
            x = _apply(g, m, x)
            silent = 0
        else:
            silent += 1
        trace.steps.append(Step(t, u, queried, m, x))
        if silent == window:
            trace.firings.append((t, is_local_equilibrium(g)))
            if cfg.halt_on_silence:
                trace.status = SILENCE
                break
    trace.final = g
    return trace


def run(g0: Graph, cfg: DynamicsConfig) -> DynamicsTrace:
    return run_limited_query(g0, cfg) if cfg.mode == "query" else run_better_response(g0, cfg)


def silence_stopping_rule(trace: DynamicsTrace, window: Optional[int] = None) -> bool:
    """True iff the last ``window`` steps (default ``n**3``) all made no move."""
    if window is None:
        window = default_silence_window(trace.n)
    if window < 1:
        raise ValueError("window must be at least 1")
    if len(trace.steps) < window:
        return False
    return all(s.move is None for s in trace.steps[-window:])


@dataclass
class AbsorptionSummary:
    n: int
    c: int
    runs: int
    absorbed: int
    mean: Optional[float]
    max: Optional[int]
    quantiles: dict
    bound: Fraction
    mean_applied_moves: float

    @property
    def within_bound(self) -> bool:
        return self.mean is not None and self.absorbed == self.runs and Fraction(self.mean) <= self.bound

    def to_json(self) -> dict:
        d = asdict(self)
        d["bound"] = float(self.bound)
        d["within_bound"] = self.within_bound
        return d


def absorption_statistics(runs) -> AbsorptionSummary:
    """Steps-to-absorption summary for runs sharing ``(n, c)``, compared with ``n**5 / (2c)``."""
    runs = list(runs)
    if not runs:
        raise ValueError("no runs given")
    keys = {(r.n, r.config.c) for r in runs}
    if len(keys) != 1:
        raise MixedConfig(f"runs mix (n, c) settings: {sorted(keys)}")
    (n, c), = keys
    times = [r.absorbed_at for r in runs]
    done = np.array([t for t in times if t is not None], dtype=float)
    qs = {}
    if done.size:
        qs = {str(q): float(np.quantile(done, q)) for q in (0.5, 0.9, 0.99)}
    return AbsorptionSummary(
        n=n,
        c=c,
        runs=len(runs),
        absorbed=int(done.size),
        mean=float(done.mean()) if done.size else None,
        max=int(done.max()) if done.size else None,
        quantiles=qs,
        bound=Fraction(n ** 5, 2 * c),
        mean_applied_moves=float(np.mean([r.applied_moves for r in runs])),
    )
