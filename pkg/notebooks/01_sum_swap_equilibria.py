# %% [markdown]
# # Sum-swap equilibria
#
# A vertex pays the sum of its distances to everyone else and may trade one
# incident edge for an edge to a non-neighbor. We check a few small graphs by
# brute force and look at the witness swap when a graph is not stable.

# %%
from swapnet import SwapMove, check_sse, sum_of_distances, swap_cost_delta
from swapnet import generators as gen

p4 = gen.path(4)
print("costs on P4:", [sum_of_distances(p4, v) for v in range(4)])
print("endpoint 0 moves its edge from 1 to 2:", swap_cost_delta(p4, SwapMove(0, 1, 2)))

# %%
for name, g in [("star(6)", gen.star(6)), ("C4", gen.cycle(4)), ("C5", gen.cycle(5)),
                ("C6", gen.cycle(6)), ("P4", p4), ("K5", gen.complete(5))]:
    rep = check_sse(g)
    print(f"{name:8s} SSE={rep.is_equilibrium!s:5s} witness={rep.witness} delta={rep.delta}")

# %% [markdown]
# Long cycles are not stable: some vertex can shortcut across.

# %%
for n in range(3, 12):
    rep = check_sse(gen.cycle(n))
    print(n, rep.is_equilibrium, rep.witness)
