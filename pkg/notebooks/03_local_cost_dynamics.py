# %% [markdown]
# # Local-cost game: potential and dynamics
#
# Profit of a vertex is the sum of its neighbors' degrees. Half the sum of
# squared degrees moves by exactly the deviator's profit change, so
# better-response dynamics must stop.

# %%
from swapnet import (
    DynamicsConfig,
    absorption_statistics,
    has_spanning_star,
    potential,
    run_better_response,
    run_limited_query,
)
from swapnet import generators as gen

g0 = gen.random_connected(20, 0.15, seed=1)
tr = run_better_response(g0, DynamicsConfig(policy="best"))
print(tr.status, "moves:", tr.applied_moves, "potential:", potential(g0), "->", tr.final_potential)
print("final max degree:", tr.final.max_degree(), "spanning star:", has_spanning_star(tr.final))

# %% [markdown]
# Limited queries: each step one random vertex sees the degrees of `c`
# random non-neighbors. The run halts after n^3 silent steps.

# %%
for c in (1, 2, 4):
    runs = [run_limited_query(gen.random_connected(10, 0.4, s), DynamicsConfig(mode="query", c=c, seed=s))
            for s in range(50)]
    st = absorption_statistics(runs)
    print(f"c={c}: mean steps to absorption {st.mean:.1f} (max {st.max}), bound n^5/2c = {float(st.bound):.0f}")

# %% [markdown]
# A swap can drop a leaf neighbor and leave it isolated. Such equilibria
# have no spanning star; the star only appears once isolated vertices are
# excluded.

# %%
isolated = 0
for s in range(100):
    t = run_better_response(gen.random_connected(15, 0.2, s), DynamicsConfig(seed=s))
    if min(t.final.degrees()) == 0:
        isolated += 1
print("runs ending with an isolated vertex:", isolated, "of 100")
