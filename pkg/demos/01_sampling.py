# %% [markdown]
# # Sampling random labelled posets
#
# A poset is drawn by running an edge-toggling Metropolis chain on DAGs for
# `m` steps (default `n**2`) from the empty graph and taking the transitive
# closure of where it ends up.

# %%
from randposet import ChainConfig, generate_poset, hasse_edges, run_chain, transitive_reduction
from randposet.formats import poset_to_dot, poset_to_json

cfg = ChainConfig(n=8, seed=2024)
dag = run_chain(cfg)
print(cfg)
print("final chain state:", dag.edges())

# %% [markdown]
# The sample is the closure of that DAG. Its cover relation (Hasse diagram)
# is the transitive reduction of the same DAG.

# %%
key = generate_poset(cfg)
print("strict order pairs:", len(key.pairs()))
print("covers:", hasse_edges(key))
assert hasse_edges(key) == transitive_reduction(dag).edges()
print(poset_to_json(key))

# %% [markdown]
# A 21-element poset with the default quadratic step budget (441 steps),
# rendered as Graphviz DOT.

# %%
big = generate_poset(ChainConfig(21, seed=7))
print(poset_to_dot(big))

# %% [markdown]
# Batches: sample `k` always uses stream `k` of the seed, so results are the
# same whether or not the work is spread over processes.

# %%
from randposet import sample_posets

batch = list(sample_posets(5, 10, seed=1))
assert batch == list(sample_posets(5, 10, seed=1, jobs=2, block=3))
print(len(set(batch)), "distinct posets among", len(batch))
