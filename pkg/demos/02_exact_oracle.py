# %% [markdown]
# # Checking the chain exactly on small n
#
# For n <= 3 every DAG fits in memory and the transition matrix can be built
# with rational entries, so stationarity and convergence are checked without
# rounding.

# %%
from fractions import Fraction

from randposet import oracle

for n in range(1, 6):
    space = oracle.enumerate_posets(n)
    print(f"n={n}: {space.N} DAGs, {space.M} posets")

# %%
space = oracle.enumerate_posets(3)
P = oracle.build_mcstar_matrix(space)
pi = oracle.stationary_target(space)
assert list(pi @ P) == list(pi)
assert all(s == 1 for s in P.sum(axis=1))
print("pi P == pi exactly; sum(pi) =", sum(pi))

# %% [markdown]
# Summing the stationary law over each closure class gives exactly the
# uniform distribution on the 19 posets.

# %%
xi = oracle.project_to_posets(pi, space)
assert set(xi) == {Fraction(1, 19)}

# %% [markdown]
# Distance from uniform of the sampler's output law, as a function of the
# number of steps. The default budget is n**2 = 9.

# %%
steps = [0, 1, 2, 4, 9, 16, 25]
for m, tv in zip(steps, oracle.poset_tv_curve(space, P, steps)):
    print(f"m={m:3d}  tv={float(tv):.6f}")

# %% [markdown]
# Worst-case distance d(t) over starting states, and the 1/4 mixing time.

# %%
for t in (1, 5, 10, 20):
    print(f"d({t}) = {oracle.worst_case_tv(P, pi, t):.4f}")
print("t_mix(1/4) =", oracle.mixing_time(P, pi, 0.25))

# %% [markdown]
# n = 4 in double precision (543 states).

# %%
space4 = oracle.enumerate_posets(4)
P4 = oracle.build_mcstar_matrix(space4)
print("n=4, m=16: exact tv =", oracle.poset_tv_curve(space4, P4, [16])[0])
for check in oracle.run_checks(4):
    print("PASS" if check.passed else "FAIL", check.name, check.detail)
