"""Edge-toggling Markov chains on labelled DAGs and the poset sampler.

``mc_step`` is the plain chain whose stationary law is uniform over DAGs.
``mcstar_step`` adds a Metropolis filter targeting ``pi(G) ~ 1/|[G]|``, so
the transitive closure of its state is asymptotically uniform over posets.

Randomness: every chain owns one PCG64 stream derived from
``SeedSequence(seed, spawn_key=(stream,))``. Each step draws one integer
for the ordered pair and, only when the move is a strict downhill in
class size, one float for the acceptance coin.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator

import numpy as np

from .graph import Dag, PosetKey, _exponent, class_size_exponent, empty_dag, poset_key


def make_rng(seed: int, stream: int | None = None) -> np.random.Generator:
    spawn_key = () if stream is None else (stream,)
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=spawn_key)))


def fresh_seed() -> int:
    return int(np.random.SeedSequence().entropy) & 0xFFFF_FFFF_FFFF_FFFF


@dataclass(frozen=True)
class ChainConfig:
    """Parameters of one sampler run; ``m`` defaults to ``n**2``."""

    n: int
    m: int | None = None
    seed: int = field(default_factory=fresh_seed)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"poset size must be positive, got {self.n}")
        if self.m is None:
            object.__setattr__(self, "m", self.n * self.n)
        if self.m < 0:
            raise ValueError(f"step budget must be non-negative, got {self.m}")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must fit in an unsigned 64-bit integer")


@dataclass(frozen=True)
class ChainState:
    dag: Dag
    exponent: int = 0
    t: int = 0

    @classmethod
    def initial(cls, n: int) -> ChainState:
        return cls(empty_dag(n), 0, 0)


def acceptance_probability(log2_ratio: int) -> float:
    """``min(1, 2**log2_ratio)`` where the ratio is ``|[current]| / |[proposed]|``."""
    return 1.0 if log2_ratio >= 0 else 2.0 ** log2_ratio


def draw_pair(n: int, rng: np.random.Generator) -> tuple[int, int]:
    """Uniform ordered pair ``(i, j)`` with ``i != j``."""
    k = int(rng.integers(n * (n - 1)))
    i, j = divmod(k, n - 1)
    if j >= i:
        j += 1
    return i, j


def mc_step(state: ChainState, rng: np.random.Generator) -> ChainState:
    g = state.dag
    if g.n < 2:
        return ChainState(g, state.exponent, state.t + 1)
    i, j = draw_pair(g.n, rng)
    if g.has_edge(i, j):
        g = g.without_edge(i, j)
    elif not g.reachable_from(j) >> i & 1:
        g = g.with_edge(i, j)
    return ChainState(g, class_size_exponent(g), state.t + 1)


def mcstar_step(state: ChainState, rng: np.random.Generator) -> ChainState:
    g = state.dag
    n = g.n
    if n < 2:
        return ChainState(g, state.exponent, state.t + 1)
    i, j = draw_pair(n, rng)
    rows = list(g.rows)
    bit = 1 << j
    if rows[i] & bit:
        rows[i] ^= bit
    elif g.reachable_from(j) >> i & 1:
        return ChainState(g, state.exponent, state.t + 1)
    else:
        rows[i] |= bit
    proposed = tuple(rows)
    new_exp = _exponent(proposed)
    delta = state.exponent - new_exp
    if delta < 0 and rng.random() >= 2.0 ** delta:
        return ChainState(g, state.exponent, state.t + 1)
    return ChainState(Dag(n, proposed), new_exp, state.t + 1)


def _run(n: int, m: int, rng: np.random.Generator) -> Dag:
    state = ChainState.initial(n)
    for _ in range(m):
        state = mcstar_step(state, rng)
    return state.dag


def run_chain(cfg: ChainConfig, stream: int | None = None) -> Dag:
    """Run the Metropolis chain from the empty graph for ``cfg.m`` steps."""
    return _run(cfg.n, cfg.m, make_rng(cfg.seed, stream))


def generate_poset(cfg: ChainConfig, stream: int | None = None) -> PosetKey:
    return poset_key(run_chain(cfg, stream))


def _sample_block(args: tuple[int, int, int, int, int]) -> list[PosetKey]:
    n, m, seed, start, stop = args
    return [generate_poset(ChainConfig(n, m, seed), k) for k in range(start, stop)]


def sample_posets(
    n: int,
    count: int,
    m: int | None = None,
    seed: int | None = None,
    jobs: int = 1,
    ordered: bool = True,
    block: int = 1000,
) -> Iterator[PosetKey]:
    """Yield ``count`` independent samples; sample ``k`` uses stream ``k``.

    The set of samples does not depend on ``jobs``; with ``ordered=False``
    and ``jobs > 1`` blocks are yielded as they finish.
    """
    cfg = ChainConfig(n, m) if seed is None else ChainConfig(n, m, seed)
    if jobs <= 1:
        for k in range(count):
            yield generate_poset(cfg, k)
        return
    tasks = [
        (cfg.n, cfg.m, cfg.seed, s, min(s + block, count))
        for s in range(0, count, block)
    ]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        if ordered:
            for keys in pool.map(_sample_block, tasks):
                yield from keys
        else:
            from concurrent.futures import as_completed

            futures = [pool.submit(_sample_block, t) for t in tasks]
            for fut in as_completed(futures):
                yield from fut.result()
