"""Shared brute-force oracles.

Everything here works on plain ``set[tuple[int, int]]`` edge sets and never
calls into the bitset code under test.
"""
from itertools import combinations, permutations, product

import numpy as np
import pytest

from randposet import Dag

ACCEPTANCE_RESULTS: list[tuple[str, bool, str]] = []


def record(criterion: str, passed: bool, detail: str = ""):
    ACCEPTANCE_RESULTS.append((criterion, passed, detail))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, passed, detail in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {name}  {detail}")


def naive_has_cycle(n, edges):
    succ = {v: [b for a, b in edges if a == v] for v in range(n)}
    state = dict.fromkeys(range(n), 0)

    def visit(v):
        state[v] = 1
        for w in succ[v]:
            if state[w] == 1 or (state[w] == 0 and visit(w)):
                return True
        state[v] = 2
        return False

    return any(state[v] == 0 and visit(v) for v in range(n))


def naive_closure(n, edges):
    reach = [[False] * n for _ in range(n)]
    for a, b in edges:
        reach[a][b] = True
    for k in range(n):
        for i in range(n):
            for j in range(n):
                if reach[i][k] and reach[k][j]:
                    reach[i][j] = True
    return {(i, j) for i in range(n) for j in range(n) if reach[i][j]}


def naive_reduction(n, edges):
    """Smallest subset of ``edges`` with the same closure, by exhaustive search."""
    edges = sorted(edges)
    target = naive_closure(n, edges)
    for size in range(len(edges) + 1):
        for sub in combinations(edges, size):
            if naive_closure(n, sub) == target:
                return set(sub)
    raise AssertionError("unreachable")


def all_dags_bruteforce(n):
    pairs = list(permutations(range(n), 2))
    out = []
    for mask in product((0, 1), repeat=len(pairs)):
        edges = {p for p, b in zip(pairs, mask) if b}
        if not naive_has_cycle(n, edges):
            out.append(frozenset(edges))
    return out


def random_dag(n, rng, density=None):
    """Random DAG: random labelling of a random upper-triangular edge set."""
    p = rng.random() if density is None else density
    perm = rng.permutation(n)
    edges = [
        (int(perm[i]), int(perm[j]))
        for i in range(n) for j in range(i + 1, n) if rng.random() < p
    ]
    return Dag.from_edges(n, edges)


class ScriptedRng:
    """Stand-in for ``numpy.random.Generator`` replaying fixed draws."""

    def __init__(self, ints, floats=()):
        self.ints = list(ints)
        self.floats = list(floats)
        self.float_calls = 0

    def integers(self, high):
        k = self.ints.pop(0)
        assert 0 <= k < high
        return k

    def random(self):
        self.float_calls += 1
        return self.floats.pop(0)


def pair_index(n, i, j):
    return i * (n - 1) + (j if j < i else j - 1)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
