"""Exhaustive ground truth for small ``n``.

Enumerates every labelled DAG, groups them by transitive closure, and builds
the exact transition matrices of both chains. Exact matrices are numpy
object arrays of :class:`~fractions.Fraction`; float matrices are
``float64``. Distributions are 1-d arrays in the same two flavours.
"""
from __future__ import annotations

import io
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .graph import Dag, PosetKey, class_size_exponent, poset_key
from .stats import tv_distance

# Desk-scale guards; raise them on bigger machines.
MAX_ENUM_N = 5
MAX_MATRIX_N = 4
MAX_EXACT_N = 3


@dataclass
class StateSpace:
    n: int
    dags: list[Dag]
    class_of: list[int] = field(default_factory=list)
    posets: list[PosetKey] = field(default_factory=list)
    index: dict[tuple[int, ...], int] = field(default_factory=dict, repr=False)

    @property
    def N(self) -> int:
        return len(self.dags)

    @property
    def M(self) -> int:
        return len(self.posets)

    def index_of(self, g: Dag) -> int:
        if g.n != self.n:
            raise ValueError(f"graph has n={g.n}, state space has n={self.n}")
        return self.index[g.rows]

    def export_records(self) -> str:
        """One ``index, edge-bitstring, poset-index`` line per DAG."""
        lines = []
        for k, g in enumerate(self.dags):
            lines.append(f"{k}, {_bitstring(g)}, {self.class_of[k]}")
        return "\n".join(lines) + "\n"


def _bitstring(g: Dag) -> str:
    return "".join("1" if r >> j & 1 else "0" for r in g.rows for j in range(g.n))


def _check_guard(n: int, limit: int, what: str):
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if n > limit:
        raise ValueError(f"{what} is limited to n <= {limit} (got n={n})")


def enumerate_dags(n: int, max_n: int = MAX_ENUM_N) -> list[Dag]:
    """All labelled DAGs on ``n`` vertices, sorted by row-major edge bitstring."""
    _check_guard(n, max_n, "DAG enumeration")
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    out: list[tuple[int, ...]] = []
    rows = [0] * n

    def reaches(src: int, dst: int) -> bool:
        seen = 0
        stack = [src]
        while stack:
            v = stack.pop()
            if v == dst:
                return True
            nxt = rows[v] & ~seen
            seen |= nxt
            while nxt:
                low = nxt & -nxt
                stack.append(low.bit_length() - 1)
                nxt ^= low
        return False

    def extend(k: int):
        if k == len(pairs):
            out.append(tuple(rows))
            return
        i, j = pairs[k]
        extend(k + 1)
        for a, b in ((i, j), (j, i)):
            if not reaches(b, a):
                rows[a] |= 1 << b
                extend(k + 1)
                rows[a] &= ~(1 << b)

    extend(0)
    dags = [Dag(n, r) for r in out]
    dags.sort(key=_bitstring)
    return dags


def enumerate_posets(n: int, max_n: int = MAX_ENUM_N) -> StateSpace:
    dags = enumerate_dags(n, max_n)
    keys = [poset_key(g) for g in dags]
    posets = sorted(set(keys), key=PosetKey.bits)
    pindex = {p: k for k, p in enumerate(posets)}
    return StateSpace(
        n=n,
        dags=dags,
        class_of=[pindex[k] for k in keys],
        posets=posets,
        index={g.rows: k for k, g in enumerate(dags)},
    )


def class_size_bruteforce(g: Dag, space: StateSpace) -> int:
    target = space.class_of[space.index_of(g)]
    return sum(1 for c in space.class_of if c == target)


def _use_exact(space: StateSpace, exact: bool | None) -> bool:
    return space.n <= MAX_EXACT_N if exact is None else exact


def _build(space: StateSpace, metropolis: bool, exact: bool | None, max_n: int) -> np.ndarray:
    n = space.n
    _check_guard(n, max_n, "transition matrix construction")
    exact = _use_exact(space, exact)
    N = space.N
    one = Fraction(1) if exact else 1.0
    P = np.zeros((N, N), dtype=object if exact else float)
    if exact:
        P[:] = Fraction(0)
    if n < 2:
        P[0, 0] = one
        return P
    q = one / (n * (n - 1))
    exps = [class_size_exponent(g) for g in space.dags]
    for x, g in enumerate(space.dags):
        off = 0 * one
        for i in range(n):
            for j in range(n):
                if i == j:
                    continue
                if g.has_edge(i, j):
                    h = g.without_edge(i, j)
                elif g.reachable_from(j) >> i & 1:
                    continue
                else:
                    h = g.with_edge(i, j)
                y = space.index[h.rows]
                p = q
                if metropolis:
                    delta = exps[x] - exps[y]
                    if delta < 0:
                        p = q / 2 ** (-delta)
                P[x, y] += p
                off += p
        P[x, x] = one - off
    return P


def build_mcstar_matrix(
    space: StateSpace, exact: bool | None = None, max_n: int = MAX_MATRIX_N
) -> np.ndarray:
    """Transition matrix of the Metropolis chain over ``space.dags``.

    Neighbours differ in one edge; each of the ``n(n-1)`` ordered pairs is
    proposed with equal probability and accepted with
    ``min(1, |[x]| / |[y]|)``. Cycle-blocked and rejected moves stay put.
    Exact rationals by default for ``n <= 3``.
    """
    return _build(space, True, exact, max_n)


def build_mc_matrix(
    space: StateSpace, exact: bool | None = None, max_n: int = MAX_MATRIX_N
) -> np.ndarray:
    """Transition matrix of the plain (uniform-target) edge-toggling chain."""
    return _build(space, False, exact, max_n)


def stationary_target(space: StateSpace, exact: bool | None = None) -> np.ndarray:
    """``pi(G) = 1 / (M * 2**exponent(G))`` over ``space.dags``."""
    exact = _use_exact(space, exact)
    M = space.M
    if exact:
        return np.array(
            [Fraction(1, M * 2 ** class_size_exponent(g)) for g in space.dags],
            dtype=object,
        )
    return np.array([1.0 / (M * 2.0 ** class_size_exponent(g)) for g in space.dags])


def uniform_posets(space: StateSpace, exact: bool | None = None) -> np.ndarray:
    if _use_exact(space, exact):
        return np.array([Fraction(1, space.M)] * space.M, dtype=object)
    return np.full(space.M, 1.0 / space.M)


def point_mass(space: StateSpace, P: np.ndarray) -> np.ndarray:
    """Start distribution: all mass on the empty DAG."""
    mu = np.zeros(space.N, dtype=P.dtype)
    if P.dtype == object:
        mu[:] = Fraction(0)
        mu[space.index[(0,) * space.n]] = Fraction(1)
    else:
        mu[space.index[(0,) * space.n]] = 1.0
    return mu


def exact_distribution(P: np.ndarray, m: int, start: np.ndarray) -> np.ndarray:
    """``start @ P**m`` by repeated vector-matrix products."""
    if m < 0:
        raise ValueError(f"step count must be non-negative, got {m}")
    mu = start
    for _ in range(m):
        mu = mu @ P
    return mu


def distributions(P: np.ndarray, start: np.ndarray, m_max: int) -> list[np.ndarray]:
    """``[start @ P**k for k in 0..m_max]``."""
    out = [start]
    for _ in range(m_max):
        out.append(out[-1] @ P)
    return out


def project_to_posets(d: np.ndarray, space: StateSpace) -> np.ndarray:
    """Sum DAG probabilities within each closure class."""
    if len(d) != space.N:
        raise ValueError(f"distribution has {len(d)} entries, state space has {space.N}")
    if d.dtype == object:
        out = np.array([Fraction(0)] * space.M, dtype=object)
    else:
        out = np.zeros(space.M)
    for k, c in enumerate(space.class_of):
        out[c] += d[k]
    return out


def poset_tv_curve(space: StateSpace, P: np.ndarray, steps: list[int]) -> list:
    """TV to uniform of the sampler's poset law after each step count in ``steps``."""
    start = point_mass(space, P)
    uniform = uniform_posets(space, P.dtype == object)
    dists = distributions(P, start, max(steps) if steps else 0)
    return [tv_distance(list(project_to_posets(dists[m], space)), list(uniform)) for m in steps]


def worst_case_tv(P: np.ndarray, pi: np.ndarray, t: int) -> float:
    """``d(t) = max_x TV(P**t[x], pi)`` in floats."""
    Pt = np.linalg.matrix_power(P.astype(float), t)
    return float(0.5 * np.abs(Pt - pi.astype(float)).sum(axis=1).max())


def mixing_time(P: np.ndarray, pi: np.ndarray, eps: float = 0.25, t_max: int = 10_000) -> int:
    """Smallest ``t`` with ``d(t) < eps``."""
    Pf = P.astype(float)
    pif = pi.astype(float)
    Pt = np.eye(len(Pf))
    for t in range(t_max + 1):
        if 0.5 * np.abs(Pt - pif).sum(axis=1).max() < eps:
            return t
        Pt = Pt @ Pf
    raise RuntimeError(f"d(t) did not drop below {eps} within {t_max} steps")


def matrix_csv(P: np.ndarray) -> str:
    buf = io.StringIO()
    for row in P:
        buf.write(",".join(str(x) if P.dtype == object else repr(float(x)) for x in row))
        buf.write("\n")
    return buf.getvalue()


# -- validation suite ---------------------------------------------------------

FLOAT_TOL = 1e-12


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""


def run_checks(n: int, m_max: int = 50, corrupt: bool = False) -> list[Check]:
    """Oracle checks for one ``n``: exact for ``n <= 3``, float64 for ``n = 4``.

    ``corrupt`` perturbs one matrix row before checking, to exercise the
    failure path.
    """
    _check_guard(n, MAX_MATRIX_N, "validation")
    space = enumerate_posets(n)
    exact = n <= MAX_EXACT_N
    P = build_mcstar_matrix(space, exact=exact)
    if corrupt and space.N > 1:
        P[0, 0] -= Fraction(1, 7) if exact else 1 / 7
        P[0, 1] += Fraction(1, 7) if exact else 1 / 7
    pi = stationary_target(space, exact=exact)
    checks = []

    bad = [
        g for g in space.dags
        if 2 ** class_size_exponent(g) != class_size_bruteforce(g, space)
    ]
    checks.append(Check("class size formula", not bad, f"{len(bad)} mismatches over {space.N} DAGs"))

    sums = P.sum(axis=1)
    if exact:
        ok = all(s == 1 for s in sums) and all(x >= 0 for x in P.flat)
    else:
        ok = bool(np.abs(sums - 1).max() < FLOAT_TOL and (P >= 0).all())
    checks.append(Check("row stochastic", ok))

    worst = 0.0
    ok = True
    for x in range(space.N):
        for y in np.nonzero(P[x])[0]:
            lhs, rhs = pi[x] * P[x, y], pi[y] * P[y, x]
            if exact:
                ok &= lhs == rhs
            else:
                worst = max(worst, abs(lhs - rhs))
    if not exact:
        ok = worst < FLOAT_TOL
    checks.append(Check("detailed balance", bool(ok)))

    piP = pi @ P
    if exact:
        ok = all(a == b for a, b in zip(piP, pi))
        detail = "exact"
    else:
        err = float(np.abs(piP - pi).max())
        ok = err < FLOAT_TOL
        detail = f"max error {err:.3g}"
    checks.append(Check("stationarity", bool(ok), detail))

    start = point_mass(space, P)
    uniform = list(uniform_posets(space, exact))
    failures = 0
    mu = start
    for m in range(m_max + 1):
        dag_tv = tv_distance(list(mu), list(pi))
        poset_tv = tv_distance(list(project_to_posets(mu, space)), uniform)
        if poset_tv > dag_tv + FLOAT_TOL:
            failures += 1
        mu = mu @ P
    checks.append(Check("poset TV <= DAG TV", failures == 0, f"m = 0..{m_max}"))
    return checks
