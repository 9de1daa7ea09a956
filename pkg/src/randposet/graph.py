"""Labelled DAGs and posets stored as row bitsets.

A graph on ``n`` vertices is a tuple of ``n`` Python ints; bit ``j`` of
``rows[i]`` is set iff the directed edge ``(i, j)`` is present. Vertex
labels are the integers ``0..n-1``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator


Edge = tuple[int, int]


class CycleError(ValueError):
    """Raised when an operation that requires a DAG receives a cyclic graph."""


def _iter_bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def _closure_rows(rows: tuple[int, ...]) -> tuple[int, ...]:
    # Bitset Warshall: O(n^2) big-int ORs.
    c = list(rows)
    n = len(c)
    for k in range(n):
        bit = 1 << k
        ck = c[k]
        if not ck:
            continue
        for i in range(n):
            if c[i] & bit:
                c[i] |= ck
    for i in range(n):
        if c[i] >> i & 1:
            raise CycleError("graph contains a directed cycle")
    return tuple(c)


def _reduction_rows(closure: tuple[int, ...]) -> tuple[int, ...]:
    out = []
    for row in closure:
        implied = 0
        for w in _iter_bits(row):
            implied |= closure[w]
        out.append(row & ~implied)
    return tuple(out)


def _edge_count(rows: Iterable[int]) -> int:
    return sum(r.bit_count() for r in rows)


@lru_cache(maxsize=1 << 17)
def _exponent(rows: tuple[int, ...]) -> int:
    c = _closure_rows(rows)
    return _edge_count(c) - _edge_count(_reduction_rows(c))


@dataclass(frozen=True)
class Dag:
    """Labelled directed acyclic graph on ``n`` vertices.

    Construct through :func:`empty_dag`, :meth:`from_edges` or
    :meth:`from_rows`; the latter two verify acyclicity.
    """

    n: int
    rows: tuple[int, ...]

    @classmethod
    def from_rows(cls, n: int, rows: Iterable[int]) -> Dag:
        rows = tuple(int(r) for r in rows)
        if n < 1:
            raise ValueError(f"graph size must be positive, got {n}")
        if len(rows) != n:
            raise ValueError(f"expected {n} rows, got {len(rows)}")
        full = (1 << n) - 1
        for i, r in enumerate(rows):
            if r & ~full or r < 0:
                raise ValueError(f"row {i} references a vertex outside 0..{n - 1}")
            if r >> i & 1:
                raise CycleError(f"self-loop at vertex {i}")
        g = cls(n, rows)
        if not g.is_acyclic():
            raise CycleError("graph contains a directed cycle")
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> Dag:
        rows = [0] * n if n > 0 else []
        for i, j in edges:
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"edge ({i}, {j}) outside 0..{n - 1}")
            rows[i] |= 1 << j
        return cls.from_rows(n, rows)

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.rows[i] >> j & 1)

    def edges(self) -> list[Edge]:
        return [(i, j) for i, r in enumerate(self.rows) for j in _iter_bits(r)]

    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges())

    @property
    def num_edges(self) -> int:
        return _edge_count(self.rows)

    def is_acyclic(self) -> bool:
        # Kahn's algorithm on bitsets.
        indeg = [0] * self.n
        for r in self.rows:
            for j in _iter_bits(r):
                indeg[j] += 1
        stack = [v for v in range(self.n) if indeg[v] == 0]
        seen = 0
        while stack:
            v = stack.pop()
            seen += 1
            for j in _iter_bits(self.rows[v]):
                indeg[j] -= 1
                if indeg[j] == 0:
                    stack.append(j)
        return seen == self.n

    def reachable_from(self, v: int) -> int:
        """Bitset of vertices reachable from ``v`` by a path of length >= 1."""
        seen = 0
        frontier = self.rows[v]
        while frontier:
            seen |= frontier
            nxt = 0
            for w in _iter_bits(frontier):
                nxt |= self.rows[w]
            frontier = nxt & ~seen
        return seen

    def with_edge(self, i: int, j: int) -> Dag:
        """Unchecked edge insertion; caller guarantees acyclicity."""
        rows = list(self.rows)
        rows[i] |= 1 << j
        return Dag(self.n, tuple(rows))

    def without_edge(self, i: int, j: int) -> Dag:
        rows = list(self.rows)
        rows[i] &= ~(1 << j)
        return Dag(self.n, tuple(rows))

    def __repr__(self) -> str:
        return f"Dag(n={self.n}, edges={self.edges()})"


def empty_dag(n: int) -> Dag:
    if n < 1:
        raise ValueError(f"graph size must be positive, got {n}")
    return Dag(n, (0,) * n)


def would_create_cycle(g: Dag, i: int, j: int) -> bool:
    """True iff adding ``(i, j)`` to ``g`` closes a directed cycle."""
    if i == j:
        raise ValueError(f"self-loop ({i}, {j}) is not a valid proposal")
    if g.has_edge(i, j):
        raise ValueError(f"edge ({i}, {j}) is already present")
    return bool(g.reachable_from(j) >> i & 1)


def transitive_closure(g: Dag) -> Dag:
    return Dag(g.n, _closure_rows(g.rows))


def transitive_reduction(g: Dag) -> Dag:
    return Dag(g.n, _reduction_rows(_closure_rows(g.rows)))


def class_size_exponent(g: Dag) -> int:
    """Log2 of the number of DAGs sharing ``g``'s transitive closure.

    Every member of the class contains the reduction and any subset of the
    remaining closure edges, so the class has ``2**(|closure| - |reduction|)``
    members. Edges never cross weak components, so no component split is
    needed.
    """
    return _exponent(g.rows)


@dataclass(frozen=True, order=True)
class PosetKey:
    """A labelled poset as the bitset rows of its strict order.

    Reflexive pairs are implicit. Ordering compares rows lexicographically,
    which is deterministic but carries no meaning beyond that.
    """

    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1 or len(self.rows) != self.n:
            raise ValueError("rows must have one entry per element")
        for i, r in enumerate(self.rows):
            if r >> i & 1:
                raise ValueError(f"relation is not irreflexive at {i}")
            for j in _iter_bits(r):
                if j >= self.n:
                    raise ValueError(f"pair ({i}, {j}) outside 0..{self.n - 1}")
                if self.rows[j] & ~r:
                    raise ValueError(f"relation is not transitive through {j}")
                if self.rows[j] >> i & 1:
                    raise ValueError(f"relation is not antisymmetric at ({i}, {j})")

    def less(self, i: int, j: int) -> bool:
        return bool(self.rows[i] >> j & 1)

    def pairs(self) -> list[Edge]:
        return [(i, j) for i, r in enumerate(self.rows) for j in _iter_bits(r)]

    def as_dag(self) -> Dag:
        return Dag(self.n, self.rows)

    def bits(self) -> str:
        """Row-major 0/1 string of length ``n*n``."""
        return "".join(
            "1" if r >> j & 1 else "0" for r in self.rows for j in range(self.n)
        )

    def to_bytes(self) -> bytes:
        """``n`` as little-endian uint32, then row-major bits, MSB first per byte."""
        body = _pack_bits(self.bits())
        return self.n.to_bytes(4, "little") + body

    @classmethod
    def from_bytes(cls, data: bytes) -> PosetKey:
        if len(data) < 4:
            raise ValueError("truncated poset key")
        n = int.from_bytes(data[:4], "little")
        nbytes = (n * n + 7) // 8
        if len(data) != 4 + nbytes:
            raise ValueError(f"expected {4 + nbytes} bytes for n={n}, got {len(data)}")
        value = int.from_bytes(data[4:], "big") >> (8 * nbytes - n * n)
        bits = format(value, f"0{n * n}b") if n else ""
        rows = tuple(int(bits[i * n:(i + 1) * n][::-1], 2) for i in range(n))
        return cls(n, rows)

    def hex(self) -> str:
        return _pack_bits(self.bits()).hex()


def _pack_bits(bits: str) -> bytes:
    if not bits:
        return b""
    nbytes = (len(bits) + 7) // 8
    padded = bits + "0" * (8 * nbytes - len(bits))
    return int(padded, 2).to_bytes(nbytes, "big")


def poset_key(g: Dag) -> PosetKey:
    return PosetKey(g.n, _closure_rows(g.rows))


def hasse_edges(p: PosetKey) -> list[Edge]:
    """Cover pairs ``(a, b)``: ``a < b`` with nothing strictly between."""
    red = _reduction_rows(p.rows)
    return [(i, j) for i, r in enumerate(red) for j in _iter_bits(r)]
