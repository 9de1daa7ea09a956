"""Total variation distance and sample histograms over posets."""
from __future__ import annotations

import csv
import io
import json
import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .graph import PosetKey

NORMALIZATION_TOL = 1e-9


def tv_distance(p: Sequence, q: Sequence):
    """Half the L1 distance between two distributions on the same index set.

    Exact when both inputs hold :class:`~fractions.Fraction` entries.
    """
    if len(p) != len(q):
        raise ValueError(f"length mismatch: {len(p)} vs {len(q)}")
    exact = all(isinstance(x, (Fraction, int)) for x in p) and all(
        isinstance(x, (Fraction, int)) for x in q
    )
    if exact:
        for d in (p, q):
            if sum(d) != 1:
                raise ValueError("distribution does not sum to 1")
        return sum(abs(Fraction(a) - Fraction(b)) for a, b in zip(p, q)) / 2
    for d in (p, q):
        if abs(math.fsum(float(x) for x in d) - 1.0) > NORMALIZATION_TOL:
            raise ValueError("distribution does not sum to 1")
    return 0.5 * math.fsum(abs(float(a) - float(b)) for a, b in zip(p, q))


@dataclass
class SampleHistogram:
    """Counts of sampled posets of one size."""

    n: int
    counts: Counter = field(default_factory=Counter)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def __len__(self) -> int:
        return len(self.counts)

    def accumulate(self, key: PosetKey) -> SampleHistogram:
        if key.n != self.n:
            raise ValueError(f"key has n={key.n}, histogram has n={self.n}")
        self.counts[key] += 1
        return self

    def update(self, keys: Iterable[PosetKey]) -> SampleHistogram:
        for k in keys:
            self.accumulate(k)
        return self

    def merge(self, other: SampleHistogram) -> SampleHistogram:
        if other.n != self.n:
            raise ValueError(f"cannot merge n={other.n} into n={self.n}")
        return SampleHistogram(self.n, self.counts + other.counts)

    def to_csv(self) -> str:
        """``key_hex,count`` rows sorted by key."""
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["key_hex", "count"])
        for key in sorted(self.counts):
            w.writerow([key.hex(), self.counts[key]])
        return buf.getvalue()


def accumulate(h: SampleHistogram, key: PosetKey) -> SampleHistogram:
    return h.accumulate(key)


def empirical_tv(h: SampleHistogram, num_posets: int) -> float:
    """Plug-in TV between the sample frequencies and uniform over ``num_posets``.

    Categories never sampled contribute ``1/num_posets`` each.
    """
    total = h.total
    if total <= 0:
        raise ValueError("histogram is empty")
    if num_posets < len(h.counts):
        raise ValueError(
            f"{len(h.counts)} distinct posets observed but only {num_posets} exist"
        )
    u = 1.0 / num_posets
    seen = math.fsum(abs(c / total - u) for c in h.counts.values())
    return 0.5 * (seen + (num_posets - len(h.counts)) * u)


def tv_report(n: int, m: int, h: SampleHistogram, num_posets: int) -> str:
    return json.dumps(
        {
            "n": n,
            "m": m,
            "samples": h.total,
            "M": num_posets,
            "tv_empirical": empirical_tv(h, num_posets),
        }
    )
