"""Linear-time Laplacian spectrum of a cograph from its cotree.

Interior nodes are processed children-first.  A node holding ``m`` leaves
(its own leaf children plus one relocated leaf per processed child node)
emits its interior degree with multiplicity ``m - 1`` and passes a single
leaf, weighted by the total weight it absorbed, up to its parent.  The root
finally emits ``0`` once.  Interior degrees are computed once up front and
stay valid because relocation preserves leaf weight.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from cospectra.cotree import Cotree, interior_degrees
from cospectra.diagonalization import Inertia, as_rational

__all__ = ["SpectrumMultiset", "laplacian_spectrum", "spectrum_of_graph"]


@dataclass(frozen=True)
class SpectrumMultiset:
    """Sorted ``(eigenvalue, multiplicity)`` pairs, largest eigenvalue first."""

    pairs: tuple

    @classmethod
    def from_counts(cls, counts: dict) -> "SpectrumMultiset":
        return cls(tuple(sorted(((int(v), int(m)) for v, m in counts.items() if m > 0), reverse=True)))

    @classmethod
    def from_values(cls, values: Iterable[int]) -> "SpectrumMultiset":
        counts: dict = {}
        for v in values:
            counts[v] = counts.get(v, 0) + 1
        return cls.from_counts(counts)

    @property
    def n(self) -> int:
        return sum(m for _, m in self.pairs)

    def multiplicity(self, value: int) -> int:
        for v, m in self.pairs:
            if v == value:
                return m
        return 0

    def eigenvalues(self) -> list:
        """All eigenvalues with repetition, in ascending order."""
        out = []
        for v, m in reversed(self.pairs):
            out.extend([v] * m)
        return out

    @property
    def largest(self) -> int:
        return self.pairs[0][0]

    def inertia_at(self, x) -> Inertia:
        x = as_rational(x)
        above = sum(m for v, m in self.pairs if v > x)
        equal = sum(m for v, m in self.pairs if v == x)
        return Inertia(above, equal, self.n - above - equal)

    def to_dict(self) -> dict:
        return {"n": self.n, "spectrum": [[v, m] for v, m in self.pairs]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    def format_table(self) -> str:
        return "\n".join(f"{v} x {m}" for v, m in self.pairs)

    def __str__(self) -> str:
        return "{" + ", ".join(str(v) if m == 1 else f"{v}^{m}" for v, m in self.pairs) + "}"


def laplacian_spectrum(t: Cotree, node_degrees: Optional[Sequence[int]] = None) -> SpectrumMultiset:
    """Laplacian spectrum of the cograph represented by canonical cotree ``t``.

    ``node_degrees`` may pass precomputed :func:`~cospectra.cotree.interior_degrees`.
    Runs in time and memory linear in the size of ``t``.
    """
    if t.root < 0:
        return SpectrumMultiset(((0, 1),))
    if node_degrees is None:
        node_degrees = interior_degrees(t)
    children = t.children
    parent = t.node_parent
    r = t.num_interior
    held = [0] * r
    weight = [0] * r
    for w in range(r):
        c = 0
        for ref in children[w]:
            if ref < 0:
                c += 1
        held[w] = c
        weight[w] = c
    counts: dict = {}
    get = counts.get
    root = t.root
    for w in reversed(t.topdown_order()):
        m = held[w] - 1
        if m > 0:
            value = node_degrees[w]
            counts[value] = get(value, 0) + m
        if w != root:
            p = parent[w]
            held[p] += 1
            weight[p] += weight[w]
    counts[0] = get(0, 0) + 1
    if weight[root] != t.n:
        raise AssertionError("leaf weight not conserved during relocation")
    return SpectrumMultiset.from_counts(counts)


def spectrum_of_graph(g) -> SpectrumMultiset:
    """Recognize ``g`` and return its spectrum; raises NotACograph otherwise."""
    from cospectra.recognition import build_cotree

    return laplacian_spectrum(build_cotree(g).unwrap())
