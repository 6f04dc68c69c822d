"""Exact congruence diagonalization of ``L(G) + x I`` on the cotree.

Each leaf carries a diagonal value.  Sibling leaves under a node are
duplicates (Union parent) or coduplicates (Join parent), and a pair of them
can be eliminated with a congruence that touches only their two rows.  The
signs of the resulting diagonal give the eigenvalue location counts of
``L(G)`` by Sylvester's law of inertia.

Selection order is fixed: interior nodes are processed deepest first, ties
broken by lowest node index, and the leaves under a node are folded
pairwise left to right.  The working value is always ``alpha = d_k`` (the
running leaf, eliminated) and ``beta = d_l`` (the next leaf, kept).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from cospectra.cotree import Cotree, NodeKind, vertex_degrees

__all__ = [
    "Inertia",
    "TraceStep",
    "DiagonalResult",
    "diagonalize",
    "inertia_at",
    "eigenvalue_multiplicity",
    "as_rational",
]

Rational = Union[int, Fraction, str]


def as_rational(x: Rational) -> Fraction:
    """Parse ``p/q`` strings, ints or Fractions into an exact Fraction."""
    if isinstance(x, float):
        raise TypeError("floating-point thresholds are not exact; pass a Fraction or 'p/q'")
    return Fraction(x)


@dataclass(frozen=True)
class Inertia:
    above: int
    equal: int
    below: int

    @property
    def n(self) -> int:
        return self.above + self.equal + self.below

    def __str__(self) -> str:
        return f"{self.above} {self.equal} {self.below}"


@dataclass(frozen=True)
class TraceStep:
    subcase: str
    node: int
    k: str
    l: str
    dk: Fraction
    dl: Fraction

    def __str__(self) -> str:
        return f"subcase={self.subcase} node={self.node} k={self.k} l={self.l} dk={self.dk} dl={self.dl}"


@dataclass(frozen=True)
class DiagonalResult:
    values: tuple
    leaves: tuple
    trace: Optional[tuple] = None

    def signs(self) -> tuple:
        pos = sum(1 for v in self.values if v > 0)
        zero = sum(1 for v in self.values if v == 0)
        return pos, zero, len(self.values) - pos - zero

    def diagonal(self) -> list:
        """Final values indexed by leaf rather than by emission order."""
        out = [None] * len(self.values)
        for j, v in zip(self.leaves, self.values):
            out[j] = v
        return out


def _join_step(a: Fraction, b: Fraction):
    # returns (subcase, dk, dl, keep_l)
    s = a + b
    if s != -2:
        return "1a", s + 2, (a * b - 1) / (s + 2), True
    if b == -1:
        return "1b", Fraction(0), Fraction(-1), True
    return "1c", (1 + b) ** 2, Fraction(-1), False


def _union_step(a: Fraction, b: Fraction):
    s = a + b
    if s != 0:
        return "2a", s, a * b / s, True
    if b == 0:
        return "2b", Fraction(0), Fraction(0), True
    return "2c", -b, b, False


def diagonalize(t: Cotree, x: Rational, *, trace: bool = False, fold: str = "left") -> DiagonalResult:
    """Diagonal matrix congruent to ``L(G) + x I`` for the cograph of ``t``.

    Parameters
    ----------
    t : Cotree
        Canonical cotree.
    x : int, Fraction or str
        Exact scalar shift.
    trace : bool
        Record one :class:`TraceStep` per pair processed.
    fold : {"left", "right"}
        Direction in which sibling leaves are folded.  Any direction yields
        a congruent diagonal; ``"left"`` is the documented default.
    """
    if fold not in ("left", "right"):
        raise ValueError("fold must be 'left' or 'right'")
    x = as_rational(x)
    n = t.n
    d = [Fraction(deg) + x for deg in vertex_degrees(t)]
    if t.root < 0:
        return DiagonalResult((d[0],), (0,), () if trace else None)

    kinds, children = t.kinds, t.children
    parent = t.node_parent
    depths = t.node_depths()
    order = sorted(range(t.num_interior), key=lambda w: (-depths[w], w))
    pending = [[~c for c in kids if c < 0] for kids in children]
    values: list = []
    leaves: list = []
    steps: Optional[list] = [] if trace else None
    label = t.label

    for w in order:
        items = pending[w]
        if fold == "right":
            items = items[::-1]
        step = _join_step if kinds[w] is NodeKind.JOIN else _union_step
        running = None
        for l in items:
            if running is None:
                running = l
                continue
            k = running
            sub, dk, dl, keep = step(d[k], d[l])
            d[k] = dk
            d[l] = dl
            values.append(dk)
            leaves.append(k)
            if steps is not None:
                steps.append(TraceStep(sub, w, label(k), label(l), dk, dl))
            if keep:
                running = l
            else:
                values.append(dl)
                leaves.append(l)
                running = None
        pending[w] = []
        if running is not None:
            p = parent[w]
            if p >= 0:
                pending[p].append(running)
            else:
                values.append(d[running])
                leaves.append(running)

    assert len(values) == n, "every leaf must be finalized exactly once"
    return DiagonalResult(tuple(values), tuple(leaves), tuple(steps) if steps is not None else None)


def inertia_at(t: Cotree, x: Rational, *, fold: str = "left") -> Inertia:
    """Counts of Laplacian eigenvalues above, equal to and below ``x``."""
    pos, zero, neg = diagonalize(t, -as_rational(x), fold=fold).signs()
    return Inertia(pos, zero, neg)


def eigenvalue_multiplicity(t: Cotree, x: Rational) -> int:
    return inertia_at(t, x).equal
