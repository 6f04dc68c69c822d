"""Cograph recognition by recursive component / co-component splitting.

This is the simple ``O(n (n + m))`` decomposition, not a certified linear
time recognizer.  A graph that is neither disconnected nor co-disconnected
on some vertex subset of size >= 2 contains an induced P4, which is
returned as a witness.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from cospectra.cotree import Cotree, NodeKind
from cospectra.graph import Graph

__all__ = ["RecognitionOutcome", "NotACograph", "build_cotree", "is_cograph", "is_induced_p4"]


class NotACograph(ValueError):
    def __init__(self, witness: tuple):
        super().__init__("graph is not a cograph; induced P4: " + " ".join(map(str, witness)))
        self.witness = witness


@dataclass(frozen=True)
class RecognitionOutcome:
    cotree: Optional[Cotree] = None
    witness: Optional[tuple] = None

    @property
    def ok(self) -> bool:
        return self.cotree is not None

    def unwrap(self) -> Cotree:
        if self.cotree is None:
            raise NotACograph(self.witness)
        return self.cotree


def _components(vertices: list, adj) -> list:
    """Connected components of the induced subgraph on ``vertices``."""
    inside = set(vertices)
    seen = set()
    comps = []
    for s in vertices:
        if s in seen:
            continue
        seen.add(s)
        comp = [s]
        for u in comp:
            for v in adj[u]:
                if v in inside and v not in seen:
                    seen.add(v)
                    comp.append(v)
        comps.append(sorted(comp))
    return comps


def _co_components(vertices: list, adj) -> list:
    """Components of the complement of the induced subgraph, without building it."""
    unvisited = set(vertices)
    comps = []
    for s in vertices:
        if s not in unvisited:
            continue
        unvisited.discard(s)
        comp = [s]
        for u in comp:
            nu = adj[u]
            reach = [v for v in unvisited if v not in nu]
            unvisited.difference_update(reach)
            comp.extend(reach)
        comps.append(sorted(comp))
    return comps


def _find_p4(vertices: list, adj) -> tuple:
    # Every induced P4 a-b-c-d has middle edge bc: a sees b only, d sees c only.
    inside = set(vertices)
    for b in vertices:
        for c in adj[b]:
            if c not in inside:
                continue
            left = [a for a in adj[b] if a in inside and a != c and a not in adj[c]]
            if not left:
                continue
            right = [d for d in adj[c] if d in inside and d != b and d not in adj[b]]
            for a in left:
                for d in right:
                    if d not in adj[a]:
                        return (a, b, c, d)
    raise AssertionError("connected and co-connected vertex set without an induced P4")


def is_induced_p4(g: Graph, quad) -> bool:
    a, b, c, d = quad
    if len({a, b, c, d}) != 4:
        return False
    e = g.has_edge
    return e(a, b) and e(b, c) and e(c, d) and not (e(a, c) or e(a, d) or e(b, d))


def build_cotree(g: Graph) -> RecognitionOutcome:
    """Build the canonical cotree of ``g`` or return an induced-P4 witness.

    Leaf ``j`` of the result is vertex ``j`` of ``g``.
    """
    if g.n < 1:
        raise ValueError("graph has no vertices")
    if g.n == 1:
        return RecognitionOutcome(cotree=Cotree.single_leaf())
    adj = g.adjacency
    kinds: list = []
    children: list = []
    # (vertex subset, parent node index or -1)
    work = [(list(range(g.n)), -1)]
    while work:
        vertices, parent = work.pop()
        if len(vertices) == 1:
            children[parent].append(~vertices[0])
            continue
        parts = _components(vertices, adj)
        kind = NodeKind.UNION
        if len(parts) == 1:
            parts = _co_components(vertices, adj)
            kind = NodeKind.JOIN
            if len(parts) == 1:
                return RecognitionOutcome(witness=_find_p4(vertices, adj))
        idx = len(kinds)
        kinds.append(kind)
        children.append([])
        if parent >= 0:
            children[parent].append(idx)
        for part in reversed(parts):
            work.append((part, idx))
    return RecognitionOutcome(cotree=Cotree(kinds, children, [None] * g.n, 0))


def is_cograph(g: Graph) -> bool:
    return build_cotree(g).ok
