"""Cotree representation and the structural operations on it.

A cotree is stored as an arena: interior nodes are indexed ``0..r-1`` and
leaves ``0..n-1``.  Child lists mix both kinds of reference; a leaf ``j`` is
stored as the negative integer ``~j`` so that ``ref < 0`` tests for a leaf.
This keeps the hot loops in :mod:`cospectra.spectrum` on plain lists of ints.
"""

from __future__ import annotations

import enum
from typing import Iterable, Optional, Sequence

from cospectra.graph import Graph

__all__ = [
    "NodeKind",
    "Cotree",
    "CotreeError",
    "leaf_ref",
    "is_leaf",
    "leaf_index",
    "normalize",
    "complement",
    "expand_to_graph",
    "vertex_degrees",
    "interior_degrees",
    "leaf_count",
    "depth",
    "is_canonical",
    "canonical_signature",
]


class CotreeError(ValueError):
    """Raised for structurally malformed cotrees (cycles, orphans, empty nodes)."""


class NodeKind(enum.Enum):
    UNION = "U"
    JOIN = "J"

    def flip(self) -> "NodeKind":
        return NodeKind.JOIN if self is NodeKind.UNION else NodeKind.UNION


def leaf_ref(j: int) -> int:
    return ~j


def is_leaf(ref: int) -> bool:
    return ref < 0


def leaf_index(ref: int) -> int:
    return ~ref


class Cotree:
    """Immutable rooted tree of Union/Join nodes over ``n`` leaves.

    Parameters
    ----------
    kinds : sequence of NodeKind
        Kind of each interior node.
    children : sequence of sequences of int
        Ordered child references of each interior node (``~j`` for leaf ``j``).
    labels : sequence of str or None
        One entry per leaf; ``None`` marks an unlabeled leaf.
    root : int
        Reference to the root: an interior node index, or ``~0`` when the
        tree is a single leaf.
    """

    __slots__ = ("kinds", "children", "labels", "root", "_order", "_node_parent", "_leaf_parent")

    def __init__(
        self,
        kinds: Sequence[NodeKind],
        children: Sequence[Sequence[int]],
        labels: Sequence[Optional[str]],
        root: int,
        *,
        validate: bool = True,
    ):
        self.kinds = tuple(kinds)
        self.children = tuple(tuple(c) for c in children)
        self.labels = tuple(labels)
        self.root = root
        self._order = None
        self._node_parent = None
        self._leaf_parent = None
        if len(self.kinds) != len(self.children):
            raise CotreeError("kinds and children must have the same length")
        if validate:
            self._validate()

    def _validate(self) -> None:
        n, r = len(self.labels), len(self.kinds)
        if n < 1:
            raise CotreeError("a cotree needs at least one leaf")
        root = self.root
        if root < 0:
            if r != 0 or n != 1 or root != ~0:
                raise CotreeError("a bare-leaf root is only valid for n = 1 with no interior nodes")
            return
        if root >= r:
            raise CotreeError(f"root {root} is not an interior node")
        node_parent = [-1] * r
        leaf_parent = [-1] * n
        seen = [False] * r
        seen[root] = True
        order = [root]
        for w in order:
            kids = self.children[w]
            if not kids:
                raise CotreeError(f"interior node {w} has no children")
            for c in kids:
                if c < 0:
                    j = ~c
                    if j >= n:
                        raise CotreeError(f"leaf reference {j} out of range")
                    if leaf_parent[j] != -1:
                        raise CotreeError(f"leaf {j} has more than one parent")
                    leaf_parent[j] = w
                else:
                    if c >= r:
                        raise CotreeError(f"node reference {c} out of range")
                    if seen[c]:
                        raise CotreeError(f"node {c} reached twice (cycle or shared child)")
                    seen[c] = True
                    node_parent[c] = w
                    order.append(c)
        if len(order) != r:
            raise CotreeError(f"{r - len(order)} interior node(s) unreachable from root")
        missing = [j for j, p in enumerate(leaf_parent) if p == -1]
        if missing:
            raise CotreeError(f"leaves {missing[:5]} unreachable from root")
        self._order = order
        self._node_parent = node_parent
        self._leaf_parent = leaf_parent

    # -- basic accessors -------------------------------------------------

    @classmethod
    def single_leaf(cls, label: Optional[str] = None) -> "Cotree":
        return cls((), (), (label,), ~0)

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def num_interior(self) -> int:
        return len(self.kinds)

    @property
    def root_kind(self) -> Optional[NodeKind]:
        return None if self.root < 0 else self.kinds[self.root]

    def label(self, j: int) -> str:
        name = self.labels[j]
        return name if name is not None else f"v{j + 1}"

    def topdown_order(self) -> list:
        """Interior nodes in breadth-first order from the root (parents first)."""
        if self._order is None:
            if self.root < 0:
                self._order = []
            else:
                order = [self.root]
                children = self.children
                for w in order:
                    order.extend(c for c in children[w] if c >= 0)
                self._order = order
        return self._order

    @property
    def node_parent(self) -> list:
        if self._node_parent is None:
            parent = [-1] * self.num_interior
            for w in self.topdown_order():
                for c in self.children[w]:
                    if c >= 0:
                        parent[c] = w
            self._node_parent = parent
        return self._node_parent

    @property
    def leaf_parent(self) -> list:
        if self._leaf_parent is None:
            parent = [-1] * self.n
            for w in self.topdown_order():
                for c in self.children[w]:
                    if c < 0:
                        parent[~c] = w
            self._leaf_parent = parent
        return self._leaf_parent

    def node_depths(self) -> list:
        """Depth (edges from the root) of every interior node."""
        d = [0] * self.num_interior
        for w in self.topdown_order():
            for c in self.children[w]:
                if c >= 0:
                    d[c] = d[w] + 1
        return d

    def leaves_under(self, ref: int) -> list:
        """Leaf indices of the subtree at ``ref``, in left-to-right order."""
        out = []
        stack = [ref]
        while stack:
            c = stack.pop()
            if c < 0:
                out.append(~c)
            else:
                stack.extend(reversed(self.children[c]))
        return out

    def __eq__(self, other):
        if not isinstance(other, Cotree):
            return NotImplemented
        return (
            self.root == other.root
            and self.kinds == other.kinds
            and self.children == other.children
            and self.labels == other.labels
        )

    def __hash__(self):
        return hash((self.root, self.kinds, self.children, self.labels))

    def __repr__(self):
        from cospectra.formats import format_cotree

        text = format_cotree(self)
        if len(text) > 80:
            text = text[:77] + "..."
        return f"Cotree({text!r})"


# -- structural operations ----------------------------------------------


def normalize(t: Cotree) -> Cotree:
    """Return the canonical form of ``t``.

    Unary nodes are collapsed and children of the same kind as their parent
    are spliced into it, preserving left-to-right order.  Leaf indices and
    labels are unchanged; interior nodes are renumbered breadth-first.
    """
    if t.root < 0:
        return t
    kinds, children = t.kinds, t.children

    def resolve(ref: int) -> int:
        while ref >= 0 and len(children[ref]) == 1:
            ref = children[ref][0]
        return ref

    new_kinds: list = []
    new_children: list = []
    root = resolve(t.root)
    if root < 0:
        return Cotree((), (), t.labels, root)
    queue = [root]
    new_kinds.append(kinds[root])
    new_children.append(None)
    head = 0
    while head < len(queue):
        w = queue[head]
        kind = kinds[w]
        flat = []
        stack = list(reversed(children[w]))
        while stack:
            c = resolve(stack.pop())
            if c >= 0 and kinds[c] is kind:
                stack.extend(reversed(children[c]))
            elif c >= 0:
                new_kinds.append(kinds[c])
                new_children.append(None)
                queue.append(c)
                flat.append(len(queue) - 1)
            else:
                flat.append(c)
        new_children[head] = flat
        head += 1
    return Cotree(new_kinds, new_children, t.labels, 0)


def complement(t: Cotree) -> Cotree:
    """Cotree of the complement graph: every interior kind flipped."""
    return Cotree([k.flip() for k in t.kinds], t.children, t.labels, t.root, validate=False)


def is_canonical(t: Cotree) -> bool:
    """True when every interior node has >= 2 children and none of its own kind."""
    kinds = t.kinds
    for w, kids in enumerate(t.children):
        if len(kids) < 2:
            return False
        for c in kids:
            if c >= 0 and kinds[c] is kinds[w]:
                return False
    return True


def leaf_count(t: Cotree) -> int:
    return t.n


def depth(t: Cotree) -> int:
    """Number of edges on the longest root-to-leaf path."""
    if t.root < 0:
        return 0
    d = t.node_depths()
    return max(d[w] + 1 for w in range(t.num_interior) if any(c < 0 for c in t.children[w]))


def expand_to_graph(t: Cotree) -> Graph:
    """Explicit graph: leaves ``u, v`` are adjacent iff their lca is a Join node."""
    edges = []
    if t.root >= 0:
        for w in t.topdown_order():
            if t.kinds[w] is not NodeKind.JOIN:
                continue
            groups = [t.leaves_under(c) for c in t.children[w]]
            for a in range(len(groups)):
                for b in range(a + 1, len(groups)):
                    for u in groups[a]:
                        for v in groups[b]:
                            edges.append((u, v))
    return Graph.from_edges(t.n, edges)


def _subtree_sizes(t: Cotree) -> list:
    children = t.children
    size = [0] * t.num_interior
    for w in reversed(t.topdown_order()):
        s = 0
        for c in children[w]:
            s += 1 if c < 0 else size[c]
        size[w] = s
    return size


def interior_degrees(t: Cotree) -> list:
    """Degree of every interior node, indexed by node id.

    The degree of ``w`` counts the leaves whose lca with ``w`` is a Join.
    One descent carries an accumulator of leaves joined to the whole
    subtree; a Join node adds its own subtree and hands each child the
    leaves of its siblings.
    """
    r = t.num_interior
    if r == 0:
        return []
    kinds, children = t.kinds, t.children
    size = _subtree_sizes(t)
    acc = [0] * r
    deg = [0] * r
    join = NodeKind.JOIN
    for w in t.topdown_order():
        a = acc[w]
        if kinds[w] is join:
            total = size[w]
            deg[w] = a + total
            base = a + total
            for c in children[w]:
                if c >= 0:
                    acc[c] = base - size[c]
        else:
            deg[w] = a
            for c in children[w]:
                if c >= 0:
                    acc[c] = a
    return deg


def vertex_degrees(t: Cotree, node_degrees: Optional[Sequence[int]] = None) -> list:
    """Degree of every vertex (leaf), read off the parent's interior degree."""
    if t.root < 0:
        return [0]
    if node_degrees is None:
        node_degrees = interior_degrees(t)
    out = [0] * t.n
    join = NodeKind.JOIN
    for w in t.topdown_order():
        d = node_degrees[w] - 1 if t.kinds[w] is join else node_degrees[w]
        for c in t.children[w]:
            if c < 0:
                out[~c] = d
    return out


def canonical_signature(t: Cotree, *, with_leaf_ids: bool = True) -> str:
    """Order-independent serialization used to compare cotrees.

    Children are sorted by their own signatures.  With ``with_leaf_ids``
    leaves appear as their integer index; otherwise every leaf is ``_`` and
    the signature identifies the unlabeled shape only.
    """
    if t.root < 0:
        return "0" if with_leaf_ids else "_"
    sig = [""] * t.num_interior
    kinds, children = t.kinds, t.children
    for w in reversed(t.topdown_order()):
        parts = []
        for c in children[w]:
            if c < 0:
                parts.append(str(~c) if with_leaf_ids else "_")
            else:
                parts.append(sig[c])
        parts.sort()
        sig[w] = f"{kinds[w].value}({','.join(parts)})"
    return sig[t.root]


def build(spec, labels: Optional[Iterable[Optional[str]]] = None) -> Cotree:
    """Build a cotree from nested ``(kind, [children...])`` tuples.

    Leaves are given as ``None`` or a label string and are numbered in
    left-to-right order.  Intended for tests and small hand-written trees.
    """
    kinds: list = []
    children: list = []
    leaf_labels: list = []

    def walk(item) -> int:
        if item is None or isinstance(item, str):
            leaf_labels.append(item)
            return ~(len(leaf_labels) - 1)
        kind, kids = item
        if isinstance(kind, str):
            kind = NodeKind(kind)
        idx = len(kinds)
        kinds.append(kind)
        children.append([])
        children[idx] = [walk(k) for k in kids]
        return idx

    root = walk(spec)
    return Cotree(kinds, children, leaf_labels, root)
