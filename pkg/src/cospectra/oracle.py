"""Brute-force reference implementations used by the tests and ``selftest``.

Nothing here touches the cotree algorithms: the oracle works on explicit
matrices (dense Laplacian, Jacobi eigenvalues, Bareiss determinant, exact
symmetric inertia) and on cotree generators used to drive comparisons.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

import numpy as np

from cospectra.cotree import Cotree, NodeKind, build
from cospectra.graph import Graph

__all__ = [
    "dense_laplacian",
    "eig_symmetric",
    "bareiss_determinant",
    "matrix_tree_count",
    "exact_inertia",
    "shifted_laplacian_inertia",
    "brute_force_p4",
    "enumerate_cotrees",
    "count_cotrees",
    "random_cotree",
]


def dense_laplacian(g: Graph) -> np.ndarray:
    """``L = D - A`` as an ``n x n`` integer array."""
    L = np.zeros((g.n, g.n), dtype=np.int64)
    for u, v in g.edges:
        L[u, v] = L[v, u] = -1
        L[u, u] += 1
        L[v, v] += 1
    return L


def _round_robin(m: int) -> list:
    """Rounds of disjoint index pairs covering every pair of ``0..m-1`` once (m even)."""
    ring = list(range(m))
    rounds = []
    for _ in range(m - 1):
        rounds.append([(ring[i], ring[m - 1 - i]) for i in range(m // 2)])
        ring = [ring[0], ring[-1]] + ring[1:-1]
    return rounds


def eig_symmetric(m, *, tol: float = 1e-15, max_sweeps: int = 60) -> list:
    """Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations.

    The sweep uses round-robin ordering so each round applies ``n/2``
    disjoint rotations at once; this is still the classical two-sided Jacobi
    method, only vectorized over independent pivot pairs.

    Returns the eigenvalues sorted ascending.
    """
    A = np.array(m, dtype=np.float64)
    n = A.shape[0]
    if A.ndim != 2 or A.shape[1] != n:
        raise ValueError("matrix must be square")
    if not np.array_equal(A, A.T):
        raise ValueError("matrix must be symmetric")
    if n <= 1:
        return sorted(A.diagonal().tolist())
    size = n + (n % 2)
    rounds = []
    for pairs in _round_robin(size):
        kept = [(p, q) for p, q in pairs if p < n and q < n]
        P = np.array([min(p, q) for p, q in kept])
        Q = np.array([max(p, q) for p, q in kept])
        rounds.append((P, Q))
    scale = max(np.abs(A).max(), 1.0)
    for _ in range(max_sweeps):
        off = np.sqrt(max(np.sum(A * A) - np.sum(A.diagonal() ** 2), 0.0))
        if off <= tol * scale * n:
            break
        for P, Q in rounds:
            apq = A[P, Q]
            active = np.abs(apq) > 1e-300
            if not active.any():
                continue
            P, Q, apq = P[active], Q[active], apq[active]
            theta = (A[Q, Q] - A[P, P]) / (2.0 * apq)
            t = np.where(theta >= 0, 1.0, -1.0) / (np.abs(theta) + np.hypot(theta, 1.0))
            c = 1.0 / np.sqrt(t * t + 1.0)
            s = t * c
            rp, rq = A[P, :].copy(), A[Q, :].copy()
            A[P, :] = c[:, None] * rp - s[:, None] * rq
            A[Q, :] = s[:, None] * rp + c[:, None] * rq
            cp, cq = A[:, P].copy(), A[:, Q].copy()
            A[:, P] = cp * c - cq * s
            A[:, Q] = cp * s + cq * c
            A[P, Q] = 0.0
            A[Q, P] = 0.0
    return sorted(A.diagonal().tolist())


def bareiss_determinant(m) -> int:
    """Exact determinant of an integer matrix by fraction-free elimination."""
    M = np.array(m, dtype=object)
    n = M.shape[0] if M.ndim == 2 else 0
    if n == 0:
        return 1
    M = np.array([[int(v) for v in row] for row in M], dtype=object)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k, k] == 0:
            swap = next((i for i in range(k + 1, n) if M[i, k] != 0), None)
            if swap is None:
                return 0
            M[[k, swap]] = M[[swap, k]]
            sign = -sign
        pivot = M[k, k]
        sub = M[k + 1 :, k + 1 :]
        M[k + 1 :, k + 1 :] = (sub * pivot - np.outer(M[k + 1 :, k], M[k, k + 1 :])) // prev
        M[k + 1 :, k] = 0
        prev = pivot
    return sign * int(M[n - 1, n - 1])


def matrix_tree_count(g: Graph, drop: int = 0) -> int:
    """Number of spanning trees: the cofactor of ``L`` with row/column ``drop`` removed."""
    if g.n == 1:
        return 1
    L = dense_laplacian(g)
    keep = [i for i in range(g.n) if i != drop]
    return bareiss_determinant(L[np.ix_(keep, keep)].tolist())


def exact_inertia(m: Sequence[Sequence]) -> tuple:
    """``(positive, zero, negative)`` eigenvalue counts of a rational symmetric matrix.

    Symmetric Gaussian elimination with 1x1 pivots where a diagonal entry is
    nonzero and 2x2 ``[[0, a], [a, 0]]`` pivots otherwise; the inertia of the
    Schur complements adds up to the inertia of the input.
    """
    A = {(i, j): Fraction(v) for i, row in enumerate(m) for j, v in enumerate(row)}
    active = list(range(len(m)))
    pos = neg = 0
    while active:
        i = next((i for i in active if A[i, i] != 0), None)
        if i is not None:
            piv = A[i, i]
            if piv > 0:
                pos += 1
            else:
                neg += 1
            active.remove(i)
            for r in active:
                f = A[r, i] / piv
                if f:
                    for s in active:
                        A[r, s] -= f * A[i, s]
            continue
        pair = next(((i, j) for i in active for j in active if i < j and A[i, j] != 0), None)
        if pair is None:
            break
        i, j = pair
        a = A[i, j]
        pos += 1
        neg += 1
        active.remove(i)
        active.remove(j)
        for r in active:
            for s in active:
                A[r, s] -= (A[r, i] * A[j, s] + A[r, j] * A[i, s]) / a
    zero = len(m) - pos - neg
    return pos, zero, neg


def shifted_laplacian_inertia(g: Graph, x) -> tuple:
    """Exact inertia of ``L(G) + x I``."""
    x = Fraction(x)
    L = dense_laplacian(g).tolist()
    M = [[Fraction(v) + (x if i == j else 0) for j, v in enumerate(row)] for i, row in enumerate(L)]
    return exact_inertia(M)


def brute_force_p4(g: Graph):
    """Some induced P4 ``(a, b, c, d)`` of ``g``, or ``None``; ``O(n^4)``."""
    e = g.has_edge
    for quad in itertools.combinations(range(g.n), 4):
        for a, b, c, d in itertools.permutations(quad):
            if a < d and e(a, b) and e(b, c) and e(c, d) and not (e(a, c) or e(a, d) or e(b, d)):
                return (a, b, c, d)
    return None


# -- generators ----------------------------------------------------------


@lru_cache(maxsize=None)
def _shapes(n: int) -> tuple:
    """Unlabeled rooted shapes with ``n`` leaves; a leaf is ``()``."""
    if n == 1:
        return ((),)
    candidates = [(size, shape) for size in range(1, n) for shape in _shapes(size)]
    out = []

    def extend(remaining: int, start: int, acc: list) -> None:
        if remaining == 0:
            out.append(tuple(acc))
            return
        for idx in range(start, len(candidates)):
            size, shape = candidates[idx]
            if size > remaining:
                break
            acc.append(shape)
            extend(remaining - size, idx, acc)
            acc.pop()

    extend(n, 0, [])
    return tuple(out)


def _materialize(shape: tuple, kind: NodeKind):
    if shape == ():
        return None
    return (kind, [_materialize(c, kind.flip()) for c in shape])


def enumerate_cotrees(n: int) -> Iterator[Cotree]:
    """Every canonical cotree on ``n`` unlabeled leaves, each exactly once."""
    if not 1 <= n <= 10:
        raise ValueError("enumeration supports 1 <= n <= 10")
    if n == 1:
        yield Cotree.single_leaf()
        return
    for kind in (NodeKind.JOIN, NodeKind.UNION):
        for shape in _shapes(n):
            yield build(_materialize(shape, kind))


def count_cotrees(n: int) -> int:
    return 1 if n == 1 else 2 * len(_shapes(n))


def random_cotree(n: int, seed: int = 0, join_bias: float = 0.5) -> Cotree:
    """Random canonical cotree with exactly ``n`` leaves, deterministic in its arguments.

    Leaves are split recursively into random consecutive blocks.  Most nodes
    get 2..4 blocks; one in four draws its block count from the whole range,
    which produces wide, shallow nodes.  Kinds alternate below a root that is
    a Join with probability ``join_bias``.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if not 0.0 <= join_bias <= 1.0:
        raise ValueError("join_bias must lie in [0, 1]")
    if n == 1:
        return Cotree.single_leaf()
    rng = random.Random(seed)
    randint, rand, sample = rng.randint, rng.random, rng.sample
    kinds = [NodeKind.JOIN if rand() < join_bias else NodeKind.UNION]
    children: list = [[]]
    next_leaf = 0
    stack = [(0, n)]
    while stack:
        w, s = stack.pop()
        k = randint(2, s) if rand() < 0.25 else randint(2, min(s, 4))
        if k == s:
            sizes = [1] * s
        else:
            cuts = sorted(sample(range(1, s), k - 1))
            cuts.append(s)
            sizes = [cuts[0]] + [cuts[i] - cuts[i - 1] for i in range(1, k)]
        kids = children[w]
        child_kind = kinds[w].flip()
        for size in sizes:
            if size == 1:
                kids.append(~next_leaf)
                next_leaf += 1
            else:
                kids.append(len(kinds))
                stack.append((len(kinds), size))
                kinds.append(child_kind)
                children.append([])
    return Cotree(kinds, children, [None] * n, 0)
