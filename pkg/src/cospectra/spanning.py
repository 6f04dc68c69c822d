"""Spanning-tree counts of cographs.

Two independent routes: the closed form over interior nodes of the cotree,
and the product of nonzero Laplacian eigenvalues divided by ``n``.
"""

from __future__ import annotations

from math import prod

from cospectra.cotree import Cotree, NodeKind, interior_degrees
from cospectra.spectrum import SpectrumMultiset

__all__ = ["spanning_factors", "spanning_tree_count", "spanning_count_from_spectrum"]


def spanning_factors(t: Cotree) -> list:
    """``(base, exponent)`` factors of the closed form, root factor last.

    Each non-root interior node contributes its degree raised to
    ``(#children - 1)``; the root contributes ``n ** (#children - 2)``.
    """
    deg = interior_degrees(t)
    out = []
    for w in t.topdown_order():
        if w != t.root:
            out.append((deg[w], len(t.children[w]) - 1))
    out.append((t.n, len(t.children[t.root]) - 2))
    return out


def spanning_tree_count(t: Cotree) -> int:
    if t.root < 0:
        return 1
    if t.kinds[t.root] is NodeKind.UNION:
        return 0
    exponents: dict = {}
    for base, e in spanning_factors(t):
        exponents[base] = exponents.get(base, 0) + e
    return prod(pow(b, e) for b, e in exponents.items())


def spanning_count_from_spectrum(s: SpectrumMultiset) -> int:
    n = s.n
    if s.multiplicity(0) > 1:
        return 0
    total = prod(pow(v, m) for v, m in s.pairs if v != 0)
    q, rem = divmod(total, n)
    if rem:
        raise AssertionError(f"eigenvalue product {total} not divisible by n = {n}")
    return q
