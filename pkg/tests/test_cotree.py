import pytest
from hypothesis import given, settings, strategies as st

from cospectra.cotree import (
    Cotree,
    CotreeError,
    NodeKind,
    build,
    canonical_signature,
    complement,
    depth,
    expand_to_graph,
    interior_degrees,
    is_canonical,
    leaf_count,
    normalize,
    vertex_degrees,
)
from cospectra.formats import format_cotree, parse_cotree
from cospectra.oracle import random_cotree

from conftest import SMALL_COTREES, random_instances


def test_flip():
    assert NodeKind.UNION.flip() is NodeKind.JOIN
    assert NodeKind.JOIN.flip() is NodeKind.UNION


class TestNormalize:
    def test_unary_union_over_leaf_collapses(self):
        t = normalize(build(("U", ["a"])))
        assert t.root < 0 and t.n == 1 and t.labels == ("a",)

    def test_same_kind_merge(self):
        t = normalize(build(("U", [("U", ["a", "b"]), "c"])))
        assert format_cotree(t) == "U(a,b,c)"

    def test_unary_chain_inside(self):
        t = normalize(build(("J", [("U", [("J", ["a", "b"])]), "c"])))
        assert format_cotree(t) == "J(a,b,c)"

    def test_example_tree_unchanged(self, example):
        assert is_canonical(example)
        assert normalize(example) == example

    @pytest.mark.parametrize("t", SMALL_COTREES, ids=canonical_signature)
    def test_idempotent_on_enumerated(self, t):
        once = normalize(t)
        assert normalize(once) == once
        assert expand_to_graph(once) == expand_to_graph(t)

    def test_graph_preserving_on_noncanonical(self):
        raw = build(("J", [("J", ["a", ("U", ["b"])]), ("U", [("U", ["c", "d"]), "e"])]))
        assert not is_canonical(raw)
        t = normalize(raw)
        assert is_canonical(t)
        assert expand_to_graph(t) == expand_to_graph(raw)
        assert t.labels == raw.labels

    def test_malformed_rejected(self):
        with pytest.raises(CotreeError):
            Cotree([NodeKind.JOIN, NodeKind.UNION], [[1, ~0], [0, ~1]], [None, None], 0)
        with pytest.raises(CotreeError):
            Cotree([NodeKind.JOIN], [[~0]], [None, None], 0)
        with pytest.raises(CotreeError):
            Cotree([NodeKind.JOIN], [[]], [None], 0)


class TestComplement:
    def test_join_pair(self):
        t = parse_cotree("J(a,b)")
        assert format_cotree(complement(t)) == "U(a,b)"

    def test_involution(self, example):
        assert complement(complement(example)) == example

    @pytest.mark.parametrize("t", SMALL_COTREES, ids=canonical_signature)
    def test_graph_complement(self, t):
        assert expand_to_graph(complement(t)) == expand_to_graph(t).complement()


class TestExpand:
    def test_complete(self):
        g = expand_to_graph(parse_cotree("J(5*_)"))
        assert g.n == 5 and g.m == 10

    def test_edgeless(self):
        g = expand_to_graph(parse_cotree("U(4*_)"))
        assert g.n == 4 and g.m == 0

    def test_fig2_graph(self, fig2):
        g = expand_to_graph(fig2)
        expected = {(0, 1), (2, 3), (4, 5)} | {(u, v) for u in range(4) for v in (4, 5, 6)}
        assert g.edges == expected
        # 3 + 4 * 3 edges; the degree sum 30 confirms 15
        assert g.m == 15


class TestDegrees:
    def test_complete(self):
        assert vertex_degrees(parse_cotree("J(5*_)")) == [4] * 5

    def test_fig2(self, fig2):
        assert vertex_degrees(fig2) == [4, 4, 4, 4, 5, 5, 4]

    def test_example_right_union_leaves(self, example):
        deg = vertex_degrees(example)
        assert deg[7:] == [7] * 5

    def test_example_interior(self, example):
        assert interior_degrees(example) == [12, 5, 7, 9, 7, 7]

    def test_union_root(self):
        t = parse_cotree("U(J(a,b),c,J(d,U(e,f)))")
        assert interior_degrees(t)[t.root] == 0

    def test_single_leaf(self):
        t = Cotree.single_leaf()
        assert vertex_degrees(t) == [0]
        assert interior_degrees(t) == []

    @pytest.mark.parametrize("t", SMALL_COTREES, ids=canonical_signature)
    def test_complement_identity_enumerated(self, t):
        d, dbar = interior_degrees(t), interior_degrees(complement(t))
        assert all(a + b == t.n for a, b in zip(d, dbar))

    @pytest.mark.parametrize("seed", range(100))
    def test_vertex_degrees_match_graph(self, seed):
        t = random_cotree(1 + seed % 8, seed, (0.1, 0.5, 0.9)[seed % 3])
        g = expand_to_graph(t)
        assert vertex_degrees(t) == g.degrees()
        assert sum(vertex_degrees(t)) == 2 * g.m

    @pytest.mark.parametrize("t", random_instances(100, 8, seed=7, min_n=2), ids=lambda t: str(t.n))
    def test_complement_identity_random(self, t):
        d, dbar = interior_degrees(t), interior_degrees(complement(t))
        assert all(a + b == t.n for a, b in zip(d, dbar))


def _lca_degree(t, w):
    """Interior degree straight from the definition: leaves whose lca with w is a Join."""
    parent = t.node_parent
    anc = []
    a = w
    while a >= 0:
        anc.append(a)
        a = parent[a]
    total = 0
    for j, p in enumerate(t.leaf_parent):
        chain = set()
        a = p
        while a >= 0:
            chain.add(a)
            a = parent[a]
        lca = next(x for x in anc if x in chain)
        if t.kinds[lca] is NodeKind.JOIN:
            total += 1
    return total


@settings(max_examples=60, deadline=None)
@given(n=st.integers(2, 30), seed=st.integers(0, 10**6), bias=st.sampled_from([0.1, 0.5, 0.9]))
def test_interior_degree_matches_definition(n, seed, bias):
    t = random_cotree(n, seed, bias)
    deg = interior_degrees(t)
    assert deg == [_lca_degree(t, w) for w in range(t.num_interior)]
    if t.root_kind is NodeKind.JOIN:
        assert deg[t.root] == n
    else:
        assert deg[t.root] == 0


class TestCounts:
    def test_single_leaf(self):
        t = Cotree.single_leaf()
        assert leaf_count(t) == 1 and depth(t) == 0

    def test_fig2(self, fig2):
        assert leaf_count(fig2) == 7 and depth(fig2) == 3

    def test_example(self, example):
        assert leaf_count(example) == 12 and depth(example) == 4


def test_canonical_signature_ignores_child_order():
    a = parse_cotree("J(U(a,b),c)")
    b = parse_cotree("J(c,U(b,a))")
    assert canonical_signature(a, with_leaf_ids=False) == canonical_signature(b, with_leaf_ids=False)
    assert canonical_signature(a) != canonical_signature(b)
