import random
from collections import Counter
from fractions import Fraction

import pytest

from cospectra.cotree import Cotree, NodeKind, canonical_signature, expand_to_graph, interior_degrees, vertex_degrees
from cospectra.diagonalization import (
    Inertia,
    _join_step,
    _union_step,
    as_rational,
    diagonalize,
    eigenvalue_multiplicity,
    inertia_at,
)
from cospectra.formats import parse_cotree
from cospectra.oracle import dense_laplacian, eig_symmetric, exact_inertia, random_cotree, shifted_laplacian_inertia

from conftest import SMALL_COTREES, random_instances

F = Fraction

# Final diagonal of the worked example at x = -7 under the documented order
# (deepest node first, lowest index on ties, left-to-right fold).
GOLDEN_VALUES = ["0", "0", "2", "-4", "-3", "-7/6", "0", "0", "0", "0", "12/7", "-7/12"]
GOLDEN_TRACE = [
    "subcase=2b node=4 k=v1 l=v2 dk=0 dl=0",
    "subcase=2b node=5 k=v3 l=v4 dk=0 dl=0",
    "subcase=1a node=3 k=v2 l=v4 dk=2 dl=-1/2",
    "subcase=2a node=1 k=v5 l=v6 dk=-4 dl=-1",
    "subcase=2a node=1 k=v6 l=v7 dk=-3 dl=-2/3",
    "subcase=2a node=1 k=v7 l=v4 dk=-7/6 dl=-2/7",
    "subcase=2b node=2 k=v8 l=v9 dk=0 dl=0",
    "subcase=2b node=2 k=v9 l=v10 dk=0 dl=0",
    "subcase=2b node=2 k=v10 l=v11 dk=0 dl=0",
    "subcase=2b node=2 k=v11 l=v12 dk=0 dl=0",
    "subcase=1a node=0 k=v4 l=v12 dk=12/7 dl=-7/12",
]
# Diagonal as printed for the worked example.
PRINTED_DIAGONAL = [F(0), F(0), F(2), F(-4), F(-3), F(-7, 6), F(0), F(0), F(0), F(0), F(-7, 12), F(12, 7)]


def signs(values):
    return sum(v > 0 for v in values), sum(v == 0 for v in values), sum(v < 0 for v in values)


class TestExample:
    def test_sign_counts_match_worked_example(self, example):
        result = diagonalize(example, -7)
        assert result.signs() == (2, 6, 4)
        assert signs(PRINTED_DIAGONAL) == (2, 6, 4)

    def test_multiset_matches_worked_example(self, example):
        result = diagonalize(example, -7)
        assert Counter(result.values) == Counter(PRINTED_DIAGONAL)

    def test_golden_trace(self, example):
        result = diagonalize(example, -7, trace=True)
        assert [str(v) for v in result.values] == GOLDEN_VALUES
        assert [str(s) for s in result.trace] == GOLDEN_TRACE

    def test_inertia_and_multiplicity(self, example):
        assert inertia_at(example, 7) == Inertia(2, 6, 4)
        assert eigenvalue_multiplicity(example, 7) == 6

    def test_diagonal_by_leaf(self, example):
        result = diagonalize(example, -7)
        by_leaf = result.diagonal()
        assert sorted(by_leaf) == sorted(result.values)
        assert None not in by_leaf


def test_single_leaf():
    t = Cotree.single_leaf()
    assert diagonalize(t, F(3, 4)).values == (F(3, 4),)
    assert inertia_at(t, 0) == Inertia(0, 1, 0)


def test_k2_at_zero():
    t = parse_cotree("J(a,b)")
    result = diagonalize(t, 0)
    assert sorted(result.values) == [0, 4]
    # L(K2) has eigenvalues {0, 2}
    assert [round(v, 9) for v in eig_symmetric(dense_laplacian(expand_to_graph(t)))] == [0, 2]
    assert inertia_at(t, 0) == Inertia(1, 1, 0)


def test_rational_parsing():
    assert as_rational("-3/6") == F(-1, 2)
    assert as_rational(4) == 4
    with pytest.raises(TypeError):
        as_rational(0.5)


@pytest.mark.parametrize("t", random_instances(30, 20, seed=1), ids=lambda t: str(t.n))
def test_below_zero_threshold(t):
    assert inertia_at(t, -1) == Inertia(t.n, 0, 0)


@pytest.mark.parametrize("n", [1, 2, 5, 9])
def test_complete_graph_multiplicity(n):
    t = parse_cotree(f"J({n}*_)") if n > 1 else Cotree.single_leaf()
    if n > 1:
        assert eigenvalue_multiplicity(t, n) == n - 1


# -- pair eliminations as congruences -------------------------------------


def pair_matrix(alpha, beta, adjacent, common, rest):
    """Symmetric matrix whose first two rows are (co)duplicates over ``rest``."""
    m = len(rest)
    size = m + 2
    M = [[F(0)] * size for _ in range(size)]
    M[0][0], M[1][1] = alpha, beta
    if adjacent:
        M[0][1] = M[1][0] = F(-1)
    for i in range(m):
        for k in (0, 1):
            M[k][i + 2] = M[i + 2][k] = F(-1) if common[i] else F(0)
        for j in range(m):
            M[i + 2][j + 2] = rest[i][j]
    return M


def random_rest(rng, m):
    rest = [[F(0)] * m for _ in range(m)]
    for i in range(m):
        for j in range(i, m):
            v = F(rng.randint(-3, 3), rng.randint(1, 3))
            rest[i][j] = rest[j][i] = v
    return rest


@pytest.mark.parametrize(
    "alpha, beta, join",
    [
        (F(1), F(2), True),  # 1a
        (F(-1), F(-1), True),  # 1b
        (F(-3), F(1), True),  # 1c
        (F(-1, 2), F(-3, 2), True),  # 1c
        (F(2), F(3), False),  # 2a
        (F(0), F(0), False),  # 2b
        (F(3), F(-3), False),  # 2c
        (F(-1, 3), F(1, 3), False),  # 2c
    ],
)
def test_pair_step_is_congruence(alpha, beta, join):
    rng = random.Random(hash((alpha, beta, join)) & 0xFFFF)
    step = _join_step if join else _union_step
    for trial in range(25):
        m = rng.randint(0, 4)
        common = [rng.random() < 0.5 for _ in range(m)]
        rest = random_rest(rng, m)
        M = pair_matrix(alpha, beta, join, common, rest)
        sub, dk, dl, keep = step(alpha, beta)
        if keep:
            # row/column of k eliminated; l keeps its neighbours with new diagonal dl
            R = [row[1:] for row in M[1:]]
            R[0][0] = dl
            got = tuple(a + b for a, b in zip(signs([dk]), exact_inertia(R)))
        else:
            got = tuple(a + b for a, b in zip(signs([dk, dl]), exact_inertia(rest)))
        assert got == exact_inertia(M), (sub, trial)
    expected = {
        (True, True): ("1a", "1b"),
        (True, False): ("1c",),
        (False, True): ("2a", "2b"),
        (False, False): ("2c",),
    }
    assert sub in expected[(join, keep)]


# -- oracle comparisons ----------------------------------------------------


@pytest.mark.parametrize("t", random_instances(100, 32, seed=11, min_n=1), ids=lambda t: str(t.n))
def test_inertia_matches_dense_eigensolver(t):
    eig = eig_symmetric(dense_laplacian(expand_to_graph(t)))
    for x in range(t.n + 1):
        above = sum(v > x + 1e-6 for v in eig)
        equal = sum(abs(v - x) <= 1e-6 for v in eig)
        assert inertia_at(t, x) == Inertia(above, equal, t.n - above - equal)


@pytest.mark.parametrize("t", random_instances(60, 10, seed=5, min_n=1), ids=lambda t: str(t.n))
def test_congruence_exact_ldl(t):
    rng = random.Random(t.n * 7919 + t.num_interior)
    g = expand_to_graph(t)
    for _ in range(20):
        x = F(rng.randint(-4 * t.n - 4, 8), rng.randint(1, 6))
        assert diagonalize(t, x).signs() == shifted_laplacian_inertia(g, x)


@pytest.mark.parametrize("t", random_instances(100, 24, seed=13, min_n=2), ids=lambda t: str(t.n))
def test_fold_direction_invariance(t):
    for x in range(-1, t.n + 2):
        left = diagonalize(t, -x, fold="left")
        right = diagonalize(t, -x, fold="right")
        assert left.signs() == right.signs()


@pytest.mark.parametrize("t", random_instances(100, 40, seed=17, min_n=2), ids=lambda t: str(t.n))
def test_counts_sum_and_monotone(t):
    prev = None
    for x in range(t.n + 1):
        i = inertia_at(t, x)
        assert i.n == t.n
        if prev is not None:
            assert i.above <= prev
        prev = i.above


# -- sibling and connectivity properties --------------------------------------


def sibling_cases():
    return SMALL_COTREES + random_instances(100, 30, seed=23, min_n=2)


def sibling_leaf_groups(t):
    for w in range(t.num_interior):
        leaves = [~c for c in t.children[w] if c < 0]
        if len(leaves) >= 2:
            yield w, leaves


@pytest.mark.parametrize("t", sibling_cases(), ids=canonical_signature)
def test_sibling_leaves_force_multiplicity(t):
    deg = vertex_degrees(t)
    depths = t.node_depths()
    deepest = max(depths) if depths else 0
    for w, leaves in sibling_leaf_groups(t):
        value = deg[leaves[0]] + (1 if t.kinds[w] is NodeKind.JOIN else 0)
        result = diagonalize(t, -value)
        assert result.signs()[1] >= len(leaves) - 1
        if depths[w] == deepest:
            assert eigenvalue_multiplicity(t, value) >= len(leaves) - 1


@pytest.mark.parametrize("t", [t for t in sibling_cases() if t.root_kind is NodeKind.JOIN], ids=canonical_signature)
def test_connected_single_zero_assigned_last_by_1a(t):
    result = diagonalize(t, 0, trace=True)
    assert result.signs()[1] == 1
    last = result.trace[-1]
    assert last.subcase == "1a" and last.dl == 0
    assert result.values[-1] == 0
    assert all(v != 0 for v in result.values[:-1])


def test_interior_degree_is_join_sibling_eigenvalue(example):
    # for a Join node with sibling leaves, leaf degree + 1 equals the node's degree
    deg = interior_degrees(example)
    vdeg = vertex_degrees(example)
    for w, leaves in sibling_leaf_groups(example):
        if example.kinds[w] is NodeKind.JOIN:
            assert vdeg[leaves[0]] + 1 == deg[w]
        else:
            assert vdeg[leaves[0]] == deg[w]
