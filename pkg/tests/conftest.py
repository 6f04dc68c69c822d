import itertools

import pytest

from cospectra.formats import parse_cotree
from cospectra.oracle import enumerate_cotrees, random_cotree

# Cograph of the worked examples: ((K2c x K2c) u K3c) x K5c, 12 vertices.
EXAMPLE = "J(U(J(U(2*_),U(2*_)),3*_),U(5*_))"
# Seven-vertex cograph ((v1 v2) u (v3 v4)) x ((v5 v6) u v7).
FIG2 = "J(U(J(a,b),J(c,d)),U(J(e,f),g))"

BIASES = (0.1, 0.5, 0.9)

SMALL_COTREES = [t for n in range(1, 7) for t in enumerate_cotrees(n)]


def random_instances(count, max_n, seed=0, min_n=1):
    """Deterministic list of random cotrees cycling through the three join biases."""
    import random

    rng = random.Random(seed)
    out = []
    for i in range(count):
        n = rng.randint(min_n, max_n)
        out.append(random_cotree(n, rng.randrange(2**31), BIASES[i % 3]))
    return out


@pytest.fixture
def example():
    return parse_cotree(EXAMPLE)


@pytest.fixture
def fig2():
    return parse_cotree(FIG2)


def all_graphs(n):
    """Every labeled graph on n vertices as an edge list."""
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield [p for i, p in enumerate(pairs) if mask >> i & 1]


_ACCEPTANCE = {}


def record_acceptance(key, description, passed, detail=""):
    _ACCEPTANCE[key] = (description, passed, detail)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_ACCEPTANCE, key=lambda k: int(k[1:])):
        description, passed, detail = _ACCEPTANCE[key]
        status = "PASS" if passed else "FAIL"
        line = f"{key} {status}  {description}"
        if detail:
            line += f"  [{detail}]"
        terminalreporter.write_line(line)
