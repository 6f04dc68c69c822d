"""Oracle-equivalence checks shared by the ``selftest`` command."""

from __future__ import annotations

import random
import time
from typing import Callable

from cospectra.cotree import Cotree, canonical_signature, expand_to_graph, vertex_degrees
from cospectra.diagonalization import inertia_at
from cospectra.oracle import dense_laplacian, eig_symmetric, enumerate_cotrees, matrix_tree_count, random_cotree
from cospectra.recognition import build_cotree
from cospectra.spanning import spanning_count_from_spectrum, spanning_tree_count
from cospectra.spectrum import laplacian_spectrum

EIG_TOL = 1e-6


def check_cotree(t: Cotree, *, inertia: bool = True) -> list:
    """Compare every fast path on ``t`` against the oracle; returns failure messages."""
    failures = []
    g = expand_to_graph(t)
    spec = laplacian_spectrum(t)
    eig = eig_symmetric(dense_laplacian(g))
    expected = spec.eigenvalues()
    if len(eig) != len(expected) or any(abs(a - b) > EIG_TOL for a, b in zip(eig, expected)):
        failures.append(f"spectrum {spec} != oracle")
    count = spanning_tree_count(t)
    if not count == spanning_count_from_spectrum(spec) == matrix_tree_count(g):
        failures.append("spanning-tree counts disagree")
    if vertex_degrees(t) != g.degrees():
        failures.append("vertex degrees disagree")
    outcome = build_cotree(g)
    if not outcome.ok or canonical_signature(outcome.cotree) != canonical_signature(t):
        failures.append("recognition round trip failed")
    if inertia:
        for x in range(t.n + 1):
            if inertia_at(t, x) != spec.inertia_at(x):
                failures.append(f"inertia mismatch at x = {x}")
                break
    return failures


def run_selftest(
    max_n: int = 6,
    random_count: int = 50,
    max_random_n: int = 40,
    seed: int = 0,
    out: Callable[[str], None] = print,
) -> bool:
    ok = True

    def report(name: str, cases: int, failures: list, elapsed: float) -> None:
        nonlocal ok
        status = "PASS" if not failures else "FAIL"
        ok = ok and not failures
        out(f"{status}\t{name}\t{cases} cases\t{elapsed:.2f}s")
        for msg in failures[:5]:
            out(f"\t{msg}")

    start = time.perf_counter()
    failures = []
    cases = 0
    for n in range(1, max_n + 1):
        for t in enumerate_cotrees(n):
            cases += 1
            failures.extend(f"n={n}: {m}" for m in check_cotree(t))
    report(f"exhaustive n<={max_n}", cases, failures, time.perf_counter() - start)

    start = time.perf_counter()
    rng = random.Random(seed)
    failures = []
    for i in range(random_count):
        n = rng.randint(2, max_random_n)
        bias = (0.1, 0.5, 0.9)[i % 3]
        t = random_cotree(n, rng.randrange(2**31), bias)
        failures.extend(f"random n={n}: {m}" for m in check_cotree(t))
    report(f"random n<={max_random_n}", random_count, failures, time.perf_counter() - start)
    out("selftest " + ("passed" if ok else "FAILED"))
    return ok
