import numpy as np
import pytest

from croissant.generators import barabasi_albert, erdos_renyi, watts_strogatz
from croissant.rng import SplitMix64

_ACCEPTANCE_LINES = []


@pytest.fixture
def report():
    """Record one pass/fail line for an acceptance criterion."""

    def _report(number, passed, detail):
        line = f"[{'PASS' if passed else 'FAIL'}] criterion {number}: {detail}"
        _ACCEPTANCE_LINES.append(line)
        print(line)
        return passed

    return _report


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE_LINES, key=lambda s: int(s.split("criterion ")[1].split(":")[0])):
            terminalreporter.write_line(line)


def random_model_graph(rng: SplitMix64, n: int):
    """One ER, WS or BA graph on n nodes with parameters drawn across their ranges."""
    model = rng.randbelow(3 if n >= 3 else 1)
    if model == 0:
        return erdos_renyi(n, rng.random(), rng.next_u64())
    if model == 1:
        k = 1 + rng.randbelow((n - 1) // 2)
        return watts_strogatz(n, k, rng.random(), rng.next_u64())
    ell = 1 + rng.randbelow(n - 1)
    return barabasi_albert(n, ell, rng.next_u64())


def mixed_corpus(seed: int, count: int, n_min: int, n_max: int):
    rng = SplitMix64(seed)
    return [random_model_graph(rng, n_min + rng.randbelow(n_max - n_min + 1)) for _ in range(count)]


@pytest.fixture(scope="session")
def corpus_200():
    return mixed_corpus(11, 200, 5, 60)


def closed_form_complexity(g):
    """Complexity from edge count and degrees alone.

    With S = trace(L^2) = sum(d_i^2) + 2m, the two factors are
    |Lambda|^2 = S and |n + Lambda|^2 = n^2 (n-1) - 4nm + S.
    """
    from croissant.graph import degrees, edge_count

    n = g.n
    m = edge_count(g)
    d = degrees(g).astype(float)
    s = float(np.sum(d * d)) + 2 * m
    return float(np.sqrt(s) * np.sqrt(n * n * (n - 1) - 4 * n * m + s))
