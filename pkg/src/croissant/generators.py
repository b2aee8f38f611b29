"""Deterministic boundary families and seeded random graph models.

Boundary families
    multi_star(n, k)   complete split graph: k hubs joined to every node
    circulant(n, k)    ring lattice: nodes joined when circular distance <= k

Random models (all seeded through :class:`croissant.rng.SplitMix64`)
    erdos_renyi(n, p, seed)
    watts_strogatz(n, k, beta, seed)
    barabasi_albert(n, ell, seed)
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from croissant.errors import InputError
from croissant.graph import Graph
from croissant.rng import SplitMix64


def multi_star(n: int, k: int) -> Graph:
    """Fill the first ``k`` rows of the upper triangle with ones.

    ``k = 0`` is the null graph, ``k = 1`` the star, ``k = n - 1`` the complete graph.
    """
    if n < 1:
        raise InputError(f"n must be positive, got {n}")
    if not 0 <= k <= n - 1:
        raise InputError(f"hub count k={k} out of range [0, {n - 1}] for n={n}")
    rows, _ = np.triu_indices(n, 1)
    return Graph(n, rows < k)


def circulant(n: int, k: int) -> Graph:
    if n < 1:
        raise InputError(f"n must be positive, got {n}")
    if not 0 <= k <= n // 2:
        raise InputError(f"ring count k={k} out of range [0, {n // 2}] for n={n}")
    i, j = np.triu_indices(n, 1)
    gap = j - i
    dist = np.minimum(gap, n - gap)
    return Graph(n, dist <= k)


def erdos_renyi(n: int, p: float, seed: int) -> Graph:
    """G(n, p): pairs are visited in row-major upper-triangle order, one uniform draw each."""
    if n < 1:
        raise InputError(f"n must be positive, got {n}")
    if not 0.0 <= p <= 1.0:
        raise InputError(f"linking probability p={p} outside [0, 1]")
    rng = SplitMix64(seed)
    return Graph(n, rng.random_array(n * (n - 1) // 2) < p)


def watts_strogatz(n: int, k: int, beta: float, seed: int) -> Graph:
    """Rewire the right-hand ring edges of ``circulant(n, k)``.

    Nodes are visited in order ``0..n-1``; for node ``i`` and ``d = 1..k`` the
    original edge ``(i, i+d mod n)`` is, with probability ``beta``, replaced by
    an edge from ``i`` to a node drawn uniformly from its current
    non-neighbours.  The edge count stays ``n * k``.
    """
    if n < 3 or not 1 <= k <= (n - 1) // 2:
        raise InputError(f"Watts-Strogatz needs 1 <= k <= (n-1)//2, got n={n}, k={k}")
    if not 0.0 <= beta <= 1.0:
        raise InputError(f"rewiring probability beta={beta} outside [0, 1]")
    adj = circulant(n, k).adjacency()
    rng = SplitMix64(seed)
    for i in range(n):
        for d in range(1, k + 1):
            if rng.random() >= beta:
                continue
            free = np.flatnonzero(~adj[i])
            free = free[free != i]
            if free.size == 0:
                continue
            j = (i + d) % n
            target = int(free[rng.randbelow(free.size)])
            adj[i, j] = adj[j, i] = False
            adj[i, target] = adj[target, i] = True
    return Graph.from_adjacency(adj)


def _weighted_sample(rng: SplitMix64, weights: np.ndarray, count: int) -> list[int]:
    """Draw ``count`` distinct indices, each draw proportional to the (integer) weights left."""
    weights = weights.astype(np.int64).copy()
    picked = []
    for _ in range(count):
        total = int(weights.sum())
        r = rng.randbelow(total)
        idx = int(np.searchsorted(np.cumsum(weights), r, side="right"))
        picked.append(idx)
        weights[idx] = 0
    return picked


def barabasi_albert(n: int, ell: int, seed: int) -> Graph:
    """Preferential attachment growth from ``ell`` isolated nodes.

    Each new node attaches to ``ell`` distinct existing nodes drawn with
    probability proportional to their degree at the start of the stage.
    The first stage, where every degree is zero, draws uniformly.
    """
    if not 1 <= ell <= n - 1:
        raise InputError(f"attachment parameter ell={ell} out of range [1, {n - 1}] for n={n}")
    adj = np.zeros((n, n), dtype=bool)
    deg = np.zeros(n, dtype=np.int64)
    rng = SplitMix64(seed)
    for new in range(ell, n):
        existing = deg[:new]
        if existing.sum() == 0:
            targets = _weighted_sample(rng, np.ones(new, dtype=np.int64), ell)
        else:
            targets = _weighted_sample(rng, existing, ell)
        for t in targets:
            adj[new, t] = adj[t, new] = True
        deg[targets] += 1
        deg[new] = ell
    return Graph.from_adjacency(adj)


MODELS = ("er", "ws", "ba")


@dataclass(frozen=True)
class ModelParams:
    """One point of a random-model parameter grid; unused fields stay ``None``."""

    model: str
    n: int
    p: Optional[float] = None
    k: Optional[int] = None
    beta: Optional[float] = None
    ell: Optional[int] = None

    def __post_init__(self):
        required = {"er": ("p",), "ws": ("k", "beta"), "ba": ("ell",)}
        if self.model not in required:
            raise InputError(f"unknown model {self.model!r}; expected one of {MODELS}")
        for name in ("p", "k", "beta", "ell"):
            value = getattr(self, name)
            if name in required[self.model]:
                if value is None:
                    raise InputError(f"model {self.model} requires {name}")
            elif value is not None:
                raise InputError(f"parameter {name} does not apply to model {self.model}")

    def label(self) -> str:
        fields = [f"n={self.n}"]
        fields += [f"{k}={getattr(self, k)}" for k in ("p", "k", "beta", "ell") if getattr(self, k) is not None]
        return f"{self.model}({', '.join(fields)})"


def generate(params: ModelParams, seed: int) -> Graph:
    if params.model == "er":
        return erdos_renyi(params.n, params.p, seed)
    if params.model == "ws":
        return watts_strogatz(params.n, params.k, params.beta, seed)
    return barabasi_albert(params.n, params.ell, seed)
