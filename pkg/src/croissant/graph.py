"""Simple undirected graphs and the edge-list text format."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

import numpy as np

from croissant.errors import InputError, ParseError


def _pair_count(n: int) -> int:
    return n * (n - 1) // 2


class Graph:
    """Immutable simple undirected graph on nodes ``0..n-1``.

    The adjacency relation is stored packed: one boolean per unordered pair
    ``i < j``, in the row-major order of ``numpy.triu_indices(n, 1)``.
    """

    __slots__ = ("_n", "_bits")

    def __init__(self, n: int, bits):
        n = int(n)
        if n < 1:
            raise InputError(f"graph needs at least one node, got n={n}")
        bits = np.array(bits, dtype=bool).ravel()
        if bits.size != _pair_count(n):
            raise InputError(f"expected {_pair_count(n)} pair flags for n={n}, got {bits.size}")
        bits.setflags(write=False)
        self._n = n
        self._bits = bits

    @classmethod
    def from_adjacency(cls, adj) -> Graph:
        adj = np.asarray(adj)
        if adj.ndim != 2 or adj.shape[0] != adj.shape[1]:
            raise InputError(f"adjacency must be square, got shape {adj.shape}")
        adj = adj.astype(bool)
        if np.any(np.diagonal(adj)):
            raise InputError("adjacency has a self-loop on the diagonal")
        if not np.array_equal(adj, adj.T):
            raise InputError("adjacency is not symmetric")
        n = adj.shape[0]
        return cls(n, adj[np.triu_indices(n, 1)])

    @property
    def n(self) -> int:
        return self._n

    @property
    def bits(self) -> np.ndarray:
        """Read-only packed upper-triangle flags."""
        return self._bits

    def adjacency(self) -> np.ndarray:
        n = self._n
        adj = np.zeros((n, n), dtype=bool)
        iu = np.triu_indices(n, 1)
        adj[iu] = self._bits
        return adj | adj.T

    def has_edge(self, i: int, j: int) -> bool:
        if i == j:
            return False
        i, j = min(i, j), max(i, j)
        # offset of row i in the packed upper triangle
        idx = i * self._n - i * (i + 1) // 2 + (j - i - 1)
        return bool(self._bits[idx])

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(i, j)`` with ``i < j``, lexicographically sorted."""
        iu, ju = np.triu_indices(self._n, 1)
        mask = self._bits
        return list(zip(iu[mask].tolist(), ju[mask].tolist()))

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and np.array_equal(self._bits, other._bits)

    def __hash__(self):
        return hash((self._n, self._bits.tobytes()))

    def __repr__(self):
        return f"Graph(n={self._n}, m={edge_count(self)})"


def new_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from unordered node pairs; duplicate pairs are harmless."""
    if n < 1:
        raise InputError(f"graph needs at least one node, got n={n}")
    adj = np.zeros((n, n), dtype=bool)
    for pair in edges:
        i, j = (int(v) for v in pair)
        if not (0 <= i < n and 0 <= j < n):
            raise InputError(f"edge ({i}, {j}) out of range for n={n}")
        if i == j:
            raise InputError(f"self-loop ({i}, {j}) not allowed in a simple graph")
        adj[i, j] = adj[j, i] = True
    return Graph(n, adj[np.triu_indices(n, 1)])


def null_graph(n: int) -> Graph:
    return Graph(n, np.zeros(_pair_count(n), dtype=bool))


def complete_graph(n: int) -> Graph:
    return Graph(n, np.ones(_pair_count(n), dtype=bool))


def complement(g: Graph) -> Graph:
    return Graph(g.n, ~g.bits)


def edge_count(g: Graph) -> int:
    return int(np.count_nonzero(g.bits))


def degrees(g: Graph) -> np.ndarray:
    return g.adjacency().sum(axis=1).astype(np.int64)


def link_density_exact(g: Graph) -> Fraction:
    if g.n < 2:
        raise InputError("link density is undefined for a graph with one node")
    return Fraction(edge_count(g), _pair_count(g.n))


def link_density(g: Graph) -> float:
    """Fraction of realized edges, ``2m / (n(n-1))``."""
    return float(link_density_exact(g))


# -- edge-list text format ----------------------------------------------------
#
#   # comment
#   n 4
#   0 1
#   0 2


def parse_edge_list(text: str, source: str | None = None) -> Graph:
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if n is None:
            if len(tokens) != 2 or tokens[0] != "n":
                raise ParseError(f"expected header 'n <count>', got {raw.strip()!r}", lineno, source)
            try:
                n = int(tokens[1])
            except ValueError:
                raise ParseError(f"node count is not an integer: {tokens[1]!r}", lineno, source) from None
            if n < 1:
                raise ParseError(f"node count must be positive, got {n}", lineno, source)
            continue
        if len(tokens) != 2:
            raise ParseError(f"expected 'i j', got {raw.strip()!r}", lineno, source)
        try:
            i, j = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise ParseError(f"non-integer node label in {raw.strip()!r}", lineno, source) from None
        if not (0 <= i < n and 0 <= j < n):
            raise ParseError(f"node index out of range for n={n}: {raw.strip()!r}", lineno, source)
        if i == j:
            raise ParseError(f"self-loop {i} {j}", lineno, source)
        edges.append((i, j))
    if n is None:
        raise ParseError("missing header 'n <count>'", None, source)
    return new_graph(n, edges)


def format_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"]
    lines.extend(f"{i} {j}" for i, j in g.edges())
    return "\n".join(lines) + "\n"


def read_edge_list(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh.read(), source=str(path))


def write_edge_list(g: Graph, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(format_edge_list(g))
