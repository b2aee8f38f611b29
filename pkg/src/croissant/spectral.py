"""Laplacian spectra and spectral complexity.

The Laplacian is taken as ``W - D`` (adjacency minus degrees), so every
eigenvalue is non-positive and the spectrum of the complete graph on ``n``
nodes is ``(0, -n, ..., -n)``.  Complexity only involves norms, so it is the
same number under the opposite sign convention.

Two self-contained dense symmetric eigensolvers are provided:

``"ql"``      Householder reduction to tridiagonal form followed by implicit
              QL with Wilkinson shifts.  Default; roughly ten times faster
              than Jacobi at n = 100.
``"jacobi"``  Cyclic Jacobi rotations in round-robin (parallel) ordering.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from croissant.errors import ConvergenceError, InputError, NumericError
from croissant.graph import Graph, degrees

JACOBI_TOL = 1e-12
JACOBI_MAX_SWEEPS = 30
QL_MAX_ITER = 30
_EPS = np.finfo(float).eps


def laplacian(g: Graph) -> np.ndarray:
    adj = g.adjacency().astype(np.float64)
    lap = adj
    lap[np.diag_indices(g.n)] = -degrees(g)
    return lap


def _check_symmetric(a) -> np.ndarray:
    a = np.array(a, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] == 0:
        raise InputError(f"expected a non-empty square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise NumericError("matrix has non-finite entries")
    if not np.array_equal(a, a.T):
        raise InputError("matrix is not exactly symmetric")
    return a


# -- Householder tridiagonalization + implicit QL -----------------------------


def tridiagonalize(a: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Reduce symmetric ``a`` to tridiagonal form by Householder reflections.

    Returns the diagonal ``d`` (length n) and the subdiagonal ``e`` (length n,
    last entry zero).  ``a`` is overwritten.
    """
    n = a.shape[0]
    e = np.zeros(n)
    for k in range(n - 2):
        x = a[k + 1:, k]
        sigma = math.sqrt(float(x @ x))
        if sigma == 0.0:
            continue
        alpha = -math.copysign(sigma, x[0])
        v = x.copy()
        v[0] -= alpha
        v /= math.sqrt(float(v @ v))
        sub = a[k + 1:, k + 1:]
        p = sub @ v
        w = p - float(v @ p) * v
        # H A H with H = I - 2 v v^T, as a symmetric rank-2 update
        sub -= 2.0 * (np.outer(v, w) + np.outer(w, v))
        e[k] = alpha
    if n >= 2:
        e[n - 2] = a[n - 1, n - 2]
    return np.diagonal(a).copy(), e


def tridiagonal_ql(d, e, max_iter: int = QL_MAX_ITER) -> np.ndarray:
    """Eigenvalues of a symmetric tridiagonal matrix by implicit shifted QL."""
    d = [float(v) for v in d]
    e = [float(v) for v in e]
    n = len(d)
    # absolute deflation floor: blocks of (near-)zero diagonal, e.g. from
    # isolated nodes, would otherwise never pass the relative test below
    floor = _EPS * max((abs(x) + abs(y) for x, y in zip(d, e)), default=0.0)
    for l in range(n):
        iterations = 0
        while True:
            m = l
            while m < n - 1:
                if abs(e[m]) <= max(_EPS * (abs(d[m]) + abs(d[m + 1])), floor):
                    break
                m += 1
            if m == l:
                break
            if iterations == max_iter:
                raise ConvergenceError(
                    f"QL iteration did not converge for eigenvalue {l} within {max_iter} iterations"
                )
            iterations += 1
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = math.hypot(g, 1.0)
            g = d[m] - d[l] + e[l] / (g + math.copysign(r, g))
            s = c = 1.0
            p = 0.0
            i = m - 1
            restarted = False
            while i >= l:
                f = s * e[i]
                b = c * e[i]
                r = math.hypot(f, g)
                e[i + 1] = r
                if r == 0.0:
                    # underflow: split the matrix and retry from l
                    d[i + 1] -= p
                    e[m] = 0.0
                    restarted = True
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
                i -= 1
            if restarted:
                continue
            d[l] -= p
            e[l] = g
            e[m] = 0.0
    return np.array(d)


# -- cyclic Jacobi ------------------------------------------------------------


@lru_cache(maxsize=64)
def _round_robin(n: int) -> tuple[tuple[np.ndarray, np.ndarray], ...]:
    """Pairings that visit every (p, q), p < q, once per sweep in n-1 (or n) rounds."""
    m = n + (n % 2)
    players = list(range(m))
    rounds = []
    for _ in range(m - 1):
        p = np.array(players[: m // 2])
        q = np.array(players[::-1][: m // 2])
        keep = (p < n) & (q < n)
        p, q = p[keep], q[keep]
        rounds.append((np.minimum(p, q), np.maximum(p, q)))
        players = [players[0], players[-1]] + players[1:-1]
    return tuple(rounds)


def jacobi_eigenvalues(a: np.ndarray, tol: float = JACOBI_TOL,
                       max_sweeps: int = JACOBI_MAX_SWEEPS) -> np.ndarray:
    """Cyclic Jacobi: rotate until the off-diagonal Frobenius norm is below ``tol * ||a||_F``.

    Within one round the rotated pairs are disjoint, so all of them are
    applied at once with vectorized row and column updates.
    """
    n = a.shape[0]
    fro = float(np.linalg.norm(a))
    off_mask = ~np.eye(n, dtype=bool)
    rounds = _round_robin(n)
    for sweep in range(max_sweeps + 1):
        off = math.sqrt(float(np.sum(a * a, where=off_mask)))
        if off <= tol * fro:
            return np.diagonal(a).copy()
        if sweep == max_sweeps:
            break
        for p, q in rounds:
            apq = a[p, q]
            active = apq != 0.0
            if not active.any():
                continue
            # a denormal a[p, q] can overflow tau; t then rounds to 0 (no rotation)
            with np.errstate(over="ignore"):
                tau = (a[q, q] - a[p, p]) / (2.0 * np.where(active, apq, 1.0))
                t = np.copysign(1.0, tau) / (np.abs(tau) + np.hypot(1.0, tau))
            t[~active] = 0.0
            c = 1.0 / np.sqrt(1.0 + t * t)
            s = t * c
            col_p = a[:, p].copy()
            col_q = a[:, q]
            a[:, p] = c * col_p - s * col_q
            a[:, q] = s * col_p + c * col_q
            row_p = a[p, :].copy()
            row_q = a[q, :]
            a[p, :] = c[:, None] * row_p - s[:, None] * row_q
            a[q, :] = s[:, None] * row_p + c[:, None] * row_q
            a[p, q] = 0.0
            a[q, p] = 0.0
    raise ConvergenceError(
        f"Jacobi did not converge in {max_sweeps} sweeps (off-diagonal norm {off:.3e})"
    )


def eig_symmetric(a, method: str = "ql") -> np.ndarray:
    """All eigenvalues of a real symmetric matrix, sorted non-increasing.

    Raises ``NumericError`` for non-finite input and ``ConvergenceError`` if
    the iteration budget is exhausted.
    """
    a = _check_symmetric(a)
    if method == "ql":
        values = tridiagonal_ql(*tridiagonalize(a))
    elif method == "jacobi":
        values = jacobi_eigenvalues(a)
    else:
        raise InputError(f"unknown eigensolver {method!r}")
    return np.sort(values)[::-1]


# -- spectrum and complexity --------------------------------------------------


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Sorted (non-increasing) Laplacian eigenvalues of a graph on ``n`` nodes."""

    values: np.ndarray

    def __post_init__(self):
        values = np.array(self.values, dtype=np.float64)
        if values.ndim != 1 or values.size < 2:
            raise InputError("a spectrum needs at least two eigenvalues")
        if np.any(np.diff(values) > 0):
            raise InputError("spectrum must be sorted non-increasing")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    @property
    def n(self) -> int:
        return self.values.size

    @property
    def reduced(self) -> np.ndarray:
        """Everything but the leading (zero) eigenvalue."""
        return self.values[1:]

    def __eq__(self, other):
        if not isinstance(other, Spectrum):
            return NotImplemented
        return np.array_equal(self.values, other.values)

    def __repr__(self):
        return f"Spectrum({np.array2string(self.values, precision=6)})"


def spectrum(g: Graph, method: str = "ql") -> Spectrum:
    if g.n < 2:
        raise InputError("spectrum requires at least two nodes")
    return Spectrum(eig_symmetric(laplacian(g), method=method))


def spectral_distance(s1: Spectrum, s2: Spectrum) -> float:
    if s1.n != s2.n:
        raise InputError(f"spectra of different sizes: {s1.n} vs {s2.n}")
    return float(np.linalg.norm(s1.values - s2.values))


def complexity(s: Spectrum) -> float:
    """Distance to the null-graph spectrum times distance to the complete-graph spectrum."""
    lam = s.reduced
    return float(np.linalg.norm(lam) * np.linalg.norm(s.n + lam))


def complement_spectrum(s: Spectrum) -> Spectrum:
    """Spectrum of the complement graph: each non-leading value maps to ``-n - value``."""
    flipped = -s.n - s.reduced[::-1]
    # rounding can push -n - lambda_n a hair above zero
    flipped = np.minimum(flipped, 0.0)
    return Spectrum(np.concatenate(([0.0], flipped)))
