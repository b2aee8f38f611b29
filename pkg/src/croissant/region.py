"""The croissant region in the (link density, complexity) plane.

For a fixed node count the region is bounded above by the multi-star graphs
of density <= 1/2 together with their complements (clique plus isolated
nodes), and below by the circulant ring lattices.  Both boundaries are
polygonal: complexity is interpolated linearly in density between vertices.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from croissant.errors import InputError
from croissant.generators import circulant, multi_star
from croissant.graph import Graph, edge_count, link_density
from croissant.spectral import complexity, spectrum


@dataclass(frozen=True)
class PlanePoint:
    rho: float
    c_raw: float
    c_norm: float


@dataclass(frozen=True)
class BoundaryPolyline:
    kind: str  # "upper" or "lower"
    points: tuple[PlanePoint, ...]

    @property
    def rho(self) -> np.ndarray:
        return np.array([pt.rho for pt in self.points])

    @property
    def c_raw(self) -> np.ndarray:
        return np.array([pt.c_raw for pt in self.points])

    def at(self, rho) -> np.ndarray | float:
        """Raw complexity of the polyline at density ``rho`` (linear interpolation)."""
        return np.interp(rho, self.rho, self.c_raw)


def _require_n(n: int) -> None:
    if n < 3:
        raise InputError(f"the croissant region needs n >= 3, got n={n}")


@lru_cache(maxsize=None)
def _multistar_complexities(n: int) -> tuple[float, ...]:
    return tuple(complexity(spectrum(multi_star(n, k))) for k in range(n))


@lru_cache(maxsize=None)
def _normalization(n: int) -> tuple[float, int]:
    values = _multistar_complexities(n)
    k_best = max(range(1, n), key=lambda k: values[k])
    return values[k_best], k_best


def normalization_constant(n: int) -> float:
    """Largest complexity over the multi-star family on ``n`` nodes."""
    _require_n(n)
    return _normalization(n)[0]


def normalization_argmax(n: int) -> int:
    """Hub count ``k`` at which the multi-star complexity peaks."""
    _require_n(n)
    return _normalization(n)[1]


@lru_cache(maxsize=None)
def upper_boundary(n: int) -> BoundaryPolyline:
    _require_n(n)
    pairs = n * (n - 1) // 2
    norm = normalization_constant(n)
    values = _multistar_complexities(n)
    best: dict[Fraction, float] = {}
    for k in range(n):
        m = edge_count(multi_star(n, k))
        if Fraction(m, pairs) > Fraction(1, 2):
            break
        # the multi-star and its complement (mirrored density, same complexity)
        for rho in (Fraction(m, pairs), Fraction(pairs - m, pairs)):
            best[rho] = max(best.get(rho, 0.0), values[k])
    points = tuple(PlanePoint(float(r), c, c / norm) for r, c in sorted(best.items()))
    return BoundaryPolyline("upper", points)


@lru_cache(maxsize=None)
def lower_boundary(n: int) -> BoundaryPolyline:
    _require_n(n)
    norm = normalization_constant(n)
    points = []
    for k in range(n // 2 + 1):
        g = circulant(n, k)
        c = complexity(spectrum(g))
        points.append(PlanePoint(link_density(g), c, c / norm))
    return BoundaryPolyline("lower", tuple(points))


def locate(g: Graph) -> PlanePoint:
    _require_n(g.n)
    c = complexity(spectrum(g))
    return PlanePoint(link_density(g), c, c / normalization_constant(g.n))


@dataclass(frozen=True)
class Containment:
    """Where a point sits relative to both boundaries at its density."""

    point: PlanePoint
    lower: float
    upper: float
    slack: float

    @property
    def below_lower(self) -> bool:
        return self.point.c_raw < self.lower - self.slack * max(1.0, self.lower)

    @property
    def above_upper(self) -> bool:
        return self.point.c_raw > self.upper + self.slack * max(1.0, self.upper)

    @property
    def inside(self) -> bool:
        return not (self.below_lower or self.above_upper)


def containment(n: int, point: PlanePoint, slack: float = 1e-6) -> Containment:
    """Compare ``point`` with both polylines; ``slack`` is relative to the boundary value."""
    return Containment(
        point,
        float(lower_boundary(n).at(point.rho)),
        float(upper_boundary(n).at(point.rho)),
        slack,
    )


BOUNDARY_COLUMNS = ("kind", "rho", "c_raw", "c_norm")


def boundary_rows(n: int) -> list[dict]:
    rows = []
    for line in (upper_boundary(n), lower_boundary(n)):
        rows.extend(
            {"kind": line.kind, "rho": pt.rho, "c_raw": pt.c_raw, "c_norm": pt.c_norm}
            for pt in line.points
        )
    return rows


def boundary_csv(n: int) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=BOUNDARY_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for row in boundary_rows(n):
        writer.writerow({k: (repr(v) if isinstance(v, float) else v) for k, v in row.items()})
    return buf.getvalue()

