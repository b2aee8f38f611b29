"""Replicate ensembles over random-model parameter grids.

Every replicate gets its own seed, derived from the base seed, the model, the
grid index and the replicate index, so records are identical whether grid
points run serially or in a process pool.
"""

from __future__ import annotations

import csv
import io
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from croissant.errors import CroissantError, InputError, with_context
from croissant.generators import ModelParams, generate
from croissant.region import PlanePoint, locate
from croissant.rng import MODEL_TAGS, derive_seed

DESK_N = 100
DESK_REPLICATES = 25
DESK_P_STEP = 0.02
DESK_BETA_STEP = 0.1
DESK_WS_K = (1, 2, 5, 10, 25, 49)

SWEEP_COLUMNS = (
    "model", "n", "p", "k", "beta", "ell", "replicates",
    "rho_mean", "rho_std", "c_mean", "c_std", "c_norm_mean", "c_norm_std",
)


@dataclass(frozen=True)
class Stats:
    rho_mean: float
    rho_std: float
    c_mean: float
    c_std: float
    c_norm_mean: float
    c_norm_std: float
    count: int


def _mean_std(values: np.ndarray) -> tuple[float, float]:
    # shifted by the first value: identical inputs give that value and std 0 exactly
    shift = values[0]
    dev = values - shift
    mean_dev = dev.mean()
    return float(shift + mean_dev), float(np.sqrt(np.mean((dev - mean_dev) ** 2)))


def aggregate(points: Sequence[PlanePoint]) -> Stats:
    """Arithmetic mean and population standard deviation of each coordinate."""
    if len(points) == 0:
        raise InputError("cannot aggregate an empty list of points")
    arr = np.array([(pt.rho, pt.c_raw, pt.c_norm) for pt in points], dtype=np.float64)
    rho = _mean_std(arr[:, 0])
    c = _mean_std(arr[:, 1])
    cn = _mean_std(arr[:, 2])
    return Stats(rho[0], rho[1], c[0], c[1], cn[0], cn[1], len(points))


@dataclass(frozen=True)
class SweepSpec:
    grid: tuple[ModelParams, ...]
    replicates: int
    base_seed: int

    def __post_init__(self):
        if self.replicates < 1:
            raise InputError("replicates must be at least 1")
        if not self.grid:
            raise InputError("sweep grid is empty")
        object.__setattr__(self, "grid", tuple(self.grid))


@dataclass(frozen=True)
class SweepRecord:
    params: ModelParams
    stats: Stats

    @property
    def replicates(self) -> int:
        return self.stats.count

    def __getattr__(self, name):
        # rho_mean, c_std, ... read straight through to the statistics
        if name in Stats.__dataclass_fields__:
            return getattr(self.stats, name)
        raise AttributeError(name)

    def row(self) -> dict:
        p = self.params
        s = self.stats
        return {
            "model": p.model, "n": p.n, "p": p.p, "k": p.k, "beta": p.beta, "ell": p.ell,
            "replicates": s.count,
            "rho_mean": s.rho_mean, "rho_std": s.rho_std,
            "c_mean": s.c_mean, "c_std": s.c_std,
            "c_norm_mean": s.c_norm_mean, "c_norm_std": s.c_norm_std,
        }


def replicate_seed(base_seed: int, params: ModelParams, grid_index: int, replicate: int) -> int:
    return derive_seed(base_seed, MODEL_TAGS[params.model], grid_index, replicate)


def _run_point(args) -> Stats:
    base_seed, index, params, replicates = args
    try:
        points = [
            locate(generate(params, replicate_seed(base_seed, params, index, r)))
            for r in range(replicates)
        ]
    except CroissantError as err:
        raise with_context(err, f"grid point {index} {params.label()}") from err
    return aggregate(points)


def run_sweep(spec: SweepSpec, workers: int = 1) -> list[SweepRecord]:
    """Generate, locate and aggregate every grid point; records follow grid order."""
    jobs = [(spec.base_seed, i, params, spec.replicates) for i, params in enumerate(spec.grid)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            stats = list(pool.map(_run_point, jobs))
    else:
        stats = [_run_point(job) for job in jobs]
    return [SweepRecord(params, s) for params, s in zip(spec.grid, stats)]


# -- grids --------------------------------------------------------------------


def _steps(step: float) -> list[float]:
    if not 0.0 < step <= 1.0:
        raise InputError(f"step {step} must lie in (0, 1]")
    count = round(1.0 / step)
    if count < 1 or not math.isclose(count * step, 1.0, rel_tol=1e-9):
        raise InputError(f"step {step} does not divide [0, 1] evenly")
    return [round(i / count, 12) for i in range(count + 1)]


def er_grid(ns: Iterable[int], p_step: float = DESK_P_STEP) -> list[ModelParams]:
    return [ModelParams("er", n, p=p) for n in ns for p in _steps(p_step)]


def ws_grid(ns: Iterable[int], ks: Optional[Iterable[int]] = None,
            beta_step: float = DESK_BETA_STEP) -> list[ModelParams]:
    """``ks=None`` uses every k from 1 to (n-1)//2; out-of-range ks are dropped."""
    grid = []
    for n in ns:
        kmax = (n - 1) // 2
        chosen = range(1, kmax + 1) if ks is None else sorted(k for k in set(ks) if 1 <= k <= kmax)
        grid += [ModelParams("ws", n, k=k, beta=b) for k in chosen for b in _steps(beta_step)]
    return grid


def default_ell_values(n: int, count: int = 24) -> list[int]:
    """Mixed logarithmic/linear sample of 1..n-1 that includes n//2 and n-1."""
    top = n - 1
    log_part = np.rint(np.geomspace(1, top, count)).astype(int)
    lin_part = np.rint(np.linspace(1, top, count)).astype(int)
    values = set(log_part.tolist()) | set(lin_part.tolist()) | {n // 2, top}
    return sorted(v for v in values if 1 <= v <= top)


def ba_grid(ns: Iterable[int], ells: Optional[Iterable[int]] = None) -> list[ModelParams]:
    """``ells=None`` uses :func:`default_ell_values`; ``ell = n`` has no growth stage and is skipped."""
    grid = []
    for n in ns:
        chosen = default_ell_values(n) if ells is None else sorted(set(ells))
        grid += [ModelParams("ba", n, ell=e) for e in chosen if 1 <= e <= n - 1]
    return grid


# -- CSV ----------------------------------------------------------------------


def format_value(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(value)
    return str(value)


def header_comment(base_seed: int, version: str) -> str:
    return f"# croissant sweep base_seed={base_seed} version={version} std=population\n"


def records_csv(rows: Iterable[dict], columns: Sequence[str], comment: str = "") -> str:
    buf = io.StringIO()
    buf.write(comment)
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([format_value(row[c]) for c in columns])
    return buf.getvalue()


def read_sweep_csv(text: str) -> list[dict]:
    """Parse sweep CSV output back into dicts of strings (comment lines skipped)."""
    lines = [ln for ln in text.splitlines() if not ln.startswith("#")]
    return list(csv.DictReader(lines))
