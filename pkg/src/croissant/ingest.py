"""Thresholded connectivity matrices.

Connectivity values (for example phase synchrony indices) live in [0, 1].
A matrix becomes a graph by keeping every pair whose value is strictly
greater than the threshold.  Epoch sets are summarized with the same
statistics as a sweep grid point.
"""

from __future__ import annotations

import csv
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from croissant.errors import CroissantError, InputError, ParseError, with_context
from croissant.graph import Graph
from croissant.region import locate
from croissant.sweep import SWEEP_COLUMNS, Stats, aggregate

SYMMETRY_TOL = 1e-9
_SPLIT = re.compile(r"[,\s]+")


@dataclass(frozen=True, eq=False)
class ConnectivityMatrix:
    values: np.ndarray

    def __post_init__(self):
        values = np.array(self.values, dtype=np.float64)
        _validate(values)
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    @property
    def n(self) -> int:
        return self.values.shape[0]

    def to_text(self) -> str:
        return "".join(" ".join(repr(float(v)) for v in row) + "\n" for row in self.values)


def _validate(values: np.ndarray, source: Optional[str] = None) -> None:
    if values.ndim != 2 or values.shape[0] != values.shape[1] or values.shape[0] == 0:
        raise ParseError(f"matrix must be square and non-empty, got shape {values.shape}", source=source)
    n = values.shape[0]
    off = ~np.eye(n, dtype=bool)
    bad = off & ~((values >= 0.0) & (values <= 1.0))
    if bad.any():
        i, j = np.argwhere(bad)[0]
        raise ParseError(f"value {values[i, j]!r} at row {i + 1}, column {j + 1} is outside [0, 1]",
                         source=source)
    asym = off & (np.abs(values - values.T) > SYMMETRY_TOL)
    if asym.any():
        i, j = np.argwhere(asym)[0]
        raise ParseError(
            f"matrix is not symmetric: row {i + 1}, column {j + 1} has {values[i, j]!r} "
            f"but row {j + 1}, column {i + 1} has {values[j, i]!r}",
            source=source,
        )


def parse_matrix(text: str, source: Optional[str] = None) -> ConnectivityMatrix:
    """Parse rows of whitespace- or comma-separated reals; ``#`` starts a comment."""
    rows = []
    linenos = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        row = []
        for col, token in enumerate(t for t in _SPLIT.split(line) if t):
            try:
                row.append(float(token))
            except ValueError:
                raise ParseError(f"non-numeric token {token!r} in column {col + 1}", lineno, source) from None
        if rows and len(row) != len(rows[0]):
            raise ParseError(f"ragged row: expected {len(rows[0])} values, got {len(row)}", lineno, source)
        rows.append(row)
        linenos.append(lineno)
    if not rows:
        raise ParseError("empty matrix", None, source)
    if len(rows) != len(rows[0]):
        raise ParseError(f"matrix has {len(rows)} rows but {len(rows[0])} columns", None, source)
    values = np.array(rows, dtype=np.float64)
    _validate(values, source)
    return ConnectivityMatrix(values)


def read_matrix(path) -> ConnectivityMatrix:
    with open(path, encoding="utf-8") as fh:
        return parse_matrix(fh.read(), source=str(path))


def _check_threshold(threshold: float) -> None:
    if not 0.0 <= threshold <= 1.0:
        raise InputError(f"threshold {threshold} outside [0, 1]")


def binarize(c: ConnectivityMatrix, threshold: float) -> Graph:
    """Edge ``{i, j}`` iff ``value(i, j) > threshold``; the diagonal is ignored."""
    _check_threshold(threshold)
    n = c.n
    iu = np.triu_indices(n, 1)
    return Graph(n, c.values[iu] > threshold)


@dataclass(frozen=True)
class EpochSet:
    matrices: tuple[ConnectivityMatrix, ...]
    label: str
    thresholds: Optional[tuple[Optional[float], ...]] = None

    def __post_init__(self):
        object.__setattr__(self, "matrices", tuple(self.matrices))
        if not self.matrices:
            raise InputError(f"epoch set {self.label!r} is empty")
        sizes = {m.n for m in self.matrices}
        if len(sizes) != 1:
            raise InputError(f"epoch set {self.label!r} mixes matrix sizes {sorted(sizes)}")
        if self.thresholds is not None:
            object.__setattr__(self, "thresholds", tuple(self.thresholds))
            if len(self.thresholds) != len(self.matrices):
                raise InputError("one threshold entry per epoch is required")

    @property
    def n(self) -> int:
        return self.matrices[0].n


@dataclass(frozen=True)
class EpochSummary:
    label: str
    n: int
    stats: Stats

    def row(self) -> dict:
        s = self.stats
        return {
            "label": self.label, "model": "epochs", "n": self.n,
            "p": None, "k": None, "beta": None, "ell": None,
            "replicates": s.count,
            "rho_mean": s.rho_mean, "rho_std": s.rho_std,
            "c_mean": s.c_mean, "c_std": s.c_std,
            "c_norm_mean": s.c_norm_mean, "c_norm_std": s.c_norm_std,
        }


INGEST_COLUMNS = ("label",) + SWEEP_COLUMNS


def analyze_epochs(epochs: EpochSet, threshold: Optional[float] = None) -> EpochSummary:
    """Binarize, locate and aggregate every epoch.

    A per-epoch threshold (``epochs.thresholds``) overrides ``threshold``.
    """
    points = []
    for index, matrix in enumerate(epochs.matrices):
        t = threshold
        if epochs.thresholds is not None and epochs.thresholds[index] is not None:
            t = epochs.thresholds[index]
        if t is None:
            raise InputError(f"epoch {index} of {epochs.label!r} has no threshold")
        try:
            points.append(locate(binarize(matrix, t)))
        except CroissantError as err:
            raise with_context(err, f"epoch {index} of {epochs.label!r}") from err
    return EpochSummary(epochs.label, epochs.n, aggregate(points))


# -- manifest -----------------------------------------------------------------
#
# CSV records "path,label[,threshold]"; '#' lines are comments.  Paths are
# relative to the manifest's directory.  Records sharing a label form one
# epoch set, in order of first appearance.


@dataclass(frozen=True)
class ManifestEntry:
    path: Path
    label: str
    threshold: Optional[float]


def parse_manifest(text: str, base_dir=".", source: Optional[str] = None) -> list[ManifestEntry]:
    entries = []
    lines = text.splitlines()
    for lineno, fields in enumerate(csv.reader(lines), start=1):
        if not fields or not "".join(fields).strip() or fields[0].lstrip().startswith("#"):
            continue
        fields = [f.strip() for f in fields]
        if len(fields) not in (2, 3) or not fields[0] or not fields[1]:
            raise ParseError("expected 'path,label[,threshold]'", lineno, source)
        threshold = None
        if len(fields) == 3 and fields[2]:
            try:
                threshold = float(fields[2])
            except ValueError:
                raise ParseError(f"threshold {fields[2]!r} is not a number", lineno, source) from None
            if not 0.0 <= threshold <= 1.0:
                raise ParseError(f"threshold {threshold} outside [0, 1]", lineno, source)
        entries.append(ManifestEntry(Path(base_dir) / fields[0], fields[1], threshold))
    if not entries:
        raise ParseError("manifest lists no epochs", None, source)
    return entries


def load_epoch_sets(entries: Sequence[ManifestEntry]) -> list[EpochSet]:
    grouped: dict[str, list[ManifestEntry]] = {}
    for entry in entries:
        grouped.setdefault(entry.label, []).append(entry)
    sets = []
    for label, group in grouped.items():
        matrices = [read_matrix(e.path) for e in group]
        thresholds = tuple(e.threshold for e in group)
        if all(t is None for t in thresholds):
            thresholds = None
        sets.append(EpochSet(tuple(matrices), label, thresholds))
    return sets
