"""Lower bounds and grid witnesses for waypoint tours.

Two kinds of reference values:

* euclidean_lb -- the polyline length through the waypoints. Every
  bounded-curvature tour is at least this long, so it is a true bound.
* heading_grid_dp -- dynamic programming over a finite grid of headings
  at each waypoint. With mode="upper" each edge is the exact shortest
  curvature-bounded connection between the gridded headings, so the DP
  value is the cost of a real tour: an upper witness. With
  mode="proxy_lb" each edge is instead minimized over a 4x finer
  sub-grid of heading pairs inside each interval pair; the value drops
  below the witness and usually sits under the optimum, but nothing
  certifies that, so it is reported as a non-guaranteed proxy.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .dubins import TWO_PI, length_matrix
from .instances import Instance

DEFAULT_INTERVALS = 32
PROXY_REFINE = 4  # sub-grid factor per interval in proxy mode


@dataclass(frozen=True)
class HeadingGrid:
    """Evenly spaced candidate headings, one set shared by every waypoint."""

    intervals: int = DEFAULT_INTERVALS

    def __post_init__(self):
        if self.intervals < 2:
            raise ValueError(f"need at least 2 heading intervals, got {self.intervals}")

    def headings(self, refine: int = 1) -> np.ndarray:
        m = self.intervals * refine
        return np.arange(m) * (TWO_PI / m)


@dataclass(frozen=True)
class BoundReport:
    euclidean: float
    grid_proxy: float
    grid_upper: float

    @property
    def guaranteed(self) -> dict[str, bool]:
        return {"euclidean": True, "grid_proxy": False}

    @property
    def best_guaranteed(self) -> float:
        return self.euclidean


def euclidean_lb(instance: Instance) -> float:
    pts = instance.points
    return math.fsum(
        math.hypot(pts[i + 1][0] - pts[i][0], pts[i + 1][1] - pts[i][1])
        for i in range(len(pts) - 1)
    )


def _leg_costs(instance: Instance, grid: HeadingGrid, mode: str) -> list[np.ndarray]:
    """Per-leg (M x M) cost tables indexed by (start interval, end interval)."""
    pts = instance.points
    rho = instance.rho
    if mode == "upper":
        h = grid.headings()
        return [
            length_matrix(ax, ay, h, bx, by, h, rho)
            for (ax, ay), (bx, by) in zip(pts[:-1], pts[1:])
        ]
    if mode == "proxy_lb":
        m = grid.intervals
        r = PROXY_REFINE
        fine = grid.headings(refine=r)  # interval j owns fine[j*r : (j+1)*r]
        tables = []
        for (ax, ay), (bx, by) in zip(pts[:-1], pts[1:]):
            full = length_matrix(ax, ay, fine, bx, by, fine, rho)
            tables.append(full.reshape(m, r, m, r).min(axis=(1, 3)))
        return tables
    raise ValueError(f"unknown mode {mode!r}; expected 'upper' or 'proxy_lb'")


def heading_grid_dp(instance: Instance, grid: HeadingGrid | None = None, mode: str = "upper") -> float:
    """Cheapest heading assignment over the grid, summed along the legs."""
    if grid is None:
        grid = HeadingGrid()
    cost = np.zeros(grid.intervals)
    for table in _leg_costs(instance, grid, mode):
        cost = (cost[:, None] + table).min(axis=0)
    return float(cost.min())


def grid_witness(instance: Instance, grid: HeadingGrid | None = None) -> tuple[float, tuple[float, ...]]:
    """Upper-witness DP value plus the heading it assigns at each waypoint.

    Ties between equally cheap predecessors resolve to the lowest heading
    index, so the witness is deterministic.
    """
    if grid is None:
        grid = HeadingGrid()
    tables = _leg_costs(instance, grid, "upper")
    cost = np.zeros(grid.intervals)
    back: list[np.ndarray] = []
    for table in tables:
        stacked = cost[:, None] + table
        back.append(stacked.argmin(axis=0))  # argmin takes the lowest index on ties
        cost = stacked.min(axis=0)
    h = grid.headings()
    j = int(cost.argmin())
    picks = [j]
    for choice in reversed(back):
        j = int(choice[j])
        picks.append(j)
    picks.reverse()
    return float(cost.min()), tuple(float(h[j]) for j in picks)


def compute_bounds(instance: Instance, grid: HeadingGrid | None = None) -> BoundReport:
    if grid is None:
        grid = HeadingGrid()
    return BoundReport(
        euclidean=euclidean_lb(instance),
        grid_proxy=heading_grid_dp(instance, grid, mode="proxy_lb"),
        grid_upper=heading_grid_dp(instance, grid, mode="upper"),
    )


def bounds_document(report: BoundReport) -> dict:
    return {
        "euclidean": report.euclidean,
        "grid_proxy": report.grid_proxy,
        "grid_upper": report.grid_upper,
        "guaranteed": report.guaranteed,
    }
