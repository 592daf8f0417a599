"""Full-sequence planner: stitch three-point blocks into a tour.

A candidate partitions the waypoint order into blocks at one of three
offsets. Offset 0 starts the first triple at the first waypoint; offset 1
leaves a lone leading waypoint (its heading is free, so it takes the
bearing toward its successor); offset 2 leads with a straight pair flown
along its own bearing. Interior blocks are consecutive triples, each
solved to near-optimality with both boundary headings free. Depending on
how many waypoints remain after the triples, the tail is empty, a lone
trailing waypoint (bearing from its predecessor), or a trailing straight
pair. Adjacent blocks are joined by exact shortest connections between
the now-fixed boundary headings.

The cheapest of the three candidates is returned. When the waypoint
count is a multiple of three, one of the offsets tiles the sequence with
triples exactly and the classic density argument applies: the winner is
within a factor (1 + pi/3 + eps) of the unconstrained optimum. For other
counts the same construction works and performs comparably in practice,
but that factor is not certified, and the report says so.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .bounds import BoundReport, HeadingGrid, compute_bounds
from .dubins import (
    Configuration,
    DubinsPath,
    Segment,
    _build_path,
    concatenate,
    dubins_shortest,
    norm_angle,
    segment_end,
    turn_center,
)
from .errors import ValidationError
from .instances import Instance
from .three_point import solve_three_point

CANDIDATE_LABELS = ("F1", "F2", "F3")  # offsets 0, 1, 2


@dataclass(frozen=True)
class Partition:
    """Block layout for one offset: which indices form which pieces."""

    offset: int
    triples: tuple[tuple[int, int, int], ...]
    lines: tuple[tuple[int, int], ...]
    free_points: tuple[int, ...]
    blocks: tuple[tuple[int, int], ...]  # (first, last) index per block, in order
    connectors: tuple[tuple[int, int], ...]


def plan_partition(n: int, offset: int) -> Partition:
    if offset not in (0, 1, 2):
        raise ValueError(f"offset must be 0, 1 or 2, got {offset}")
    if n < 3:
        raise ValueError(f"need at least 3 waypoints, got {n}")
    triples: list[tuple[int, int, int]] = []
    lines: list[tuple[int, int]] = []
    free_points: list[int] = []
    blocks: list[tuple[int, int]] = []
    if offset == 1:
        free_points.append(0)
        blocks.append((0, 0))
    elif offset == 2:
        lines.append((0, 1))
        blocks.append((0, 1))
    avail = n - offset
    for t in range(avail // 3):
        s = offset + 3 * t
        triples.append((s, s + 1, s + 2))
        blocks.append((s, s + 2))
    r = avail % 3
    if r == 1:
        free_points.append(n - 1)
        blocks.append((n - 1, n - 1))
    elif r == 2:
        lines.append((n - 2, n - 1))
        blocks.append((n - 2, n - 1))
    connectors = tuple((blocks[i][1], blocks[i + 1][0]) for i in range(len(blocks) - 1))
    return Partition(
        offset=offset,
        triples=tuple(triples),
        lines=tuple(lines),
        free_points=tuple(free_points),
        blocks=tuple(blocks),
        connectors=connectors,
    )


@dataclass(frozen=True)
class LedgerEntry:
    kind: str  # "triple" | "line" | "connector"
    first: int
    last: int
    cost: float


@dataclass(frozen=True)
class CandidateSolution:
    label: str
    path: DubinsPath
    cost: float
    headings: tuple[float, ...]
    ledger: tuple[LedgerEntry, ...]

    @property
    def offset(self) -> int:
        return CANDIDATE_LABELS.index(self.label)


def _bearing(p: tuple[float, float], q: tuple[float, float]) -> float:
    return norm_angle(math.atan2(q[1] - p[1], q[0] - p[0]))


def build_candidate(instance: Instance, offset: int, eps: float = 1e-4) -> CandidateSolution:
    """Assemble the candidate for one offset and price every piece."""
    pts = instance.points
    rho = instance.rho
    part = plan_partition(len(pts), offset)

    headings: dict[int, float] = {}
    triple_paths: dict[int, DubinsPath] = {}  # keyed by first index
    for a, b, c in part.triples:
        sol = solve_three_point(pts[a], pts[b], pts[c], rho, eps)
        headings[a], headings[b], headings[c] = sol.headings
        triple_paths[a] = sol.path
    for a, b in part.lines:
        bearing = _bearing(pts[a], pts[b])
        headings[a] = bearing
        headings[b] = bearing
    for j in part.free_points:
        other = j + 1 if j == 0 else j - 1
        anchor = (pts[j], pts[other]) if j == 0 else (pts[other], pts[j])
        headings[j] = _bearing(*anchor)

    pieces: list[DubinsPath] = []
    ledger: list[LedgerEntry] = []
    prev_last: int | None = None
    for first, last in part.blocks:
        if prev_last is not None:
            start = Configuration(*pts[prev_last], headings[prev_last])
            goal = Configuration(*pts[first], headings[first])
            link = dubins_shortest(start, goal, rho)
            pieces.append(link)
            ledger.append(LedgerEntry("connector", prev_last, first, link.length))
        if last == first + 2:
            piece = triple_paths[first]
            pieces.append(piece)
            ledger.append(LedgerEntry("triple", first, last, piece.length))
        elif last == first + 1:
            bearing = headings[first]
            gap = math.hypot(pts[last][0] - pts[first][0], pts[last][1] - pts[first][1])
            piece = _build_path(
                Configuration(*pts[first], bearing),
                [Segment("S", gap)],
                rho,
                Configuration(*pts[last], bearing),
            )
            pieces.append(piece)
            ledger.append(LedgerEntry("line", first, last, piece.length))
        # single-point blocks contribute no piece of their own
        prev_last = last

    path = concatenate(pieces)
    return CandidateSolution(
        label=CANDIDATE_LABELS[offset],
        path=path,
        cost=path.length,
        headings=tuple(headings[i] for i in range(len(pts))),
        ledger=tuple(ledger),
    )


@dataclass(frozen=True)
class SolutionReport:
    instance: Instance
    chosen: CandidateSolution
    candidates: tuple[CandidateSolution, ...]
    bounds: BoundReport
    guarantee_applies: bool

    @property
    def a_posteriori_ratio(self) -> float:
        """Cost over the best guaranteed lower bound (>= true ratio)."""
        return self.chosen.cost / self.bounds.best_guaranteed

    @property
    def proxy_ratio(self) -> float:
        return self.chosen.cost / max(self.bounds.grid_proxy, self.bounds.best_guaranteed)


def solve_sequence(
    instance: Instance,
    eps: float = 1e-4,
    grid: HeadingGrid | None = None,
) -> SolutionReport:
    """Build all three offset candidates, keep the cheapest, attach bounds."""
    candidates = tuple(build_candidate(instance, offset, eps) for offset in range(3))
    chosen = min(candidates, key=lambda c: (c.cost, c.label))
    bounds = compute_bounds(instance, grid)
    return SolutionReport(
        instance=instance,
        chosen=chosen,
        candidates=candidates,
        bounds=bounds,
        guarantee_applies=instance.n % 3 == 0,
    )


def solution_document(report: SolutionReport) -> dict:
    from .bounds import bounds_document

    def candidate_doc(c: CandidateSolution) -> dict:
        return {
            "cost": c.cost,
            "headings": list(c.headings),
            "pieces": [
                {"kind": e.kind, "first": e.first, "last": e.last, "cost": e.cost}
                for e in c.ledger
            ],
        }

    return {
        "cost": report.chosen.cost,
        "chosen": report.chosen.label,
        "candidates": {c.label: candidate_doc(c) for c in report.candidates},
        "lb": bounds_document(report.bounds),
        "guarantee_applies": report.guarantee_applies,
        "headings": list(report.chosen.headings),
        "segments": [
            {"kind": seg.kind, "extent": seg.extent} for seg in report.chosen.path.segments
        ],
    }


def _segment_tip(cfg: Configuration, seg: Segment, rho: float) -> tuple[float, float]:
    tip = segment_end(cfg, seg, rho)
    return (tip.x, tip.y)


def opt_partition_diagnostic(
    instance: Instance, reference_path: DubinsPath
) -> tuple[float, float, float]:
    """Split a tour's length into the three leg classes (L1, L2, L3).

    Leg j runs from waypoint j to waypoint j+1 (1-based). Legs starting at
    1, 4, 7, ... accumulate into L2; at 2, 5, 8, ... into L3; at 3, 6, 9,
    ... into L1. Any tour visiting the waypoints in order admits this
    split, and min(L1, L2, L3) <= length/3; that pigeonhole step is what
    links the best offset candidate to the unconstrained optimum.

    The reference path must pass within 1e-6*rho of every waypoint, in
    order; otherwise ValidationError.
    """
    tol = 1e-6 * instance.rho
    params: list[float] = []
    # walk forward: each waypoint's hit must come at or after the previous one
    floor = 0.0
    for i, point in enumerate(instance.points):
        hit = _hit_param_after(reference_path, point, tol, floor)
        if hit is None:
            raise ValidationError(f"reference path misses waypoint {i} (tolerance {tol:.3g})")
        params.append(hit)
        floor = hit
    sums = [0.0, 0.0, 0.0]  # L1, L2, L3
    for j in range(1, instance.n):  # leg j joins waypoint j to j+1, 1-based
        cls = {1: 1, 2: 2, 0: 0}[j % 3]
        sums[cls] += params[j] - params[j - 1]
    return (sums[0], sums[1], sums[2])


def _hit_param_after(path: DubinsPath, point: tuple[float, float], tol: float, floor: float) -> float | None:
    """Like _hit_param but only accepts hits at arc-length >= floor - tol."""
    wx, wy = point
    rho = path.rho
    cfg = path.start
    offset = 0.0
    for seg in path.segments:
        length = seg.length(rho)
        if offset + length >= floor - tol:
            hit = None
            if seg.kind == "S":
                dx, dy = math.cos(cfg.heading), math.sin(cfg.heading)
                lo = min(max(floor - offset, 0.0), length)
                t = min(max((wx - cfg.x) * dx + (wy - cfg.y) * dy, lo), length)
                px, py = cfg.x + t * dx, cfg.y + t * dy
                if math.hypot(wx - px, wy - py) <= tol:
                    hit = offset + t
            else:
                side = 1 if seg.kind == "L" else -1
                cx, cy = turn_center(cfg.x, cfg.y, cfg.heading, side, rho)
                radial = math.hypot(wx - cx, wy - cy)
                a0 = math.atan2(cfg.y - cy, cfg.x - cx)
                aw = math.atan2(wy - cy, wx - cx)
                swept = norm_angle(side * (aw - a0))
                if swept <= seg.extent and abs(radial - rho) <= tol and offset + rho * swept >= floor - tol:
                    hit = offset + rho * swept
                else:
                    tip = _segment_tip(cfg, seg, rho)
                    if math.hypot(wx - tip[0], wy - tip[1]) <= tol:
                        hit = offset + length
            if hit is not None:
                return max(hit, floor)
        offset += length
        cfg = segment_end(cfg, seg, rho)
    return None
