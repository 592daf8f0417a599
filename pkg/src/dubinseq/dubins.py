"""Shortest curvature-bounded paths between oriented configurations.

All paths are sequences of minimum-radius arcs (L = counterclockwise,
R = clockwise) and straight segments. The two-point solver enumerates the
six candidate words (LSL, RSR, LSR, RSL, RLR, LRL) built from tangent
geometry between the turning circles; the one-sided solvers leave one
endpoint heading free.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DiscontinuityError, InfeasibleHeading, SeparationViolation

TWO_PI = 2.0 * math.pi

# Relative slack applied to the 2*rho separation precondition so that
# rigidly transformed instances do not trip the check through rounding.
SEPARATION_RTOL = 1e-9

# Arc extents this close to a full turn are treated as zero: they arise
# from sign noise in modular reduction at tangency boundaries, where the
# true extent is 0.
_FULL_TURN_SNAP = 1e-12

LEFT = 1
RIGHT = -1

_KIND_FOR_SIDE = {LEFT: "L", RIGHT: "R"}
_SIDE_FOR_KIND = {"L": LEFT, "R": RIGHT}


def norm_angle(a: float) -> float:
    """Reduce an angle to [0, 2*pi)."""
    r = a % TWO_PI
    if r >= TWO_PI:  # rounding of tiny negatives can land exactly on 2*pi
        return 0.0
    return r


def _arc_extent(a: float) -> float:
    e = norm_angle(a)
    if e > TWO_PI - _FULL_TURN_SNAP:
        return 0.0
    return e


def separation_ok(dist: float, rho: float) -> bool:
    return dist >= 2.0 * rho * (1.0 - SEPARATION_RTOL)


@dataclass(frozen=True)
class Configuration:
    """A planar pose: position plus heading in radians, stored in [0, 2*pi)."""

    x: float
    y: float
    heading: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y) and math.isfinite(self.heading)):
            raise ValueError(f"non-finite configuration ({self.x}, {self.y}, {self.heading})")
        object.__setattr__(self, "heading", norm_angle(self.heading))

    @property
    def position(self) -> tuple[float, float]:
        return (self.x, self.y)


@dataclass(frozen=True)
class Segment:
    """One path piece: kind 'L'/'R' with extent in radians, or 'S' with a length."""

    kind: str
    extent: float

    def __post_init__(self):
        if self.kind not in ("L", "R", "S"):
            raise ValueError(f"unknown segment kind {self.kind!r}")
        if not math.isfinite(self.extent) or self.extent < 0.0:
            raise ValueError(f"bad segment extent {self.extent!r}")
        if self.kind != "S" and self.extent > TWO_PI:
            raise ValueError(f"arc extent {self.extent} exceeds a full turn")

    def length(self, rho: float) -> float:
        return self.extent if self.kind == "S" else rho * self.extent


@dataclass(frozen=True)
class DubinsPath:
    """An arc/straight word with its endpoints and total length."""

    start: Configuration
    segments: tuple[Segment, ...]
    rho: float
    end: Configuration
    length: float

    @property
    def word(self) -> str:
        """Kinds of the segments actually present, e.g. 'LSL', 'LS', 'S'."""
        return "".join(s.kind for s in self.segments)


def turn_center(x: float, y: float, heading: float, side: int, rho: float) -> tuple[float, float]:
    return (x - side * rho * math.sin(heading), y + side * rho * math.cos(heading))


def _heading_on_circle(px: float, py: float, cx: float, cy: float, side: int) -> float:
    # Radial direction fixes the tangent heading for the given turn sense.
    return math.atan2(side * (px - cx), -side * (py - cy))


def segment_end(cfg: Configuration, seg: Segment, rho: float) -> Configuration:
    """Closed-form endpoint of one segment started at cfg."""
    if seg.kind == "S":
        return Configuration(
            cfg.x + seg.extent * math.cos(cfg.heading),
            cfg.y + seg.extent * math.sin(cfg.heading),
            cfg.heading,
        )
    side = _SIDE_FOR_KIND[seg.kind]
    cx, cy = turn_center(cfg.x, cfg.y, cfg.heading, side, rho)
    rot = side * seg.extent
    cr, sr = math.cos(rot), math.sin(rot)
    dx, dy = cfg.x - cx, cfg.y - cy
    return Configuration(cx + cr * dx - sr * dy, cy + sr * dx + cr * dy, cfg.heading + rot)


def integrate(path: DubinsPath) -> Configuration:
    """Forward-integrate all segments from the start configuration."""
    cfg = path.start
    for seg in path.segments:
        cfg = segment_end(cfg, seg, path.rho)
    return cfg


def _build_path(start: Configuration, segments, rho: float, end: Configuration) -> DubinsPath:
    kept = tuple(s for s in segments if s.extent > 0.0)
    length = math.fsum(s.length(rho) for s in kept)
    return DubinsPath(start=start, segments=kept, rho=rho, end=end, length=length)


def _csc_candidate(a: Configuration, b: Configuration, rho: float, s0: int, s1: int):
    csx, csy = turn_center(a.x, a.y, a.heading, s0, rho)
    cex, cey = turn_center(b.x, b.y, b.heading, s1, rho)
    vx, vy = cex - csx, cey - csy
    dist = math.hypot(vx, vy)
    phi = math.atan2(vy, vx)
    if s0 == s1:
        psi = phi
        p = dist
    else:
        if dist < 2.0 * rho:
            return None
        psi = phi - math.asin(max(-1.0, min(1.0, (s1 - s0) * rho / dist)))
        p = math.sqrt(max(dist * dist - 4.0 * rho * rho, 0.0))
    t = _arc_extent(s0 * (psi - a.heading))
    q = _arc_extent(s1 * (b.heading - psi))
    segs = (
        Segment(_KIND_FOR_SIDE[s0], t),
        Segment("S", p),
        Segment(_KIND_FOR_SIDE[s1], q),
    )
    return rho * (t + q) + p, segs


def _ccc_candidates(a: Configuration, b: Configuration, rho: float, s: int):
    csx, csy = turn_center(a.x, a.y, a.heading, s, rho)
    cex, cey = turn_center(b.x, b.y, b.heading, s, rho)
    vx, vy = cex - csx, cey - csy
    dist = math.hypot(vx, vy)
    if dist <= 0.0 or dist > 4.0 * rho:
        return
    phi = math.atan2(vy, vx)
    gamma = math.acos(max(-1.0, min(1.0, dist / (4.0 * rho))))
    for placement in (1.0, -1.0):
        delta = phi + placement * gamma
        cmx = csx + 2.0 * rho * math.cos(delta)
        cmy = csy + 2.0 * rho * math.sin(delta)
        m1x, m1y = 0.5 * (csx + cmx), 0.5 * (csy + cmy)
        m2x, m2y = 0.5 * (cmx + cex), 0.5 * (cmy + cey)
        h1 = _heading_on_circle(m1x, m1y, csx, csy, s)
        h2 = _heading_on_circle(m2x, m2y, cex, cey, s)
        t = _arc_extent(s * (h1 - a.heading))
        p = _arc_extent(-s * (h2 - h1))
        q = _arc_extent(s * (b.heading - h2))
        if p <= math.pi:  # short middle arcs are never locally optimal
            continue
        kind = _KIND_FOR_SIDE[s]
        mid = _KIND_FOR_SIDE[-s]
        segs = (Segment(kind, t), Segment(mid, p), Segment(kind, q))
        yield rho * (t + p + q), segs


def dubins_shortest(a: Configuration, b: Configuration, rho: float) -> DubinsPath:
    """Shortest path from a to b with turning radius rho.

    Ties are broken toward fewer nonzero segments, then by word order,
    so results are deterministic.
    """
    if rho <= 0.0 or not math.isfinite(rho):
        raise ValueError(f"turning radius must be positive, got {rho!r}")
    if a == b:
        # the empty path; every word-based construction would close a full
        # circle here instead of standing still
        return _build_path(a, [], rho, a)
    candidates = []
    for s0, s1 in ((LEFT, LEFT), (LEFT, RIGHT), (RIGHT, LEFT), (RIGHT, RIGHT)):
        cand = _csc_candidate(a, b, rho, s0, s1)
        if cand is not None:
            candidates.append(cand)
    for s in (LEFT, RIGHT):
        candidates.extend(_ccc_candidates(a, b, rho, s))
    best = min(
        candidates,
        key=lambda c: (c[0], sum(1 for seg in c[1] if seg.extent > 0.0), "".join(seg.kind for seg in c[1])),
    )
    return _build_path(a, best[1], rho, b)


def _cs_geometry(a: Configuration, tx: float, ty: float, rho: float, side: int):
    """Arc-then-straight reaching point (tx, ty); final heading free.

    Returns (arc extent, straight length, straight heading).
    """
    cx, cy = turn_center(a.x, a.y, a.heading, side, rho)
    gx, gy = tx - cx, ty - cy
    dist = math.hypot(gx, gy)
    if dist < rho * (1.0 - 1e-12):
        raise InfeasibleHeading(
            f"target ({tx}, {ty}) lies inside the side-{_KIND_FOR_SIDE[side]} turning circle"
        )
    straight = math.sqrt(max(dist * dist - rho * rho, 0.0))
    mu = math.atan2(gy, gx)
    psi = mu + side * math.asin(max(-1.0, min(1.0, rho / dist)))
    turn = _arc_extent(side * (psi - a.heading))
    return turn, straight, psi


def _sc_geometry(sx: float, sy: float, b: Configuration, rho: float, side: int):
    """Straight-then-arc from point (sx, sy) into configuration b; initial heading free.

    Returns (straight heading, straight length, arc extent).
    """
    cx, cy = turn_center(b.x, b.y, b.heading, side, rho)
    hx, hy = cx - sx, cy - sy
    dist = math.hypot(hx, hy)
    if dist < rho * (1.0 - 1e-12):
        raise InfeasibleHeading(
            f"source ({sx}, {sy}) lies inside the side-{_KIND_FOR_SIDE[side]} turning circle"
        )
    straight = math.sqrt(max(dist * dist - rho * rho, 0.0))
    nu = math.atan2(hy, hx)
    psi = nu - side * math.asin(max(-1.0, min(1.0, rho / dist)))
    turn = _arc_extent(side * (b.heading - psi))
    return psi, straight, turn


def shortest_cs(a: Configuration, target: tuple[float, float], rho: float) -> DubinsPath:
    """Shortest arc-then-straight path from a to a target point.

    The final heading is free. Requires the target to be at least 2*rho
    away so the single-arc structure is optimal.
    """
    tx, ty = target
    d = math.hypot(tx - a.x, ty - a.y)
    if not separation_ok(d, rho):
        raise SeparationViolation(f"target at distance {d:.6g} < 2*rho = {2 * rho:.6g}")
    best = None
    for side in (LEFT, RIGHT):
        turn, straight, psi = _cs_geometry(a, tx, ty, rho, side)
        length = rho * turn + straight
        if best is None or length < best[0]:
            best = (length, side, turn, straight, psi)
    _, side, turn, straight, psi = best
    segs = (Segment(_KIND_FOR_SIDE[side], turn), Segment("S", straight))
    return _build_path(a, segs, rho, Configuration(tx, ty, psi))


def shortest_sc(source: tuple[float, float], b: Configuration, rho: float) -> DubinsPath:
    """Shortest straight-then-arc path from a source point into b.

    The initial heading is free; mirror image of shortest_cs under time
    reversal.
    """
    sx, sy = source
    d = math.hypot(b.x - sx, b.y - sy)
    if not separation_ok(d, rho):
        raise SeparationViolation(f"source at distance {d:.6g} < 2*rho = {2 * rho:.6g}")
    best = None
    for side in (LEFT, RIGHT):
        psi, straight, turn = _sc_geometry(sx, sy, b, rho, side)
        length = rho * turn + straight
        if best is None or length < best[0]:
            best = (length, side, psi, straight, turn)
    _, side, psi, straight, turn = best
    segs = (Segment("S", straight), Segment(_KIND_FOR_SIDE[side], turn))
    return _build_path(Configuration(sx, sy, psi), segs, rho, b)


def sample_path(path: DubinsPath, step: float) -> list[tuple[float, float]]:
    """Points along the path spaced at most `step` apart, endpoints included."""
    if step <= 0.0 or not math.isfinite(step):
        raise ValueError(f"step must be positive, got {step!r}")
    pts = [(path.start.x, path.start.y)]
    cfg = path.start
    for seg in path.segments:
        seg_len = seg.length(path.rho)
        n = max(1, math.ceil(seg_len / step))
        for i in range(1, n + 1):
            sub = Segment(seg.kind, seg.extent * (i / n))
            nxt = segment_end(cfg, sub, path.rho)
            pts.append((nxt.x, nxt.y))
        cfg = segment_end(cfg, seg, path.rho)
    return pts


def _circ_dist(a: float, b: float) -> float:
    d = abs(a - b) % TWO_PI
    return min(d, TWO_PI - d)


def concatenate(paths: list[DubinsPath]) -> DubinsPath:
    """Join end-to-start continuous paths into one.

    Adjacent segments of the same kind are merged (arcs only while the
    combined extent stays within a full turn).
    """
    if not paths:
        raise ValueError("nothing to concatenate")
    rho = paths[0].rho
    pos_tol = 1e-6 * rho
    for i, p in enumerate(paths):
        if p.rho != rho:
            raise ValueError(f"mixed turning radii: {rho} vs {p.rho}")
        if i == 0:
            continue
        prev = paths[i - 1]
        gap = math.hypot(p.start.x - prev.end.x, p.start.y - prev.end.y)
        twist = _circ_dist(p.start.heading, prev.end.heading)
        if gap > pos_tol or twist > 1e-6:
            raise DiscontinuityError(
                f"piece {i} starts {gap:.3g} away / {twist:.3g} rad off from piece {i - 1} end"
            )
    merged: list[Segment] = []
    for p in paths:
        for seg in p.segments:
            if merged and merged[-1].kind == seg.kind:
                combined = merged[-1].extent + seg.extent
                if seg.kind == "S" or combined <= TWO_PI:
                    merged[-1] = Segment(seg.kind, combined)
                    continue
            merged.append(seg)
    return _build_path(paths[0].start, merged, rho, paths[-1].end)


def length_table(alpha, beta, d):
    """Vectorized minimum word length for unit turning radius.

    Start pose is (0, 0, alpha), end pose is (d, 0, beta); alpha, beta and
    d broadcast together. Same tangent constructions as dubins_shortest.
    """
    alpha = np.asarray(alpha, dtype=float)
    beta = np.asarray(beta, dtype=float)
    d = np.asarray(d, dtype=float)
    sa, ca = np.sin(alpha), np.cos(alpha)
    sb, cb = np.sin(beta), np.cos(beta)
    shape = np.broadcast_shapes(alpha.shape, beta.shape, d.shape)
    best = np.full(shape, np.inf)

    def arc(x):
        e = np.mod(x, TWO_PI)
        return np.where(e > TWO_PI - _FULL_TURN_SNAP, 0.0, e)

    with np.errstate(invalid="ignore", divide="ignore"):
        for s0, s1 in ((1, 1), (1, -1), (-1, 1), (-1, -1)):
            vx = (d - s1 * sb) - (-s0 * sa)
            vy = s1 * cb - s0 * ca
            dist = np.hypot(vx, vy)
            phi = np.arctan2(vy, vx)
            if s0 == s1:
                psi = phi
                p = dist
                ok = np.ones(shape, dtype=bool)
            else:
                psi = phi - np.arcsin(np.clip((s1 - s0) / dist, -1.0, 1.0))
                p = np.sqrt(np.maximum(dist * dist - 4.0, 0.0))
                ok = dist >= 2.0
            t = arc(s0 * (psi - alpha))
            q = arc(s1 * (beta - psi))
            best = np.minimum(best, np.where(ok, t + p + q, np.inf))
        for s in (1, -1):
            csx, csy = -s * sa, s * ca
            cex, cey = d - s * sb, s * cb
            vx, vy = cex - csx, cey - csy
            dist = np.hypot(vx, vy)
            ok0 = (dist > 0.0) & (dist <= 4.0)
            phi = np.arctan2(vy, vx)
            gamma = np.arccos(np.clip(dist / 4.0, -1.0, 1.0))
            for placement in (1.0, -1.0):
                delta = phi + placement * gamma
                cmx = csx + 2.0 * np.cos(delta)
                cmy = csy + 2.0 * np.sin(delta)
                m1x, m1y = 0.5 * (csx + cmx), 0.5 * (csy + cmy)
                m2x, m2y = 0.5 * (cmx + cex), 0.5 * (cmy + cey)
                h1 = np.arctan2(s * (m1x - csx), -s * (m1y - csy))
                h2 = np.arctan2(s * (m2x - cex), -s * (m2y - cey))
                t = arc(s * (h1 - alpha))
                p = arc(-s * (h2 - h1))
                q = arc(s * (beta - h2))
                ok = ok0 & (p > math.pi)
                best = np.minimum(best, np.where(ok, t + p + q, np.inf))
    return best


def length_matrix(ax, ay, ha, bx, by, hb, rho):
    """Dubins lengths for all heading pairs between two fixed points.

    ha, hb are 1-D arrays of candidate headings; returns a len(ha) x len(hb)
    matrix in length units.
    """
    dx, dy = bx - ax, by - ay
    d = math.hypot(dx, dy) / rho
    bearing = math.atan2(dy, dx)
    alpha = (np.asarray(ha, dtype=float) - bearing)[:, None]
    beta = (np.asarray(hb, dtype=float) - bearing)[None, :]
    return rho * length_table(alpha, beta, d)
