"""Optimal curvature-bounded paths through three ordered points.

Only the middle point's heading is unknown: the optimal path is a straight
leg, one arc passing through the middle point, and another straight leg
(S-arc-S). The arc turns right when the first point lies below the axis
from the middle point to the last one, left when above, and the problem
reduces to a one-dimensional minimization over the middle heading theta.

The objective D1(theta) + D2(theta) is strictly convex between its two
jump discontinuities and its derivative is rho * (cos(turn12) -
cos(turn23)), so the minimum is found by bracketing the sign change of
g(theta) = cos(turn12) - cos(turn23) and bisecting. At the optimum both
arc portions subtend equal angles, which serves as a checkable
certificate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .dubins import (
    LEFT,
    RIGHT,
    Configuration,
    DubinsPath,
    Segment,
    TWO_PI,
    _build_path,
    _cs_geometry,
    _sc_geometry,
    norm_angle,
    separation_ok,
)
from .errors import SeparationViolation

SCAN_STEPS = 256
MAX_BISECT = 200
# Width floor keeping the equal-turns certificate tight independent of eps.
_CERT_WIDTH = 1e-4
# |y1| below this times rho counts as lying on the p2-p3 axis.
_AXIS_RTOL = 1e-9

SRS = "SRS"
SLS = "SLS"
BOTH = "Both"
STRAIGHT = "Straight"


@dataclass(frozen=True)
class CanonicalFrame:
    """Rigid motion taking p2 to the origin and p3 onto the positive x axis."""

    ox: float
    oy: float
    phi: float
    cos_phi: float
    sin_phi: float
    x1: float
    y1: float
    d12: float
    d23: float
    y1_sign: int
    rho: float

    def to_world_point(self, x: float, y: float) -> tuple[float, float]:
        return (
            self.ox + self.cos_phi * x - self.sin_phi * y,
            self.oy + self.sin_phi * x + self.cos_phi * y,
        )

    def to_world_heading(self, h: float) -> float:
        return norm_angle(h + self.phi)

    def to_world_config(self, x: float, y: float, h: float) -> Configuration:
        wx, wy = self.to_world_point(x, y)
        return Configuration(wx, wy, h + self.phi)


def canonicalize(p1, p2, p3, rho: float) -> CanonicalFrame:
    """Express a waypoint triple in the frame used by the solver."""
    if rho <= 0.0 or not math.isfinite(rho):
        raise ValueError(f"turning radius must be positive, got {rho!r}")
    d12 = math.hypot(p2[0] - p1[0], p2[1] - p1[1])
    d23 = math.hypot(p3[0] - p2[0], p3[1] - p2[1])
    if not separation_ok(d12, rho):
        raise SeparationViolation(f"p1-p2 distance {d12:.6g} < 2*rho = {2 * rho:.6g}")
    if not separation_ok(d23, rho):
        raise SeparationViolation(f"p2-p3 distance {d23:.6g} < 2*rho = {2 * rho:.6g}")
    phi = math.atan2(p3[1] - p2[1], p3[0] - p2[0])
    c, s = math.cos(phi), math.sin(phi)
    dx, dy = p1[0] - p2[0], p1[1] - p2[1]
    x1 = c * dx + s * dy
    y1 = -s * dx + c * dy
    if abs(y1) <= _AXIS_RTOL * rho:
        sign = 0
    else:
        sign = 1 if y1 > 0.0 else -1
    return CanonicalFrame(
        ox=p2[0], oy=p2[1], phi=phi, cos_phi=c, sin_phi=s,
        x1=x1, y1=y1, d12=d12, d23=d23, y1_sign=sign, rho=rho,
    )


def classify(frame: CanonicalFrame) -> str:
    """Which S-arc-S word is optimal for this triple."""
    if frame.y1_sign < 0:
        return SRS
    if frame.y1_sign > 0:
        return SLS
    return BOTH if frame.x1 > 0.0 else STRAIGHT


@dataclass(frozen=True)
class ThreePointGeometry:
    """Both one-sided legs of the S-arc-S path at a fixed middle heading."""

    theta: float
    d1: float
    d2: float
    turn12: float
    turn23: float
    l12: float
    l23: float
    psi1: float
    psi2: float

    @property
    def total(self) -> float:
        return self.d1 + self.d2


def length_profile(frame: CanonicalFrame, theta: float, side: str) -> ThreePointGeometry:
    """Leg lengths when the middle point is crossed at heading theta.

    side is 'L' or 'R': the sense of the arc through the middle point.
    """
    s = LEFT if side == "L" else RIGHT
    return _profile(frame.x1, frame.y1, frame.d23, frame.rho, theta, s)


def _profile(x1, y1, d23, rho, theta, s) -> ThreePointGeometry:
    theta = norm_angle(theta)
    mid = Configuration(0.0, 0.0, theta)
    psi1, l12, turn12 = _sc_geometry(x1, y1, mid, rho, s)
    turn23, l23, psi2 = _cs_geometry(mid, d23, 0.0, rho, s)
    return ThreePointGeometry(
        theta=theta,
        d1=rho * turn12 + l12,
        d2=rho * turn23 + l23,
        turn12=turn12,
        turn23=turn23,
        l12=l12,
        l23=l23,
        psi1=psi1,
        psi2=psi2,
    )


@dataclass(frozen=True)
class ThreePointSolution:
    path: DubinsPath
    headings: tuple[float, float, float]
    word: str
    certificate_residual: float
    theta: float
    iterations: int
    bracket: tuple[float, float]


def _g(geom: ThreePointGeometry) -> float:
    # d(D1+D2)/dtheta = rho * g for the right-turn side
    return math.cos(geom.turn12) - math.cos(geom.turn23)


def _solve_side_r(x1, y1, d23, rho, eps):
    """Minimize D1+D2 over theta for the right-turn arc; y1 may have any sign."""

    def prof(theta):
        return _profile(x1, y1, d23, rho, theta, RIGHT)

    thetas = [j * TWO_PI / SCAN_STEPS for j in range(SCAN_STEPS)]
    geoms = [prof(t) for t in thetas]
    best_j = min(range(SCAN_STEPS), key=lambda j: geoms[j].total)
    best = geoms[best_j]

    brackets = []
    for j in range(SCAN_STEPS):
        k = (j + 1) % SCAN_STEPS
        if _g(geoms[j]) < 0.0 <= _g(geoms[k]):
            hi = thetas[k] if k else TWO_PI
            brackets.append((thetas[j], hi, geoms[j], geoms[k]))

    iterations = 0
    won_bracket = (best.theta, best.theta)
    for lo, hi, glo, ghi in brackets:
        g_lo, g_hi = _g(glo), _g(ghi)
        cand = glo if glo.total <= ghi.total else ghi
        it = 0
        b_lo, b_hi = lo, hi
        while it < MAX_BISECT:
            bound = rho * (b_hi - b_lo) * max(abs(g_lo), abs(g_hi))
            if bound <= eps * cand.total and (b_hi - b_lo) <= _CERT_WIDTH:
                break
            mid = 0.5 * (b_lo + b_hi)
            gm = prof(mid)
            it += 1
            if gm.total < cand.total:
                cand = gm
            gv = _g(gm)
            if gv == 0.0:
                break
            if gv < 0.0:
                b_lo, g_lo = mid, gv
            else:
                b_hi, g_hi = mid, gv
        if cand.total < best.total:
            best = cand
            iterations = it
            won_bracket = (lo, hi)

    if not brackets:
        # No derivative sign change sampled: polish the best scan point.
        lo = thetas[best_j] - TWO_PI / SCAN_STEPS
        hi = thetas[best_j] + TWO_PI / SCAN_STEPS
        it = 0
        while hi - lo > 1e-12 and it < MAX_BISECT:
            m1 = lo + (hi - lo) / 3.0
            m2 = hi - (hi - lo) / 3.0
            a, b = prof(m1), prof(m2)
            it += 1
            if a.total < b.total:
                hi = m2
                if a.total < best.total:
                    best = a
            else:
                lo = m1
                if b.total < best.total:
                    best = b
        iterations = it
        won_bracket = (lo, hi)

    return best, iterations, won_bracket


def _mirror_geometry(geom: ThreePointGeometry) -> ThreePointGeometry:
    return ThreePointGeometry(
        theta=norm_angle(-geom.theta),
        d1=geom.d1,
        d2=geom.d2,
        turn12=geom.turn12,
        turn23=geom.turn23,
        l12=geom.l12,
        l23=geom.l23,
        psi1=-geom.psi1,
        psi2=-geom.psi2,
    )


def _assemble(frame: CanonicalFrame, geom: ThreePointGeometry, word: str,
              iterations: int, bracket) -> ThreePointSolution:
    rho = frame.rho
    kind = "R" if word == SRS else "L"
    arc = geom.turn12 + geom.turn23
    if arc <= TWO_PI:
        arcs = [Segment(kind, arc)]
    else:
        arcs = [Segment(kind, geom.turn12), Segment(kind, geom.turn23)]
    segs = [Segment("S", geom.l12), *arcs, Segment("S", geom.l23)]
    start = frame.to_world_config(frame.x1, frame.y1, geom.psi1)
    end = frame.to_world_config(frame.d23, 0.0, geom.psi2)
    path = _build_path(start, segs, rho, end)
    # geom is already expressed in the true canonical frame (mirrored back
    # for the left-turn word), so its theta maps directly.
    h1 = start.heading
    h2 = frame.to_world_heading(geom.theta)
    h3 = end.heading
    return ThreePointSolution(
        path=path,
        headings=(h1, h2, h3),
        word=word,
        certificate_residual=abs(geom.turn12 - geom.turn23),
        theta=geom.theta,
        iterations=iterations,
        bracket=bracket,
    )


def solve_three_point(p1, p2, p3, rho: float, eps: float = 1e-4) -> ThreePointSolution:
    """Shortest S-arc-S path visiting p1, p2, p3 in order.

    The returned length is within a factor (1 + eps) of the true optimum.
    """
    if eps <= 0.0 or not math.isfinite(eps):
        raise ValueError(f"eps must be positive, got {eps!r}")
    frame = canonicalize(p1, p2, p3, rho)
    word = classify(frame)

    if word == STRAIGHT:
        length = math.hypot(p3[0] - p1[0], p3[1] - p1[1])
        bearing = math.atan2(p3[1] - p1[1], p3[0] - p1[0])
        start = Configuration(p1[0], p1[1], bearing)
        end = Configuration(p3[0], p3[1], bearing)
        path = _build_path(start, [Segment("S", length)], rho, end)
        return ThreePointSolution(
            path=path,
            headings=(bearing % TWO_PI, bearing % TWO_PI, bearing % TWO_PI),
            word="S",
            certificate_residual=0.0,
            theta=0.0,
            iterations=0,
            bracket=(0.0, 0.0),
        )

    if word == SRS:
        geom, it, br = _solve_side_r(frame.x1, frame.y1, frame.d23, frame.rho, eps)
        return _assemble(frame, geom, SRS, it, br)

    if word == SLS:
        geom, it, br = _solve_side_r(frame.x1, -frame.y1, frame.d23, frame.rho, eps)
        return _assemble(frame, _mirror_geometry(geom), SLS, it, br)

    # On-axis ahead of p2: both senses work; keep the shorter, left on ties.
    geom_r, it_r, br_r = _solve_side_r(frame.x1, frame.y1, frame.d23, frame.rho, eps)
    geom_l, it_l, br_l = _solve_side_r(frame.x1, -frame.y1, frame.d23, frame.rho, eps)
    if geom_r.total < geom_l.total:
        return _assemble(frame, geom_r, SRS, it_r, br_r)
    return _assemble(frame, _mirror_geometry(geom_l), SLS, it_l, br_l)
