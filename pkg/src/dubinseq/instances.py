"""Waypoint instance generation and JSON serialization.

An instance is an ordered waypoint list with a turning radius; adjacent
waypoints must be at least 2*rho apart. Generation rejection-samples
points uniformly from a square window, redrawing any candidate that lands
too close to its predecessor. The generator is numpy's PCG64 so a seed
reproduces the same instance on any platform.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from .dubins import separation_ok
from .errors import GenerationStalled, ParseError, ValidationError

DEFAULT_EXTENT_FACTOR = 10.0  # window side = factor * rho * sqrt(n)
MAX_REJECTIONS = 10**6


@dataclass(frozen=True)
class Instance:
    points: tuple[tuple[float, float], ...]
    rho: float
    seed: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "points", tuple((float(x), float(y)) for x, y in self.points))
        if not math.isfinite(self.rho) or self.rho <= 0.0:
            raise ValidationError(f"turning radius must be positive and finite, got {self.rho!r}")
        if len(self.points) < 3:
            raise ValidationError(f"need at least 3 waypoints, got {len(self.points)}")
        for i, (x, y) in enumerate(self.points):
            if not (math.isfinite(x) and math.isfinite(y)):
                raise ValidationError(f"waypoint {i} has non-finite coordinates ({x!r}, {y!r})")
        for i in range(len(self.points) - 1):
            (x0, y0), (x1, y1) = self.points[i], self.points[i + 1]
            gap = math.hypot(x1 - x0, y1 - y0)
            if not separation_ok(gap, self.rho):
                raise ValidationError(
                    f"waypoints {i} and {i + 1} are {gap:.6g} apart, below 2*rho = {2 * self.rho:.6g}"
                )

    @property
    def n(self) -> int:
        return len(self.points)


def default_extent(n: int, rho: float) -> float:
    return DEFAULT_EXTENT_FACTOR * rho * math.sqrt(n)


def generate(
    n: int,
    rho: float,
    extent: float | None = None,
    seed: int | None = None,
    max_rejections: int = MAX_REJECTIONS,
) -> Instance:
    """Sample an instance of n waypoints in [0, extent]^2.

    Candidates closer than 2*rho to their predecessor are redrawn;
    GenerationStalled is raised after max_rejections consecutive redraws.
    """
    if n < 3:
        raise ValueError(f"need at least 3 waypoints, got {n}")
    if rho <= 0.0 or not math.isfinite(rho):
        raise ValueError(f"turning radius must be positive, got {rho!r}")
    if extent is None:
        extent = default_extent(n, rho)
    if extent < 4.0 * rho:
        raise ValueError(f"window extent {extent:.6g} too small; need at least 4*rho = {4 * rho:.6g}")
    rng = np.random.Generator(np.random.PCG64(seed))
    pts: list[tuple[float, float]] = []
    while len(pts) < n:
        rejected = 0
        while True:
            x, y = rng.uniform(0.0, extent, 2)
            if not pts or math.hypot(x - pts[-1][0], y - pts[-1][1]) >= 2.0 * rho:
                pts.append((float(x), float(y)))
                break
            rejected += 1
            if rejected > max_rejections:
                raise GenerationStalled(
                    f"no valid placement for waypoint {len(pts)} after {max_rejections} draws"
                )
    return Instance(points=tuple(pts), rho=float(rho), seed=seed)


def _require_number(value, what: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ParseError(f"{what} must be a number, got {value!r}")
    return float(value)


def read_instance(data: str | bytes) -> Instance:
    """Parse an instance document; see write_instance for the layout."""
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"document is not UTF-8: {exc}") from None
    try:
        doc = json.loads(data)
    except json.JSONDecodeError as exc:
        raise ParseError(f"document is not valid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise ParseError(f"expected a JSON object, got {type(doc).__name__}")
    for key in ("rho", "points"):
        if key not in doc:
            raise ParseError(f"missing required key {key!r}")
    rho = _require_number(doc["rho"], "rho")
    raw = doc["points"]
    if not isinstance(raw, list) or not raw:
        raise ParseError("points must be a non-empty list of [x, y] pairs")
    pts = []
    for i, entry in enumerate(raw):
        if not isinstance(entry, list) or len(entry) != 2:
            raise ParseError(f"points[{i}] must be an [x, y] pair, got {entry!r}")
        pts.append((_require_number(entry[0], f"points[{i}][0]"),
                    _require_number(entry[1], f"points[{i}][1]")))
    seed = doc.get("seed")
    if seed is not None:
        if isinstance(seed, bool) or not isinstance(seed, int):
            raise ParseError(f"seed must be an integer or null, got {seed!r}")
        if seed < 0:
            raise ValidationError(f"seed must be nonnegative, got {seed}")
    return Instance(points=tuple(pts), rho=rho, seed=seed)


def write_instance(instance: Instance) -> str:
    """Serialize to JSON; floats keep full precision so reads are exact."""
    doc = {
        "rho": instance.rho,
        "points": [[x, y] for x, y in instance.points],
        "seed": instance.seed,
    }
    return json.dumps(doc)


def read_instance_file(path) -> Instance:
    with open(path, "rb") as fh:
        return read_instance(fh.read())


def write_instance_file(instance: Instance, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(write_instance(instance))
        fh.write("\n")
