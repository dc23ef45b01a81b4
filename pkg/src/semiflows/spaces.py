"""Exact rational points on [0, 1], the circle and the closed disk.

All coordinates are :class:`fractions.Fraction`.  Circle angles are measured
in turns and kept in ``[0, 1)``; a disk point is ``(radius, theta)`` in polar
form with the angle of the centre normalised to 0.

The disk uses the surrogate distance

    rho(a, b) = |r_a - r_b| + min(r_a, r_b) * circle_dist(theta_a, theta_b)

which stays rational.  It is symmetric and vanishes only on equal points; no
triangle inequality is claimed.
"""
from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import ContractError

Rational = Fraction

__all__ = [
    "Rational",
    "UnitIntervalPoint",
    "CirclePoint",
    "DiskPoint",
    "OpenInterval",
    "Arc",
    "PolarBox",
    "Point",
    "Neighborhood",
    "as_rational",
    "circle_dist",
    "interval_dist",
    "disk_dist",
    "distance",
    "set_distance",
    "neighborhood_contains",
    "epsilon_dense",
    "canonicalize",
    "max_circle_gap",
    "polar_box",
    "parse_rational",
    "parse_point",
    "parse_neighborhood",
    "format_rational",
    "format_point",
    "format_neighborhood",
]


def as_rational(value) -> Fraction:
    if isinstance(value, float):
        raise ContractError("floats are not accepted; pass an int, Fraction or 'a/b' string")
    if isinstance(value, str):
        return parse_rational(value)
    return Fraction(value)


@dataclass(frozen=True, order=True)
class UnitIntervalPoint:
    value: Fraction

    def __post_init__(self):
        v = as_rational(self.value)
        if not 0 <= v <= 1:
            raise ContractError(f"{v} is outside [0, 1]")
        object.__setattr__(self, "value", v)


@dataclass(frozen=True, order=True)
class CirclePoint:
    angle: Fraction

    def __post_init__(self):
        object.__setattr__(self, "angle", as_rational(self.angle) % 1)


@dataclass(frozen=True, order=True)
class DiskPoint:
    radius: Fraction
    theta: Fraction = Fraction(0)

    def __post_init__(self):
        r = as_rational(self.radius)
        if not 0 <= r <= 1:
            raise ContractError(f"radius {r} is outside [0, 1]")
        theta = Fraction(0) if r == 0 else as_rational(self.theta) % 1
        object.__setattr__(self, "radius", r)
        object.__setattr__(self, "theta", theta)


Point = Union[UnitIntervalPoint, CirclePoint, DiskPoint]


@dataclass(frozen=True)
class OpenInterval:
    """``(lo, hi)`` intersected with [0, 1]; ends may lie outside [0, 1]."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        lo, hi = as_rational(self.lo), as_rational(self.hi)
        if not lo < hi:
            raise ContractError(f"empty interval ({lo}, {hi})")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)


@dataclass(frozen=True)
class Arc:
    """Open arc of points at circle distance ``< halfwidth`` from ``center``."""

    center: CirclePoint
    halfwidth: Fraction

    def __post_init__(self):
        c = self.center if isinstance(self.center, CirclePoint) else CirclePoint(self.center)
        h = as_rational(self.halfwidth)
        if not 0 < h <= Fraction(1, 2):
            raise ContractError(f"arc halfwidth {h} outside (0, 1/2]")
        object.__setattr__(self, "center", c)
        object.__setattr__(self, "halfwidth", h)


@dataclass(frozen=True)
class PolarBox:
    """Disk points with ``r_lo < radius < r_hi`` and angle inside ``arc``.

    The centre has no angle; it belongs to the box when ``r_lo < 0 < r_hi``.
    """

    r_lo: Fraction
    r_hi: Fraction
    arc: Arc

    def __post_init__(self):
        lo, hi = as_rational(self.r_lo), as_rational(self.r_hi)
        if not lo < hi:
            raise ContractError(f"empty radius window ({lo}, {hi})")
        object.__setattr__(self, "r_lo", lo)
        object.__setattr__(self, "r_hi", hi)


Neighborhood = Union[OpenInterval, Arc, PolarBox]


def polar_box(center: DiskPoint, dr, dtheta) -> PolarBox:
    """Box of radial half-width ``dr`` and angular half-width ``dtheta`` about ``center``."""
    dr, dtheta = as_rational(dr), as_rational(dtheta)
    return PolarBox(center.radius - dr, center.radius + dr, Arc(CirclePoint(center.theta), dtheta))


def _circle_gap(a: Fraction, b: Fraction) -> Fraction:
    d = abs(a - b) % 1
    return min(d, 1 - d)


def circle_dist(a: CirclePoint, b: CirclePoint) -> Fraction:
    return _circle_gap(a.angle, b.angle)


def interval_dist(a: UnitIntervalPoint, b: UnitIntervalPoint) -> Fraction:
    return abs(a.value - b.value)


def disk_dist(a: DiskPoint, b: DiskPoint) -> Fraction:
    return abs(a.radius - b.radius) + min(a.radius, b.radius) * _circle_gap(a.theta, b.theta)


_METRICS = {
    UnitIntervalPoint: interval_dist,
    CirclePoint: circle_dist,
    DiskPoint: disk_dist,
}


def distance(a: Point, b: Point) -> Fraction:
    if type(a) is not type(b):
        raise ContractError(f"cannot measure distance between {type(a).__name__} and {type(b).__name__}")
    return _METRICS[type(a)](a, b)


def set_distance(p: Point, points: Iterable[Point]) -> Fraction:
    return min(distance(p, q) for q in points)


def neighborhood_contains(U: Neighborhood, p: Point) -> bool:
    if isinstance(U, OpenInterval):
        if not isinstance(p, UnitIntervalPoint):
            raise ContractError("an interval neighbourhood needs a point of [0, 1]")
        return U.lo < p.value < U.hi
    if isinstance(U, Arc):
        if not isinstance(p, CirclePoint):
            raise ContractError("an arc neighbourhood needs a circle point")
        return _circle_gap(U.center.angle, p.angle) < U.halfwidth
    if isinstance(U, PolarBox):
        if not isinstance(p, DiskPoint):
            raise ContractError("a polar box needs a disk point")
        if not U.r_lo < p.radius < U.r_hi:
            return False
        return p.radius == 0 or _circle_gap(U.arc.center.angle, p.theta) < U.arc.halfwidth
    raise ContractError(f"unknown neighbourhood {U!r}")


def max_circle_gap(angles: Iterable) -> Fraction:
    """Largest gap between cyclically consecutive angles (1 for a single angle)."""
    pts = sorted({as_rational(a) % 1 for a in angles})
    if not pts:
        raise ContractError("no angles given")
    gaps = [b - a for a, b in zip(pts, pts[1:])]
    gaps.append(pts[0] + 1 - pts[-1])
    return max(gaps)


def epsilon_dense(sample: Sequence[Point], target: Iterable[Point], eps) -> bool:
    """True iff every target point lies within ``eps`` (inclusive) of some sample point.

    An empty target is dense by convention.
    """
    eps = as_rational(eps)
    if eps <= 0:
        raise ContractError("eps must be positive")
    target = list(target)
    if not target:
        return True
    sample = list(sample)
    if not sample:
        return False
    kind = type(sample[0])
    if any(type(p) is not kind for p in sample) or any(type(p) is not kind for p in target):
        raise ContractError("sample and target must live on one space")
    if kind is CirclePoint or kind is UnitIntervalPoint:
        key = (lambda p: p.angle) if kind is CirclePoint else (lambda p: p.value)
        values = sorted({key(p) for p in sample})
        for p in target:
            v = key(p)
            i = bisect_left(values, v)
            if kind is CirclePoint:
                d = min(_circle_gap(v, values[j % len(values)]) for j in (i - 1, i))
            else:
                d = min(abs(v - values[j]) for j in (i - 1, i) if 0 <= j < len(values))
            if d > eps:
                return False
        return True
    return all(any(disk_dist(p, q) <= eps for q in sample) for p in target)


def canonicalize(p):
    """Canonical form of a rational or point; the point types normalise on construction."""
    if isinstance(p, (UnitIntervalPoint, CirclePoint, DiskPoint)):
        return type(p)(*(getattr(p, f) for f in p.__dataclass_fields__))
    return as_rational(p)


# -- text forms -------------------------------------------------------------

def parse_rational(text: str) -> Fraction:
    try:
        text = text.strip()
        if "/" in text:
            num, den = text.split("/")
            return Fraction(int(num), int(den))
        return Fraction(int(text))
    except (ValueError, ZeroDivisionError):
        raise ContractError(f"cannot parse rational {text!r}") from None


def format_rational(v: Fraction) -> str:
    return str(Fraction(v))


def parse_point(text: str) -> Point:
    """``"1/2"`` (interval), ``"circ:1/3"``, ``"disk:1/2@1/4"`` (radius @ angle)."""
    text = text.strip()
    if text.startswith("circ:"):
        return CirclePoint(parse_rational(text[5:]))
    if text.startswith("disk:"):
        body = text[5:]
        r, _, theta = body.partition("@")
        return DiskPoint(parse_rational(r), parse_rational(theta) if theta else Fraction(0))
    return UnitIntervalPoint(parse_rational(text))


def format_point(p: Point) -> str:
    if isinstance(p, UnitIntervalPoint):
        return format_rational(p.value)
    if isinstance(p, CirclePoint):
        return f"circ:{format_rational(p.angle)}"
    return f"disk:{format_rational(p.radius)}@{format_rational(p.theta)}"


def parse_neighborhood(text: str) -> Neighborhood:
    """``"interval:lo,hi"``, ``"arc:center,halfwidth"``, ``"box:rlo,rhi@center,halfwidth"``."""
    kind, _, body = text.strip().partition(":")
    try:
        if kind == "interval":
            lo, hi = body.split(",")
            return OpenInterval(parse_rational(lo), parse_rational(hi))
        if kind == "arc":
            c, h = body.split(",")
            return Arc(CirclePoint(parse_rational(c)), parse_rational(h))
        if kind == "box":
            radial, _, angular = body.partition("@")
            lo, hi = radial.split(",")
            c, h = angular.split(",")
            return PolarBox(parse_rational(lo), parse_rational(hi),
                            Arc(CirclePoint(parse_rational(c)), parse_rational(h)))
    except ValueError:
        pass
    raise ContractError(f"cannot parse neighbourhood {text!r}")


def format_neighborhood(U: Neighborhood) -> str:
    if isinstance(U, OpenInterval):
        return f"interval:{U.lo},{U.hi}"
    if isinstance(U, Arc):
        return f"arc:{U.center.angle},{U.halfwidth}"
    return f"box:{U.r_lo},{U.r_hi}@{U.arc.center.angle},{U.arc.halfwidth}"
