"""The three example semigroups, with exact composition and finite truncations.

* ``Scale(alpha)``: ``x -> alpha x`` on [0, 1], ``alpha`` in ``[0, 1/2] U {1}``.
* ``Affine(p, q)``: ``x -> p x + q (mod 1)`` on the circle, ``p`` in ``(0, 1]``,
  ``q`` in ``[0, 1)``, both rational.
* ``TwistPower(n)``: the ``n``-th power of the disk twist
  ``(r, theta) -> (r, theta + r)``, ``n`` in ``{0, 3, 4, 5, ...}``.

``compose(a, b)`` applies ``b`` first.  A :class:`Truncation` bounds the
denominators (scale, affine) or the exponent (twist) and gives a finite,
sorted stand-in for the infinite semigroup.  Compositions can leave a
truncation; use :func:`in_truncation` to test membership.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from typing import Callable, Iterator, Optional, Union

from .errors import ContractError
from .spaces import CirclePoint, DiskPoint, UnitIntervalPoint, as_rational, parse_rational

__all__ = [
    "Scale",
    "Affine",
    "TwistPower",
    "Element",
    "Truncation",
    "GroupCompletion",
    "FAMILIES",
    "family_of",
    "identity",
    "apply",
    "compose",
    "kolmogorov_check",
    "in_truncation",
    "iter_truncation",
    "enumerate_truncation",
    "truncation_size",
    "left_quotient",
    "rotation_amounts",
    "orbit_points",
    "orbit_lifts",
    "lift_of",
    "group_completion",
    "farey_points",
    "parse_element",
    "format_element",
    "parse_truncation",
    "format_truncation",
]

HALF = Fraction(1, 2)


@dataclass(frozen=True, order=True)
class Scale:
    alpha: Fraction

    def __post_init__(self):
        a = as_rational(self.alpha)
        if not (0 <= a <= HALF or a == 1):
            raise ContractError(f"scale factor {a} not in [0, 1/2] U {{1}}")
        object.__setattr__(self, "alpha", a)


@dataclass(frozen=True, order=True)
class Affine:
    p: Fraction
    q: Fraction

    def __post_init__(self):
        p, q = as_rational(self.p), as_rational(self.q)
        if not 0 < p <= 1:
            raise ContractError(f"slope {p} not in (0, 1]")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q % 1)


@dataclass(frozen=True, order=True)
class TwistPower:
    n: int

    def __post_init__(self):
        n = int(self.n)
        if n < 0 or n in (1, 2):
            raise ContractError(f"twist exponent {n} not in {{0, 3, 4, 5, ...}}")
        object.__setattr__(self, "n", n)


Element = Union[Scale, Affine, TwistPower]

FAMILIES = {"scale": Scale, "affine": Affine, "twist": TwistPower}
_TAGS = {cls: tag for tag, cls in FAMILIES.items()}
_SPACES = {Scale: UnitIntervalPoint, Affine: CirclePoint, TwistPower: DiskPoint}


def family_of(s: Element) -> str:
    try:
        return _TAGS[type(s)]
    except KeyError:
        raise ContractError(f"{s!r} is not a semigroup element") from None


def identity(family: str) -> Element:
    return {"scale": Scale(1), "affine": Affine(1, 0), "twist": TwistPower(0)}[family]


def apply(s: Element, x):
    """Image of the point ``x`` under ``s``."""
    if not isinstance(x, _SPACES.get(type(s), ())):
        raise ContractError(f"{type(s).__name__} does not act on {type(x).__name__}")
    if isinstance(s, Scale):
        return UnitIntervalPoint(s.alpha * x.value)
    if isinstance(s, Affine):
        return CirclePoint(s.p * x.angle + s.q)
    return DiskPoint(x.radius, x.theta + s.n * x.radius)


def compose(a: Element, b: Element) -> Element:
    """``a o b`` (apply ``b`` first)."""
    if type(a) is not type(b):
        raise ContractError(f"cannot compose {type(a).__name__} with {type(b).__name__}")
    if isinstance(a, Scale):
        return Scale(a.alpha * b.alpha)
    if isinstance(a, Affine):
        return Affine(a.p * b.p, a.p * b.q + a.q)
    return TwistPower(a.n + b.n)


def kolmogorov_check(a: Element, b: Element, x) -> bool:
    return apply(compose(a, b), x) == apply(a, apply(b, x))


def left_quotient(k: Element, s: Element) -> Optional[Element]:
    """The unique ``a`` in the full semigroup with ``k o a == s``, or None.

    Defined for the affine and twist families, where ``a`` is unique when it
    exists.
    """
    if type(k) is not type(s):
        raise ContractError("left quotient needs elements of one family")
    if isinstance(k, TwistPower):
        n = s.n - k.n
        return TwistPower(n) if n == 0 or n >= 3 else None
    if isinstance(k, Affine):
        p = s.p / k.p
        if p > 1:
            return None
        shift = (s.q - k.q) % 1
        if shift >= k.p:
            return None
        return Affine(p, shift / k.p)
    raise ContractError("left quotients are not unique in the scale family")


# -- truncations ------------------------------------------------------------

@dataclass(frozen=True)
class Truncation:
    family: str
    bound: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ContractError(f"unknown family {self.family!r}")
        if int(self.bound) < 1:
            raise ContractError("truncation bound must be >= 1")
        object.__setattr__(self, "bound", int(self.bound))

    def __str__(self):
        return format_truncation(self)


@lru_cache(maxsize=64)
def farey_points(d: int) -> tuple[Fraction, ...]:
    """Sorted rationals in ``[0, 1]`` with denominator at most ``d``."""
    return tuple(sorted({Fraction(k, q) for q in range(1, d + 1) for k in range(q + 1)}))


def _slopes(d: int) -> tuple[Fraction, ...]:
    return tuple(v for v in farey_points(d) if v > 0)


def _offsets(d: int) -> tuple[Fraction, ...]:
    return tuple(v for v in farey_points(d) if v < 1)


def _scales(d: int) -> tuple[Fraction, ...]:
    return tuple(v for v in farey_points(d) if v <= HALF) + (Fraction(1),)


def in_truncation(s: Element, t: Truncation) -> bool:
    if family_of(s) != t.family:
        return False
    d = t.bound
    if isinstance(s, Scale):
        return s.alpha == 1 or s.alpha.denominator <= d
    if isinstance(s, Affine):
        return s.p.denominator <= d and s.q.denominator <= d
    return s.n <= d


def truncation_size(t: Truncation) -> int:
    if t.family == "scale":
        return len(_scales(t.bound))
    if t.family == "affine":
        return len(_slopes(t.bound)) * len(_offsets(t.bound))
    return t.bound - 1 if t.bound >= 3 else 1


def iter_truncation(t: Truncation) -> Iterator[Element]:
    """Lazily yield the truncation in sorted order; the identity is always included."""
    d = t.bound
    if t.family == "scale":
        for a in _scales(d):
            yield Scale(a)
    elif t.family == "affine":
        offsets = _offsets(d)
        for p in _slopes(d):
            for q in offsets:
                yield Affine(p, q)
    else:
        yield TwistPower(0)
        for n in range(3, d + 1):
            yield TwistPower(n)


def enumerate_truncation(t: Truncation, max_size: int = 2_000_000) -> list[Element]:
    size = truncation_size(t)
    if size > max_size:
        raise ContractError(
            f"truncation {t} has {size} elements; iterate it with iter_truncation instead")
    return list(iter_truncation(t))


def rotation_amounts(t: Truncation) -> Optional[tuple[Fraction, ...]]:
    """Angles ``q`` with ``x -> x + q`` in the truncation, for the affine family only."""
    if t.family != "affine":
        return None
    return _offsets(t.bound)


def orbit_points(x, t: Truncation, max_points: int = 1_000_000) -> frozenset:
    """``{s(x) : s in t}``; the affine case is built as a sumset of angles."""
    if t.family == "affine":
        if not isinstance(x, CirclePoint):
            raise ContractError("the affine family acts on circle points")
        heads = {(p * x.angle) % 1 for p in _slopes(t.bound)}
        offsets = _offsets(t.bound)
        if len(heads) * len(offsets) > max_points:
            raise ContractError(
                f"orbit of {x} in {t} may have {len(heads) * len(offsets)} points (cap {max_points})")
        return frozenset(CirclePoint(h + q) for h in heads for q in offsets)
    if truncation_size(t) > max_points:
        raise ContractError(f"truncation {t} exceeds the point cap {max_points}")
    return frozenset(apply(s, x) for s in iter_truncation(t))


def orbit_lifts(x, t: Truncation, max_points: int = 1_000_000) -> tuple[list, Callable]:
    """Distinct values that ``compose(k, s)(x)`` depends on, over ``s`` in ``t``.

    Returns ``(values, image)`` with ``image(k, value) == apply(compose(k, s), x)``
    for the ``s`` behind ``value``.  For the affine family the value is
    ``p x + q`` before reduction mod 1: the parameter law disagrees with
    ``k(s(x))`` when that sum wraps past 1.  Elsewhere it is ``s(x)``.
    """
    if t.family != "affine":
        return sorted(orbit_points(x, t, max_points)), apply
    if not isinstance(x, CirclePoint):
        raise ContractError("the affine family acts on circle points")
    heads = {p * x.angle for p in _slopes(t.bound)}
    offsets = _offsets(t.bound)
    if len(heads) * len(offsets) > max_points:
        raise ContractError(
            f"orbit of {x} in {t} may have {len(heads) * len(offsets)} points (cap {max_points})")
    return sorted({h + q for h in heads for q in offsets}), _affine_lift_image


def _affine_lift_image(k: "Affine", v: Fraction) -> CirclePoint:
    return CirclePoint(k.p * v + k.q)


def lift_of(s: Element, x):
    """The value :func:`orbit_lifts` assigns to ``s``."""
    if isinstance(s, Affine):
        return s.p * x.angle + s.q
    return apply(s, x)


@dataclass(frozen=True)
class GroupCompletion:
    """The subgroup ``step * Z`` of the integers generated by twist exponents."""

    step: int

    def __contains__(self, n: int) -> bool:
        return n % self.step == 0

    @property
    def is_integers(self) -> bool:
        return self.step == 1


def group_completion(t: Truncation) -> GroupCompletion:
    if t.family != "twist":
        raise ContractError("group completion is only modelled for the twist family")
    step = reduce(math.gcd, (s.n for s in iter_truncation(t)), 0)
    return GroupCompletion(step or 1)


# -- text forms -------------------------------------------------------------

def format_element(s: Element) -> str:
    if isinstance(s, Scale):
        return f"scale:{s.alpha}"
    if isinstance(s, Affine):
        return f"affine:{s.p},{s.q}"
    return f"twist:{s.n}"


def parse_element(text: str) -> Element:
    tag, _, body = text.strip().partition(":")
    try:
        if tag == "scale":
            return Scale(parse_rational(body))
        if tag == "affine":
            p, q = body.split(",")
            return Affine(parse_rational(p), parse_rational(q))
        if tag == "twist":
            return TwistPower(int(body))
    except ValueError as exc:
        raise ContractError(f"cannot parse element {text!r}: {exc}") from None
    raise ContractError(f"cannot parse element {text!r}")


def format_truncation(t: Truncation) -> str:
    return f"{t.family}:{t.bound}"


def parse_truncation(text: str) -> Truncation:
    tag, _, bound = text.strip().partition(":")
    try:
        return Truncation(tag, int(bound))
    except ValueError as exc:
        raise ContractError(f"cannot parse truncation {text!r}: {exc}") from None
