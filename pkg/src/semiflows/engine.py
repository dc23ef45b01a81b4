"""Return sets, cover certificates and minimality checks on the example families.

Two cover problems are solved over a truncation ``S_t``, with
``A = {s : s(x) in U}``:

``syndetic_search``
    find ``K`` with every ``s`` in ``S_t`` equal to ``k o a``, ``k`` in ``K``,
    ``a`` in ``A``.  With ``quotient="truncated"`` the factor ``a`` must lie
    in ``S_t``; with ``quotient="exact"`` it may be any element of the
    untruncated semigroup, found by exact left division.

``modified_ap_search``
    find ``K`` such that every ``s`` in ``S_t`` has a ``k`` in ``K`` with
    ``(k o s)(x)`` in ``U``; ``k o s`` may leave the truncation.

Both run a greedy set cover seeded with the identity and then an exact
search for a smaller cover of size at most ``exact_limit``.  Certificates
are re-checked by :func:`verify_certificate`, which recomputes every cover
condition from compositions rather than from the search's tables.

Covers are always ``k o (.)`` with ``k`` applied last.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional, Sequence

from .errors import ContractError, HypothesisViolation
from .families import (
    Element,
    Truncation,
    apply,
    compose,
    format_element,
    format_truncation,
    identity,
    iter_truncation,
    left_quotient,
    lift_of,
    orbit_lifts,
    orbit_points,
    rotation_amounts,
    truncation_size,
)
from .spaces import (
    DiskPoint,
    Neighborhood,
    as_rational,
    distance,
    epsilon_dense,
    format_neighborhood,
    format_point,
    max_circle_gap,
    neighborhood_contains,
    set_distance,
)
from .zplus import WindowedSet

log = logging.getLogger(__name__)

SYNDETIC = "SYNDETIC-COVER"
MODIFIED = "MODIFIED-AP-COVER"

MINIMAL = "MINIMAL-AT-RESOLUTION"
NOT_MINIMAL = "NOT-MINIMAL-EXACT"
INCONCLUSIVE = "INCONCLUSIVE"

EVIDENCE_CAP = 20

__all__ = [
    "SYNDETIC",
    "MODIFIED",
    "MINIMAL",
    "NOT_MINIMAL",
    "INCONCLUSIVE",
    "ReturnSet",
    "Certificate",
    "Exhaustion",
    "MinimalityVerdict",
    "OrbitSample",
    "ProximalReport",
    "GroupCertificate",
    "return_set",
    "syndetic_search",
    "modified_ap_search",
    "verify_certificate",
    "arc_net",
    "orbit_sample",
    "epsilon_minimality",
    "proximal_pair_check",
    "cascade_ap_bridge",
    "group_completion_certificate",
    "group_completion_ap",
    "describe_return_set",
]


@dataclass(frozen=True)
class ReturnSet:
    x: object
    U: Neighborhood
    truncation: Truncation
    members: tuple

    def __contains__(self, s) -> bool:
        return s in set(self.members)

    def __len__(self):
        return len(self.members)


@dataclass
class Certificate:
    kind: str
    K: tuple
    truncation: Truncation
    verified: bool = False
    quotient: Optional[str] = None

    def to_dict(self) -> dict:
        out = {
            "kind": self.kind,
            "K": [format_element(k) for k in self.K],
            "truncation": format_truncation(self.truncation),
            "verified": self.verified,
        }
        if self.quotient is not None:
            out["quotient"] = self.quotient
        return out


@dataclass
class Exhaustion:
    """No cover of size ``<= max_k`` was found over the truncation."""

    kind: str
    truncation: Truncation
    reason: str
    max_k: int
    uncovered: list = field(default_factory=list)
    uncovered_count: int = 0

    verified = False

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "truncation": format_truncation(self.truncation),
            "reason": self.reason,
            "max_k": self.max_k,
            "uncovered": [format_element(s) for s in self.uncovered[:EVIDENCE_CAP]],
            "uncovered_count": self.uncovered_count,
        }


def return_set(x, U: Neighborhood, t: Truncation) -> ReturnSet:
    """``A_U = {s in S_t : s(x) in U}``, in truncation order."""
    members = tuple(s for s in iter_truncation(t) if neighborhood_contains(U, apply(s, x)))
    return ReturnSet(x, U, t, members)


# -- generic cover search ---------------------------------------------------

def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _exact_cover(full: int, covers: list[int], depth: int, node_budget: int = 200_000) -> Optional[list[int]]:
    """Smallest cover of ``full`` using at most ``depth`` of ``covers``.

    Branches on the uncovered target with the fewest coverers and prunes when
    the remaining picks cannot cover what is left.  Gives up (None) once
    ``node_budget`` nodes have been expanded.
    """
    coverers: dict[int, list[int]] = {}
    for i, c in enumerate(covers):
        for j in _bits(c):
            coverers.setdefault(j, []).append(i)
    widest = max(bin(c).count("1") for c in covers)
    nodes = [0]

    def rec(uncovered: int, chosen: list[int], limit: int) -> Optional[list[int]]:
        if not uncovered:
            return list(chosen)
        left = limit - len(chosen)
        if left == 0 or bin(uncovered).count("1") > left * widest:
            return None
        nodes[0] += 1
        if nodes[0] > node_budget:
            raise _SearchAbandoned
        options = min((coverers.get(j, []) for j in _bits(uncovered)), key=len)
        for i in options:
            chosen.append(i)
            found = rec(uncovered & ~covers[i], chosen, limit)
            chosen.pop()
            if found is not None:
                return found
        return None

    try:
        for limit in range(1, depth + 1):
            found = rec(full, [], limit)
            if found is not None:
                return sorted(found)
    except _SearchAbandoned:
        log.debug("exact cover search abandoned after %d nodes", nodes[0])
    return None


class _SearchAbandoned(Exception):
    pass


def _cover_search(n_targets: int, candidates: Sequence, coverage: Callable[[object], int],
                  max_k: int, exact_limit: int, budget: int,
                  covers: Optional[Callable[[object, int], bool]] = None):
    """Return ``(K, uncovered_mask, reason)``; ``K`` is None when no cover was found."""
    full = (1 << n_targets) - 1
    if not n_targets:
        return [candidates[0]], 0, ""
    seed = coverage(candidates[0])
    if seed == full:
        return [candidates[0]], 0, ""

    if covers is not None:
        # single-element covers, failing fast on the targets the identity misses
        order = _bits(full & ~seed) + _bits(seed)
        spent = 0
        for c in candidates:
            ok = True
            for j in order:
                spent += 1
                if not covers(c, j):
                    ok = False
                    break
            if ok:
                return [c], 0, ""
            if spent > budget:
                break

    if len(candidates) * n_targets > budget:
        return None, full & ~seed, f"search budget exceeded ({len(candidates)} x {n_targets} > {budget})"

    table: list[int] = []
    kept: list = []
    seen: set[int] = set()
    for c in candidates:
        m = coverage(c)
        if m and m not in seen:
            seen.add(m)
            table.append(m)
            kept.append(c)
    reachable = 0
    for m in table:
        reachable |= m
    if reachable != full:
        return None, full & ~reachable, "some targets are covered by no candidate"

    chosen = [0] if table and table[0] == seed else []
    uncovered = full & ~(table[0] if chosen else 0)
    left_at_cap = None
    while uncovered:
        if len(chosen) == max_k:
            left_at_cap = uncovered
        gains = [bin(m & uncovered).count("1") for m in table]
        i = max(range(len(table)), key=lambda j: (gains[j], -j))
        chosen.append(i)
        uncovered &= ~table[i]
    if len(chosen) > 1:
        exact = _exact_cover(full, table, min(exact_limit, len(chosen) - 1))
        if exact is not None:
            chosen = exact
    chosen = sorted(chosen)
    if len(chosen) > max_k:
        # what the first max_k greedy picks leave uncovered
        return None, left_at_cap or 0, f"smallest cover found has {len(chosen)} > max_k={max_k} elements"
    return [kept[i] for i in chosen], 0, ""


def _candidates(t: Truncation, limit: int) -> list:
    if truncation_size(t) > limit:
        raise ContractError(f"truncation {t} is too large for a cover search")
    return list(iter_truncation(t))


def syndetic_search(t: Truncation, A: ReturnSet, max_k: int = 256, *,
                    quotient: str = "truncated", candidates: Optional[Sequence[Element]] = None,
                    exact_limit: int = 4, budget: int = 20_000_000):
    """Search for ``K`` with ``S_t = K o A``.  Returns a verified Certificate or an Exhaustion."""
    if quotient not in ("truncated", "exact"):
        raise ContractError(f"unknown quotient mode {quotient!r}")
    targets = list(iter_truncation(t))
    index = {s: j for j, s in enumerate(targets)}
    pool = list(candidates) if candidates is not None else targets
    e = identity(t.family)
    pool = [e] + [c for c in pool if c != e]
    if not A.members:
        return Exhaustion(SYNDETIC, t, "empty return set", max_k, targets[:EVIDENCE_CAP], len(targets))

    if quotient == "truncated":
        def coverage(k):
            m = 0
            for a in A.members:
                j = index.get(compose(k, a))
                if j is not None:
                    m |= 1 << j
            return m
        covers = None
        cost_per = len(A.members)
    else:
        def covers(k, j):
            a = left_quotient(k, targets[j])
            return a is not None and neighborhood_contains(A.U, apply(a, A.x))

        def coverage(k):
            m = 0
            for j in range(len(targets)):
                if covers(k, j):
                    m |= 1 << j
            return m
        cost_per = len(targets)

    scaled = budget * max(1, len(targets)) // max(1, cost_per)
    K, missing, reason = _cover_search(len(targets), pool, coverage, max_k, exact_limit, scaled, covers)
    if K is None:
        miss = [targets[j] for j in _bits(missing)]
        return Exhaustion(SYNDETIC, t, reason, max_k, miss[:EVIDENCE_CAP], len(miss))
    cert = Certificate(SYNDETIC, tuple(K), t, quotient=quotient)
    cert.verified = verify_certificate(cert, A)
    return cert


def modified_ap_search(t: Truncation, A: ReturnSet, max_k: int = 256, *,
                       candidates: Optional[Sequence[Element]] = None,
                       exact_limit: int = 4, budget: int = 20_000_000):
    """Search for ``K`` with ``(K o s)(x)`` meeting ``U`` for every ``s`` in ``S_t``.

    ``k`` covers ``s`` when ``compose(k, s)(x)`` lies in ``U``.  Elements
    with the same lift (see :func:`~semiflows.families.orbit_lifts`) are
    covered together, so they form one target.
    """
    x, U = A.x, A.U
    points, image = orbit_lifts(x, t)
    pool = list(candidates) if candidates is not None else list(iter_truncation(t))
    e = identity(t.family)
    pool = [e] + [c for c in pool if c != e]

    def covers(k, j):
        return neighborhood_contains(U, image(k, points[j]))

    def coverage(k):
        m = 0
        for j in range(len(points)):
            if covers(k, j):
                m |= 1 << j
        return m

    K, missing, reason = _cover_search(len(points), pool, coverage, max_k, exact_limit, budget, covers)
    if K is None:
        lost = {points[j] for j in _bits(missing)}
        miss = [s for s in iter_truncation(t) if lift_of(s, x) in lost]
        return Exhaustion(MODIFIED, t, reason, max_k, miss[:EVIDENCE_CAP], len(miss))
    cert = Certificate(MODIFIED, tuple(K), t)
    cert.verified = verify_certificate(cert, A)
    return cert


def verify_certificate(cert: Certificate, A: ReturnSet) -> bool:
    """Recheck a certificate element by element over its truncation.

    ``K`` may hold any semigroup elements, inside the truncation or not.
    """
    t = cert.truncation
    x, U = A.x, A.U
    if cert.kind == MODIFIED:
        return all(any(neighborhood_contains(U, apply(compose(k, s), x)) for k in cert.K)
                   for s in iter_truncation(t))
    if cert.quotient == "truncated":
        members = set(A.members)
        if any(not neighborhood_contains(U, apply(a, x)) for a in members):
            return False
        products = {compose(k, a) for k in cert.K for a in members}
        return all(s in products for s in iter_truncation(t))
    for s in iter_truncation(t):
        for k in cert.K:
            a = left_quotient(k, s)
            if a is not None and compose(k, a) == s and neighborhood_contains(U, apply(a, x)):
                break
        else:
            return False
    return True


def arc_net(halfwidth) -> list:
    """Rotations ``j/M`` whose open arcs of the given halfwidth cover the circle.

    ``M`` is the least integer with ``1/(2M) < halfwidth``.
    """
    from .families import Affine

    h = as_rational(halfwidth)
    M = math.floor(1 / (2 * h)) + 1
    return [Affine(1, Fraction(j, M)) for j in range(M)]


# -- orbits and minimality --------------------------------------------------

@dataclass(frozen=True)
class OrbitSample:
    base: object
    truncation: Truncation
    points: tuple


def orbit_sample(x, t: Truncation, max_points: int = 1_000_000) -> OrbitSample:
    pts = orbit_points(x, t, max_points)
    return OrbitSample(x, t, tuple(sorted(pts)))


@dataclass
class MinimalityVerdict:
    status: str
    epsilon: Fraction
    truncation: Truncation
    evidence: list = field(default_factory=list)
    witness: Optional[tuple] = None

    def to_dict(self) -> dict:
        out = {
            "status": self.status,
            "epsilon": str(self.epsilon),
            "truncation": format_truncation(self.truncation),
            "evidence": self.evidence,
        }
        if self.witness is not None:
            out["witness"] = [format_point(p) for p in self.witness[:EVIDENCE_CAP]]
        return out


def _is_invariant(points: frozenset, elements: Sequence[Element]) -> bool:
    return all(apply(s, p) in points for s in elements for p in points)


def epsilon_minimality(x, t: Truncation, eps, *, budget: int = 5_000_000,
                       max_points: int = 200_000) -> MinimalityVerdict:
    """Decide minimality of the orbit closure of ``x`` at resolution ``eps``.

    1. If the truncation contains rotations whose angles leave no circle gap
       wider than ``2 eps``, every orbit is ``eps``-dense in the whole circle.
    2. Otherwise each orbit point ``y`` gets its own orbit ``O_y``.  An
       ``O_y`` that is invariant under every truncation element and farther
       than ``eps`` from ``x`` is an exact witness against minimality.
    3. If every ``O_y`` is ``eps``-dense in the orbit of ``x`` the verdict is
       minimal at this resolution, else inconclusive.
    """
    eps = as_rational(eps)
    if eps <= 0:
        raise ContractError("eps must be positive")
    rotations = rotation_amounts(t)
    if rotations is not None:
        gap = max_circle_gap(rotations)
        if gap <= 2 * eps:
            return MinimalityVerdict(MINIMAL, eps, t, [{
                "kind": "rotation-net",
                "rotations": len(rotations),
                "max_gap": str(gap),
            }])
    size = truncation_size(t)
    try:
        Y = orbit_points(x, t, max_points)
    except ContractError as exc:
        return MinimalityVerdict(INCONCLUSIVE, eps, t, [{"kind": "orbit-too-large", "detail": str(exc)}])
    if len(Y) * size * 2 > budget:
        return MinimalityVerdict(INCONCLUSIVE, eps, t, [{
            "kind": "budget", "orbit_points": len(Y), "elements": size}])
    elements = list(iter_truncation(t))
    ordered = sorted(Y)
    orbits = {y: frozenset(apply(s, y) for s in elements) for y in ordered}
    for y in ordered:
        O = orbits[y]
        if _is_invariant(O, elements) and set_distance(x, O) > eps:
            return MinimalityVerdict(NOT_MINIMAL, eps, t, [{
                "kind": "invariant-set",
                "generated_by": format_point(y),
                "size": len(O),
                "distance_to_base": str(set_distance(x, O)),
            }], tuple(sorted(O)))
    for y in ordered:
        if not epsilon_dense(sorted(orbits[y]), ordered, eps):
            return MinimalityVerdict(INCONCLUSIVE, eps, t, [{
                "kind": "sparse-orbit", "point": format_point(y), "orbit_points": len(orbits[y])}])
    exact = all(orbits[y] == Y for y in ordered) and _is_invariant(Y, elements)
    return MinimalityVerdict(MINIMAL, eps, t, [{
        "kind": "exact-finite-cycle" if exact else "orbit-density",
        "orbit_points": len(Y),
    }], tuple(ordered) if exact else None)


@dataclass
class ProximalReport:
    proximal: bool
    element: Element
    distance: Fraction
    scanned: int

    def to_dict(self) -> dict:
        return {
            "proximal": self.proximal,
            "element": format_element(self.element),
            "distance": str(self.distance),
            "scanned": self.scanned,
        }


def proximal_pair_check(x, y, t: Truncation, eps, max_scan: Optional[int] = None) -> ProximalReport:
    """First element (in truncation order) bringing ``x`` and ``y`` within ``eps``.

    Without a witness the closest approach over the scanned elements is
    returned; ``scanned`` tells whether the whole truncation was covered.
    """
    eps = as_rational(eps)
    if eps <= 0:
        raise ContractError("eps must be positive")
    best, best_s, scanned = None, None, 0
    for s in iter_truncation(t):
        if max_scan is not None and scanned >= max_scan:
            break
        scanned += 1
        d = distance(apply(s, x), apply(s, y))
        if d < eps:
            return ProximalReport(True, s, d, scanned)
        if best is None or d < best:
            best, best_s = d, s
    return ProximalReport(False, best_s, best, scanned)


# -- semicascade and group bridges ------------------------------------------

def cascade_ap_bridge(A: ReturnSet) -> WindowedSet:
    """Exponents of a twist return set as a :class:`WindowedSet` with the truncation cap as horizon."""
    if A.truncation.family != "twist":
        raise ContractError("the bridge needs an exponent-indexed (twist) return set")
    exps = [s.n for s in A.members]
    if 0 not in exps:
        raise HypothesisViolation("0 is not in the return set; the window lemma does not apply")
    return WindowedSet.from_iterable(exps, A.truncation.bound)


@dataclass
class GroupCertificate:
    period: int
    residues: tuple
    K: tuple
    window: tuple

    def to_dict(self) -> dict:
        return {"period": self.period, "residues": list(self.residues),
                "K": list(self.K), "window": list(self.window)}


def group_completion_certificate(x: DiskPoint, U: Neighborhood,
                                 window: Optional[int] = None) -> Optional[GroupCertificate]:
    """Syndeticity in ``Z`` of ``A_U = {n in Z : f^n(x) in U}`` for the invertible twist ``f``.

    ``f^n(x)`` depends only on ``n`` mod the radius denominator ``b``, so
    ``A_U`` is a union of residue classes.  Returns ``K`` with ``K + A_U = Z``
    (smallest found), or None when ``A_U`` is empty.
    """
    if not isinstance(x, DiskPoint):
        raise ContractError("group completion acts on disk points")
    b = x.radius.denominator
    W = window if window is not None else 4 * b
    hits = {n for n in range(-W, W + 1)
            if neighborhood_contains(U, DiskPoint(x.radius, x.theta + n * x.radius))}
    residues = tuple(sorted({n % b for n in hits}))
    for n in range(-W, W + 1):
        if (n % b in residues) != (n in hits):
            raise AssertionError("return times are not periodic in the radius denominator")
    if not residues:
        return None
    masks = []
    for k in range(b):
        m = 0
        for r in range(b):
            if (r - k) % b in residues:
                m |= 1 << r
        masks.append(m)
    K, _, _ = _cover_search(b, list(range(b)), lambda k: masks[k], b, 4, 10 ** 7)
    return GroupCertificate(b, residues, tuple(K), (-W, W))


def group_completion_ap(x: DiskPoint, U: Neighborhood) -> bool:
    return group_completion_certificate(x, U) is not None


def describe_return_set(A: ReturnSet) -> dict:
    return {
        "point": format_point(A.x),
        "neighborhood": format_neighborhood(A.U),
        "truncation": format_truncation(A.truncation),
        "size": len(A.members),
        "members": [format_element(s) for s in A.members[:EVIDENCE_CAP]],
    }
