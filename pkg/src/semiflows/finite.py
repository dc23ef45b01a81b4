"""Finite transformation monoids acting on ``{0, ..., n-1}``.

Every map is a tuple ``image`` with ``image[i]`` the image of point ``i``;
``compose(a, b)`` applies ``b`` first.  On a finite discrete space the
smallest neighbourhood of ``x`` is ``{x}`` and orbit closures are orbits, so
both almost-periodicity definitions and minimality become finite checks.

The monoid always contains the identity.
"""
from __future__ import annotations

import itertools
import random
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Iterable, Iterator, Optional, Sequence

from .errors import ContractError
from .zplus import WindowedSet, covers_by_window, window_hits

MapTable = tuple[int, ...]

__all__ = [
    "MapTable",
    "ActionSystem",
    "FiniteOrbit",
    "CheckReport",
    "compose",
    "identity",
    "monoid_closure",
    "orbit",
    "minimal_subsets",
    "is_minimal_orbit_closure",
    "is_ap_modified",
    "is_ap_syndetic",
    "modified_ap_witness",
    "verify_theorem",
    "verify_flow_equivalence",
    "verify_semicascade_coincidence",
    "verify_ap_existence",
    "cascade_return_exponents",
    "enumerate_systems",
    "sample_systems",
    "sweep",
    "dumps_system",
    "loads_system",
]


def identity(n: int) -> MapTable:
    return tuple(range(n))


def compose(a: MapTable, b: MapTable) -> MapTable:
    """``a o b``: apply ``b``, then ``a``."""
    return tuple(a[i] for i in b)


def _is_bijection(table: MapTable) -> bool:
    return len(set(table)) == len(table)


@dataclass(frozen=True)
class ActionSystem:
    n: int
    generators: tuple[MapTable, ...]
    monoid: tuple[MapTable, ...] = field(repr=False)

    def __contains__(self, table) -> bool:
        return tuple(table) in self._members

    @cached_property
    def _members(self) -> frozenset:
        return frozenset(self.monoid)

    @property
    def is_group(self) -> bool:
        return all(_is_bijection(g) for g in self.generators)


@dataclass(frozen=True)
class FiniteOrbit:
    base: int
    points: frozenset


def _check_table(table: Sequence[int], n: int) -> MapTable:
    table = tuple(int(v) for v in table)
    if len(table) != n:
        raise ContractError(f"map table has length {len(table)}, expected {n}")
    if any(not 0 <= v < n for v in table):
        raise ContractError(f"map table {table} has entries outside [0, {n - 1}]")
    return table


def monoid_closure(generators: Iterable[Sequence[int]], n: int) -> ActionSystem:
    """Close ``generators`` under composition, adding the identity.

    Breadth-first from the identity; the stored monoid is sorted
    lexicographically by image.
    """
    if n <= 0:
        raise ContractError("a finite action needs at least one point")
    gens = tuple(_check_table(g, n) for g in generators)
    if not gens:
        raise ContractError("at least one generator is required")
    e = identity(n)
    seen = {e}
    queue = deque([e])
    while queue:
        s = queue.popleft()
        for g in gens:
            t = compose(g, s)
            if t not in seen:
                seen.add(t)
                queue.append(t)
    return ActionSystem(n, gens, tuple(sorted(seen)))


def _check_point(system: ActionSystem, x: int) -> None:
    if not 0 <= x < system.n:
        raise ContractError(f"point {x} outside [0, {system.n - 1}]")


def orbit(system: ActionSystem, x: int) -> FiniteOrbit:
    _check_point(system, x)
    return FiniteOrbit(x, frozenset(s[x] for s in system.monoid))


def _reachable(system: ActionSystem) -> list[frozenset]:
    # Generator graph reachability; independent of the monoid element list.
    out = []
    for x in range(system.n):
        seen = {x}
        stack = [x]
        while stack:
            y = stack.pop()
            for g in system.generators:
                z = g[y]
                if z not in seen:
                    seen.add(z)
                    stack.append(z)
        out.append(frozenset(seen))
    return out


def minimal_subsets(system: ActionSystem) -> list[frozenset]:
    """All minimal invariant subsets, sorted by their smallest point.

    ``M`` is minimal iff every point of ``M`` reaches exactly ``M``.  These are
    the terminal strongly connected classes of the generator graph.
    """
    reach = _reachable(system)
    found = set()
    for x in range(system.n):
        R = reach[x]
        if all(reach[y] == R for y in R):
            found.add(R)
    return sorted(found, key=lambda M: sorted(M))


def is_minimal_orbit_closure(system: ActionSystem, x: int) -> bool:
    return orbit(system, x).points in minimal_subsets(system)


def _neighbourhood(system: ActionSystem, x: int, U) -> frozenset:
    _check_point(system, x)
    U = frozenset({x} if U is None else U)
    if x not in U:
        raise ContractError(f"neighbourhood {sorted(U)} does not contain {x}")
    return U


def is_ap_modified(system: ActionSystem, x: int, U: Optional[Iterable[int]] = None) -> bool:
    """Modified almost periodicity of ``x`` for the neighbourhood ``U`` (default ``{x}``).

    Some finite ``K`` has, for every ``s``, a ``k`` in ``K`` with
    ``k(s(x))`` in ``U``.  Any witness embeds in the whole monoid, so ``K`` is
    taken to be the monoid.
    """
    U = _neighbourhood(system, x, U)
    K = system.monoid
    return all(any(k[s[x]] in U for k in K) for s in system.monoid)


def is_ap_syndetic(system: ActionSystem, x: int, U: Optional[Iterable[int]] = None) -> bool:
    """Syndetic almost periodicity: ``monoid == {k o a : k in K, a in A}`` for some ``K``.

    ``A`` is the return set ``{s : s(x) in U}``.  ``K`` is taken to be the
    whole monoid.
    """
    U = _neighbourhood(system, x, U)
    A = [s for s in system.monoid if s[x] in U]
    products = {compose(k, a) for k in system.monoid for a in A}
    return products >= set(system.monoid)


def modified_ap_witness(system: ActionSystem, x: int,
                        U: Optional[Iterable[int]] = None) -> Optional[tuple[MapTable, ...]]:
    """A small witness ``K`` for :func:`is_ap_modified`, by greedy shrinking of the monoid."""
    U = _neighbourhood(system, x, U)
    images = {s[x] for s in system.monoid}

    def ok(K):
        return all(any(k[y] in U for k in K) for y in images)

    K = list(system.monoid)
    if not ok(K):
        return None
    for k in list(K):
        trial = [c for c in K if c != k]
        if trial and ok(trial):
            K = trial
    return tuple(K)


# -- theorem-level checks ---------------------------------------------------

@dataclass
class CheckReport:
    """Outcome of a pointwise check on one system."""

    check: str
    system: ActionSystem
    passed: bool
    counterexamples: list[int] = field(default_factory=list)
    details: dict = field(default_factory=dict)


def verify_theorem(system: ActionSystem) -> CheckReport:
    bad = [x for x in range(system.n)
           if is_minimal_orbit_closure(system, x) != is_ap_modified(system, x)]
    return CheckReport("theorem", system, not bad, bad)


def verify_flow_equivalence(system: ActionSystem) -> CheckReport:
    if not system.is_group:
        raise ContractError("flow equivalence needs bijective generators")
    bad = [x for x in range(system.n)
           if is_minimal_orbit_closure(system, x) != is_ap_syndetic(system, x)]
    return CheckReport("flow", system, not bad, bad)


def cascade_return_exponents(f: MapTable, x: int, horizon: int) -> WindowedSet:
    """``{m in [0, horizon] : f^m(x) = x}`` as a :class:`WindowedSet`."""
    hits = []
    y = x
    for m in range(horizon + 1):
        if y == x:
            hits.append(m)
        y = f[y]
    return WindowedSet(tuple(hits), horizon)


def _cascade_period(f: MapTable, x: int) -> Optional[int]:
    # return time of x under f, or None if x is not periodic
    y = f[x]
    for m in range(1, len(f) + 1):
        if y == x:
            return m
        y = f[y]
    return None


def verify_semicascade_coincidence(system: ActionSystem) -> CheckReport:
    """Compare the two almost-periodicity definitions for a semicascade.

    A semicascade is acted on by the exponents ``Z+``, not by the finite
    quotient monoid of powers of ``f``.  With ``A = {m : f^m(x) = x}``:

    * syndetic: ``Z+ = K + A`` for a finite ``K``;
    * modified: ``(K + m)`` meets ``A`` for every ``m``.

    ``A`` is either ``{0}`` or ``p Z+`` with ``p <= n``, so both are decided
    from the return period.  They are cross-checked against the window
    predicates at horizon ``2n`` and radius ``n - 1`` and against
    :func:`is_ap_modified` on the monoid.  Syndeticity inside the finite
    quotient monoid is recorded in ``details`` but does not take part in the
    comparison: ``K = monoid`` always works there.
    """
    if len(system.generators) != 1:
        raise ContractError("a semicascade has exactly one generator")
    f = system.generators[0]
    n = system.n
    horizon, radius = 2 * n, n - 1
    bad = []
    quotient_mismatch = []
    for x in range(n):
        period = _cascade_period(f, x)
        syndetic = modified = period is not None
        A = cascade_return_exponents(f, x, horizon)
        values = (syndetic, modified, covers_by_window(A, radius),
                  window_hits(A, radius), is_ap_modified(system, x))
        if len(set(values)) != 1:
            bad.append(x)
        if is_ap_syndetic(system, x) != modified:
            quotient_mismatch.append(x)
    return CheckReport("cascade", system, not bad, bad,
                       {"quotient_syndetic_mismatch": quotient_mismatch})


def verify_ap_existence(system: ActionSystem) -> CheckReport:
    witnesses = [x for x in range(system.n) if is_ap_modified(system, x)]
    return CheckReport("existence", system, bool(witnesses), [],
                       {"witness": witnesses[0] if witnesses else None})


# -- corpora and sweeps -----------------------------------------------------

def enumerate_systems(n: int, generators: int, permutations: bool = False) -> Iterator[tuple[MapTable, ...]]:
    """Generator tuples in lexicographic order: all maps, or all permutations."""
    if permutations:
        tables = list(itertools.permutations(range(n)))
    else:
        tables = list(itertools.product(range(n), repeat=n))
    return itertools.product(tables, repeat=generators)


def sample_systems(n: int, generators: int, count: int, seed: int,
                   permutations: bool = False) -> list[tuple[MapTable, ...]]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        gens = []
        for _ in range(generators):
            if permutations:
                perm = list(range(n))
                rng.shuffle(perm)
                gens.append(tuple(perm))
            else:
                gens.append(tuple(rng.randrange(n) for _ in range(n)))
        out.append(tuple(gens))
    return out


CHECKS: dict[str, Callable[[ActionSystem], CheckReport]] = {
    "theorem": verify_theorem,
    "flow": verify_flow_equivalence,
    "cascade": verify_semicascade_coincidence,
    "existence": verify_ap_existence,
}


def _run_chunk(args):
    check, n, chunk = args
    fn = CHECKS[check]
    rows = []
    for index, gens in chunk:
        report = fn(monoid_closure(gens, n))
        rows.append({
            "id": index,
            "n": n,
            "generators": len(gens),
            "passed": report.passed,
            "counterexample": report.counterexamples[0] if report.counterexamples else None,
        })
    return rows


def sweep(check: str, n: int, systems: Iterable[tuple[MapTable, ...]],
          workers: int = 1, chunk_size: int = 2000) -> list[dict]:
    """Run ``check`` over ``systems``; one row per system, ordered by system index.

    Rows carry ``id, n, generators, passed, counterexample`` (the first
    failing point, if any).
    """
    if check not in CHECKS:
        raise ContractError(f"unknown check {check!r}")
    indexed = list(enumerate(systems))
    chunks = [(check, n, indexed[i:i + chunk_size])
              for i in range(0, len(indexed), chunk_size)]
    if workers > 1 and len(chunks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_run_chunk, chunks))
    else:
        parts = [_run_chunk(c) for c in chunks]
    rows = [row for part in parts for row in part]
    rows.sort(key=lambda r: r["id"])
    return rows


def dumps_system(system: ActionSystem) -> str:
    lines = [str(system.n)] + [" ".join(map(str, g)) for g in system.generators]
    return "\n".join(lines) + "\n"


def loads_system(text: str) -> ActionSystem:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ContractError("empty system description")
    try:
        n = int(lines[0])
        gens = [tuple(int(v) for v in ln.split()) for ln in lines[1:]]
    except ValueError as exc:
        raise ContractError(f"malformed system description: {exc}") from None
    return monoid_closure(gens, n)
