"""Finite-horizon combinatorics of subsets of the non-negative integers.

A :class:`WindowedSet` is a subset ``A`` of ``[0, N]`` containing 0.  Two
conditions on a window radius ``R`` are compared:

* ``covers_by_window``: every ``m`` in ``[0, N]`` is ``k + a`` with
  ``0 <= k <= R`` and ``a`` in ``A`` (the sumset ``{0..R} + A`` fills the
  horizon);
* ``window_hits``: every window ``[m, m + R]`` with ``m + R <= N`` meets ``A``.

With ``0 in A`` the two agree at every horizon.  The scalar functions work
on Python ints used as bitmasks; the ``*_batch`` functions evaluate many sets
at once on a boolean membership matrix (rows are sets, columns are
``0..N``).
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np

from .errors import ContractError

__all__ = [
    "WindowedSet",
    "covers_by_window",
    "window_hits",
    "min_window",
    "lemma_equivalence",
    "parse_windowed_set",
    "membership_matrix",
    "all_subsets_with_zero",
    "random_subsets_with_zero",
    "covers_by_window_batch",
    "window_hits_batch",
    "min_window_batch",
]


@dataclass(frozen=True)
class WindowedSet:
    """A finite truncation of a subset of Z+ at ``horizon``."""

    elements: tuple[int, ...]
    horizon: int

    def __post_init__(self):
        elements = tuple(int(e) for e in self.elements)
        if self.horizon < 0:
            raise ContractError(f"horizon must be non-negative, got {self.horizon}")
        if any(b <= a for a, b in zip(elements, elements[1:])):
            raise ContractError("elements must be strictly increasing")
        if not elements or elements[0] != 0:
            raise ContractError("0 must be a member of the set")
        if elements[-1] > self.horizon:
            raise ContractError(
                f"element {elements[-1]} exceeds horizon {self.horizon}")
        object.__setattr__(self, "elements", elements)

    @classmethod
    def from_iterable(cls, values: Iterable[int], horizon: Optional[int] = None) -> "WindowedSet":
        elements = sorted(set(int(v) for v in values))
        if horizon is None:
            horizon = elements[-1] if elements else 0
        return cls(tuple(elements), horizon)

    @classmethod
    def from_mask(cls, mask: int, horizon: int) -> "WindowedSet":
        return cls(tuple(i for i in range(horizon + 1) if mask >> i & 1), horizon)

    @property
    def mask(self) -> int:
        m = 0
        for e in self.elements:
            m |= 1 << e
        return m

    def __contains__(self, value: int) -> bool:
        return 0 <= value <= self.horizon and bool(self.mask >> value & 1)

    def __len__(self):
        return len(self.elements)

    def __str__(self):
        return f"{{{','.join(map(str, self.elements))}}}@{self.horizon}"


def _check_radius(A: WindowedSet, R: int) -> None:
    if R < 0:
        raise ContractError(f"window radius must be non-negative, got {R}")
    if R > A.horizon:
        raise ContractError(f"window radius {R} exceeds horizon {A.horizon}")


def covers_by_window(A: WindowedSet, R: int) -> bool:
    """True iff ``{0, ..., R} + A`` contains every integer in ``[0, A.horizon]``."""
    _check_radius(A, R)
    full = (1 << (A.horizon + 1)) - 1
    mask = A.mask
    sumset = 0
    for k in range(R + 1):
        sumset |= mask << k
    return sumset & full == full


def window_hits(A: WindowedSet, R: int) -> bool:
    """True iff every window ``[m, m + R]`` inside ``[0, A.horizon]`` meets ``A``."""
    _check_radius(A, R)
    starts = A.horizon - R + 1
    need = (1 << starts) - 1
    mask = A.mask
    hit = 0
    for k in range(R + 1):
        hit |= mask >> k
    return hit & need == need


def min_window(A: WindowedSet) -> int:
    """Smallest ``R`` for which :func:`window_hits` holds.

    Equals the largest gap between consecutive members, counting a sentinel
    at ``horizon + 1``, minus one.  For ``A = {0}`` this is the horizon.
    """
    points = A.elements + (A.horizon + 1,)
    return max(b - a for a, b in zip(points, points[1:])) - 1


def lemma_equivalence(A: WindowedSet, R: int) -> bool:
    return covers_by_window(A, R) == window_hits(A, R)


_RANGE = re.compile(r"^(\d+)\.\.(\d+|N)(?::(\d+))?$")


def parse_windowed_set(text: str, horizon: Optional[int] = None) -> WindowedSet:
    """Parse ``"0,4..N:2"`` style descriptions.

    Items are comma separated: a bare integer, or ``lo..hi`` with an optional
    ``:step``.  ``N`` stands for the horizon and needs ``horizon`` to be
    given.  Without an explicit horizon the largest element is used.
    """
    values: set[int] = set()
    for raw in text.split(","):
        item = raw.strip()
        if not item:
            continue
        if item.isdigit():
            values.add(int(item))
            continue
        m = _RANGE.match(item)
        if m is None:
            raise ContractError(f"cannot parse set item {item!r}")
        lo, hi, step = m.group(1), m.group(2), m.group(3)
        if hi == "N":
            if horizon is None:
                raise ContractError("'N' in a set pattern needs an explicit horizon")
            hi_v = horizon
        else:
            hi_v = int(hi)
        step_v = int(step) if step else 1
        if step_v <= 0:
            raise ContractError("range step must be positive")
        values.update(range(int(lo), hi_v + 1, step_v))
    return WindowedSet.from_iterable(values, horizon)


# -- batch evaluation -------------------------------------------------------

def membership_matrix(sets: Iterable[WindowedSet], horizon: int) -> np.ndarray:
    sets = list(sets)
    M = np.zeros((len(sets), horizon + 1), dtype=bool)
    for i, A in enumerate(sets):
        if A.horizon != horizon:
            raise ContractError("all sets in a batch must share the horizon")
        M[i, list(A.elements)] = True
    return M


def all_subsets_with_zero(horizon: int) -> np.ndarray:
    """Every subset of ``[0, horizon]`` containing 0, one row each, in mask order."""
    if horizon > 24:
        raise ContractError("exhaustive corpus limited to horizon <= 24")
    masks = np.arange(1 << horizon, dtype=np.int64)
    M = np.zeros((masks.size, horizon + 1), dtype=bool)
    M[:, 0] = True
    for j in range(1, horizon + 1):
        M[:, j] = (masks >> (j - 1)) & 1
    return M


def random_subsets_with_zero(count: int, horizon: int, rng: np.random.Generator) -> np.ndarray:
    """Random sets with a per-row density drawn uniformly, so gap sizes vary widely."""
    density = rng.uniform(0.0, 1.0, size=(count, 1)) ** 2
    M = rng.random((count, horizon + 1)) < density
    M[:, 0] = True
    return M


def covers_by_window_batch(M: np.ndarray, R: int) -> np.ndarray:
    """Row-wise :func:`covers_by_window`, computed as a shifted-OR sumset."""
    horizon = M.shape[1] - 1
    if not 0 <= R <= horizon:
        raise ContractError(f"window radius {R} outside [0, {horizon}]")
    sumset = M.copy()
    for k in range(1, R + 1):
        sumset[:, k:] |= M[:, :-k]
    return sumset.all(axis=1)


def window_hits_batch(M: np.ndarray, R: int) -> np.ndarray:
    """Row-wise :func:`window_hits`, computed from prefix counts."""
    horizon = M.shape[1] - 1
    if not 0 <= R <= horizon:
        raise ContractError(f"window radius {R} outside [0, {horizon}]")
    counts = np.zeros((M.shape[0], horizon + 2), dtype=np.int32)
    np.cumsum(M, axis=1, out=counts[:, 1:])
    starts = np.arange(horizon - R + 1)
    in_window = counts[:, starts + R + 1] - counts[:, starts]
    return (in_window > 0).all(axis=1)


def min_window_batch(M: np.ndarray) -> np.ndarray:
    """Row-wise :func:`min_window`: the longest run of consecutive non-members."""
    run = np.zeros(M.shape[0], dtype=np.int64)
    longest = np.zeros(M.shape[0], dtype=np.int64)
    for j in range(M.shape[1]):
        run = np.where(M[:, j], 0, run + 1)
        np.maximum(longest, run, out=longest)
    return longest
