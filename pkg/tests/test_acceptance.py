"""Acceptance criteria, one test each; the summary lists a PASS/FAIL line per criterion."""
import json
import time
from fractions import Fraction as F

import numpy as np
import pytest

from semiflows import claims, finite, zplus
from semiflows.cli import main
from semiflows.engine import (
    MINIMAL,
    MODIFIED,
    NOT_MINIMAL,
    SYNDETIC,
    Certificate,
    epsilon_minimality,
    group_completion_ap,
    group_completion_certificate,
    modified_ap_search,
    return_set,
    syndetic_search,
    verify_certificate,
)
from semiflows.families import (
    Affine,
    Scale,
    Truncation,
    TwistPower,
    apply,
    compose,
    enumerate_truncation,
    farey_points,
    iter_truncation,
)
from semiflows.spaces import Arc, CirclePoint, DiskPoint, OpenInterval, UnitIntervalPoint, neighborhood_contains, polar_box


def max_gap_minus_one(M: np.ndarray) -> np.ndarray:
    # largest distance between consecutive members, sentinel member at horizon + 1
    rows, cols = M.shape
    full = np.concatenate([M, np.ones((rows, 1), dtype=bool)], axis=1)
    idx = np.arange(cols + 1)
    last = np.maximum.accumulate(np.where(full, idx, 0), axis=1)
    prev = np.concatenate([np.zeros((rows, 1), dtype=np.int64), last[:, :-1]], axis=1)
    gaps = np.where(full, idx - prev, 0)
    gaps[:, 0] = 0
    return gaps.max(axis=1) - 1


@pytest.fixture(scope="module")
def lemma_corpus():
    t0 = time.perf_counter()
    M = zplus.all_subsets_with_zero(18)
    rng = np.random.default_rng(0)
    Mr = zplus.random_subsets_with_zero(100_000, 200, rng)
    radii = rng.integers(0, 201, size=100_000)
    return M, Mr, radii, t0


def test_criterion_01_lemma_equivalence(lemma_corpus, verdict):
    M, Mr, radii, t0 = lemma_corpus
    disagree = sum(int(np.count_nonzero(zplus.covers_by_window_batch(M, R) != zplus.window_hits_batch(M, R)))
                   for R in range(19))
    for R in np.unique(radii):
        rows = Mr[radii == R]
        disagree += int(np.count_nonzero(
            zplus.covers_by_window_batch(rows, int(R)) != zplus.window_hits_batch(rows, int(R))))
    elapsed = time.perf_counter() - t0
    verdict(1, "covers_by_window == window_hits", M.shape[0] == 2 ** 18 and disagree == 0 and elapsed < 60,
            f"{M.shape[0]} sets x 19 radii + 100000 random pairs, {disagree} disagreements, {elapsed:.1f}s")


def test_criterion_02_min_window(lemma_corpus, verdict):
    M, Mr, _, _ = lemma_corpus
    bad = int(np.count_nonzero(zplus.min_window_batch(M) != max_gap_minus_one(M)))
    bad += int(np.count_nonzero(zplus.min_window_batch(Mr) != max_gap_minus_one(Mr)))
    # least hitting radius, found by scanning, on the exhaustive corpus
    first = np.full(M.shape[0], -1)
    for R in range(19):
        first = np.where((first < 0) & zplus.window_hits_batch(M, R), R, first)
    bad += int(np.count_nonzero(first != max_gap_minus_one(M)))
    sample = [zplus.WindowedSet.from_iterable(np.flatnonzero(r), 200) for r in Mr[:2000]]
    bad += sum(zplus.min_window(A) != g for A, g in zip(sample, max_gap_minus_one(Mr[:2000])))
    verdict(2, "min_window == max gap - 1", bad == 0, f"{bad} disagreements")


def test_criterion_03_theorem(verdict):
    t0 = time.perf_counter()
    rows = finite.sweep("theorem", 5, finite.enumerate_systems(5, 1))
    rows2 = finite.sweep("theorem", 3, finite.enumerate_systems(3, 2))
    elapsed = time.perf_counter() - t0
    bad = sum(not r["passed"] for r in rows + rows2)
    verdict(3, "minimal <=> every point modified-AP", len(rows) == 3125 and len(rows2) == 729 and bad == 0
            and elapsed < 60, f"{len(rows)} + {len(rows2)} systems, {bad} counterexamples, {elapsed:.1f}s")


def test_criterion_04_semicascade(verdict):
    total = bad = 0
    for n in range(1, 7):
        rows = finite.sweep("cascade", n, finite.enumerate_systems(n, 1))
        total += len(rows)
        bad += sum(not r["passed"] for r in rows)
    verdict(4, "syndetic-AP == modified-AP for single generators", bad == 0,
            f"{total} systems with n <= 6, {bad} mismatches")


def test_criterion_05_flow(verdict):
    total = bad = 0
    for n, g in [(1, 1), (2, 1), (3, 1), (4, 1), (1, 2), (2, 2), (3, 2), (4, 2), (5, 1)]:
        rows = finite.sweep("flow", n, finite.enumerate_systems(n, g, permutations=True))
        total += len(rows)
        bad += sum(not r["passed"] for r in rows)
    verdict(5, "flows: minimal <=> syndetic-AP", bad == 0, f"{total} permutation systems, {bad} counterexamples")


def test_criterion_06_existence(verdict):
    total = bad = 0
    corpora = [(n, 1, False) for n in range(1, 6)] + [(2, 2, False), (3, 2, False)]
    corpora += [(n, g, True) for n, g in [(4, 2), (5, 1)]]
    for n, g, perms in corpora:
        rows = finite.sweep("existence", n, finite.enumerate_systems(n, g, perms))
        total += len(rows)
        bad += sum(not r["passed"] for r in rows)
    verdict(6, "every finite system has a modified-AP point", bad == 0, f"{total} systems, {bad} without")


def test_criterion_07_example_one(verdict):
    t = Truncation("scale", 20)
    x, U = UnitIntervalPoint(F(1, 2)), OpenInterval(F(1, 3), F(2, 3))
    A = return_set(x, U, t)
    cert = syndetic_search(t, A, max_k=len(enumerate_truncation(t)))
    v = epsilon_minimality(x, t, F(1, 100))
    ok = (A.members == (Scale(1),)
          and isinstance(cert, Certificate) and cert.verified and set(cert.K) == set(enumerate_truncation(t))
          and v.status == NOT_MINIMAL and v.witness == (UnitIntervalPoint(0),))
    verdict(7, "scaling monoid: return set, syndetic K, non-minimality", ok,
            f"|A| = {len(A.members)}, |K| = {len(getattr(cert, 'K', ()))}, {v.status}")


@pytest.fixture(scope="module")
def claim_runs(tmp_path_factory):
    d = tmp_path_factory.mktemp("claims")
    times, codes = [], []
    for name in ("a.json", "b.json"):
        t0 = time.perf_counter()
        codes.append(main(["claims", "run", "--format", "json", "--output", str(d / name)]))
        times.append(time.perf_counter() - t0)
    a, b = (d / "a.json").read_bytes(), (d / "b.json").read_bytes()
    reports = {r["claim"]: r for r in json.loads(a)}
    return a, b, reports, times, codes


def test_criterion_08_example_two(claim_runs, verdict):
    _, _, reports, _, _ = claim_runs
    v = epsilon_minimality(CirclePoint(0), Truncation("affine", 200), F(1, 100))
    c6 = reports["C6"]
    pairs_ok = (c6["truncation"] == "affine:200" and len(c6["evidence"]) == 10
                and all(e["proximal"] and F(e["distance"]) < F(1, 100) for e in c6["evidence"]))
    # compose(h, s)(0) = q_s / 81 depends on s only through q_s, so every offset of S_200 covers every s
    h, U = Affine(F(1, 81), 0), Arc(CirclePoint(0), F(1, 27))
    offsets = [q for q in farey_points(200) if q < 1]
    sub = all(neighborhood_contains(U, apply(compose(h, Affine(1, q)), CirclePoint(0))) for q in offsets)
    sub &= all(neighborhood_contains(U, apply(compose(h, s), CirclePoint(0)))
               for s in iter_truncation(Truncation("affine", 27)))
    c5 = reports["C5"]
    c5_ok = c5["status"] in (claims.REFUTED, claims.INCONCLUSIVE) and c5["evidence"]
    if c5["status"] == claims.REFUTED:
        c5_ok = c5_ok and c5["conflict"] and all(r["verified"] for r in c5["evidence"][2]["ladder"])
    verdict(8, "affine circle: minimality, proximality, h = 1/81, C5 verdict",
            v.status == MINIMAL and pairs_ok and sub and bool(c5_ok),
            f"{v.status}, 10 proximal pairs, {len(offsets)} offsets checked, C5 {c5['status']}")


def test_criterion_09_example_three(claim_runs, verdict):
    _, _, reports, _, _ = claim_runs
    t = Truncation("twist", 200)
    x = DiskPoint(F(1, 2))
    U = polar_box(x, F(1, 8), F(1, 8))
    A = return_set(x, U, t)
    exps = [s.n for s in A.members]
    S = [s.n for s in iter_truncation(t)]
    mod = modified_ap_search(t, A)
    mod_ok = isinstance(mod, Certificate) and mod.verified and len(mod.K) <= 2
    ref_mod = verify_certificate(Certificate(MODIFIED, (TwistPower(3), TwistPower(4)), t), A)
    syn = syndetic_search(t, A)
    found = [k.n for k in syn.K]
    ref = Certificate(SYNDETIC, tuple(TwistPower(n) for n in (0, 3, 4, 5)), t, quotient="truncated")
    syn_ok = (syn.verified and claims.zplus_sumset_covers(found, exps, S)
              and verify_certificate(ref, A) and claims.zplus_sumset_covers([0, 3, 4, 5], exps, S)
              and reports["C8"]["conflict"])
    same = reports["C9"]["evidence"][0]["same_radius_pairs"]
    dist_ok = len(same) == 10 and all(p["constant"] for p in same)
    gc = group_completion_certificate(x, U)
    ok = (exps == [0] + list(range(4, 201, 2)) and mod_ok and ref_mod and syn_ok and dist_ok
          and group_completion_ap(x, U) and gc.K == (0, 1))
    verdict(9, "disk twist: return set, modified K, syndetic K, distality, group completion", ok,
            f"modified K = {[k.n for k in mod.K]}, syndetic K = {found}, reference (0, 3, 4, 5) verified, "
            f"group K = {list(gc.K)}")


def test_criterion_10_determinism(claim_runs, verdict):
    a, b, reports, times, codes = claim_runs
    ok = a == b and codes == [1, 1] and max(times) < 300 and len(reports) == 15
    verdict(10, "byte-identical claim reports, default suite under 5 minutes", ok,
            f"{len(a)} bytes, runs took {times[0]:.0f}s and {times[1]:.0f}s, exit codes {codes}")
