"""Registry of checkable statements about the three examples and the finite theory.

Each :class:`Claim` is bound to a procedure; :func:`run_claim` executes it at
the truncations of a :class:`~semiflows.config.RunConfig` and returns a
:class:`ClaimReport` with verdict ``CONFIRMED``, ``REFUTED`` or
``INCONCLUSIVE-AT-SCALE``.

Claims whose expected outcome is ``OPEN`` (C5, C8) assert that no finite
cover exists.  They are reported as REFUTED only when a cover certificate is
found and independently re-verified; the report then carries
``"conflict": true``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

import numpy as np

from . import engine, finite, zplus
from .config import RunConfig
from .engine import (
    MINIMAL,
    NOT_MINIMAL,
    SYNDETIC,
    Certificate,
    arc_net,
    cascade_ap_bridge,
    describe_return_set,
    epsilon_minimality,
    group_completion_certificate,
    modified_ap_search,
    proximal_pair_check,
    return_set,
    syndetic_search,
    verify_certificate,
)
from .errors import ContractError
from .families import (
    Affine,
    Scale,
    Truncation,
    apply,
    compose,
    enumerate_truncation,
    farey_points,
    format_element,
    group_completion,
    iter_truncation,
)
from .spaces import (
    Arc,
    CirclePoint,
    DiskPoint,
    OpenInterval,
    UnitIntervalPoint,
    distance,
    format_point,
    neighborhood_contains,
    polar_box,
)

CONFIRMED = "CONFIRMED"
REFUTED = "REFUTED"
INCONCLUSIVE = "INCONCLUSIVE-AT-SCALE"
OPEN = "OPEN"

EVIDENCE_CAP = 20


@dataclass(frozen=True)
class Claim:
    id: str
    description: str
    anchor: str
    statement: str
    procedure: str
    params: dict
    expected: str
    provenance: str


@dataclass
class ClaimReport:
    claim: str
    status: str
    expected: str
    family: Optional[str] = None
    truncation: Optional[str] = None
    K: list = field(default_factory=list)
    evidence: list = field(default_factory=list)
    conflict: bool = False

    def to_dict(self) -> dict:
        return {
            "claim": self.claim,
            "status": self.status,
            "expected": self.expected,
            "family": self.family,
            "truncation": self.truncation,
            "K": self.K,
            "evidence": self.evidence,
            "conflict": self.conflict,
        }


def _cap(items: list) -> dict:
    return {"count": len(items), "items": items[:EVIDENCE_CAP]}


# -- Example 1: scaling monoid on [0, 1] --------------------------------------

HALF_POINT = UnitIntervalPoint(Fraction(1, 2))
MIDDLE_THIRD = OpenInterval(Fraction(1, 3), Fraction(2, 3))


def _c1(cfg: RunConfig, params: dict) -> ClaimReport:
    t = Truncation("scale", cfg.scale_d)
    A = return_set(HALF_POINT, MIDDLE_THIRD, t)
    ok = A.members == (Scale(1),)
    return ClaimReport("C1", CONFIRMED if ok else REFUTED, CONFIRMED, "scale", str(t),
                       evidence=[describe_return_set(A)])


def _c2(cfg: RunConfig, params: dict) -> ClaimReport:
    t = Truncation("scale", cfg.scale_d)
    A = return_set(HALF_POINT, MIDDLE_THIRD, t)
    result = syndetic_search(t, A, max(cfg.max_k, len(enumerate_truncation(t))))
    whole = set(enumerate_truncation(t))
    ok = isinstance(result, Certificate) and result.verified and set(result.K) == whole
    return ClaimReport("C2", CONFIRMED if ok else REFUTED, CONFIRMED, "scale", str(t),
                       K=[format_element(k) for k in getattr(result, "K", ())],
                       evidence=[{"certificate": result.to_dict(), "K_is_whole_truncation": ok,
                                  "truncation_size": len(whole)}])


def _c3(cfg: RunConfig, params: dict) -> ClaimReport:
    t = Truncation("scale", cfg.scale_d)
    verdict = epsilon_minimality(HALF_POINT, t, cfg.epsilon)
    zero = UnitIntervalPoint(0)
    fixed = all(apply(s, zero) == zero for s in iter_truncation(t))
    ok = verdict.status == NOT_MINIMAL and verdict.witness == (zero,) and fixed
    status = CONFIRMED if ok else (INCONCLUSIVE if verdict.status == engine.INCONCLUSIVE else REFUTED)
    return ClaimReport("C3", status, CONFIRMED, "scale", str(t),
                       evidence=[verdict.to_dict(), {"zero_fixed_by_every_element": fixed}])


# -- Example 2: rational affine maps of the circle ----------------------------

ZERO = CirclePoint(0)
TARGET_ARC = Arc(ZERO, Fraction(1, 27))


def _c4(cfg: RunConfig, params: dict) -> ClaimReport:
    t = Truncation("affine", cfg.affine_d)
    verdicts = [epsilon_minimality(CirclePoint(a), t, cfg.epsilon) for a in params["points"]]
    statuses = {v.status for v in verdicts}
    if statuses == {MINIMAL}:
        status = CONFIRMED
    elif NOT_MINIMAL in statuses:
        status = REFUTED
    else:
        status = INCONCLUSIVE
    return ClaimReport("C4", status, CONFIRMED, "affine", str(t),
                       evidence=[dict(point=format_point(CirclePoint(a)), **v.to_dict())
                                 for a, v in zip(params["points"], verdicts)])


def _c5(cfg: RunConfig, params: dict) -> ClaimReport:
    evidence = []
    # contraction by h = 1/81 sends everything into the arc, and its inverse is no map in S
    h = Affine(Fraction(1, 81), 0)
    d_sub = params["sub_d"]
    t_sub = Truncation("affine", d_sub)
    into = all(neighborhood_contains(TARGET_ARC, apply(compose(h, s), ZERO)) for s in iter_truncation(t_sub))
    try:
        Affine(81, 0)
        inverse_in_S = True
    except ContractError:
        inverse_in_S = False
    evidence.append({"check": "h o S inside A", "h": format_element(h),
                     "truncation": str(t_sub), "holds": into,
                     "inverse_of_h_in_S": inverse_in_S})

    # covers with the factor a restricted to the truncation
    ladder = []
    for d in params["ladder"]:
        t = Truncation("affine", d)
        A = return_set(ZERO, TARGET_ARC, t)
        result = syndetic_search(t, A, cfg.max_k)
        offsets = sum(1 for v in farey_points(d) if v < 1)
        row = {"truncation": str(t), "found": isinstance(result, Certificate),
               "verified": result.verified, "translation_count": offsets}
        if isinstance(result, Certificate):
            row["K_size"] = len(result.K)
        else:
            row["reason"] = result.reason
        ladder.append(row)
    evidence.append({"check": "syndetic search, factor inside truncation", "ladder": ladder})

    # covers with the factor a anywhere in S, using the arc net of rotations
    K = tuple(arc_net(TARGET_ARC.halfwidth))
    exact_rows = []
    for d in params["exact_ladder"]:
        t = Truncation("affine", d)
        A = return_set(ZERO, TARGET_ARC, t)
        cert = Certificate(SYNDETIC, K, t, quotient="exact")
        cert.verified = verify_certificate(cert, A) and _affine_decomposition_oracle(K, t)
        exact_rows.append({"truncation": str(t), "verified": cert.verified})
    all_exact = all(r["verified"] for r in exact_rows)
    evidence.append({"check": "syndetic cover, factor anywhere in S",
                     "K": [format_element(k) for k in K], "ladder": exact_rows})
    status = REFUTED if all_exact else INCONCLUSIVE
    if not into:
        status = INCONCLUSIVE
    return ClaimReport("C5", status, OPEN, "affine", str(Truncation("affine", max(params["exact_ladder"]))),
                       K=[format_element(k) for k in K] if all_exact else [],
                       evidence=evidence, conflict=status == REFUTED)


def _affine_decomposition_oracle(K, t: Truncation) -> bool:
    """Independent recheck: s = k o a with a = (p_s / p_k, (q_s - q_k) / p_k mod 1), a(0) in the arc."""
    for s in iter_truncation(t):
        ok = False
        for k in K:
            pa = s.p / k.p
            qa = ((s.q - k.q) % 1) / k.p
            if 0 < pa <= 1 and qa < 1 and (k.p * qa + k.q) % 1 == s.q and k.p * pa == s.p:
                if min(qa, 1 - qa) < TARGET_ARC.halfwidth:
                    ok = True
                    break
        if not ok:
            return False
    return True


def _random_circle_points(rng: random.Random, count: int, d: int) -> list[CirclePoint]:
    pts = []
    for _ in range(count):
        q = rng.randint(1, d)
        pts.append(CirclePoint(Fraction(rng.randrange(q), q)))
    return pts


def _c6(cfg: RunConfig, params: dict) -> ClaimReport:
    t = Truncation("affine", cfg.affine_d)
    rng = random.Random(cfg.seed)
    rows = []
    for _ in range(params["pairs"]):
        x, y = _random_circle_points(rng, 2, cfg.affine_d)
        rep = proximal_pair_check(x, y, t, cfg.epsilon, max_scan=params["max_scan"])
        rows.append({"x": format_point(x), "y": format_point(y), **rep.to_dict()})
    ok = all(r["proximal"] for r in rows)
    return ClaimReport("C6", CONFIRMED if ok else INCONCLUSIVE, CONFIRMED, "affine", str(t), evidence=rows)


# -- Example 3: powers of the disk twist --------------------------------------

HALF_DISK = DiskPoint(Fraction(1, 2), 0)
SMALL_BOX = polar_box(HALF_DISK, Fraction(1, 8), Fraction(1, 8))


def _expected_twist_returns(N: int) -> list[int]:
    return [0] + list(range(4, N + 1, 2))


def _c7(cfg: RunConfig, params: dict) -> ClaimReport:
    t = Truncation("twist", cfg.twist_n)
    A = return_set(HALF_DISK, SMALL_BOX, t)
    got = [s.n for s in A.members]
    ok = got == _expected_twist_returns(cfg.twist_n)
    W = cascade_ap_bridge(A)
    return ClaimReport("C7", CONFIRMED if ok else REFUTED, CONFIRMED, "twist", str(t),
                       evidence=[describe_return_set(A), {"min_window": zplus.min_window(W)}])


def zplus_sumset_covers(K, A, S) -> bool:
    """Plain integer check that every ``s`` in ``S`` is ``k + a``."""
    A = set(A)
    return all(any(s - k in A for k in K) for s in S)


def _c8(cfg: RunConfig, params: dict) -> ClaimReport:
    rows = []
    found_K = None
    for N in sorted(set(params["caps"]) | {cfg.twist_n}):
        t = Truncation("twist", N)
        A = return_set(HALF_DISK, SMALL_BOX, t)
        result = syndetic_search(t, A, cfg.max_k)
        exps_A = [s.n for s in A.members]
        exps_S = [s.n for s in iter_truncation(t)]
        row = {"truncation": str(t), "found": isinstance(result, Certificate), "verified": result.verified}
        if isinstance(result, Certificate):
            K = [k.n for k in result.K]
            row["K"] = K
            row["zplus_oracle"] = zplus_sumset_covers(K, exps_A, exps_S)
            if N == cfg.twist_n:
                found_K = result
        row["reference_K"] = list(params["reference_K"])
        row["reference_zplus_oracle"] = zplus_sumset_covers(params["reference_K"], exps_A, exps_S)
        rows.append(row)
    uniform = len({tuple(r.get("K", ())) for r in rows}) == 1
    ok = all(r["found"] and r["verified"] and r["zplus_oracle"] for r in rows)
    status = REFUTED if ok else INCONCLUSIVE
    return ClaimReport("C8", status, OPEN, "twist", str(Truncation("twist", cfg.twist_n)),
                       K=[format_element(k) for k in found_K.K] if found_K else [],
                       evidence=rows + [{"same_K_at_every_cap": uniform}],
                       conflict=status == REFUTED)


def _random_disk_points(rng: random.Random, count: int, radius: Fraction) -> list[DiskPoint]:
    return [DiskPoint(radius, Fraction(rng.randrange(24), 24)) for _ in range(count)]


def _c9(cfg: RunConfig, params: dict) -> ClaimReport:
    t = Truncation("twist", cfg.twist_n)
    elements = list(iter_truncation(t))
    rng = random.Random(cfg.seed)
    same_radius = []
    for _ in range(params["pairs"]):
        den = rng.randint(1, 12)
        r = Fraction(rng.randint(1, den), den)
        x, y = _random_disk_points(rng, 2, r)
        d0 = distance(x, y)
        constant = all(distance(apply(s, x), apply(s, y)) == d0 for s in elements)
        same_radius.append({"x": format_point(x), "y": format_point(y),
                            "distance": str(d0), "constant": constant})
    apart = []
    for _ in range(params["pairs"]):
        r1, r2 = sorted(Fraction(rng.randint(1, 12), 12) for _ in range(2))
        if r1 == r2:
            continue
        x = DiskPoint(r1, Fraction(rng.randrange(12), 12))
        y = DiskPoint(r2, Fraction(rng.randrange(12), 12))
        low = min(distance(apply(s, x), apply(s, y)) for s in elements)
        apart.append({"x": format_point(x), "y": format_point(y), "min_distance": str(low),
                      "bounded_below": low >= r2 - r1 > 0})
    minimal = []
    for text in params["minimality_points"]:
        r, theta = (Fraction(v) for v in text.split("@"))
        v = epsilon_minimality(DiskPoint(r, theta), t, cfg.epsilon)
        minimal.append({"point": format_point(DiskPoint(r, theta)), "status": v.status,
                        "evidence": v.evidence})
    ok = (all(p["constant"] for p in same_radius) and all(p["bounded_below"] for p in apart)
          and all(m["status"] == MINIMAL for m in minimal))
    return ClaimReport("C9", CONFIRMED if ok else INCONCLUSIVE, CONFIRMED, "twist", str(t),
                       evidence=[{"same_radius_pairs": same_radius},
                                 {"different_radius_pairs": apart},
                                 {"pointwise_minimality": minimal}])


def _c10(cfg: RunConfig, params: dict) -> ClaimReport:
    t = Truncation("twist", cfg.twist_n)
    G = group_completion(t)
    cert = group_completion_certificate(HALF_DISK, SMALL_BOX)
    A = return_set(HALF_DISK, SMALL_BOX, t)
    semigroup = syndetic_search(t, A, cfg.max_k)
    ok = G.is_integers and cert is not None
    return ClaimReport("C10", CONFIRMED if ok else REFUTED, CONFIRMED, "twist", str(t),
                       K=list(cert.K) if cert else [],
                       evidence=[{"group_step": G.step, "group_is_Z": G.is_integers},
                                 cert.to_dict() if cert else {"group_certificate": None},
                                 {"semigroup_syndetic": semigroup.to_dict()}])


def _c11(cfg: RunConfig, params: dict) -> ClaimReport:
    rows = []
    t2 = Truncation("affine", params["affine_d"])
    for a in params["circle_points"]:
        x = CirclePoint(Fraction(a))
        for h in params["halfwidths"]:
            U = Arc(x, Fraction(h))
            result = modified_ap_search(t2, return_set(x, U, t2), cfg.max_k)
            rows.append({"point": format_point(x), "halfwidth": h, "truncation": str(t2),
                         **result.to_dict()})
    t3 = Truncation("twist", cfg.twist_n)
    for text in params["disk_points"]:
        r, theta = (Fraction(v) for v in text.split("@"))
        x = DiskPoint(r, theta)
        den = r.denominator
        U = polar_box(x, Fraction(1, 8), Fraction(1, 4 * den))
        result = modified_ap_search(t3, return_set(x, U, t3), cfg.max_k)
        rows.append({"point": format_point(x), "truncation": str(t3), **result.to_dict()})
    ok = all(r.get("verified") for r in rows)
    return ClaimReport("C11", CONFIRMED if ok else INCONCLUSIVE, CONFIRMED, None, None, evidence=rows)


# -- finite theory --------------------------------------------------------------

def _sweep_summary(check: str, n: int, g: int, cfg: RunConfig, permutations: bool = False) -> dict:
    rows = finite.sweep(check, n, finite.enumerate_systems(n, g, permutations), cfg.workers)
    failures = [r for r in rows if not r["passed"]]
    return {
        "check": check, "points": n, "generators": g,
        "corpus": "permutations" if permutations else "maps",
        "systems": len(rows), "failures": len(failures),
        "failing": [{"id": r["id"], "counterexample": r["counterexample"]} for r in failures[:EVIDENCE_CAP]],
    }


def _finite_report(cid: str, summaries: list[dict]) -> ClaimReport:
    ok = all(s["failures"] == 0 for s in summaries)
    return ClaimReport(cid, CONFIRMED if ok else REFUTED, CONFIRMED, "finite", None, evidence=summaries)


def _c12(cfg: RunConfig, params: dict) -> ClaimReport:
    return _finite_report("C12", [_sweep_summary("theorem", n, g, cfg) for n, g in params["corpora"]])


def lemma_corpus_check(horizon: int, samples: int, random_horizon: int, seed: int) -> dict:
    """Both window conditions and the min-window formula on the exhaustive and random corpora."""
    M = zplus.all_subsets_with_zero(horizon)
    disagree = 0
    first_hit = np.full(M.shape[0], -1, dtype=np.int64)
    for R in range(horizon + 1):
        cov = zplus.covers_by_window_batch(M, R)
        hits = zplus.window_hits_batch(M, R)
        disagree += int(np.count_nonzero(cov != hits))
        first_hit = np.where((first_hit < 0) & hits, R, first_hit)
    gap_mismatch = int(np.count_nonzero(first_hit != zplus.min_window_batch(M)))

    rng = np.random.default_rng(seed)
    Mr = zplus.random_subsets_with_zero(samples, random_horizon, rng)
    radii = rng.integers(0, random_horizon + 1, size=samples)
    rand_disagree = 0
    for R in np.unique(radii):
        rows = Mr[radii == R]
        rand_disagree += int(np.count_nonzero(
            zplus.covers_by_window_batch(rows, int(R)) != zplus.window_hits_batch(rows, int(R))))
    mw = zplus.min_window_batch(Mr)
    # hits holds exactly for R >= min_window; check both sides of the threshold
    rand_gap_mismatch = 0
    for R in np.unique(radii):
        sel = radii == R
        hits = zplus.window_hits_batch(Mr[sel], int(R))
        rand_gap_mismatch += int(np.count_nonzero(hits != (mw[sel] <= R)))
    return {
        "exhaustive_sets": int(M.shape[0]), "horizon": horizon,
        "exhaustive_pairs": int(M.shape[0]) * (horizon + 1),
        "exhaustive_disagreements": disagree, "min_window_mismatches": gap_mismatch,
        "random_pairs": samples, "random_horizon": random_horizon,
        "random_disagreements": rand_disagree, "random_min_window_mismatches": rand_gap_mismatch,
    }


def _c13(cfg: RunConfig, params: dict) -> ClaimReport:
    lemma = lemma_corpus_check(cfg.horizon, cfg.samples, cfg.random_horizon, cfg.seed)
    cascades = [_sweep_summary("cascade", n, 1, cfg) for n in range(1, cfg.cascade_points + 1)]
    ok = (lemma["exhaustive_disagreements"] == 0 and lemma["min_window_mismatches"] == 0
          and lemma["random_disagreements"] == 0 and lemma["random_min_window_mismatches"] == 0
          and all(c["failures"] == 0 for c in cascades))
    return ClaimReport("C13", CONFIRMED if ok else REFUTED, CONFIRMED, "zplus", None,
                       evidence=[lemma] + cascades)


def _c14(cfg: RunConfig, params: dict) -> ClaimReport:
    return _finite_report("C14", [_sweep_summary("existence", n, g, cfg) for n, g in params["corpora"]])


def _c15(cfg: RunConfig, params: dict) -> ClaimReport:
    return _finite_report("C15", [_sweep_summary("flow", n, g, cfg, permutations=True)
                                  for n, g in params["corpora"]])


def _claim(cid, description, anchor, statement, procedure, params, expected, provenance):
    return Claim(cid, description, anchor, statement, procedure, params, expected, provenance)


REGISTRY: tuple[Claim, ...] = (
    _claim("C1", "Return set of 1/2 in (1/3, 2/3) under the scaling monoid is the identity alone",
           "Example 1", "A_U = {f_1}", "engine.return_set", {}, CONFIRMED, "STATED"),
    _claim("C2", "That return set is syndetic with K the whole monoid",
           "Example 1", "S = S A_U", "engine.syndetic_search", {}, CONFIRMED, "STATED"),
    _claim("C3", "The orbit closure of 1/2 is not minimal; {0} is a minimal subset",
           "Example 1", "{0} minimal in cl(Sx)", "engine.epsilon_minimality", {}, CONFIRMED, "STATED"),
    _claim("C4", "The affine circle semiflow is minimal",
           "Example 2", "cl(Sx) = X for all x", "engine.epsilon_minimality",
           {"points": ("0", "1/3", "5/7")}, CONFIRMED, "STATED"),
    _claim("C5", "0 is not syndetically almost periodic for U = arc of halfwidth 1/27 about 0",
           "Example 2", "no compact K with S = KA; f_{h,0} S in A for h = 1/81",
           "engine.syndetic_search", {"sub_d": 27, "ladder": (4, 6, 8, 10, 12), "exact_ladder": (8, 12, 14)},
           OPEN, "STATED"),
    _claim("C6", "The affine circle semiflow is proximal",
           "Example 2", "(X, S) proximal", "engine.proximal_pair_check", {"pairs": 10, "max_scan": 100_000}, CONFIRMED, "STATED"),
    _claim("C7", "Return set of (1/2, 0) for a small box is {0, 4, 6, 8, ...}",
           "Example 3", "A = {0,4,6,8,...}", "engine.return_set", {}, CONFIRMED, "STATED"),
    _claim("C8", "No finite K gives S = K + A for the twist return set",
           "Example 3", "no compact K with S = K + A", "engine.syndetic_search",
           {"caps": (50, 100), "reference_K": (0, 3, 4, 5)}, OPEN, "STATED"),
    _claim("C9", "The twist semigroup is distal and every orbit closure is minimal",
           "Example 3", "(D, S) distal; cl(Sz) minimal", "engine.proximal_pair_check",
           {"pairs": 10, "minimality_points": ("1/2@0", "1/3@1/5", "2/5@0", "3/4@1/3", "0@0", "1@1/7")},
           CONFIRMED, "STATED"),
    _claim("C10", "(1/2, 0) is almost periodic for the group completion [S] = Z",
           "Example 3", "x almost periodic for (D, [S])", "engine.group_completion_ap", {},
           CONFIRMED, "STATED"),
    _claim("C11", "Every point of the affine and twist examples is almost periodic in the modified sense",
           "Modified definition", "K s meets A for all s", "engine.modified_ap_search",
           {"affine_d": 27, "circle_points": ("0", "1/3", "3/4"), "halfwidths": ("1/27",),
            "disk_points": ("1/2@0", "1/3@1/5", "2/5@1/2", "0@0")},
           CONFIRMED, "STATED"),
    _claim("C12", "A semiflow is minimal iff every point is almost periodic (modified sense)",
           "Theorem", "minimal <=> every x almost periodic", "finite.verify_theorem",
           {"corpora": ((5, 1), (3, 2))}, CONFIRMED, "DERIVED"),
    _claim("C13", "The two window conditions on subsets of Z+ containing 0 are equivalent",
           "Lemma", "Z+ = {0..R} + A <=> (m + {0..R}) meets A", "zplus.lemma_equivalence", {},
           CONFIRMED, "DERIVED"),
    _claim("C14", "Every semiflow has an almost periodic point",
           "Corollary", "almost periodic points exist", "finite.verify_ap_existence",
           {"corpora": ((1, 1), (2, 1), (3, 1), (4, 1), (5, 1), (2, 2), (3, 2))}, CONFIRMED, "DERIVED"),
    _claim("C15", "A flow is minimal iff every point is almost periodic (syndetic sense)",
           "Flows", "minimal <=> syndetic return sets", "finite.verify_flow_equivalence",
           {"corpora": ((1, 1), (2, 1), (3, 1), (4, 1), (5, 1), (2, 2), (3, 2), (4, 2))},
           CONFIRMED, "DERIVED"),
)

_PROCEDURES: dict[str, Callable[[RunConfig, dict], ClaimReport]] = {
    "C1": _c1, "C2": _c2, "C3": _c3, "C4": _c4, "C5": _c5, "C6": _c6, "C7": _c7, "C8": _c8,
    "C9": _c9, "C10": _c10, "C11": _c11, "C12": _c12, "C13": _c13, "C14": _c14, "C15": _c15,
}


def registry() -> list[Claim]:
    return list(REGISTRY)


def get_claim(cid: str) -> Claim:
    for c in REGISTRY:
        if c.id == cid:
            return c
    raise ContractError(f"unknown claim {cid!r}")


def run_claim(cid: str, config: Optional[RunConfig] = None) -> ClaimReport:
    claim = get_claim(cid)
    return _PROCEDURES[cid](config or RunConfig(), claim.params)


def run_all(config: Optional[RunConfig] = None) -> list[ClaimReport]:
    config = config or RunConfig()
    return [run_claim(c.id, config) for c in REGISTRY]
