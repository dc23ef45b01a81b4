"""Command-line front end.

    semiflows lemma check 0,4..N:2 --horizon 40 --radius 3
    semiflows lemma min-window 0,7..98:7
    semiflows finite verify-theorem --points 5 --generators 1 --exhaustive
    semiflows example 3 ap-modified
    semiflows claims run --id C8 --format json

Exit codes: 0 success, 1 refutation found, 2 inconclusive, 3 usage or
configuration error.
"""
from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from . import claims, engine, finite, zplus
from .config import FORMATS, ConfigError, RunConfig, load_config
from .engine import Certificate
from .errors import ContractError
from .families import Truncation, truncation_size
from .reports import emit_report
from .spaces import (
    Arc,
    CirclePoint,
    DiskPoint,
    OpenInterval,
    UnitIntervalPoint,
    format_neighborhood,
    format_point,
    parse_neighborhood,
    parse_point,
    parse_rational,
    polar_box,
)

OK, REFUTED, INCONCLUSIVE, USAGE = 0, 1, 2, 3

# search-sized truncations for the cover actions; return sets scale with |S_t|
SEARCH_LIMIT = 2_000_000

EXAMPLES = {
    1: {"family": "scale", "point": UnitIntervalPoint("1/2"), "other": UnitIntervalPoint("1/3"),
        "U": OpenInterval("1/3", "2/3")},
    2: {"family": "affine", "point": CirclePoint(0), "other": CirclePoint("1/2"),
        "U": Arc(CirclePoint(0), "1/27"), "search_bound": 27},
    3: {"family": "twist", "point": DiskPoint("1/2"), "other": DiskPoint("1/2", "1/4"),
        "U": polar_box(DiskPoint("1/2"), "1/8", "1/8")},
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def _common() -> argparse.ArgumentParser:
    # SUPPRESS keeps a flag given before the subcommand from being reset after it
    p = argparse.ArgumentParser(add_help=False)
    S = argparse.SUPPRESS
    p.add_argument("--config", default=S, help="key=value configuration file")
    p.add_argument("--format", choices=FORMATS, default=S)
    p.add_argument("--output", default=S, help="write the report here instead of stdout")
    p.add_argument("--epsilon", type=parse_rational, default=S)
    p.add_argument("--scale-d", type=int, default=S)
    p.add_argument("--affine-d", type=int, default=S)
    p.add_argument("--twist-n", type=int, default=S)
    p.add_argument("--max-k", type=int, default=S)
    p.add_argument("--workers", type=int, default=S)
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = _Parser(prog="semiflows", parents=[common],
                     description="Almost periodicity and minimality checks for semiflows.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    lemma = sub.add_parser("lemma", help="window conditions on subsets of Z+")
    lsub = lemma.add_subparsers(dest="action", required=True, parser_class=_Parser)
    for name in ("check", "min-window"):
        p = lsub.add_parser(name, parents=[common])
        p.add_argument("set", help="e.g. 0,3,5 or 0,4..N:2")
        p.add_argument("--horizon", type=int, default=argparse.SUPPRESS)
        if name == "check":
            p.add_argument("--radius", type=int, default=None)

    fin = sub.add_parser("finite", help="finite transformation monoid sweeps")
    fsub = fin.add_subparsers(dest="action", required=True, parser_class=_Parser)
    for name in ("verify-theorem", "verify-flow", "verify-cascade", "verify-existence"):
        p = fsub.add_parser(name, parents=[common])
        p.add_argument("--points", type=int, default=3)
        p.add_argument("--generators", type=int, default=1)
        mode = p.add_mutually_exclusive_group()
        mode.add_argument("--exhaustive", action="store_true")
        mode.add_argument("--samples", type=int)
        mode.add_argument("--system", help="file holding one system (n, then generator lines)")
        p.add_argument("--seed", type=int, default=argparse.SUPPRESS)
        p.add_argument("--permutations", action="store_true")

    ex = sub.add_parser("example", help="analyses of the three example families")
    ex.add_argument("number", type=int, choices=sorted(EXAMPLES))
    esub = ex.add_subparsers(dest="action", required=True, parser_class=_Parser)
    for name in ("return-set", "ap-syndetic", "ap-modified", "minimality", "proximal"):
        p = esub.add_parser(name, parents=[common])
        p.add_argument("--point", type=parse_point)
        p.add_argument("--neighborhood", type=parse_neighborhood)
        p.add_argument("--bound", type=int, help="truncation bound (denominator or exponent cap)")
        if name == "ap-syndetic":
            p.add_argument("--quotient", choices=("truncated", "exact"), default="truncated")
        if name == "proximal":
            p.add_argument("--other", type=parse_point)
            p.add_argument("--max-scan", type=int)

    cl = sub.add_parser("claims", help="the claim registry")
    csub = cl.add_subparsers(dest="action", required=True, parser_class=_Parser)
    run = csub.add_parser("run", parents=[common])
    run.add_argument("--id", action="append", dest="ids", metavar="CN")
    run.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    csub.add_parser("list", parents=[common])
    return parser


def _config(args) -> RunConfig:
    cfg = load_config(args.config) if getattr(args, "config", None) else RunConfig()
    return cfg.replace(
        format=getattr(args, "format", None),
        output=getattr(args, "output", None),
        epsilon=getattr(args, "epsilon", None),
        scale_d=getattr(args, "scale_d", None),
        affine_d=getattr(args, "affine_d", None),
        twist_n=getattr(args, "twist_n", None),
        max_k=getattr(args, "max_k", None),
        seed=getattr(args, "seed", None),
        workers=getattr(args, "workers", None),
    )


# -- subcommands ----------------------------------------------------------------

def _lemma(args, cfg: RunConfig) -> int:
    horizon = getattr(args, "horizon", None)
    A = zplus.parse_windowed_set(args.set, horizon)
    if args.action == "min-window":
        value = zplus.min_window(A)
        if cfg.format == "text":
            _write(f"{value}\n", cfg)
        else:
            emit_report([{"set": args.set, "horizon": A.horizon, "min_window": value}],
                        cfg.format, cfg.output)
        return OK
    radii = [args.radius] if args.radius is not None else range(A.horizon + 1)
    rows = [{"radius": R, "covers_by_window": zplus.covers_by_window(A, R),
             "window_hits": zplus.window_hits(A, R), "agree": zplus.lemma_equivalence(A, R)}
            for R in radii]
    emit_report(rows, cfg.format, cfg.output)
    return OK if all(r["agree"] for r in rows) else REFUTED


_CHECK_NAMES = {"verify-theorem": "theorem", "verify-flow": "flow",
                "verify-cascade": "cascade", "verify-existence": "existence"}


def _finite(args, cfg: RunConfig) -> int:
    check = _CHECK_NAMES[args.action]
    perms = args.permutations or check == "flow"
    if args.system:
        try:
            with open(args.system) as fh:
                system = finite.loads_system(fh.read())
        except OSError as exc:
            raise ConfigError(f"cannot read system file: {exc}") from None
        n, systems = system.n, [system.generators]
    else:
        n = args.points
        if args.samples is not None:
            systems = finite.sample_systems(n, args.generators, args.samples, cfg.seed, perms)
        else:
            systems = finite.enumerate_systems(n, args.generators, perms)
    rows = finite.sweep(check, n, systems, cfg.workers)
    if cfg.format == "text":
        failed = [r["id"] for r in rows if not r["passed"]]
        summary = {"check": check, "points": n, "generators": args.generators,
                   "corpus": "permutations" if perms else "maps",
                   "systems": len(rows), "failures": len(failed),
                   "failing_ids": failed[:claims.EVIDENCE_CAP]}
        emit_report([summary], "text", cfg.output)
    else:
        emit_report(rows, cfg.format, cfg.output)
    return OK if all(r["passed"] for r in rows) else REFUTED


def _truncation(args, cfg: RunConfig, setup: dict) -> Truncation:
    if args.bound is not None:
        bound = args.bound
    elif args.action in ("return-set", "ap-syndetic", "ap-modified") and "search_bound" in setup:
        bound = setup["search_bound"]
    else:
        bound = {"scale": cfg.scale_d, "affine": cfg.affine_d, "twist": cfg.twist_n}[setup["family"]]
    t = Truncation(setup["family"], bound)
    if args.action in ("return-set", "ap-syndetic", "ap-modified") and truncation_size(t) > SEARCH_LIMIT:
        raise ConfigError(f"truncation {t} has {truncation_size(t)} elements; pass a smaller --bound")
    return t


def _example(args, cfg: RunConfig) -> int:
    setup = EXAMPLES[args.number]
    t = _truncation(args, cfg, setup)
    x = args.point or setup["point"]
    U = args.neighborhood or setup["U"]
    head = {"example": args.number, "point": format_point(x), "truncation": str(t)}
    if args.action in ("return-set", "ap-syndetic", "ap-modified"):
        head["neighborhood"] = format_neighborhood(U)
        A = engine.return_set(x, U, t)
        if args.action == "return-set":
            row = {**head, **engine.describe_return_set(A), "status": "COMPUTED"}
            code = OK
        else:
            if args.action == "ap-syndetic":
                result = engine.syndetic_search(t, A, cfg.max_k, quotient=args.quotient)
            else:
                result = engine.modified_ap_search(t, A, cfg.max_k)
            found = isinstance(result, Certificate) and result.verified
            row = {**head, **result.to_dict(), "status": "CERTIFIED" if found else "EXHAUSTED"}
            code = OK if found else INCONCLUSIVE
    elif args.action == "minimality":
        verdict = engine.epsilon_minimality(x, t, cfg.epsilon)
        row = {**head, **verdict.to_dict()}
        code = INCONCLUSIVE if verdict.status == engine.INCONCLUSIVE else OK
    else:
        y = args.other or setup["other"]
        rep = engine.proximal_pair_check(x, y, t, cfg.epsilon, args.max_scan)
        row = {**head, "other": format_point(y), "epsilon": str(cfg.epsilon), **rep.to_dict(),
               "status": "PROXIMAL" if rep.proximal else "NOT-FOUND"}
        code = OK if rep.proximal else INCONCLUSIVE
    emit_report([row], cfg.format, cfg.output)
    return code


def _claims(args, cfg: RunConfig) -> int:
    if args.action == "list":
        rows = [{"claim": c.id, "anchor": c.anchor, "expected": c.expected,
                 "procedure": c.procedure, "description": c.description}
                for c in claims.registry()]
        emit_report(rows, cfg.format, cfg.output)
        return OK
    order = [c.id for c in claims.registry()]
    for cid in args.ids or ():
        claims.get_claim(cid)
    ids = [cid for cid in order if not args.ids or cid in args.ids]
    reports = [claims.run_claim(cid, cfg) for cid in ids]
    emit_report(reports, cfg.format, cfg.output)
    statuses = {r.status for r in reports}
    if claims.REFUTED in statuses:
        return REFUTED
    if claims.INCONCLUSIVE in statuses:
        return INCONCLUSIVE
    return OK


def _write(text: str, cfg: RunConfig) -> None:
    if cfg.output is None:
        sys.stdout.write(text)
        return
    try:
        with open(cfg.output, "w") as fh:
            fh.write(text)
    except OSError as exc:
        raise ConfigError(f"cannot write report to {cfg.output}: {exc}") from None


_COMMANDS = {"lemma": _lemma, "finite": _finite, "example": _example, "claims": _claims}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return USAGE
    except SystemExit as exc:
        # --help
        return OK if exc.code in (0, None) else USAGE
    try:
        cfg = _config(args)
        return _COMMANDS[args.command](args, cfg)
    except ContractError as exc:
        print(f"semiflows: error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
