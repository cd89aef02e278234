"""Command-line interface: compute, advise, verify, export, serve.

Sweep caps can be overridden by environment variables so CI and local
runs can dial effort up or down without editing commands:

- WELTER_SAT_BOUND   coin bound for the theorem11/nim sweeps (default 10)
- WELTER_NMAX        diagram-size cap for macdonald/corollary (default 12)
- WELTER_LEMMA_CAP   diagram-size cap for the lemma sweeps (default 8)
- WELTER_MSG_CAP     diagram-size cap for the msg sweep (default 9)
- WELTER_ORACLE_BOUND coin bound for oracle-backed sg/move/table (default 64)
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from typing import Sequence

from . import board, engine, grundy, repcheck, saturation
from .board import Position
from .engine import GameRules, SgOracle, Variant
from .padic import DigitSeq
from .reports import VerificationReport


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise SystemExit(f"{name} must be an integer, got {raw!r}")


def _parse_coins(raw: str) -> Position:
    try:
        return Position(int(part) for part in raw.split(",") if part.strip() != "")
    except ValueError as exc:
        raise SystemExit(f"bad coin list {raw!r}: {exc}")


def cmd_sg(args: argparse.Namespace) -> int:
    X = _parse_coins(args.coins)
    m = len(X)
    k = args.k if args.k is not None else m + 1
    if k < 2:
        raise SystemExit("index k must be at least 2")
    closed = grundy.sg_tower(X, args.p)
    t = board.tower(X, args.p)
    lam = board.partition_of(X)
    if k >= m + 1:
        value, method = closed.value, "closed form"
    else:
        bound = max(_env_int("WELTER_ORACLE_BOUND", engine.DEFAULT_ORACLE_BOUND), max(X.coins, default=0) + 1)
        oracle = SgOracle(GameRules(p=args.p, k=k, variant=Variant.WELTER, m=m), bound)
        value, method = oracle.sg(X.coins), f"oracle at k={k}"
    print(f"position   {list(X.coins)}")
    print(f"sg         {value}  ({method})")
    print(f"digits     {list(DigitSeq.from_int(value, args.p))} (base {args.p}, little-endian)")
    print(f"tower      {list(t.rows)}")
    print(f"|lambda|   {lam.size}  partition {list(lam.parts)}")
    if k < m + 1 and value != closed.value:
        print(f"note: closed form gives {closed.value}; it is only guaranteed at k >= m+1")
    return 0


def cmd_move(args: argparse.Namespace) -> int:
    X = _parse_coins(args.coins)
    m = len(X)
    k = args.k
    if k < 2:
        raise SystemExit("index k must be at least 2")
    if k >= m + 1:
        sg = grundy.sg_tower(X, args.p).value
        if sg == 0:
            print("position is a P-position (previous player wins; no winning move)")
            return 0
        moves = grundy.winning_moves(X, args.p, k, 0, first_only=True)
        if not moves:
            print("no winning move found (unexpected at saturated index)")
            return 1
        print(f"move to {list(moves[0].coins)}  (sg 0)")
        return 0
    bound = max(_env_int("WELTER_ORACLE_BOUND", engine.DEFAULT_ORACLE_BOUND), max(X.coins, default=0) + 1)
    oracle = SgOracle(GameRules(p=args.p, k=k, variant=Variant.WELTER, m=m), bound)
    if oracle.sg(X.coins) == 0:
        print("position is a P-position (previous player wins; no winning move)")
        return 0
    for Y in engine.legal_moves(oracle.rules, X.coins):
        if oracle.sg(Y) == 0:
            print(f"move to {sorted(Y)}  (oracle sg 0 at k={k})")
            return 0
    print("no winning move found (unexpected: mex guarantees one)")
    return 1


def _verify_reports(args: argparse.Namespace) -> list[VerificationReport]:
    suite = args.suite
    p = args.p
    bound = args.bound if args.bound is not None else _env_int("WELTER_SAT_BOUND", 10)
    nmax = args.nmax if args.nmax is not None else _env_int("WELTER_NMAX", 12)
    size = args.size if args.size is not None else _env_int("WELTER_MSG_CAP", 9)
    lemma_cap = args.size if args.size is not None else _env_int("WELTER_LEMMA_CAP", 8)
    m = args.m
    reports: list[VerificationReport] = []
    if suite in ("theorem11", "all"):
        reports.append(engine.verify_saturation(p, m, bound))
    if suite in ("nim", "all"):
        k = min(p, m + 1)
        report = engine.nim_check(p, m, k, bound)
        if not engine.nim_witness_holds(p, m):
            report.record_failure(check="nim_witness", p=p, m=m)
        else:
            report.add_note(f"witness position at index {k - 1} has no zero-sum option")
        reports.append(report)
    if suite in ("macdonald", "all"):
        reports.append(repcheck.verify_macdonald(nmax, p))
    if suite in ("corollary", "all"):
        reports.append(repcheck.verify_corollary(nmax, p))
    if suite in ("lemmas", "all"):
        reports.append(saturation.verify_lemmas(p, lemma_cap))
    if suite in ("msg", "all"):
        reports.append(grundy.verify_tight_sg(p, size))
    return reports


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        reports = _verify_reports(args)
    except ValueError as exc:
        raise SystemExit(str(exc))
    for report in reports:
        print(report.summary())
    if args.json:
        print(json.dumps([r.to_dict() for r in reports], indent=2, default=str))
    return 0 if all(r.passed for r in reports) else 1


def cmd_table(args: argparse.Namespace) -> int:
    rules = GameRules(p=args.p, k=args.k, variant=Variant(args.variant), m=args.m)
    rows = engine.sg_table(rules, args.bound)
    if args.format == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["coins", "p", "k", "variant", "sg_oracle", "sg_closed"])
        for row in rows:
            writer.writerow(
                [
                    " ".join(str(c) for c in row.coins),
                    row.p,
                    row.k,
                    row.variant,
                    row.sg_oracle,
                    row.sg_closed,
                ]
            )
        payload = buffer.getvalue()
    else:
        lines = [
            json.dumps(
                {
                    "coins": list(row.coins),
                    "p": row.p,
                    "k": row.k,
                    "variant": row.variant,
                    "sg_oracle": row.sg_oracle,
                    "sg_closed": row.sg_closed,
                },
                sort_keys=True,
            )
            for row in rows
        ]
        payload = "\n".join(lines) + ("\n" if lines else "")
    if args.out == "-":
        sys.stdout.write(payload)
    else:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(payload)
    return 0


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .server import create_app

    app = create_app(assets_dir=args.assets)
    uvicorn.run(app, host=args.host, port=args.port, log_level="info")
    return 0


def legality_vectors() -> list[dict]:
    """Deterministic move-legality cases shared with client-side validators."""
    cases = []
    battery = [
        (2, 3, Variant.WELTER, (4, 3)),
        (2, 2, Variant.WELTER, (3, 4)),
        (3, 3, Variant.WELTER, (3, 7)),
        (3, 2, Variant.WELTER, (0, 4, 5)),
        (2, 3, Variant.NIM, (2, 2)),
        (3, 3, Variant.NIM, (4, 5)),
    ]
    for p, k, variant, X in battery:
        m = len(X)
        rules = GameRules(p=p, k=k, variant=variant, m=m)
        bound = max(X) + 1
        seen = 0
        for Y in _tuple_grid(m, bound):
            try:
                verdict = engine.violated_condition(rules, X, Y)
            except ValueError:
                continue
            cases.append(
                {
                    "p": p,
                    "k": k,
                    "variant": variant.value,
                    "from": list(X),
                    "to": list(Y),
                    "legal": verdict is None,
                    "condition": verdict,
                }
            )
            seen += 1
            if seen >= 200:
                break
    return cases


def _tuple_grid(m: int, bound: int):
    from itertools import product

    return product(range(bound), repeat=m)


def cmd_vectors(args: argparse.Namespace) -> int:
    payload = json.dumps({"v": 1, "cases": legality_vectors()}, indent=2, sort_keys=True)
    if args.out == "-":
        print(payload)
    else:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(payload + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pwelter",
        description="Engine and verification toolkit for p-saturations of Welter's game",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sg = sub.add_parser("sg", help="Sprague-Grundy value of a position")
    sg.add_argument("--coins", required=True, help="comma-separated distinct squares, e.g. 3,7")
    sg.add_argument("--p", type=int, required=True)
    sg.add_argument("--k", type=int, default=None, help="index (default m+1, saturated)")
    sg.set_defaults(func=cmd_sg)

    move = sub.add_parser("move", help="recommend a winning move")
    move.add_argument("--coins", required=True)
    move.add_argument("--p", type=int, required=True)
    move.add_argument("--k", type=int, required=True)
    move.set_defaults(func=cmd_move)

    verify = sub.add_parser("verify", help="run a verification sweep")
    verify.add_argument(
        "suite",
        choices=["theorem11", "nim", "macdonald", "corollary", "lemmas", "msg", "all"],
    )
    verify.add_argument("--p", type=int, default=2)
    verify.add_argument("--m", type=int, default=2)
    verify.add_argument("--bound", type=int, default=None)
    verify.add_argument("--nmax", type=int, default=None)
    verify.add_argument("--size", type=int, default=None)
    verify.add_argument("--json", action="store_true", help="also print full JSON reports")
    verify.set_defaults(func=cmd_verify)

    table = sub.add_parser("table", help="export an SG table (oracle vs closed form)")
    table.add_argument("--p", type=int, required=True)
    table.add_argument("--k", type=int, required=True)
    table.add_argument("--m", type=int, required=True)
    table.add_argument("--bound", type=int, required=True)
    table.add_argument("--variant", choices=["welter", "nim"], default="welter")
    table.add_argument("--format", choices=["csv", "jsonl"], default="csv")
    table.add_argument("--out", default="-")
    table.set_defaults(func=cmd_table)

    serve = sub.add_parser("serve", help="serve the play API and UI assets")
    serve.add_argument("--port", type=int, default=8000)
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--assets", default=None, help="directory of built UI assets")
    serve.set_defaults(func=cmd_serve)

    vectors = sub.add_parser("vectors", help="emit shared move-legality test vectors")
    vectors.add_argument("--out", default="-")
    vectors.set_defaults(func=cmd_vectors)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
