"""Command-line interface: verify, identities, hunt, wolstenholme, density, euler.

Reports are machine-readable (JSON or CSV) or plain text.  Exit code 0
means every contained check held (or the search completed), 1 means some
check failed, 2 means a usage or input error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from dataclasses import dataclass, field
from typing import Any

from fqlab import heuristic, hunter, quotients, suite


@dataclass
class RunReport:
    command: str
    parameters: dict[str, Any]
    results: list[dict[str, Any]] = field(default_factory=list)
    elapsed_seconds: float = 0.0

    @property
    def verdict(self) -> str:
        if any(r.get("holds") is False for r in self.results):
            return "fail"
        if any("holds" in r for r in self.results):
            return "pass"
        if self.command in ("density", "euler"):
            return "informational"
        return "pass"

    def to_dict(self) -> dict[str, Any]:
        return {
            "command": self.command,
            "parameters": self.parameters,
            "results": self.results,
            "elapsed_seconds": self.elapsed_seconds,
            "verdict": self.verdict,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)

    def to_csv(self) -> str:
        keys = sorted({k for r in self.results for k in r})
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=keys)
        writer.writeheader()
        for r in self.results:
            writer.writerow(r)
        return buf.getvalue()

    def to_text(self) -> str:
        lines = [f"{self.command} {self.parameters}"]
        for r in self.results:
            if r.get("holds") is False:
                lines.append(
                    f"FAIL {r.get('id', r.get('type'))}: "
                    f"lhs = {r.get('lhs')}, rhs = {r.get('rhs')} ({r})"
                )
            else:
                lines.append("  " + " ".join(f"{k}={v}" for k, v in r.items()))
        lines.append(f"verdict: {self.verdict} ({self.elapsed_seconds:.3f}s)")
        return "\n".join(lines)


def _congruence_record(check: suite.CongruenceCheck) -> dict[str, Any]:
    rec = {
        "type": "congruence",
        "id": check.id,
        "p": check.p,
        "exponent": check.modulus_exponent,
        "lhs": check.lhs.value,
        "rhs": check.rhs.value,
        "parts": len(check.parts),
        "holds": check.holds,
    }
    if check.note:
        rec["note"] = check.note
    if not check.holds:
        rec["failing_part"] = next(p.label for p in check.parts if not p.holds)
    return rec


def _identity_record(check: suite.IdentityCheck) -> dict[str, Any]:
    return {
        "type": "identity",
        "id": check.id,
        "n": check.n,
        "lhs": str(check.lhs),
        "rhs": str(check.rhs),
        "holds": check.holds,
    }


def _cmd_verify(args: argparse.Namespace, report: RunReport) -> None:
    if args.range is not None:
        lo, hi = args.range
        for p in hunter.sieve_primes(max(lo, 5), hi):
            for check in suite.check_all(p):
                report.results.append(_congruence_record(check))
    elif args.check is not None:
        check = suite.check_congruence(args.check, args.prime)
        report.results.append(_congruence_record(check))
    else:
        for check in suite.check_all(args.prime):
            report.results.append(_congruence_record(check))


def _cmd_identities(args: argparse.Namespace, report: RunReport) -> None:
    for identity_id in suite.IDENTITY_REGISTRY:
        for n in range(1, args.max_n + 1):
            report.results.append(_identity_record(suite.verify_identity(identity_id, n)))


def _cmd_hunt(args: argparse.Namespace, report: RunReport) -> None:
    result = hunter.hunt_euler(
        args.lo,
        args.hi,
        workers=args.workers,
        checkpoint=args.checkpoint,
        resume=args.resume,
        progress=not args.quiet,
    )
    for record in result.hits:
        report.results.append(
            {
                "type": "hunt_hit",
                "p": record.p,
                "residue": record.e_p3_residue,
                "is_hit": record.is_hit,
            }
        )
    report.results.append(
        {
            "type": "scan_stats",
            "scanned": result.stats.scanned,
            "min_ratio": result.stats.min_ratio,
            "max_ratio": result.stats.max_ratio,
            "mean_ratio": result.stats.mean_ratio,
            "last_completed": result.last_completed,
            "complete": result.complete,
        }
    )


def _cmd_wolstenholme(args: argparse.Namespace, report: RunReport) -> None:
    report.results.append(
        {
            "type": "wolstenholme",
            "p": args.prime,
            "is_wolstenholme": hunter.wolstenholme_test(args.prime),
        }
    )


def _cmd_density(args: argparse.Namespace, report: RunReport) -> None:
    est = heuristic.density_estimate(args.lo, args.hi)
    report.results.append(
        {
            "type": "density",
            "x": est.x,
            "y": est.y,
            "formula_value": est.formula_value,
            "exact_sum": est.exact_sum,
        }
    )


def _cmd_euler(args: argparse.Namespace, report: RunReport) -> None:
    if args.mod is not None:
        residue = quotients.euler_p3_mod(args.mod)
        report.results.append(
            {"type": "euler_residue", "p": args.mod, "residue": residue.value}
        )
    else:
        number = quotients.euler_exact(args.n)
        report.results.append(
            {"type": "euler_number", "n": number.index, "value": str(number.value)}
        )


_INPUT_ERRORS = (ValueError, KeyError, ArithmeticError)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fqlab",
        description="Congruence checks, Euler-number prime hunt, and density "
        "heuristics over prime-power residues.",
    )
    parser.add_argument("--format", choices=("text", "json", "csv"), default="text")
    parser.add_argument("--quiet", action="store_true", help="suppress the report")
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run congruence checks at a prime")
    p_verify.add_argument("--prime", type=int)
    p_verify.add_argument("--check", help="registry id (default: all checks)")
    p_verify.add_argument("--range", nargs=2, type=int, metavar=("LO", "HI"))
    p_verify.set_defaults(handler=_cmd_verify)

    p_ident = sub.add_parser("identities", help="verify exact identities")
    p_ident.add_argument("--max-n", type=int, default=20, dest="max_n")
    p_ident.set_defaults(handler=_cmd_identities)

    p_hunt = sub.add_parser("hunt", help="scan primes for E_{p-3} = 0 (mod p)")
    p_hunt.add_argument("--from", dest="lo", type=int, required=True)
    p_hunt.add_argument("--to", dest="hi", type=int, required=True)
    p_hunt.add_argument("--workers", type=int, default=1)
    p_hunt.add_argument("--checkpoint")
    p_hunt.add_argument("--resume", action="store_true")
    p_hunt.set_defaults(handler=_cmd_hunt)

    p_wol = sub.add_parser("wolstenholme", help="Wolstenholme-prime test")
    p_wol.add_argument("--prime", type=int, required=True)
    p_wol.set_defaults(handler=_cmd_wolstenholme)

    p_dens = sub.add_parser("density", help="expected-count estimate on [x, y]")
    p_dens.add_argument("--from", dest="lo", type=float, required=True)
    p_dens.add_argument("--to", dest="hi", type=float, required=True)
    p_dens.set_defaults(handler=_cmd_density)

    p_euler = sub.add_parser("euler", help="Euler numbers, exact or mod p")
    p_euler.add_argument("--n", type=int)
    p_euler.add_argument("--mod", type=int, help="prime p: report E_{p-3} mod p")
    p_euler.set_defaults(handler=_cmd_euler)
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    if args.command == "verify" and args.prime is None and args.range is None:
        print("verify requires --prime or --range", file=sys.stderr)
        return 2
    if args.command == "euler" and args.n is None and args.mod is None:
        print("euler requires --n or --mod", file=sys.stderr)
        return 2
    report = RunReport(command=args.command, parameters=_echo_parameters(args))
    start = time.perf_counter()
    try:
        args.handler(args, report)
    except _INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    report.elapsed_seconds = time.perf_counter() - start
    if not args.quiet:
        if args.format == "json":
            print(report.to_json())
        elif args.format == "csv":
            print(report.to_csv(), end="")
        else:
            print(report.to_text())
    return 1 if report.verdict == "fail" else 0


def _echo_parameters(args: argparse.Namespace) -> dict[str, Any]:
    skip = {"command", "handler", "format", "quiet"}
    return {k: v for k, v in vars(args).items() if k not in skip and v is not None}


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
