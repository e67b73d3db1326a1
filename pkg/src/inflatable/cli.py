"""Command-line interface.

Every subcommand prints a human-readable rendering by default and a single
JSON object with ``--json``; exact rationals serialize as "p/q" strings.
Exit status is 0 for ok and inadmissible outcomes, 2 for errors (malformed
input, impossible request), matching argparse's own convention.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .core import (
    PATTERNS_3,
    Perm,
    count_length3_all,
    density,
    format_permutation,
    generalized_inflate,
    inflate,
    parse_permutation,
    rotate,
)
from .criteria import (
    admissible_residues,
    check_3_inflatable,
    compose_inflatables,
    residue_multiplication_table,
)
from .limits import DensityProfile, limit_density_inflation, limit_density_uniform
from .montecarlo import estimate_limit_density
from .partitions import block_partitions
from .plotting import render_ascii, render_svg
from .search import SearchConfig, SearchTimeout, search_3_inflatable

__all__ = ["CommandResult", "run", "main"]

THREADS_ENV = "INFLATABLE_THREADS"


@dataclass
class CommandResult:
    """Outcome of one CLI invocation.

    status is "ok", "inadmissible", or "error"; payload is what was (or
    would be) printed; diagnostics carries human-oriented notes and error
    text. Exit code is 0 unless status is "error".
    """

    status: str
    payload: dict = field(default_factory=dict)
    diagnostics: list = field(default_factory=list)

    @property
    def exit_code(self) -> int:
        return 2 if self.status == "error" else 0


def _rat(x: Fraction) -> str:
    return str(x)


def _pstr(p: Perm) -> str:
    return format_permutation(p)


def _default_threads() -> int:
    raw = os.environ.get(THREADS_ENV, "")
    if raw.strip():
        try:
            v = int(raw)
            if v >= 1:
                return v
        except ValueError:
            pass
    return 1


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="inflatable",
        description="Exact pattern-density calculus for permutation inflation.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name: str, help_: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_)
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--out", metavar="FILE", help="also write the output to FILE")
        return p

    p = add("density", "exact pattern density t(pi, tau)")
    p.add_argument("tau")
    p.add_argument("--pattern", required=True)

    p = add("counts", "all six length-3 pattern counts plus pair counts")
    p.add_argument("tau")

    p = add("inflate", "inflate tau by gamma (uniform or per-entry blocks)")
    p.add_argument("tau")
    p.add_argument("gamma", nargs="+")

    p = add("blocks", "block partitions of a permutation")
    p.add_argument("pi")

    p = add("limit", "exact limit density under repeated inflation")
    p.add_argument("tau")
    p.add_argument("--pattern", required=True)
    p.add_argument("--profile", metavar="FILE", help="JSON block-density profile")

    p = add("check", "3-inflatability report for a permutation")
    p.add_argument("tau")

    p = add("lengths", "admissible lengths / residues for 3-inflatability")
    p.add_argument("--max", type=int, metavar="N", help="list admissible n <= N")
    p.add_argument("--mod", type=int, default=144, metavar="M", help="residue modulus")
    p.add_argument("--table", action="store_true", help="residue product table")

    p = add("search", "scan for 3-inflatable permutations")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--central", action="store_true", help="centrally symmetric only")
    p.add_argument("--limit", type=int, help="stop after this many hits")
    p.add_argument("--threads", type=int, default=None)
    p.add_argument("--timeout", type=float, help="wall-clock seconds")
    p.add_argument("--emit-all", action="store_true", help="stream hits as found")

    p = add("compose", "inflate one 3-inflatable permutation by another")
    p.add_argument("tau1")
    p.add_argument("tau2")

    p = add("montecarlo", "simulate a limit density and compare to exact")
    p.add_argument("tau")
    p.add_argument("--pattern", required=True)
    p.add_argument("--j", type=int, required=True, help="inflation block length")
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--subset-samples", type=int, default=0)
    p.add_argument("--seed", type=int, default=0)

    p = add("rotate", "180-degree rotation of a permutation")
    p.add_argument("tau")

    p = add("plot", "plot of a permutation (ascii or svg)")
    p.add_argument("tau")
    p.add_argument("--format", choices=("ascii", "svg"), default="ascii")

    return ap


def _render_human(payload: dict) -> str:
    lines = []
    for k, v in payload.items():
        if isinstance(v, dict):
            body = ", ".join(f"{kk}: {vv}" for kk, vv in v.items())
            lines.append(f"{k}: {body}")
        elif isinstance(v, list):
            lines.append(f"{k}: {', '.join(str(x) for x in v)}")
        else:
            lines.append(f"{k}: {v}")
    return "\n".join(lines)


def _report_payload(tau: Perm) -> dict:
    rep = check_3_inflatable(tau)
    return {
        "tau": _pstr(rep.tau),
        "length": rep.length,
        "admissible_length": rep.admissible_length,
        "required": {_pstr(p): _rat(v) for p, v in rep.required.items()},
        "observed": {_pstr(p): _rat(v) for p, v in rep.observed.items()},
        "observed_counts": {_pstr(p): v for p, v in rep.observed_counts.items()},
        "verdict": rep.verdict,
    }


def _cmd_density(args) -> CommandResult:
    val = density(parse_permutation(args.pattern), parse_permutation(args.tau))
    return CommandResult("ok", {"density": _rat(val)})


def _cmd_counts(args) -> CommandResult:
    pc = count_length3_all(parse_permutation(args.tau))
    return CommandResult(
        "ok",
        {
            "n": pc.n,
            "counts": {_pstr(p): pc.counts[p] for p in PATTERNS_3},
            "inv12": pc.inv12,
            "inv21": pc.inv21,
        },
    )


def _cmd_inflate(args) -> CommandResult:
    tau = parse_permutation(args.tau)
    if len(args.gamma) == 1:
        out = inflate(tau, parse_permutation(args.gamma[0]))
    else:
        out = generalized_inflate(tau, [parse_permutation(g) for g in args.gamma])
    return CommandResult("ok", {"result": _pstr(out), "n": out.n})


def _cmd_blocks(args) -> CommandResult:
    pi = parse_permutation(args.pi)
    bps = block_partitions(pi)
    payload = {
        "pi": _pstr(pi),
        "partitions": [
            {
                "sigma": _pstr(bp.outer),
                "blocks": [_pstr(b) for b in bp.inner],
                "sizes": list(bp.sizes),
            }
            for bp in bps
        ],
    }
    return CommandResult("ok", payload)


def _blocks_lines(payload: dict) -> str:
    return "\n".join(
        "σ=" + part["sigma"] + " b=" + ",".join(part["blocks"])
        for part in payload["partitions"]
    )


def _cmd_limit(args) -> CommandResult:
    tau = parse_permutation(args.tau)
    pi = parse_permutation(args.pattern)
    if args.profile:
        with open(args.profile, "r", encoding="utf-8") as fh:
            profile = DensityProfile.from_json(fh.read())
        val = limit_density_inflation(pi, tau, profile)
    else:
        val = limit_density_uniform(pi, tau)
    return CommandResult(
        "ok",
        {"pattern": _pstr(pi), "tau": _pstr(tau), "limit_density": _rat(val)},
    )


def _cmd_check(args) -> CommandResult:
    return CommandResult("ok", _report_payload(parse_permutation(args.tau)))


def _cmd_lengths(args) -> CommandResult:
    if args.table:
        table = residue_multiplication_table()
        return CommandResult(
            "ok",
            {"modulus": 144, "table": {str(r): row for r, row in table.items()}},
        )
    if args.max is not None:
        if args.max < 1:
            raise ValueError("--max must be >= 1")
        rset = set(admissible_residues(144))
        ns = [n for n in range(1, args.max + 1) if n % 144 in rset]
        return CommandResult("ok", {"max": args.max, "admissible": ns})
    return CommandResult("ok", {"residues": admissible_residues(args.mod)})


def _cmd_compose(args) -> CommandResult:
    out = compose_inflatables(parse_permutation(args.tau1), parse_permutation(args.tau2))
    return CommandResult(
        "ok", {"composed": format_permutation(out, style="comma"), "n": out.n}
    )


def _cmd_rotate(args) -> CommandResult:
    tau = parse_permutation(args.tau)
    return CommandResult("ok", {"tau": _pstr(tau), "rotated": _pstr(rotate(tau))})


def _cmd_plot(args) -> CommandResult:
    tau = parse_permutation(args.tau)
    art = render_ascii(tau) if args.format == "ascii" else render_svg(tau)
    return CommandResult("ok", {"format": args.format, "plot": art})


def _cmd_montecarlo(args) -> CommandResult:
    tau = parse_permutation(args.tau)
    pi = parse_permutation(args.pattern)
    est = estimate_limit_density(
        tau,
        pi,
        j=args.j,
        samples=args.samples,
        subset_samples=args.subset_samples,
        seed=args.seed,
    )
    exact = limit_density_uniform(pi, tau)
    if est.stderr and est.stderr > 0:
        z = (est.mean - float(exact)) / est.stderr
    else:
        z = None
    return CommandResult(
        "ok",
        {
            "mean": est.mean,
            "stderr": est.stderr,
            "exact": _rat(exact),
            "z": z,
        },
    )


def _cmd_search(args, stream) -> CommandResult:
    threads = args.threads if args.threads is not None else _default_threads()
    cfg = SearchConfig(
        n=args.n,
        central_only=args.central,
        limit=args.limit,
        threads=threads,
        emit_all=args.emit_all,
        timeout=args.timeout,
    )
    progress = None
    if args.emit_all:
        if args.json:
            def progress(shard, batch):
                for h in batch:
                    stream.write(
                        json.dumps({"hit": _pstr(h), "subtree": shard}, separators=(",", ":")) + "\n"
                    )
        else:
            def progress(shard, batch):
                for h in batch:
                    stream.write(f"hit subtree={shard} {_pstr(h)}\n")
    try:
        res = search_3_inflatable(cfg, progress=progress)
    except SearchTimeout as exc:
        return CommandResult(
            "error",
            {
                "n": args.n,
                "space": "central" if args.central else "full",
                "scanned": exc.scanned,
                "found": len(exc.hits),
                "elapsed_ms": exc.elapsed_ms,
            },
            diagnostics=[str(exc)],
        )
    payload = {
        "n": args.n,
        "space": "central" if args.central else "full",
        "scanned": res.scanned,
        "found": res.found,
        "elapsed_ms": res.elapsed_ms,
    }
    diagnostics = []
    if res.status == "inadmissible":
        diagnostics.append(res.reason)
    result = CommandResult(res.status, payload, diagnostics)
    result.hits = res.hits  # carried for --out
    return result


_PLAIN = {
    "density": _cmd_density,
    "counts": _cmd_counts,
    "inflate": _cmd_inflate,
    "limit": _cmd_limit,
    "check": _cmd_check,
    "lengths": _cmd_lengths,
    "compose": _cmd_compose,
    "rotate": _cmd_rotate,
    "montecarlo": _cmd_montecarlo,
    "plot": _cmd_plot,
}


def run(argv: list, stdout=None) -> CommandResult:
    """Parse argv, execute, print, and return the structured outcome."""
    stream = stdout if stdout is not None else sys.stdout
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse already printed its message (help or usage error)
        if exc.code in (0, None):
            return CommandResult("ok", {}, [])
        return CommandResult("error", {}, [f"argument parsing failed ({exc.code})"])
    try:
        if args.command == "search":
            result = _cmd_search(args, stream)
        elif args.command == "blocks":
            result = _cmd_blocks(args)
        else:
            result = _PLAIN[args.command](args)
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        result = CommandResult("error", {}, [str(exc)])

    if result.status == "error":
        for note in result.diagnostics:
            print(f"error: {note}", file=sys.stderr)
        return result

    if args.command == "plot" and not args.json:
        text = result.payload["plot"]
    elif args.json:
        text = json.dumps(result.payload, separators=(",", ":"))
    elif args.command == "blocks":
        text = _blocks_lines(result.payload)
    else:
        text = _render_human(result.payload)

    stream.write(text + "\n")
    for note in result.diagnostics:
        stream.write(f"note: {note}\n")

    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            if args.command == "search":
                for h in getattr(result, "hits", []):
                    fh.write(_pstr(h) + "\n")
            else:
                fh.write(text + "\n")
    return result


def main(argv: Optional[list] = None) -> int:
    result = run(sys.argv[1:] if argv is None else argv)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
