"""Command-line frontend: classification, counting, tables, verification.

Subcommands:

    groups N            list the isomorphism types of groups of order N
    count N             Hopf-Galois structure counts for a cyclic degree-N extension
    table three-prime P1 P2 P3 / table four-prime P1 P2 P3 P4
    verify SPEC...      cross-check formulas against the brute-force oracles

All commands accept --format {text,json,csv}.  JSON documents carry
schema_version "1" and round-trip losslessly; CSV is a flat, lossy
projection with a header row.  Exit codes: 0 success, 1 verification
mismatch, 2 invalid input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from . import holomorph
from .grouptypes import enumerate_types
from .hgscount import (
    CongruenceConditionUnmet,
    NotDistinctPrimes,
    breakdown,
    four_prime_table,
    hgs_per_type,
    three_prime_table,
)
from .numutil import NotSquarefree, TooLarge, factor_squarefree

SCHEMA_VERSION = "1"

__all__ = ["main", "cmd_groups", "cmd_count", "cmd_table", "cmd_verify"]


def _document(command: str, inputs: dict, results: dict) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "inputs": inputs,
        "results": results,
    }


def _spec_dict(spec, ascii_only: bool) -> dict:
    return {
        "d": spec.d,
        "e": spec.e,
        "k": spec.k,
        "z": spec.z,
        "g": spec.g,
        "presentation": spec.presentation(ascii_only=ascii_only),
    }


# ---------------------------------------------------------------- commands


def cmd_groups(n: int, ascii_only: bool = False) -> dict:
    f = factor_squarefree(n)
    groups = [_spec_dict(s, ascii_only) for s in enumerate_types(f)]
    return _document(
        "groups",
        {"n": n},
        {"n": n, "primes": list(f.primes), "count": len(groups), "groups": groups},
    )


def cmd_count(
    n: int,
    terms: bool = False,
    per_type: bool = False,
    ascii_only: bool = False,
) -> dict:
    f = factor_squarefree(n)
    report = breakdown(f)
    results = {
        "n": n,
        "primes": list(f.primes),
        "type_count": len(report.types),
        "total": report.total_by_sum,
        "total_by_sum": report.total_by_sum,
        "total_by_formula": report.total_by_formula,
    }
    if per_type:
        results["types"] = [
            dict(_spec_dict(t.spec, ascii_only), hgs_count=t.hgs_count)
            for t in report.types
        ]
    if terms:
        results["terms"] = [
            {
                "d": t.triple.d,
                "g": t.triple.g,
                "z": t.triple.z,
                "value": t.value,
                "zero": t.is_zero,
            }
            for t in report.formula_terms
        ]
    return _document(
        "count", {"n": n, "terms": terms, "per_type": per_type}, results
    )


def cmd_table(kind: str, primes: list[int]) -> dict:
    if kind == "three-prime":
        table = three_prime_table(*primes)
        results = {
            "kind": kind,
            "primes": list(table.primes),
            "conditions": {
                "p2_divides_p3_minus_1": table.conditions[0],
                "p1_divides_p3_minus_1": table.conditions[1],
                "p1_divides_p2_minus_1": table.conditions[2],
            },
            "condition_key": table.condition_key,
            "rows": [
                {
                    "case": r.case,
                    "d": r.d,
                    "g": r.g,
                    "z": r.z,
                    "condition": r.condition,
                    "groups": r.group_count,
                    "hgs_per_group": r.hgs_per_group,
                    "subtotal": r.subtotal,
                }
                for r in table.rows
            ],
            "total_groups": table.total_groups,
            "total_hgs": table.total_hgs,
        }
    else:
        table = four_prime_table(*primes)
        results = {
            "kind": kind,
            "primes": list(table.primes),
            "rows": [
                {
                    "d": r.d,
                    "g": r.g,
                    "z": r.z,
                    "groups": r.group_count,
                    "hgs_per_group": r.hgs_per_group,
                    "subtotal": r.subtotal,
                }
                for r in table.rows
            ],
            "type_total": table.type_total,
            "total_hgs": table.total_hgs,
        }
    return _document("table", {"kind": kind, "primes": primes}, results)


def verify_single(n: int, budget: int) -> dict:
    """Cross-check one n: formula total vs per-type sum vs both oracles."""
    f = factor_squarefree(n)
    report = breakdown(f)  # raises ConsistencyFailure on sum != formula
    entry = {
        "n": n,
        "formula_total": report.total_by_formula,
        "sum_of_types": report.total_by_sum,
        "fast_oracle": 0,
        "perm_oracle": 0,
        "perm_skipped": False,
        "pass": True,
    }
    per_type_ok = True
    perm_total = 0
    for tr in report.types:
        fast = holomorph.count_regular_cyclic_fast(tr.spec)
        if fast.hgs_count_oracle != tr.hgs_count:
            per_type_ok = False
        entry["fast_oracle"] += fast.hgs_count_oracle
        if not entry["perm_skipped"]:
            try:
                perm = holomorph.count_regular_cyclic_perm(tr.spec, budget)
            except holomorph.BudgetExceeded:
                entry["perm_skipped"] = True
                continue
            if perm.hgs_count_oracle != tr.hgs_count:
                per_type_ok = False
            perm_total += perm.hgs_count_oracle
    entry["perm_oracle"] = None if entry["perm_skipped"] else perm_total
    entry["pass"] = (
        per_type_ok
        and entry["fast_oracle"] == report.total_by_sum
        and (entry["perm_skipped"] or entry["perm_oracle"] == report.total_by_sum)
    )
    return entry


def _parse_verify_spec(spec: str) -> list[int]:
    """Parse 'a..b' inclusive ranges and comma/space separated values.

    Non-squarefree n inside a range are silently skipped; explicitly listed
    n are kept (and will error downstream if invalid).
    """
    ns: list[int] = []
    for part in spec.replace(",", " ").split():
        if ".." in part:
            lo, hi = part.split("..", 1)
            for n in range(int(lo), int(hi) + 1):
                try:
                    factor_squarefree(n)
                except NotSquarefree:
                    continue
                ns.append(n)
        else:
            ns.append(int(part))
    return ns


def cmd_verify(ns: list[int], budget: int, jobs: int = 1) -> dict:
    if jobs > 1 and len(ns) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            entries = list(pool.map(verify_single, ns, [budget] * len(ns)))
    else:
        entries = [verify_single(n, budget) for n in ns]
    entries.sort(key=lambda d: d["n"])
    results = {
        "ns": ns,
        "budget": budget,
        "entries": entries,
        "all_pass": all(d["pass"] for d in entries),
        "skipped_count": sum(1 for d in entries if d["perm_skipped"]),
    }
    return _document("verify", {"ns": ns, "budget": budget}, results)


# ---------------------------------------------------------------- rendering


def _render_text(doc: dict, out: io.TextIOBase) -> None:
    cmd = doc["command"]
    r = doc["results"]
    if cmd == "groups":
        primes = " * ".join(str(p) for p in r["primes"]) or "1"
        out.write(f"n = {r['n']} = {primes}: {r['count']} isomorphism type(s)\n")
        w = max((len(str(g["k"])) for g in r["groups"]), default=1)
        for grp in r["groups"]:
            out.write(
                f"  d={grp['d']:<4} e={grp['e']:<6} k={grp['k']:<{w}} "
                f"z={grp['z']:<6} g={grp['g']:<6} {grp['presentation']}\n"
            )
    elif cmd == "count":
        out.write(
            f"n = {r['n']}: {r['total']} Hopf-Galois structures "
            f"across {r['type_count']} type(s)\n"
        )
        out.write(
            f"  sum over types = {r['total_by_sum']}, "
            f"triple-sum formula = {r['total_by_formula']}\n"
        )
        if "types" in r:
            out.write("  d      e      k      z      g      count\n")
            for t in r["types"]:
                out.write(
                    f"  {t['d']:<6} {t['e']:<6} {t['k']:<6} {t['z']:<6} "
                    f"{t['g']:<6} {t['hgs_count']}\n"
                )
        if "terms" in r:
            out.write("  d      g      z      term\n")
            for t in r["terms"]:
                tag = "  (zero)" if t["zero"] else ""
                out.write(
                    f"  {t['d']:<6} {t['g']:<6} {t['z']:<6} {t['value']}{tag}\n"
                )
    elif cmd == "table":
        if r["kind"] == "three-prime":
            out.write(
                "n = %d * %d * %d; conditions %s\n"
                % (*r["primes"], r["condition_key"])
            )
            out.write("  case  d      g      z      condition             groups  hgs/group\n")
            for row in r["rows"]:
                out.write(
                    f"  {row['case']:<5} {row['d']:<6} {row['g']:<6} {row['z']:<6} "
                    f"{row['condition']:<21} {row['groups']:<7} {row['hgs_per_group']}\n"
                )
            out.write(
                f"  total: {r['total_groups']} group(s), {r['total_hgs']} Hopf-Galois structures\n"
            )
        else:
            out.write("n = %d * %d * %d * %d\n" % tuple(r["primes"]))
            out.write("  d       g       z       groups  hgs/group  subtotal\n")
            for row in r["rows"]:
                out.write(
                    f"  {row['d']:<7} {row['g']:<7} {row['z']:<7} "
                    f"{row['groups']:<7} {row['hgs_per_group']:<10} {row['subtotal']}\n"
                )
            out.write(
                f"  total: {r['type_total']} type(s), {r['total_hgs']} Hopf-Galois structures\n"
            )
    elif cmd == "verify":
        for entry in r["entries"]:
            perm = "skipped" if entry["perm_skipped"] else entry["perm_oracle"]
            status = "ok" if entry["pass"] else "MISMATCH"
            out.write(
                f"  n={entry['n']:<7} formula={entry['formula_total']:<7} "
                f"types={entry['sum_of_types']:<7} fast={entry['fast_oracle']:<7} "
                f"perm={perm!s:<8} {status}\n"
            )
        verdict = "PASS" if r["all_pass"] else "FAIL"
        out.write(
            f"{verdict}: {len(r['entries'])} value(s) checked, "
            f"{r['skipped_count']} permutation oracle(s) skipped\n"
        )


_CSV_COLUMNS = {
    "groups": ("d", "e", "k", "z", "g"),
    "types": ("d", "e", "k", "z", "g", "hgs_count"),
    "terms": ("d", "g", "z", "value", "zero"),
    "table3": ("case", "d", "g", "z", "groups", "hgs_per_group", "subtotal"),
    "table4": ("d", "g", "z", "groups", "hgs_per_group", "subtotal"),
    "verify": (
        "n",
        "formula_total",
        "sum_of_types",
        "fast_oracle",
        "perm_oracle",
        "perm_skipped",
        "pass",
    ),
}


def _render_csv(doc: dict, out: io.TextIOBase) -> None:
    cmd = doc["command"]
    r = doc["results"]
    if cmd == "groups":
        key, rows = "groups", r["groups"]
    elif cmd == "count":
        if "terms" in r:
            key, rows = "terms", r["terms"]
        else:
            key, rows = "types", r.get("types", [])
    elif cmd == "table":
        key = "table3" if r["kind"] == "three-prime" else "table4"
        rows = r["rows"]
    else:
        key, rows = "verify", r["entries"]
    cols = _CSV_COLUMNS[key]
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(cols)
    for row in rows:
        writer.writerow([row[c] for c in cols])


def _emit(doc: dict, fmt: str) -> None:
    if fmt == "json":
        sys.stdout.write(json.dumps(doc, indent=2, sort_keys=False) + "\n")
    elif fmt == "csv":
        _render_csv(doc, sys.stdout)
    else:
        _render_text(doc, sys.stdout)


# ---------------------------------------------------------------- entry point


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hgs",
        description="Groups of squarefree order and Hopf-Galois structure counts "
        "on cyclic field extensions.",
    )
    parser.add_argument(
        "--format", choices=("text", "json", "csv"), default="text",
        help="output format (default: text)",
    )
    parser.add_argument(
        "--ascii", action="store_true",
        help="force ASCII presentation strings (auto-detected otherwise)",
    )
    sub = parser.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("groups", help="list isomorphism types of groups of order N")
    p.add_argument("n", type=int)

    p = sub.add_parser("count", help="count Hopf-Galois structures for degree N")
    p.add_argument("n", type=int)
    p.add_argument("--terms", action="store_true", help="include all formula terms")
    p.add_argument("--per-type", action="store_true", help="include per-type counts")

    p = sub.add_parser("table", help="example tables for 3 or 4 prime factors")
    p.add_argument("kind", choices=("three-prime", "four-prime"))
    p.add_argument("primes", type=int, nargs="+")

    p = sub.add_parser("verify", help="check formulas against brute-force oracles")
    p.add_argument("spec", nargs="+", help="values or inclusive ranges like 1..60")
    p.add_argument(
        "--skip-perm-over", type=int, default=None, metavar="N",
        help="skip the permutation oracle when the holomorph exceeds N elements "
        "(default: HGS_BUDGET or 10^6)",
    )
    p.add_argument(
        "--strict", action="store_true",
        help="treat skipped permutation oracles as failures",
    )
    p.add_argument("--jobs", type=int, default=1, help="parallel workers")
    return parser


def _ascii_wanted(args: argparse.Namespace) -> bool:
    if args.ascii:
        return True
    enc = getattr(sys.stdout, "encoding", None) or ""
    return "utf" not in enc.lower()


def _default_budget() -> int:
    env = os.environ.get("HGS_BUDGET")
    return int(env) if env else holomorph.DEFAULT_BUDGET


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.cmd == "groups":
            doc = cmd_groups(args.n, ascii_only=_ascii_wanted(args))
        elif args.cmd == "count":
            doc = cmd_count(
                args.n,
                terms=args.terms,
                per_type=args.per_type,
                ascii_only=_ascii_wanted(args),
            )
        elif args.cmd == "table":
            want = 3 if args.kind == "three-prime" else 4
            if len(args.primes) != want:
                parser.error(f"{args.kind} expects {want} primes")
            doc = cmd_table(args.kind, args.primes)
        else:
            budget = args.skip_perm_over if args.skip_perm_over else _default_budget()
            ns = _parse_verify_spec(" ".join(args.spec))
            for n in ns:
                factor_squarefree(n)  # explicit values must be valid
            doc = cmd_verify(ns, budget, jobs=args.jobs)
    except (NotSquarefree, TooLarge, NotDistinctPrimes, CongruenceConditionUnmet, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit(doc, args.format)
    if args.cmd == "verify":
        results = doc["results"]
        if not results["all_pass"]:
            return 1
        if args.strict and results["skipped_count"]:
            return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
