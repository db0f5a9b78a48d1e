"""Command-line interface: catalog listing, per-form computation, full-catalog
verification, Satake diagram rendering and the symmetric-pair table."""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import Optional

from .nilorbits import orbit_diagram_json
from .pairs import lookup_pair, pairs_for, proper_sl2_pairs, table_csv
from .satake import (
    LabelError,
    RealFormLabel,
    catalog_labels,
    parse_label,
    satake_catalog,
    satake_to_dot,
    underlying_type,
)
from .spanverify import h_n_a_plus, verify_theorem

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2

_FORM_PATTERNS = [
    ("sl(n,R)", "n >= 2"),
    ("su*(2k)", "k >= 2"),
    ("su(p,q)", "p >= q >= 1, p+q >= 2"),
    ("so(p,q)", "p >= q >= 1; p+q odd >= 5 or even >= 8 (smaller cases are aliases)"),
    ("sp(l,R)", "l >= 1"),
    ("sp(p,q)", "p >= q >= 1"),
    ("so*(2n)", "n >= 4 (so*(6) is su(3,1))"),
    ("e6(6) | e6(2) | e6(-14) | e6(-26)", ""),
    ("e7(7) | e7(-5) | e7(-25)", ""),
    ("e8(8) | e8(-24)", ""),
    ("f4(4) | f4(-20)", ""),
    ("g2(2)", ""),
    ("slC(n)", "n >= 2; complex sl(n,C) viewed as a real algebra"),
    ("soC(n)", "n >= 5, n != 6; complex so(n,C) viewed as real"),
    ("spC(l)", "l >= 2; complex sp(l,C) viewed as real"),
    ("e6C | e7C | e8C | f4C | g2C", "complex exceptional algebras viewed as real"),
]


def _json_dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _write(out: Optional[str], text: str) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_forms(args) -> int:
    needle = (args.filter or "").lower()
    rows = [(pat, cond) for pat, cond in _FORM_PATTERNS if needle in pat.lower()]
    if args.format == "json":
        _write(args.out, _json_dumps([{"pattern": p, "constraints": c} for p, c in rows]) + "\n")
    else:
        lines = [f"{pat:40s} {cond}" for pat, cond in rows]
        _write(args.out, "\n".join(lines) + "\n")
    return EXIT_OK


def _resolve_labels(args) -> list[RealFormLabel]:
    if args.all:
        return catalog_labels(args.bound)
    if not args.labels:
        raise LabelError("no labels given; pass labels or --all")
    return [parse_label(text) for text in args.labels]


def cmd_verify(args) -> int:
    labels = _resolve_labels(args)
    with ThreadPoolExecutor(max_workers=args.jobs) as pool:
        reports = list(pool.map(verify_theorem, labels))
    lines = []
    all_ok = True
    for report in reports:
        verified = (
            report.theorem_holds
            and report.easy_inclusion_holds
            and report.paper_basis_verified in (True, None)
        )
        all_ok = all_ok and verified
        if args.format == "json":
            record = report.to_json()
            if args.verbose:
                record["orbits"] = [orbit_diagram_json(od) for od in report.matching_orbits]
            lines.append(_json_dumps(record))
        else:
            basis = ", ".join(str(b) for b in report.greedy_basis)
            status = "ok" if verified else "FAILED"
            lines.append(
                f"{report.label!s:12s} {report.simple_type} dim_b={report.dim_b} "
                f"dim_span={report.dim_span} theorem={report.theorem_holds} "
                f"inclusion={report.easy_inclusion_holds} basis=[{basis}] {status}"
            )
            if args.verbose:
                lines.extend(
                    f"    {od.label!s:16s} " + " ".join(str(w) for w in od.diagram.weights)
                    for od in report.matching_orbits
                )
    _write(args.out, "\n".join(lines) + "\n")
    return EXIT_OK if all_ok else EXIT_VERIFICATION_FAILED


def cmd_orbits(args) -> int:
    label = parse_label(args.label)
    matching = h_n_a_plus(label)
    witnesses = None
    if args.oracle:
        from .sl2oracle import build_chevalley, is_characteristic

        t = underlying_type(label)
        model = build_chevalley(t, max_rank=max(t.rank, 6))
        witnesses = [is_characteristic(model, od.diagram, trials=args.trials) for od in matching]
        if not all(ok for ok, _ in witnesses):
            print("error: an enumerated diagram failed oracle certification", file=sys.stderr)
            return EXIT_VERIFICATION_FAILED
    if args.format == "json":
        payload = {
            "label": str(label),
            "type": underlying_type(label).family,
            "rank": underlying_type(label).rank,
            "orbits": [orbit_diagram_json(od) for od in matching],
        }
        if witnesses is not None:
            for record, (_, witness) in zip(payload["orbits"], witnesses):
                record["witness"] = witness.to_json()
        _write(args.out, _json_dumps(payload) + "\n")
    else:
        width = max(len(str(od.label)) for od in matching)
        lines = []
        for idx, od in enumerate(matching):
            line = f"{str(od.label):{width}s}  " + " ".join(str(w) for w in od.diagram.weights)
            if witnesses is not None:
                line += "  [certified]"
            lines.append(line)
        _write(args.out, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_render(args) -> int:
    label = parse_label(args.label)
    if args.format == "json":
        _write(args.out, _json_dumps(satake_catalog(label).to_json()) + "\n")
    else:
        _write(args.out, satake_to_dot(label))
    return EXIT_OK


def cmd_pairs(args) -> int:
    if args.g and args.h:
        found = lookup_pair(args.g, args.h)
        if args.format == "json":
            payload = None if found is None else {"entry": found[0].to_json(), "parameters": found[1]}
            _write(args.out, _json_dumps(payload) + "\n")
        elif found is None:
            _write(args.out, "no matching pair\n")
        else:
            entry, env = found
            params = ", ".join(f"{k}={v}" for k, v in sorted(env.items()))
            _write(args.out, f"{entry.g}  |  {entry.h_display()}  [{entry.condition or 'no condition'}] ({params})\n")
        return EXIT_OK if found is not None else EXIT_VERIFICATION_FAILED
    entries = pairs_for(args.g) if args.g else proper_sl2_pairs()
    if args.format == "json":
        _write(args.out, _json_dumps([e.to_json() for e in entries]) + "\n")
    elif args.format == "csv":
        _write(args.out, table_csv())
    else:
        lines = [f"{e.g:14s} {e.h_display():38s} {e.condition}" for e in entries]
        _write(args.out, "\n".join(lines) + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orbitspan",
        description=(
            "Weighted Dynkin diagrams of nilpotent orbits matching Satake diagrams "
            "of real simple Lie algebras, with exact span verification. Labels use "
            "a family token with integer parameters, e.g. su(4,2), so*(12), e7(-5), "
            "sp(3,R), slC(4); run `orbitspan forms` for the catalog."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_forms = sub.add_parser("forms", help="list supported real-form label patterns")
    p_forms.add_argument("filter", nargs="?", help="substring filter")
    p_forms.add_argument("--format", choices=["text", "json"], default="text")
    p_forms.add_argument("--out", help="write output to a file")
    p_forms.set_defaults(func=cmd_forms)

    p_verify = sub.add_parser("verify", help="verify the span theorem for labels")
    p_verify.add_argument("labels", nargs="*", help="real-form labels")
    p_verify.add_argument("--all", action="store_true", help="verify the whole catalog")
    p_verify.add_argument("--bound", type=int, default=12, help="rank bound for --all (default 12)")
    p_verify.add_argument("--format", choices=["text", "json"], default="text")
    p_verify.add_argument("--jobs", type=int, default=4, help="worker pool size")
    p_verify.add_argument("--verbose", action="store_true", help="include all matching diagrams in reports")
    p_verify.add_argument("--out", help="write output to a file")
    p_verify.set_defaults(func=cmd_verify)

    p_orbits = sub.add_parser("orbits", help="list matching orbit diagrams for a label")
    p_orbits.add_argument("label")
    p_orbits.add_argument("--format", choices=["text", "json"], default="text")
    p_orbits.add_argument("--oracle", action="store_true", help="certify each diagram with an exact sl2 witness")
    p_orbits.add_argument("--trials", type=int, default=20, help="random trials per oracle query (default 20)")
    p_orbits.add_argument("--out", help="write output to a file")
    p_orbits.set_defaults(func=cmd_orbits)

    p_render = sub.add_parser("render", help="render a Satake diagram (DOT or JSON)")
    p_render.add_argument("label")
    p_render.add_argument("--format", choices=["dot", "json"], default="dot")
    p_render.add_argument("--out", help="write output to a file")
    p_render.set_defaults(func=cmd_render)

    p_pairs = sub.add_parser("pairs", help="query the proper-SL(2,R)-action pair table")
    p_pairs.add_argument("--g", help="algebra label, e.g. e8(8) or su(4,2)")
    p_pairs.add_argument("--h", help="subalgebra description, e.g. 'sp(2,1)'")
    p_pairs.add_argument("--format", choices=["text", "json", "csv"], default="text")
    p_pairs.add_argument("--out", help="write output to a file")
    p_pairs.set_defaults(func=cmd_pairs)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except LabelError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
