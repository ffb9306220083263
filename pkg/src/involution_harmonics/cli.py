"""Command line interface.

Exit codes: 0 success (or check passed), 1 check failed, 2 usage error
(including invalid parameter combinations), 3 size cap exceeded.

JSON output is deterministic: identical inputs produce identical bytes.
"""

from __future__ import annotations

import argparse
import json
import sys

from .checks import check_bijections, check_formulas, check_width
from .errors import InvalidParametersError, ResourceLimitError, check_locus_params
from .frobenius import (
    graded_frobenius_positive,
    graded_frobenius_signed,
    graded_frobenius_width,
    hilbert_series,
)
from .involutions import involutions
from .oracle import graded_hilbert, oracle_graded_frobenius, verify_monomial_basis
from .partitions import partitions_of
from .schur import SchurPoly, schur_terms
from .stripes import (
    even_inner_stripes,
    steps_from_string,
    steps_heights,
    steps_to_string,
    stripe_steps,
    width,
)
from .tableaux import involution_tableau_pair


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _schur_json(f: SchurPoly) -> dict:
    return {
        "terms": [
            {"partition": list(lam), "coeffs": list(coeff)}
            for lam, coeff in schur_terms(f)
        ]
    }


def _qp_text(coeff) -> str:
    parts = []
    for d, c in enumerate(coeff):
        if c == 0:
            continue
        if d == 0:
            parts.append(str(c))
            continue
        power = "q" if d == 1 else f"q^{d}"
        parts.append(power if c == 1 else f"{c}*{power}")
    return " + ".join(parts) if parts else "0"


def _print_schur(f: SchurPoly, fmt: str) -> None:
    if fmt == "json":
        print(_dumps(_schur_json(f)))
        return
    for lam, coeff in schur_terms(f):
        name = "s[" + ",".join(map(str, lam)) + "]"
        print(f"{name}: {_qp_text(coeff)}")


def _ascii_path(steps) -> list[str]:
    heights = steps_heights(steps)
    lines = []
    for level in range(max(heights), min(heights), -1):
        row = []
        for j, step in enumerate(steps):
            if step == 1 and heights[j] == level - 1:
                row.append("/")
            elif step == -1 and heights[j] == level:
                row.append("\\")
            else:
                row.append(" ")
        lines.append("".join(row).rstrip())
    return lines


def _cmd_grfrob(args) -> int:
    routes = {
        "signed": graded_frobenius_signed,
        "positive": graded_frobenius_positive,
        "width": graded_frobenius_width,
    }
    if args.method == "oracle":
        f = oracle_graded_frobenius(args.n, args.a, size_cap=args.cap)
    else:
        f = routes[args.method](args.n, args.a)
    _print_schur(f, args.format)
    return 0


def _cmd_hilb(args) -> int:
    if args.method == "oracle":
        coeffs = graded_hilbert(args.n, args.a, size_cap=args.cap)
    else:
        coeffs = hilbert_series(graded_frobenius_width(args.n, args.a))
    if args.format == "json":
        print(_dumps({"coeffs": list(coeffs)}))
    else:
        print(_qp_text(coeffs))
    return 0


def _run_check(ok: bool, lines: list[str]) -> int:
    for line in lines:
        print(line)
    print("PASS" if ok else "FAIL")
    return 0 if ok else 1


def _cmd_check_formulas(args) -> int:
    return _run_check(*check_formulas(args.max_n))


def _cmd_check_bijections(args) -> int:
    return _run_check(*check_bijections(args.max_n))


def _cmd_check_width(args) -> int:
    return _run_check(*check_width(args.max_n))


def _cmd_check_basis(args) -> int:
    report = verify_monomial_basis(args.n, args.a, size_cap=args.cap)
    print(_dumps(report))
    return 0 if report["basis_check"] == "PASS" else 1


def _cmd_enumerate_stripes(args) -> int:
    check_locus_params(args.n, args.a)
    n, a = args.n, args.a
    rows = []
    for lam in partitions_of(n):
        for s in even_inner_stripes(lam, n - a):
            w = width(s)
            degree = (n + a - w) // 2
            if args.d is not None and degree != args.d:
                continue
            rows.append(
                {
                    "outer": list(s.outer),
                    "inner": list(s.inner),
                    "path": steps_to_string(stripe_steps(s)),
                    "width": w,
                    "degree": degree,
                }
            )
    if args.format == "json":
        print(_dumps({"n": n, "a": a, "stripes": rows}))
        return 0
    for row in rows:
        print(
            f"{row['outer']} / {row['inner']}  path={row['path']}  "
            f"width={row['width']}  degree={row['degree']}"
        )
        if args.ascii:
            for line in _ascii_path(steps_from_string(row["path"])):
                print("  " + line)
    return 0


def _cmd_enumerate_involutions(args) -> int:
    check_locus_params(args.n, args.a)
    rows = []
    histogram: dict[int, int] = {}
    for w in involutions(args.n, args.a):
        _, s = involution_tableau_pair(w)
        image_width = width(s)
        histogram[image_width] = histogram.get(image_width, 0) + 1
        rows.append(
            {
                "pairs": [list(p) for p in w.pairs],
                "fixed": list(w.fixed),
                "image_width": image_width,
            }
        )
    if args.format == "json":
        print(
            _dumps(
                {
                    "n": args.n,
                    "a": args.a,
                    "count": len(rows),
                    "width_histogram": [
                        [k, histogram[k]] for k in sorted(histogram)
                    ],
                    "involutions": rows,
                }
            )
        )
        return 0
    for row in rows:
        pairs = " ".join(f"({i},{j})" for i, j in row["pairs"]) or "-"
        fixed = ",".join(map(str, row["fixed"])) or "-"
        print(f"pairs={pairs}  fixed={fixed}  image_width={row['image_width']}")
    print(f"count={len(rows)}  width_histogram={sorted(histogram.items())}")
    return 0


def _add_locus_args(parser, with_cap=False) -> None:
    parser.add_argument("--n", type=int, required=True)
    parser.add_argument("--a", type=int, required=True)
    if with_cap:
        parser.add_argument(
            "--cap",
            type=int,
            default=None,
            help="size cap for brute-force computations (default 6, or "
            "INVOLUTION_ORACLE_MAX_N)",
        )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="invharm",
        description="Graded characters of involution matrix loci, exactly.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    grfrob = sub.add_parser("grfrob", help="graded Schur expansion of the locus")
    _add_locus_args(grfrob, with_cap=True)
    grfrob.add_argument(
        "--method",
        choices=["signed", "positive", "width", "oracle"],
        default="width",
    )
    grfrob.add_argument("--format", choices=["text", "json"], default="text")
    grfrob.set_defaults(func=_cmd_grfrob)

    hilb = sub.add_parser("hilb", help="graded dimension series of the locus")
    _add_locus_args(hilb, with_cap=True)
    hilb.add_argument("--method", choices=["formula", "oracle"], default="formula")
    hilb.add_argument("--format", choices=["text", "json"], default="text")
    hilb.set_defaults(func=_cmd_hilb)

    check = sub.add_parser("check", help="run a verification sweep")
    check_sub = check.add_subparsers(dest="what", required=True)
    formulas = check_sub.add_parser("formulas", help="three formula routes agree")
    formulas.add_argument("--max-n", type=int, default=8)
    formulas.set_defaults(func=_cmd_check_formulas)
    bijections = check_sub.add_parser("bijections", help="stripe bijections invert")
    bijections.add_argument("--max-n", type=int, default=8)
    bijections.set_defaults(func=_cmd_check_bijections)
    width_check = check_sub.add_parser(
        "width", help="width computations agree on all stripes up to a size"
    )
    width_check.add_argument(
        "--max-n", type=int, default=12, help="largest outer shape size swept"
    )
    width_check.set_defaults(func=_cmd_check_width)
    basis = check_sub.add_parser("basis", help="candidate monomials form a basis")
    _add_locus_args(basis, with_cap=True)
    basis.set_defaults(func=_cmd_check_basis)

    enum = sub.add_parser("enumerate", help="list stripes or involutions")
    enum_sub = enum.add_subparsers(dest="what", required=True)
    stripes = enum_sub.add_parser("stripes", help="stripes with even inner of size n-a")
    _add_locus_args(stripes)
    stripes.add_argument("--d", type=int, default=None, help="filter by degree")
    stripes.add_argument("--format", choices=["text", "json"], default="text")
    stripes.add_argument("--ascii", action="store_true", help="draw each path")
    stripes.set_defaults(func=_cmd_enumerate_stripes)
    involutions_cmd = enum_sub.add_parser(
        "involutions", help="the locus, with each point's image width"
    )
    _add_locus_args(involutions_cmd)
    involutions_cmd.add_argument("--format", choices=["text", "json"], default="text")
    involutions_cmd.set_defaults(func=_cmd_enumerate_involutions)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InvalidParametersError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
