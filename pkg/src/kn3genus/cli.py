"""Command-line interface: build, verify, genus, enumerate, formula.

Exit codes: 0 on success, 1 when a verification fails, 2 for usage or
parse errors.  `--json` switches every command to machine-readable output.
"""

import argparse
import json
import sys
from pathlib import Path

from . import fileio
from .builder import build_multi
from .census import (
    canonical_rewrite,
    count_lower_bound,
    count_upper_bound,
    enumerate_variants,
)
from .circuits import is_embedding_set, validate_eulerian
from .exceptions import FormatError, Kn3Error
from .levi import HypergraphSpec, euler_genus_lower_bound, genus_formula
from .scheme import set_to_scheme, trace_faces


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--json", action="store_true", help="emit JSON instead of text")


def _add_orientability(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group()
    group.add_argument("--orientable", dest="orientable", action="store_true", default=True)
    group.add_argument("--nonorientable", dest="orientable", action="store_false")


def _emit(args, payload: dict, text_lines: list[str]) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _genus_words(euler_genus: int, orientable: bool) -> str:
    if orientable:
        return f"orientable genus {euler_genus // 2} (euler genus {euler_genus})"
    return f"crosscap number {euler_genus} (euler genus {euler_genus})"


def cmd_build(args) -> int:
    s = build_multi(args.n, args.multiplicity, orientable=args.orientable, seed=args.seed)
    sch = set_to_scheme(s)
    report = trace_faces(sch)
    spec = HypergraphSpec(args.n, args.multiplicity)
    expected = euler_genus_lower_bound(spec)
    if not (report.all_quadrilateral and report.euler_genus == expected
            and report.orientable == args.orientable
            and is_embedding_set(s, require_strong=args.orientable)):
        print("error: built family failed self-verification", file=sys.stderr)
        return 1
    text = fileio.format_set(s)
    if args.out:
        Path(args.out).write_text(text)
    if args.scheme_out:
        Path(args.scheme_out).write_text(fileio.format_scheme(sch))
    payload = {
        "n": s.n,
        "m": s.m,
        "orientable": report.orientable,
        "face_count": report.face_count,
        "euler_genus": report.euler_genus,
        "genus": report.euler_genus // 2 if report.orientable else None,
        "crosscap": None if report.orientable else report.euler_genus,
        "out": args.out,
    }
    lines = [
        f"built n={s.n} m={s.m}: {report.face_count} faces, all quadrilateral",
        _genus_words(report.euler_genus, report.orientable),
    ]
    if args.out:
        lines.append(f"wrote {args.out}")
    if args.scheme_out:
        lines.append(f"wrote {args.scheme_out}")
    if not args.out and not args.scheme_out:
        _emit(args, payload, lines)
        if not args.json:
            sys.stdout.write(text)
        return 0
    _emit(args, payload, lines)
    return 0


def cmd_verify(args) -> int:
    s = fileio.parse_set(Path(args.path).read_text())
    rows: list[tuple[str, bool, str]] = []

    eulerian_ok = True
    detail = ""
    for c in s.circuits:
        rep = validate_eulerian(c)
        if not rep:
            eulerian_ok = False
            detail = f"circuit {c.excluded}: {rep.first()}"
            break
    rows.append(("eulerian", eulerian_ok, detail))

    compat = is_embedding_set(s, require_strong=False) if eulerian_ok else None
    rows.append(("compatible", bool(compat), compat.first() if compat else "skipped"))

    strong = is_embedding_set(s, require_strong=True) if compat else None
    strong_ok = bool(strong)
    strong_detail = "" if strong_ok else (strong.first() if strong is not None else "skipped")
    rows.append(("strong", strong_ok, strong_detail))

    quad_ok = genus_ok = False
    genus_detail = quad_detail = "skipped"
    euler = None
    orientable = None
    if compat:
        sch = set_to_scheme(s)
        report = trace_faces(sch)
        euler, orientable = report.euler_genus, report.orientable
        quad_ok = report.all_quadrilateral
        hist = dict(sorted(report.length_histogram().items()))
        quad_detail = f"{report.face_count} faces, lengths {hist}"
        expected = euler_genus_lower_bound(HypergraphSpec(s.n, s.m))
        genus_ok = report.euler_genus == expected
        genus_detail = (
            f"euler genus {report.euler_genus}, lower bound {expected}, "
            + ("orientable" if orientable else "non-orientable")
        )
    rows.append(("quadrilateral", quad_ok, quad_detail))
    rows.append(("genus", genus_ok, genus_detail))

    required = ["eulerian", "compatible", "quadrilateral", "genus"]
    if args.strict_strong:
        required.append("strong")
    ok = all(passed for name, passed, _ in rows if name in required)
    payload = {name: passed for name, passed, _ in rows}
    payload.update({"euler_genus": euler, "orientable": orientable, "pass": ok})
    lines = [
        f"{name}: {'PASS' if passed else 'FAIL'}" + (f" ({detail})" if detail else "")
        for name, passed, detail in rows
    ]
    lines.append(f"result: {'PASS' if ok else 'FAIL'}")
    _emit(args, payload, lines)
    return 0 if ok else 1


def cmd_genus(args) -> int:
    sch = fileio.parse_scheme(Path(args.path).read_text())
    report = trace_faces(sch)
    hist = dict(sorted(report.length_histogram().items()))
    payload = {
        "face_count": report.face_count,
        "face_lengths": hist,
        "euler_genus": report.euler_genus,
        "orientable": report.orientable,
    }
    _emit(
        args,
        payload,
        [
            f"faces: {report.face_count}",
            f"face lengths: {hist}",
            f"euler genus: {report.euler_genus}",
            f"orientable: {'yes' if report.orientable else 'no'}",
        ],
    )
    return 0


def cmd_enumerate(args) -> int:
    result = enumerate_variants(args.n, args.orientable, args.count, seed=args.seed)
    text = fileio.format_census(canonical_rewrite(s) for s in result.families)
    if args.out:
        Path(args.out).write_text(text)
    payload = {
        "requested": args.count,
        "found": len(result),
        "budget_exhausted": result.budget_exhausted,
        "count_lower_bound": str(count_lower_bound(args.n)),
        "count_upper_bound": str(count_upper_bound(args.n)),
        "out": args.out,
    }
    lines = [
        f"found {len(result)} pairwise-inequivalent families (requested {args.count})",
        f"counting bounds for n={args.n}: >= {count_lower_bound(args.n)}, <= {count_upper_bound(args.n)}",
    ]
    if result.budget_exhausted:
        lines.append("warning: sampling budget exhausted before reaching the target")
    if args.out:
        lines.append(f"wrote {args.out}")
    _emit(args, payload, lines)
    if not args.out and not args.json:
        sys.stdout.write(text)
    return 0


def cmd_formula(args) -> int:
    spec = HypergraphSpec(args.n, args.multiplicity)
    lower = euler_genus_lower_bound(spec)
    payload = {"n": args.n, "m": args.multiplicity, "euler_genus_lower_bound": lower}
    lines = [f"euler genus lower bound: {lower}"]
    if args.n % 2 == 0:
        orientable = genus_formula(spec, orientable=True)
        payload["orientable_genus"] = orientable
        lines.append(f"orientable genus: {orientable}")
        if args.n == 4 and args.multiplicity == 1:
            payload["nonorientable_genus"] = None
            lines.append("non-orientable genus: undefined (planar)")
        else:
            crosscap = genus_formula(spec, orientable=False)
            payload["nonorientable_genus"] = crosscap
            lines.append(f"non-orientable genus: {crosscap}")
    else:
        payload["orientable_genus"] = payload["nonorientable_genus"] = None
        lines.append("genus: out of scope (odd order); only the lower bound is reported")
    _emit(args, payload, lines)
    return 0


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kn3genus",
        description=(
            "Minimum-genus embeddings of complete 3-uniform hypergraphs, "
            "encoded as families of compatible Eulerian circuits."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="construct a verified minimum-genus family")
    p.add_argument("--n", type=int, required=True, help="vertex count (even, >= 4)")
    p.add_argument("--multiplicity", type=int, default=1, help="edge multiplicity m")
    _add_orientability(p)
    p.add_argument("--seed", type=int, default=None, help="randomize free choices")
    p.add_argument("--out", default=None, help="write the family file here")
    p.add_argument("--scheme-out", default=None, help="also write the scheme file")
    _add_common(p)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("verify", help="verify a family file")
    p.add_argument("path")
    p.add_argument("--strict-strong", action="store_true",
                   help="require strong compatibility to pass")
    _add_common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("genus", help="trace faces of a scheme file")
    p.add_argument("path")
    _add_common(p)
    p.set_defaults(func=cmd_genus)

    p = sub.add_parser("enumerate", help="collect pairwise-inequivalent families")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count", type=int, required=True)
    _add_orientability(p)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--out", default=None, help="write a census file here")
    _add_common(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("formula", help="print the closed-form genus values")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--multiplicity", type=int, default=1)
    _add_common(p)
    p.set_defaults(func=cmd_formula)

    return parser


def main(argv=None) -> int:
    parser = _parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (Kn3Error, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
