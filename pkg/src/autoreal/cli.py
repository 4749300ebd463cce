"""Command-line interface.

Subcommands::

    autoreal enumerate cyclic --n 12
    autoreal enumerate p2 --p 7
    autoreal check cyclic --perm FILE
    autoreal check p2 --perm FILE --p 3
    autoreal realize cyclic --perm FILE
    autoreal realize p2 --perm FILE --p 2
    autoreal zn check --lengths 6,15,30 --chains [--complete]
    autoreal zn build --lengths 6,15,30 --chains [--out FILE]
    autoreal cyclotomic --n 6 [--method gcd|division|both]
    autoreal oracle gl --p 2 --dim 3

``--perm -`` reads the permutation from stdin. Every subcommand takes
``--json`` for machine-readable output on stdout.

Exit codes: 0 success / positive decision; 1 well-formed negative
decision; 2 malformed input or violated precondition; 3 computation
refused because it exceeds the configured budget.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import BudgetExceededError, NotRealizableError
from .structures import (
    ParseError,
    ZStructureDescriptor,
    format_descriptor,
    format_structure,
    parse_permutation,
    structure_of,
)

EXIT_OK = 0
EXIT_NO = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

CYCLOTOMIC_MAX_N = 2000
ZN_MAX_LENGTH = 1000
ZN_MAX_BLOCKS = 64


def _sorted_structures(structures) -> list[str]:
    return [format_structure(cs) for cs in sorted(structures, key=lambda s: s.rows)]


def _read_perm(path: str):
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise ParseError(f"cannot read {path}: {exc}") from None
    return parse_permutation(text)


def _emit(payload: dict, lines: list[str], as_json: bool) -> None:
    if as_json:
        print(json.dumps(payload))
    else:
        for line in lines:
            print(line)


def _cmd_enumerate_cyclic(args) -> int:
    from .finite_realizer import CYCLIC_MAX_N, cyclic_structures

    if not 2 <= args.n <= CYCLIC_MAX_N:
        raise ValueError(f"--n must be in 2..{CYCLIC_MAX_N}, got {args.n}")
    names = _sorted_structures(cyclic_structures(args.n))
    _emit(
        {"group": "cyclic", "n": args.n, "count": len(names), "structures": names},
        names,
        args.json,
    )
    return EXIT_OK


def _cmd_enumerate_p2(args) -> int:
    from .finite_realizer import p2_structures

    names = _sorted_structures(p2_structures(args.p))
    _emit(
        {"group": "p2", "p": args.p, "count": len(names), "structures": names},
        names,
        args.json,
    )
    return EXIT_OK


def _cmd_check_cyclic(args) -> int:
    from .finite_realizer import check_cyclic

    perm = _read_perm(args.perm)
    name = format_structure(structure_of(perm))
    k = check_cyclic(perm)
    if k is None:
        _emit(
            {"realizable": False, "structure": name},
            ["realizable: no", f"structure: {name}"],
            args.json,
        )
        return EXIT_NO
    _emit(
        {"realizable": True, "multiplier": k, "structure": name},
        ["realizable: yes", f"multiplier: {k}", f"structure: {name}"],
        args.json,
    )
    return EXIT_OK


def _cmd_check_p2(args) -> int:
    from .finite_realizer import check_auto_p2

    perm = _read_perm(args.perm)
    name = format_structure(structure_of(perm))
    ok = check_auto_p2(perm, args.p)
    _emit(
        {"realizable": ok, "p": args.p, "structure": name},
        [f"realizable: {'yes' if ok else 'no'}", f"structure: {name}"],
        args.json,
    )
    return EXIT_OK if ok else EXIT_NO


def _cmd_realize_cyclic(args) -> int:
    from .finite_realizer import realize_cyclic

    perm = _read_perm(args.perm)
    w = realize_cyclic(perm)
    labels = " ".join(str(v) for v in w.labeling)
    _emit(
        {"n": w.n, "multiplier": w.multiplier, "labeling": list(w.labeling)},
        [f"n: {w.n}", f"multiplier: {w.multiplier}", f"labeling: {labels}"],
        args.json,
    )
    return EXIT_OK


def _cmd_realize_p2(args) -> int:
    from .finite_realizer import realize_p2
    from .intmat import format_matrix, matrix_to_json

    perm = _read_perm(args.perm)
    w = realize_p2(perm, args.p)
    mat = w.matrix.entries
    labels = " ".join(f"{x},{y}" for x, y in w.labeling)
    _emit(
        {
            "p": w.p,
            "matrix": matrix_to_json(mat),
            "labeling": [[x, y] for x, y in w.labeling],
        },
        [f"p: {w.p}", "matrix:", format_matrix(mat), f"labeling: {labels}"],
        args.json,
    )
    return EXIT_OK


def _parse_lengths(raw: str) -> frozenset[int]:
    if raw is None or raw == "":
        return frozenset()
    out = []
    for part in raw.split(","):
        part = part.strip()
        if not part.isdigit() or int(part) < 1:
            raise ValueError(f"--lengths must be positive integers, got {part!r}")
        out.append(int(part))
    return frozenset(out)


def _violation_json(v) -> dict:
    return {
        "condition": v.condition,
        "pair": list(v.pair) if v.pair else None,
        "missing": v.missing,
        "message": v.message,
    }


def _cmd_zn_check(args) -> int:
    from .zn_realizer import lcm_closure, validate_descriptor

    lengths = _parse_lengths(args.lengths)
    added: list[int] = []
    if args.complete and lengths:
        closed = lcm_closure(lengths)
        added = sorted(closed - lengths)
        lengths = closed
    d = ZStructureDescriptor(lengths, args.chains)
    violations = validate_descriptor(d)
    lines = [f"descriptor: {format_descriptor(d)}"]
    if added:
        lines.append(f"completed: added {','.join(str(v) for v in added)}")
    lines.append(f"valid: {'yes' if not violations else 'no'}")
    for v in violations:
        lines.append(f"condition {v.condition} violated: {v.message}")
    _emit(
        {
            "descriptor": {"lengths": sorted(d.lengths), "chains": d.has_chains},
            "added": added,
            "valid": not violations,
            "violations": [_violation_json(v) for v in violations],
        },
        lines,
        args.json,
    )
    return EXIT_OK if not violations else EXIT_NO


def _cmd_zn_build(args) -> int:
    from .intmat import format_matrix
    from .zn_realizer import build_automorphism, realization_to_json

    lengths = _parse_lengths(args.lengths)
    for v in lengths:
        if v > ZN_MAX_LENGTH:
            raise ValueError(f"lengths must be <= {ZN_MAX_LENGTH}, got {v}")
    if len(lengths) + (1 if args.chains else 0) > ZN_MAX_BLOCKS:
        raise ValueError(f"at most {ZN_MAX_BLOCKS} blocks supported")
    d = ZStructureDescriptor(lengths, args.chains)
    r = build_automorphism(d)
    doc = realization_to_json(r)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(doc, fh)
            fh.write("\n")
    lines = [
        f"descriptor: {format_descriptor(d)}",
        f"dimension: {len(r.matrix)}",
    ]
    for b in r.blocks:
        lines.append(f"block {b.label}: offset {b.offset}, size {b.size}")
    lines.append("matrix:")
    lines.append(format_matrix(r.matrix))
    _emit(doc, lines, args.json)
    return EXIT_OK


def _cmd_cyclotomic(args) -> int:
    from .poly import cyclotomic_via_division, cyclotomic_via_gcd, format_poly

    n = args.n
    if not 1 <= n <= CYCLOTOMIC_MAX_N:
        raise ValueError(f"--n must be in 1..{CYCLOTOMIC_MAX_N}, got {n}")
    if n == 1 and args.method in ("gcd", "both"):
        raise ValueError("the gcd route needs n >= 2; use --method division for n = 1")
    if args.method == "gcd":
        result = cyclotomic_via_gcd(n)
    elif args.method == "division":
        result = cyclotomic_via_division(n)
    else:
        result = cyclotomic_via_gcd(n)
        if result != cyclotomic_via_division(n):
            raise RuntimeError(f"cyclotomic routes disagree at n = {n}")
    text = format_poly(result)
    _emit(
        {
            "n": n,
            "method": args.method,
            "degree": len(result) - 1,
            "coefficients": list(result),
            "text": text,
        },
        [text],
        args.json,
    )
    return EXIT_OK


def _cmd_oracle_gl(args) -> int:
    from .finite_realizer import gln_oracle

    names = _sorted_structures(gln_oracle(args.p, args.dim))
    _emit(
        {"p": args.p, "dim": args.dim, "count": len(names), "structures": names},
        names,
        args.json,
    )
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="autoreal",
        description="Decide and realize bijections as abelian group automorphisms.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_json(p):
        p.add_argument("--json", action="store_true", help="machine-readable output")

    enum = sub.add_parser("enumerate", help="admissible cycle structures of a group")
    enum_sub = enum.add_subparsers(dest="family", required=True)
    e_cyc = enum_sub.add_parser("cyclic", help="automorphisms of Z_n")
    e_cyc.add_argument("--n", type=int, required=True)
    add_json(e_cyc)
    e_cyc.set_defaults(handler=_cmd_enumerate_cyclic)
    e_p2 = enum_sub.add_parser("p2", help="automorphisms of Z_p x Z_p")
    e_p2.add_argument("--p", type=int, required=True)
    add_json(e_p2)
    e_p2.set_defaults(handler=_cmd_enumerate_p2)

    check = sub.add_parser("check", help="decide realizability of a permutation")
    check_sub = check.add_subparsers(dest="family", required=True)
    c_cyc = check_sub.add_parser("cyclic", help="as an automorphism of Z_n")
    c_cyc.add_argument("--perm", required=True, help="permutation file, or - for stdin")
    add_json(c_cyc)
    c_cyc.set_defaults(handler=_cmd_check_cyclic)
    c_p2 = check_sub.add_parser("p2", help="as an automorphism of Z_p x Z_p")
    c_p2.add_argument("--perm", required=True, help="permutation file, or - for stdin")
    c_p2.add_argument("--p", type=int, required=True)
    add_json(c_p2)
    c_p2.set_defaults(handler=_cmd_check_p2)

    real = sub.add_parser("realize", help="construct an explicit witness")
    real_sub = real.add_subparsers(dest="family", required=True)
    r_cyc = real_sub.add_parser("cyclic", help="multiplier plus relabeling")
    r_cyc.add_argument("--perm", required=True, help="permutation file, or - for stdin")
    add_json(r_cyc)
    r_cyc.set_defaults(handler=_cmd_realize_cyclic)
    r_p2 = real_sub.add_parser("p2", help="matrix plus relabeling")
    r_p2.add_argument("--perm", required=True, help="permutation file, or - for stdin")
    r_p2.add_argument("--p", type=int, required=True)
    add_json(r_p2)
    r_p2.set_defaults(handler=_cmd_realize_p2)

    zn = sub.add_parser("zn", help="orbit-length descriptors on the integer lattice")
    zn_sub = zn.add_subparsers(dest="action", required=True)
    z_check = zn_sub.add_parser("check", help="validate a descriptor")
    z_check.add_argument("--lengths", default="", help="comma-separated cycle lengths")
    z_check.add_argument("--chains", action="store_true", help="request infinite chains")
    z_check.add_argument("--complete", action="store_true", help="close under lcm first")
    add_json(z_check)
    z_check.set_defaults(handler=_cmd_zn_check)
    z_build = zn_sub.add_parser("build", help="build the block-diagonal witness")
    z_build.add_argument("--lengths", default="", help="comma-separated cycle lengths")
    z_build.add_argument("--chains", action="store_true", help="request infinite chains")
    z_build.add_argument("--out", help="also write the JSON document to this file")
    add_json(z_build)
    z_build.set_defaults(handler=_cmd_zn_build)

    cyc = sub.add_parser("cyclotomic", help="cyclotomic polynomial of n")
    cyc.add_argument("--n", type=int, required=True)
    cyc.add_argument("--method", choices=["gcd", "division", "both"], default="both")
    add_json(cyc)
    cyc.set_defaults(handler=_cmd_cyclotomic)

    oracle = sub.add_parser("oracle", help="brute-force enumerations")
    oracle_sub = oracle.add_subparsers(dest="kind", required=True)
    o_gl = oracle_sub.add_parser("gl", help="invertible dim x dim matrices over Z_p")
    o_gl.add_argument("--p", type=int, required=True)
    o_gl.add_argument("--dim", type=int, required=True)
    add_json(o_gl)
    o_gl.set_defaults(handler=_cmd_oracle_gl)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.handler(args)
    except NotRealizableError as exc:
        print(f"not realizable: {exc}", file=sys.stderr)
        return EXIT_NO
    except BudgetExceededError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
