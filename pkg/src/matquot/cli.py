"""Command-line front end.

Exit codes: 0 for success or a true verdict, 1 for a false verdict, an
unsolvable equation, or a failed check, 2 for usage and parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import MatquotError, MatrixParseError
from .gcd_lcm import gcd_lcm_pair, left_divides, right_divides
from .matio import format_matrix, matrix_to_json, parse_matrix_file
from .matrix import Matrix
from .normal_forms import hermite_col, smith
from .oracle import hnf_solve
from .rings import RINGS
from .solver import (
    AnnihilatorParameter,
    SolutionParameter,
    annihilator_element,
    annihilator_generators,
    build_solution_set,
    certify,
    general_solution,
    particular_solution,
)
from .verify import DEFAULT_SEED, run_battery


def _positive_int(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="matquot",
        description="Exact matrix equation toolkit: solve B*X = A over int or polyq, "
        "with gcd/lcm of the solution set.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--ring", choices=sorted(RINGS), default="int",
                       help="coefficient ring of all matrix files (default: int)")
        p.add_argument("--json", action="store_true", help="emit JSON instead of text")

    p = sub.add_parser("snf", help="diagonal form of a square matrix with transforms")
    p.add_argument("matrix")
    add_common(p)
    p.set_defaults(func=cmd_snf)

    p = sub.add_parser("hnf", help="column echelon form with its column transform")
    p.add_argument("matrix")
    add_common(p)
    p.set_defaults(func=cmd_hnf)

    p = sub.add_parser("solve", help="solve B*X = A")
    p.add_argument("divisor", metavar="B.mat")
    p.add_argument("target", metavar="A.mat")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--particular", action="store_true",
                      help="print the zero-free-block solution (default)")
    mode.add_argument("--with-params", metavar="T.mat",
                      help="free bottom block [T3 T4] as an (n-t) x n matrix file")
    mode.add_argument("--gcd", action="store_true", help="print the left gcd of all solutions")
    mode.add_argument("--lcm", action="store_true", help="print the left lcm of all solutions")
    add_common(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("gcd", help="left gcd of the solutions of B*X = A")
    p.add_argument("divisor", metavar="B.mat")
    p.add_argument("target", metavar="A.mat")
    add_common(p)
    p.set_defaults(func=cmd_gcd)

    p = sub.add_parser("lcm", help="left lcm of the solutions of B*X = A")
    p.add_argument("divisor", metavar="B.mat")
    p.add_argument("target", metavar="A.mat")
    add_common(p)
    p.set_defaults(func=cmd_lcm)

    p = sub.add_parser("annihilator", help="right annihilator elements of B")
    p.add_argument("divisor", metavar="B.mat")
    p.add_argument("--d", metavar="D.mat",
                   help="free block; omit to print the canonical generators")
    add_common(p)
    p.set_defaults(func=cmd_annihilator)

    p = sub.add_parser("divides", help="left (or right) divisibility test")
    p.add_argument("divisor", metavar="D.mat")
    p.add_argument("target", metavar="A.mat")
    p.add_argument("--right", action="store_true", help="test G*D = A instead of D*W = A")
    p.add_argument("--witness", action="store_true", help="print a witness when true")
    add_common(p)
    p.set_defaults(func=cmd_divides)

    p = sub.add_parser("verify", help="full cross-check battery on one instance")
    p.add_argument("divisor", metavar="B.mat")
    p.add_argument("target", metavar="A.mat")
    p.add_argument("--trials", type=_positive_int, default=5,
                   help="extra unimodular remixes to check (default: 5)")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED,
                   help=f"random seed (default: {DEFAULT_SEED})")
    p.add_argument("--expect-gcd", metavar="F.mat",
                   help="reference gcd; compared up to mutual divisibility")
    p.add_argument("--expect-lcm", metavar="N.mat",
                   help="reference lcm; compared up to mutual divisibility")
    add_common(p)
    p.set_defaults(func=cmd_verify)

    return parser


def _emit_matrices(ns, named):
    if ns.json:
        payload = {name: matrix_to_json(m) for name, m in named}
        print(json.dumps(payload))
    else:
        chunks = []
        for name, m in named:
            chunks.append(f"# {name}\n" + format_matrix(m))
        print("".join(chunks), end="")


def cmd_snf(ns) -> int:
    ring = RINGS[ns.ring]
    m = parse_matrix_file(ns.matrix, ring)
    dec = smith(m)
    if ns.json:
        payload = {
            "P": matrix_to_json(dec.p),
            "Pinv": matrix_to_json(dec.pinv),
            "E": matrix_to_json(dec.diagonal_matrix()),
            "Q": matrix_to_json(dec.q),
            "Qinv": matrix_to_json(dec.qinv),
            "rank": dec.rank,
            "factors": [ring.format(f) for f in dec.factors],
        }
        print(json.dumps(payload))
    else:
        _emit_matrices(
            ns,
            [
                ("P", dec.p),
                ("Pinv", dec.pinv),
                ("E", dec.diagonal_matrix()),
                ("Q", dec.q),
                ("Qinv", dec.qinv),
            ],
        )
    return 0


def cmd_hnf(ns) -> int:
    ring = RINGS[ns.ring]
    m = parse_matrix_file(ns.matrix, ring)
    dec = hermite_col(m)
    _emit_matrices(ns, [("H", dec.h), ("W", dec.w)])
    return 0


def _load_pair(ns):
    ring = RINGS[ns.ring]
    return ring, parse_matrix_file(ns.divisor, ring), parse_matrix_file(ns.target, ring)


def _unsolvable_message(cert) -> str:
    i, j, reason = cert.failure
    if reason == "indivisible":
        return (
            f"unsolvable: invariant factor {i + 1} does not divide "
            f"link[{i + 1},{j + 1}] * target factor {j + 1}"
        )
    return f"unsolvable: link[{i + 1},{j + 1}] is nonzero below rank {cert.t}"


def cmd_solve(ns) -> int:
    ring, b, a = _load_pair(ns)
    cert = certify(b, a)
    if not cert.solvable:
        if ns.json:
            print(json.dumps({"solvable": False, "failing_cell": list(cert.failure[:2]),
                              "reason": cert.failure[2]}))
        else:
            print(_unsolvable_message(cert), file=sys.stderr)
        return 1
    ss = build_solution_set(cert)
    if ns.gcd:
        name, result = "gcd", gcd_lcm_pair(ss).gcd
    elif ns.lcm:
        name, result = "lcm", gcd_lcm_pair(ss).lcm
    elif ns.with_params:
        free = parse_matrix_file(ns.with_params, ring)
        if free.rows != ss.n - ss.t or free.cols != ss.n:
            raise MatquotError(
                f"parameter block must be {ss.n - ss.t}x{ss.n}, got {free.rows}x{free.cols}"
            )
        p = SolutionParameter(
            t3=free.submatrix(0, free.rows, 0, ss.t),
            t4=free.submatrix(0, free.rows, ss.t, ss.n),
        )
        name, result = "solution", general_solution(ss, p)
    else:
        name, result = "solution", particular_solution(ss)
    if ns.json:
        print(json.dumps({"solvable": True, name: matrix_to_json(result)}))
    else:
        _emit_matrices(ns, [(name, result)])
    return 0


def cmd_gcd(ns) -> int:
    ns.gcd, ns.lcm, ns.with_params = True, False, None
    return cmd_solve(ns)


def cmd_lcm(ns) -> int:
    ns.gcd, ns.lcm, ns.with_params = False, True, None
    return cmd_solve(ns)


def cmd_annihilator(ns) -> int:
    ring = RINGS[ns.ring]
    b = parse_matrix_file(ns.divisor, ring)
    dec = smith(b)
    if ns.d is not None:
        d = parse_matrix_file(ns.d, ring)
        z = annihilator_element(dec, AnnihilatorParameter(d))
        _emit_matrices(ns, [("annihilator", z)])
        return 0
    gens = annihilator_generators(dec)
    if ns.json:
        print(json.dumps({"generators": [matrix_to_json(g) for g in gens]}))
    else:
        if not gens:
            print("# annihilator is trivial (full rank)")
        _emit_matrices(ns, [(f"generator {i + 1}", g) for i, g in enumerate(gens)])
    return 0


def cmd_divides(ns) -> int:
    ring, d, a = _load_pair(ns)
    if ns.right:
        ok, witness = right_divides(d, a)
    else:
        ok, witness = left_divides(d, a)
    if ns.json:
        payload = {"divides": ok}
        if ok and ns.witness:
            payload["witness"] = matrix_to_json(witness)
        print(json.dumps(payload))
    else:
        print("true" if ok else "false")
        if ok and ns.witness:
            _emit_matrices(ns, [("witness", witness)])
    return 0 if ok else 1


def cmd_verify(ns) -> int:
    ring, b, a = _load_pair(ns)
    expect_gcd = parse_matrix_file(ns.expect_gcd, ring) if ns.expect_gcd else None
    expect_lcm = parse_matrix_file(ns.expect_lcm, ring) if ns.expect_lcm else None
    results = run_battery(
        b, a, trials=ns.trials, seed=ns.seed, expect_gcd=expect_gcd, expect_lcm=expect_lcm
    )
    if ns.json:
        print(json.dumps({"checks": [
            {"pass": r.ok, "name": r.name, "detail": r.detail} for r in results
        ]}))
    else:
        for r in results:
            print(r.line())
    return 0 if all(r.ok for r in results) else 1


def run(argv) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return ns.func(ns)
    except MatrixParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except (MatquotError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
