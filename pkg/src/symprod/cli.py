"""Command-line reports for the symmetric-product engine.

Every report is deterministic: JSON with sorted keys and no floats, CSV
only for matrices.  Integers beyond 64 bits are serialized as decimal
strings and flagged with a top-level "bigint" marker.  Exit codes: 0 on
success, 2 for invalid parameters, 1 if an internal exactness assertion
fails or a verification suite reports failures.
"""

import argparse
import itertools
import json
import sys

from .core import CurveContext, IntegralityError
from .cohomology import coordinates, macdonald_relation
from .duality import intersection_matrix, signature
from .homology import betti, primitive_basis
from .invariants import (
    canonical_class,
    chern_classes,
    clifford_bound,
    euler_characteristic,
    hirzebruch_signature,
    km_admissible,
    rational_curve_degrees,
)
from .oracle import GradedRingSpec, invariant_rank

# Documented soft limits for commands that go through the tensor power.
SOFT_G = 8
SOFT_N = 6

_INT64_MAX = 2**63 - 1


def _encode(value, state):
    if isinstance(value, bool):
        return value
    if isinstance(value, int):
        if abs(value) > _INT64_MAX:
            state["bigint"] = True
            return str(value)
        return value
    if isinstance(value, (list, tuple)):
        return [_encode(v, state) for v in value]
    if isinstance(value, dict):
        return {k: _encode(v, state) for k, v in value.items()}
    return value


def emit_json(report: dict) -> str:
    state = {"bigint": False}
    encoded = _encode(report, state)
    if state["bigint"]:
        encoded["bigint"] = True
    return json.dumps(encoded, sort_keys=True, separators=(",", ":"))


def _emit_text(report: dict) -> str:
    lines = []
    for key in sorted(report):
        lines.append(f"{key}: {report[key]}")
    return "\n".join(lines)


def _print_report(report, fmt: str, matrix=None) -> None:
    if fmt == "json":
        print(emit_json(report))
    elif fmt == "csv":
        print(matrix.to_csv(), end="")
    else:
        print(_emit_text(report))


def _soft_limits(parser, g, n=None):
    if g > SOFT_G:
        parser.error(f"g={g} exceeds the supported limit g <= {SOFT_G}")
    if n is not None and n > SOFT_N:
        parser.error(f"n={n} exceeds the supported limit n <= {SOFT_N}")


def _cmd_betti(parser, args):
    ctx = CurveContext(args.g, args.n)
    values = [betti(ctx, m) for m in range(2 * ctx.n + 1)]
    return {"g": ctx.g, "n": ctx.n, "betti": values}, None


def _cmd_euler(parser, args):
    ctx = CurveContext(args.g, args.n)
    return {"g": ctx.g, "n": ctx.n, "euler": euler_characteristic(ctx)}, None


def _cmd_signature(parser, args):
    if args.n % 2:
        parser.error("signature needs an even symmetric power")
    _soft_limits(parser, args.g, args.n)
    ctx = CurveContext(args.g, args.n)
    mat = intersection_matrix(ctx)
    return {"g": ctx.g, "n": ctx.n, "signature": signature(mat)}, None


def _cmd_intersection_matrix(parser, args):
    _soft_limits(parser, args.g, args.n)
    ctx = CurveContext(args.g, args.n)
    mat = intersection_matrix(ctx)
    report = {"g": ctx.g, "n": ctx.n}
    report.update(mat.to_json_obj())
    report["determinant"] = mat.determinant()
    if ctx.n % 2 == 0:
        report["signature"] = signature(mat)
    return report, mat


def _cmd_chern(parser, args):
    _soft_limits(parser, args.g, args.n)
    ctx = CurveContext(args.g, args.n)
    c1, c2 = chern_classes(ctx)
    return {
        "g": ctx.g,
        "n": ctx.n,
        "c1": c1.to_json_obj(),
        "c2": c2.to_json_obj(),
    }, None


def _cmd_canonical(parser, args):
    _soft_limits(parser, args.g, args.n)
    ctx = CurveContext(args.g, args.n)
    k_coh, k_hom = canonical_class(ctx)
    report = {"g": ctx.g, "n": ctx.n, "canonical_dual": k_coh.to_json_obj()}
    if k_hom is not None:
        report["canonical_homology"] = k_hom.to_json_obj()
    return report, None


def _cmd_clifford(parser, args):
    if args.g < 1:
        parser.error("clifford needs g >= 1")
    _soft_limits(parser, args.g)
    cert = clifford_bound(args.g, args.n)
    return cert.to_json_obj(), None


def _cmd_obstruction(parser, args):
    _soft_limits(parser, args.g)
    report = km_admissible(args.g, args.k)
    return report.to_json_obj(), None


def _cmd_rational_curves(parser, args):
    if args.g < 2:
        parser.error("rational-curves needs g >= 2")
    degrees = sorted(rational_curve_degrees(args.g))
    return {"g": args.g, "degrees": degrees}, None


def _cmd_primitive(parser, args):
    _soft_limits(parser, args.g, args.n)
    ctx = CurveContext(args.g, args.n)
    if not 1 <= args.degree <= 2 * ctx.n:
        parser.error(f"degree must lie in [1, {2 * ctx.n}]")
    classes = primitive_basis(ctx, args.degree)
    return {
        "g": ctx.g,
        "n": ctx.n,
        "degree": args.degree,
        "classes": [cls.to_json_obj() for cls in classes],
    }, None


def _macdonald_instances(g: int, n: int):
    """All relation instances with total weight a + b + 2c + q = n + 1."""
    indices = range(1, g + 1)
    for a in range(g + 1):
        for fam_i in itertools.combinations(indices, a):
            rest_i = [i for i in indices if i not in fam_i]
            for b in range(len(rest_i) + 1):
                for fam_j in itertools.combinations(rest_i, b):
                    rest_j = [i for i in rest_i if i not in fam_j]
                    for c in range(len(rest_j) + 1):
                        if a + b + 2 * c > n + 1:
                            continue
                        for fam_k in itertools.combinations(rest_j, c):
                            q = n + 1 - a - b - 2 * c
                            yield fam_i, fam_j, fam_k, q


def _verify_macdonald(g: int, n: int) -> dict:
    ctx = CurveContext(g, n)
    checked = failures = 0
    for fam_i, fam_j, fam_k, q in _macdonald_instances(g, n):
        rel = macdonald_relation(ctx, fam_i, fam_j, fam_k, q)
        # class degree is a + b + 2c + 2q = (n + 1) + q
        degree = n + 1 + q
        checked += 1
        if any(coordinates(rel, degree)):
            failures += 1
    if n > 2 * g - 2 and g >= 1:
        top = macdonald_relation(ctx, (), (), tuple(range(1, g + 1)), n - 2 * g + 1)
        checked += 1
        if any(coordinates(top, n + 1 + (n - 2 * g + 1))):
            failures += 1
    return {"relations_checked": checked, "failures": failures}


def _verify_betti(g: int, n: int) -> dict:
    ctx = CurveContext(g, n)
    spec = GradedRingSpec.surface(g)
    checked = failures = 0
    for m in range(2 * n + 1):
        checked += 1
        if betti(ctx, m) != invariant_rank(spec, n, m):
            failures += 1
    return {"degrees_checked": checked, "failures": failures}


def _verify_signature(g: int) -> dict:
    ctx = CurveContext(g, 2)
    sig = signature(intersection_matrix(ctx))
    failures = 0
    if sig != 1 - g:
        failures += 1
    if hirzebruch_signature(g) != sig:
        failures += 1
    return {"signature": sig, "failures": failures}


def _verify_wedge(k: int, n: int) -> dict:
    spec = GradedRingSpec.wedge_of_circles(k)
    total = sum(invariant_rank(spec, n, m) for m in range(n + 1))
    failures = 1 if (n >= k and total != 2**k) else 0
    return {"k": k, "n": n, "total_rank": total, "failures": failures}


def _cmd_verify(parser, args):
    _soft_limits(parser, args.g, args.n)
    report = {"suite": args.suite, "g": args.g, "n": args.n}
    if args.suite == "macdonald":
        report.update(_verify_macdonald(args.g, args.n))
    elif args.suite == "betti":
        report.update(_verify_betti(args.g, args.n))
    elif args.suite == "signature":
        report.update(_verify_signature(args.g))
    elif args.suite == "wedge":
        k = args.k if args.k is not None else 3
        report.update(_verify_wedge(k, args.n))
    else:  # all
        failures = 0
        mac = _verify_macdonald(args.g, args.n)
        bet = _verify_betti(args.g, args.n)
        sig = _verify_signature(args.g)
        failures = mac["failures"] + bet["failures"] + sig["failures"]
        report.update(
            {
                "relations_checked": mac["relations_checked"],
                "degrees_checked": bet["degrees_checked"],
                "signature": sig["signature"],
                "failures": failures,
            }
        )
    return report, None


_COMMANDS = {
    "betti": (_cmd_betti, ("g", "n")),
    "euler": (_cmd_euler, ("g", "n")),
    "signature": (_cmd_signature, ("g", "n2")),
    "intersection-matrix": (_cmd_intersection_matrix, ("g", "n2", "csv")),
    "chern": (_cmd_chern, ("g", "n")),
    "canonical": (_cmd_canonical, ("g", "n2")),
    "clifford": (_cmd_clifford, ("g", "n")),
    "obstruction": (_cmd_obstruction, ("g", "k")),
    "rational-curves": (_cmd_rational_curves, ("g",)),
    "primitive": (_cmd_primitive, ("g", "n", "degree")),
    "verify": (_cmd_verify, ("g", "n", "suite", "kopt")),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="symprod",
        description="Exact invariants of symmetric products of a genus-g surface.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, options) in _COMMANDS.items():
        p = sub.add_parser(name)
        if "g" in options:
            p.add_argument("--g", type=int, required=True, help="genus (>= 0)")
        if "n" in options:
            p.add_argument("--n", type=int, required=True, help="symmetric power (>= 1)")
        if "n2" in options:
            p.add_argument("--n", type=int, default=2, help="symmetric power (default 2)")
        if "k" in options:
            p.add_argument("--k", type=int, required=True, help="multiple of the spherical class")
        if "kopt" in options:
            p.add_argument("--k", type=int, default=None, help="circle count for the wedge suite")
        if "degree" in options:
            p.add_argument("--degree", type=int, required=True, help="homology degree")
        if "suite" in options:
            p.add_argument(
                "--suite",
                choices=["macdonald", "betti", "signature", "wedge", "all"],
                default="all",
            )
        formats = ["json", "csv", "text"] if "csv" in options else ["json", "text"]
        p.add_argument("--format", choices=formats, default="json")
    return parser


def run(args, parser) -> int:
    handler, _ = _COMMANDS[args.command]
    report, matrix = handler(parser, args)
    fmt = args.format
    if fmt == "csv" and matrix is None:
        parser.error("csv output is only available for matrices")
    _print_report(report, fmt, matrix)
    if args.command == "verify" and report.get("failures"):
        return 1
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if getattr(args, "g", None) is not None and args.g < 0:
            parser.error("g must be >= 0")
        if getattr(args, "n", None) is not None and args.n < 1:
            parser.error("n must be >= 1")
        return run(args, parser)
    except IntegralityError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"invalid parameters: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
