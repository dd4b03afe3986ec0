"""Command-line entry point: certification runs with reproducible reports.

Exit codes: 0 pass, 1 fail, 2 inconclusive, 3 input error.  Reports are
byte-identical for identical inputs except for the wall_time_ms field,
which is explicitly outside the determinism contract.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
import time

from . import __version__, kernels
from .fpgroups import (
    DEFAULT_MAX_COSETS,
    FAIL,
    PASS,
    builtin_groups,
    find_finite_quotient,
    is_cyclic_of_order,
)
from .knots import KnotParseError, Sum, alexander, parse_knot
from .laurent import LaurentPoly
from .lcurve import (
    DegenerateLevelSet,
    InvalidConfig,
    NestConfig,
    ResolutionTooCoarse,
    nest_presentation,
    oval_svg,
    x9_ovals,
)
from .swcalc import HomologyLattice, SwPolynomial, certify_family_distinct, fs_surgery

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_INCONCLUSIVE = 2
EXIT_INPUT_ERROR = 3

_VERDICT_EXIT = {"pass": EXIT_PASS, "fail": EXIT_FAIL, "inconclusive": EXIT_INCONCLUSIVE}

CONVENTIONS = {
    "alexander_normalization": "symmetric under t <-> 1/t, positive top coefficient",
    "sw_base_symmetry": "conjugation symmetry of the base SW polynomial is assumed, not enforced",
    "twist_knot_convention": "Seifert matrix [[-1, 1], [0, n]]; n=1 figure-eight, n=-1 trefoil",
}


class CliInputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse default exits with code 2; we use 3
        raise CliInputError(message)


def _default_max_cosets() -> int:
    raw = os.environ.get("KNOTCERT_MAX_COSETS")
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            raise CliInputError(f"KNOTCERT_MAX_COSETS={raw!r} is not an integer") from None
    return DEFAULT_MAX_COSETS


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit the full JSON report")
    common.add_argument("--verbose", action="store_true", help="extra detail and cross-checks")
    common.add_argument(
        "--max-cosets",
        type=int,
        default=None,
        help="coset limit for enumerations (default: $KNOTCERT_MAX_COSETS or 100000)",
    )
    common.add_argument("--seed", type=int, default=0, help="seed for randomized self-test suites")

    parser = _Parser(prog="knotcert", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("alexander", parents=[common], help="Alexander polynomial of a knot spec")
    p.add_argument("knot", help='e.g. "torus:2,3", "sum(torus:2,3,torus:2,3)", "twist:-1"')

    p = sub.add_parser("pi1", parents=[common], help="certify the nest-complement group is Z/d")
    p.add_argument("degree", type=int)
    p.add_argument("--membrane", type=int, default=1, help="membrane region index (default 1)")

    p = sub.add_parser("sw-family", parents=[common], help="pairwise-distinct surgered SW invariants")
    p.add_argument("knots", nargs="+", help="knot specs")
    p.add_argument("--cover-degree", type=int, default=2)
    p.add_argument(
        "--base-sw",
        default="k3",
        help='"k3" for {0 -> 1}, or JSON [{"class": [..], "coeff": c}, ..]',
    )
    p.add_argument(
        "--raw-knots",
        action="store_true",
        help="apply Alexander(K) instead of the default doubled Alexander(K # K)",
    )

    p = sub.add_parser("genus", parents=[common], help="genus of a smooth degree-d curve")
    p.add_argument("degree", type=int)

    p = sub.add_parser("x9", parents=[common], help="extract the perturbed-singularity oval pair")
    p.add_argument("--epsilon", type=float, default=0.01)
    p.add_argument("--delta", type=float, default=1e-7)
    p.add_argument("--resolution", type=int, default=512)
    p.add_argument("--window", type=float, nargs=4, metavar=("XMIN", "XMAX", "YMIN", "YMAX"))
    p.add_argument("--svg", metavar="PATH", help="write the extracted curves as SVG")

    sub.add_parser("selftest", parents=[common], help="fast built-in verification battery")
    return parser


def _report(command: str, inputs: dict, body: dict, verdict: str, started: float) -> dict:
    return {
        "tool": "knotcert",
        "version": __version__,
        "kernel_backend": kernels.backend(),
        "command": command,
        "inputs": inputs,
        "conventions": CONVENTIONS,
        **body,
        "verdict": verdict,
        "exit_code": _VERDICT_EXIT[verdict],
        "wall_time_ms": round((time.perf_counter() - started) * 1000.0, 3),
    }


def _emit(report: dict, args, lines: list[str]) -> int:
    if args.json:
        print(json.dumps(report, sort_keys=True, indent=2))
    else:
        for line in lines:
            print(line)
        print(f"verdict: {report['verdict']}")
    return report["exit_code"]


# -- subcommands -------------------------------------------------------


def cmd_alexander(args) -> int:
    started = time.perf_counter()
    knot = parse_knot(args.knot)
    poly = alexander(knot)
    body = {
        "certificates": {
            "alexander": {
                "polynomial": str(poly),
                "polynomial_text": poly.to_text(),
                "polynomial_json": poly.to_json_dict(),
                "degree_span": poly.degree_span() if not poly.is_zero() else 0,
                "value_at_one": poly.eval_at_one(),
                "palindromic": poly.is_palindromic(),
            }
        }
    }
    report = _report("alexander", {"knot": args.knot}, body, "pass", started)
    return _emit(report, args, [str(poly), f"degree span: {body['certificates']['alexander']['degree_span']}"])


def cmd_pi1(args) -> int:
    started = time.perf_counter()
    if args.degree < 4:
        raise InvalidConfig(f"degree must be >= 4, got {args.degree}")
    max_cosets = args.max_cosets if args.max_cosets else _default_max_cosets()
    config = NestConfig.max_punctured(args.degree, args.membrane)
    pres = nest_presentation(config)
    cert = is_cyclic_of_order(pres, args.degree, max_cosets)

    witness = None
    if cert.verdict != PASS:
        groups = builtin_groups()
        for name in ("Q8", "D3", "D4", "D5", "D6", "S3"):
            target = groups[name]
            if target.is_abelian():
                continue
            hom = find_finite_quotient(pres, target)
            if hom is not None:
                witness = hom
                break

    if cert.verdict == PASS:
        status, verdict = "cyclic", "pass"
        lines = [f"pi1 = Z/{args.degree} (order {args.degree} certified by coset enumeration + abelianization)"]
    elif witness is not None:
        status, verdict = "non_abelian", "fail"
        lines = [
            f"pi1 is NOT Z/{args.degree}: surjects onto {witness.target.name} "
            f"via a -> {witness.image_names()[0]}, b -> {witness.image_names()[1]}"
        ]
    elif cert.verdict == FAIL:
        status, verdict = "not_cyclic", "fail"
        lines = [f"pi1 is not Z/{args.degree}: {cert.reason}"]
    else:
        status, verdict = "inconclusive", "inconclusive"
        lines = [f"inconclusive: {cert.reason}"]

    body = {
        "certificates": {
            "pi1": {
                "presentation": str(pres),
                "presentation_json": pres.to_json_dict(),
                "punctured_regions": sorted(config.punctured),
                "membrane_index": config.membrane_index,
                "status": status,
                "cyclicity": cert.to_json_dict(),
                "quotient_witness": witness.to_json_dict() if witness else None,
            }
        }
    }
    report = _report(
        "pi1",
        {"degree": args.degree, "membrane": args.membrane, "max_cosets": max_cosets},
        body,
        verdict,
        started,
    )
    return _emit(report, args, lines)


def _parse_base_sw(raw: str, lattice: HomologyLattice) -> SwPolynomial:
    if raw.strip().lower() == "k3":
        return SwPolynomial.k3_like(lattice)
    try:
        data = json.loads(raw)
        terms = [(tuple(t["class"]), int(t["coeff"])) for t in data]
    except (ValueError, TypeError, KeyError) as exc:
        raise CliInputError(f"malformed --base-sw: {exc}") from exc
    sw = SwPolynomial(lattice, terms)
    if sw.is_zero():
        raise CliInputError("--base-sw is the zero polynomial")
    return sw


def cmd_sw_family(args) -> int:
    started = time.perf_counter()
    if args.cover_degree < 2:
        raise CliInputError(f"cover degree must be >= 2, got {args.cover_degree}")
    if args.cover_degree == 2:
        # both lifted tori are parallel copies of the same class: a rank-1
        # free lattice with one torus, surgered once by the doubled knot
        lattice = HomologyLattice.free(1)
        tori = [lattice.basis_class(0)]
    else:
        lattice = HomologyLattice.cyclic_cover(args.cover_degree)
        tori = [lattice.basis_class(i) for i in range(args.cover_degree)]
    sw0 = _parse_base_sw(args.base_sw, lattice)
    knots = [parse_knot(spec) for spec in args.knots]
    cert = certify_family_distinct(sw0, tori, knots, double=not args.raw_knots)

    cross_check = None
    if args.verbose and not args.raw_knots:
        # the doubled multiplier at one torus must equal two successive
        # surgeries with the plain multiplier
        cross_check = "ok"
        for knot in knots:
            once = fs_surgery(sw0, tori[0], alexander(Sum(knot, knot)))
            twice = fs_surgery(fs_surgery(sw0, tori[0], alexander(knot)), tori[0], alexander(knot))
            if once != twice:
                cross_check = "mismatch"

    verdict = "pass" if cert.verdict else "fail"
    body = {"certificates": {"sw_family": cert.to_json_dict()}}
    if cross_check is not None:
        body["certificates"]["sw_family"]["double_vs_twice_cross_check"] = cross_check
    lines = [
        f"basic class counts: {list(cert.basic_class_counts)}",
        "all pairs distinct as polynomials" if cert.verdict else "some pairs coincide",
    ]
    report = _report(
        "sw-family",
        {
            "base_sw": args.base_sw,
            "cover_degree": args.cover_degree,
            "knots": list(args.knots),
            "doubled": not args.raw_knots,
        },
        body,
        verdict,
        started,
    )
    return _emit(report, args, lines)


def cmd_genus(args) -> int:
    started = time.perf_counter()
    if args.degree < 1:
        raise CliInputError(f"degree must be >= 1, got {args.degree}")
    genus = (args.degree - 1) * (args.degree - 2) // 2
    body = {"certificates": {"genus": {"degree": args.degree, "genus": genus}}}
    report = _report("genus", {"degree": args.degree}, body, "pass", started)
    return _emit(report, args, [f"genus = {genus}"])


def cmd_x9(args) -> int:
    started = time.perf_counter()
    window = tuple(args.window) if args.window else None
    try:
        report_data = x9_ovals(
            args.epsilon, args.delta, window=window, resolution=args.resolution
        )
    except (ResolutionTooCoarse, DegenerateLevelSet) as exc:
        body = {"certificates": {"x9": {"error": type(exc).__name__, "message": str(exc)}}}
        report = _report(
            "x9",
            {"epsilon": args.epsilon, "delta": args.delta, "resolution": args.resolution,
             "window": list(window) if window else None},
            body,
            "inconclusive",
            started,
        )
        return _emit(report, args, [f"inconclusive: {exc}"])

    if args.svg:
        with open(args.svg, "w", encoding="utf-8") as handle:
            handle.write(oval_svg(report_data))

    ok = report_data.nested_pair()
    verdict = "pass" if ok else "fail"
    body = {
        "certificates": {"x9": report_data.to_json_dict(include_chains=args.json)}
    }
    lines = [
        f"components: {report_data.component_count} (open chains: {report_data.open_chains})",
        "two strictly nested ovals" if ok else "expected exactly two nested ovals",
    ]
    if args.svg:
        lines.append(f"svg written to {args.svg}")
    report = _report(
        "x9",
        {
            "epsilon": args.epsilon,
            "delta": args.delta,
            "resolution": args.resolution,
            "window": list(window) if window else None,
            "svg": args.svg,
        },
        body,
        verdict,
        started,
    )
    return _emit(report, args, lines)


def cmd_selftest(args) -> int:
    started = time.perf_counter()
    rng = random.Random(args.seed)
    max_cosets = args.max_cosets if args.max_cosets else _default_max_cosets()
    checks: list[tuple[str, bool, str]] = []

    def check(name: str, ok: bool, detail: str = ""):
        checks.append((name, bool(ok), detail))

    # exact ring arithmetic
    trefoil = LaurentPoly({1: 1, 0: -1, -1: 1})
    square = trefoil * trefoil
    check("laurent-square", square == LaurentPoly({2: 1, 1: -2, 0: 3, -1: -2, -2: 1}))
    p = LaurentPoly({rng.randint(-3, 3): rng.randint(1, 3) for _ in range(3)})
    check("laurent-ring", (p + trefoil) * square == p * square + trefoil * square)

    # two alexander routes
    from .knots import Seifert, SeifertMatrix, Torus

    check(
        "alexander-two-routes",
        alexander(Torus(2, 3)) == alexander(Seifert(SeifertMatrix([[-1, 1], [0, -1]]))),
    )

    # pi1 certification, small degrees
    for d in (5, 6, 7):
        cert = is_cyclic_of_order(
            nest_presentation(NestConfig.max_punctured(d)), d, max_cosets
        )
        check(f"pi1-degree-{d}", cert.verdict == PASS, cert.reason)

    # quartic non-abelian witness
    quartic = nest_presentation(NestConfig.max_punctured(4))
    hom = find_finite_quotient(quartic, builtin_groups()["Q8"])
    check("quartic-q8", hom is not None and hom.surjective)

    # surgered family counts
    from .knots import torus_family

    lattice = HomologyLattice.free(1)
    cert = certify_family_distinct(
        SwPolynomial.k3_like(lattice), [lattice.basis_class(0)], torus_family(3)
    )
    check("sw-counts", cert.basic_class_counts == (5, 9, 13) and cert.verdict)

    # lattice relation invariance, one random spot check
    cover = HomologyLattice.cyclic_cover(3)
    vec = [rng.randint(-4, 4) for _ in range(3)]
    shifted = [x + 1 for x in vec]
    from .swcalc import HClass

    check("cover-relation", HClass(cover, vec) == HClass(cover, shifted))

    # oval extraction at modest resolution
    report_data = x9_ovals(0.01, 1e-7, resolution=256)
    check("x9-ovals", report_data.nested_pair(), f"{report_data.component_count} components")

    all_ok = all(ok for _, ok, _ in checks)
    lines = [
        f"{'ok' if ok else 'FAIL'} {name}" + (f" ({detail})" if detail and not ok else "")
        for name, ok, detail in checks
    ]
    body = {
        "certificates": {
            "selftest": {
                "checks": [
                    {"name": name, "ok": ok, "detail": detail} for name, ok, detail in checks
                ],
                "seed": args.seed,
            }
        }
    }
    report = _report("selftest", {"seed": args.seed}, body, "pass" if all_ok else "fail", started)
    return _emit(report, args, lines)


_COMMANDS = {
    "alexander": cmd_alexander,
    "pi1": cmd_pi1,
    "sw-family": cmd_sw_family,
    "genus": cmd_genus,
    "x9": cmd_x9,
    "selftest": cmd_selftest,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except CliInputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except (KnotParseError, InvalidConfig, ValueError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
