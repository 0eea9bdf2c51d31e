"""Command line surface.

Subcommands:

* ``bracket``: Poisson bracket of two polynomials.
* ``star``: one of the three products (S = symmetrization product on the
  full dual, P = tangential product, quotient = product on the sphere).
* ``weyl``: the symmetrization map, or its inverse with ``-i``.
* ``schouten``: Schouten brackets, the induced bivector, and the formal
  structure check.
* ``rep``: spin representation report (Casimir, ranks, homomorphism).
* ``verify``: the property suites.

Exit codes: 0 success, 1 a verified property failed, 2 malformed input.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from .enveloping import weyl_inverse, weyl_map
from .liealg import load_algebra_file, su2
from .multivector import formal_poisson_check, kirillov_bivector, schouten_bracket
from .orbit import sphere_casimir, star_quotient, star_tangential
from .parsing import ParseError, cpoly_parse, ncpoly_parse, parse_h_scalar, parse_multivector
from .poly import kirillov_bracket
from .randgen import gen_random_poly
from .rationals import rat
from .reps import image_dimension, pinned_spec, rep_casimir_scalar, reconciliation_line, spin_rep
from .scalars import HScalar
from .suite import SuiteConfig, run_suite


def _add_algebra_arg(parser):
    parser.add_argument(
        "-a",
        "--algebra",
        metavar="FILE",
        default=None,
        help="algebra description file (JSON); defaults to the builtin su(2)",
    )


def _load_algebra(path, require_jacobi=True):
    if path is None:
        return su2(), None
    return load_algebra_file(path, require_jacobi=require_jacobi)


def _casimir_from_args(args, algebra, fragment):
    from .orbit import quadratic_invariant

    l_value = rat(args.l) if getattr(args, "l", None) is not None else None
    if getattr(args, "casimir_c", None) is not None:
        c = parse_h_scalar(args.casimir_c, l=l_value)
    elif fragment is not None:
        c = parse_h_scalar(str(fragment.get("c", "1")), l=l_value)
        if "p" in fragment and cpoly_parse(fragment["p"], algebra) != quadratic_invariant(algebra):
            raise ValueError("only the quadratic invariant (sum of squares) is supported as p")
        if "c0" in fragment and rat(str(fragment["c0"])) != c.constant_term:
            raise ValueError("casimir fragment c0 does not equal c(0)")
    else:
        c = HScalar.constant(1)
    return sphere_casimir(c, algebra)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orbitstar",
        description="exact star products on coadjoint orbits and their property checks",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_bracket = sub.add_parser("bracket", help="Poisson bracket of two polynomials")
    _add_algebra_arg(p_bracket)
    p_bracket.add_argument("-f", required=True, help="first polynomial")
    p_bracket.add_argument("-g", required=True, help="second polynomial")

    p_star = sub.add_parser("star", help="star product of two polynomials")
    _add_algebra_arg(p_star)
    p_star.add_argument("-p", "--product", choices=("S", "P", "quotient"), required=True)
    p_star.add_argument("-f", required=True)
    p_star.add_argument("-g", required=True)
    p_star.add_argument("--casimir-c", default=None, help="level c(h), e.g. '1' or 'l*(l+h)'")
    p_star.add_argument("--l", default=None, help="rational value substituted for l")
    p_star.add_argument(
        "--allow-varying-c",
        action="store_true",
        help="run the tangential conjugation for an h-dependent level",
    )

    p_weyl = sub.add_parser("weyl", help="symmetrization map (or inverse with -i)")
    _add_algebra_arg(p_weyl)
    p_weyl.add_argument("-i", "--inverse", action="store_true")
    p_weyl.add_argument("-f", required=True, help="polynomial (ordered element with -i)")

    p_sch = sub.add_parser("schouten", help="Schouten bracket tools")
    _add_algebra_arg(p_sch)
    p_sch.add_argument("-f", default=None, help="first multivector")
    p_sch.add_argument("-g", default=None, help="second multivector")
    p_sch.add_argument("--alpha", default=None, metavar="FILE", help="file with one bivector per line")
    p_sch.add_argument("--order", type=int, default=8, help="h-order bound for the formal check")

    p_rep = sub.add_parser("rep", help="spin representation report")
    p_rep.add_argument("--j", required=True, help="half-integer spin, e.g. 1/2")
    p_rep.add_argument("--h0", required=True, help="nonzero rational deformation value")
    p_rep.add_argument("--maxdeg", type=int, default=None, help="degree bound for the rank table")
    p_rep.add_argument("--check-homomorphism", action="store_true")
    p_rep.add_argument("--samples", type=int, default=100)
    p_rep.add_argument("--seed", type=int, default=0)
    p_rep.add_argument("--json", action="store_true")

    p_verify = sub.add_parser("verify", help="run a property suite")
    _add_algebra_arg(p_verify)
    p_verify.add_argument(
        "--suite",
        default="all",
        choices=("assoc", "deformation", "tangential", "covariance", "quotient", "rep", "poisson", "all"),
    )
    p_verify.add_argument("--max-deg", type=int, default=None, dest="max_deg")
    p_verify.add_argument("--samples", type=int, default=None)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--casimir-c", default=None)
    p_verify.add_argument("--l", default=None)
    p_verify.add_argument(
        "--rep",
        nargs=2,
        action="append",
        metavar=("J", "H0"),
        default=None,
        help="representation parameters for the rep suite (repeatable)",
    )
    p_verify.add_argument("--json", action="store_true")
    p_verify.add_argument("--timing", action="store_true", help="include wall times in the report")

    return parser


def _cmd_bracket(args) -> int:
    algebra, _frag = _load_algebra(args.algebra)
    f = cpoly_parse(args.f, algebra)
    g = cpoly_parse(args.g, algebra)
    print(kirillov_bracket(f, g, algebra))
    return 0


def _cmd_star(args) -> int:
    algebra, fragment = _load_algebra(args.algebra)
    f = cpoly_parse(args.f, algebra)
    g = cpoly_parse(args.g, algebra)
    if args.product == "S":
        from .enveloping import star_weyl

        print(star_weyl(f, g))
        return 0
    spec = _casimir_from_args(args, algebra, fragment)
    if args.product == "P":
        print(star_tangential(f, g, spec, allow_varying_c=args.allow_varying_c))
    else:
        print(star_quotient(f, g, spec))
    return 0


def _cmd_weyl(args) -> int:
    algebra, _frag = _load_algebra(args.algebra)
    if args.inverse:
        element = ncpoly_parse(args.f, algebra)
        print(weyl_inverse(element))
    else:
        print(weyl_map(cpoly_parse(args.f, algebra)))
    return 0


def _cmd_schouten(args) -> int:
    algebra, _frag = _load_algebra(args.algebra, require_jacobi=False)
    if args.alpha is not None:
        with open(args.alpha, "r", encoding="utf-8") as fh:
            lines = [line.strip() for line in fh if line.strip() and not line.startswith("#")]
        alphas = [parse_multivector(line, algebra) for line in lines]
        ok, order = formal_poisson_check(alphas, args.order)
        if ok:
            print(f"formal structure holds through h-order {args.order}")
            return 0
        print(f"formal structure fails at h-order {order}")
        return 1
    if args.f is not None and args.g is not None:
        a = parse_multivector(args.f, algebra)
        b = parse_multivector(args.g, algebra)
        print(schouten_bracket(a, b))
        return 0
    beta = kirillov_bivector(algebra)
    square = schouten_bracket(beta, beta)
    print(f"bivector: {beta}")
    print(f"self bracket: {square}")
    return 0 if square.is_zero else 1


def _cmd_rep(args) -> int:
    from .enveloping import nc_mul
    from .orbit import classical_project, quotient_normal_form, sphere_to_quotient
    from .reps import rep_apply

    j = rat(args.j)
    h0 = rat(args.h0)
    rep = spin_rep(j, h0)
    maxdeg = args.maxdeg if args.maxdeg is not None else rep.j2
    ranks = {d: image_dimension(rep, d) for d in range(maxdeg + 1)}
    measured = rep_casimir_scalar(rep)
    lines = {
        "j": str(j),
        "h0": str(h0),
        "dimension": rep.dim,
        "casimir": str(measured),
        "reconciliation": reconciliation_line(rep.j2, str(h0)),
        "ranks": {str(d): r for d, r in ranks.items()},
        "full_rank": ranks.get(rep.j2, image_dimension(rep, rep.j2)) == rep.dim**2,
    }
    failed = not lines["full_rank"]
    if args.check_homomorphism:
        spec = pinned_spec(rep)
        rng = random.Random(f"{args.seed}|rep-cli")
        ok = True
        for _ in range(args.samples):
            f = classical_project(gen_random_poly(rng, spec.algebra, 4), spec.c0)
            g = classical_project(gen_random_poly(rng, spec.algebra, 4), spec.c0)
            q1 = sphere_to_quotient(f, spec)
            q2 = sphere_to_quotient(g, spec)
            prod = quotient_normal_form(nc_mul(q1.lift(), q2.lift()), spec)
            if rep_apply(prod, rep) != rep_apply(q1, rep) * rep_apply(q2, rep):
                ok = False
                lines["homomorphism_counterexample"] = f'f = "{f}"; g = "{g}"'
                break
        lines["homomorphism"] = ok
        lines["homomorphism_samples"] = args.samples
        failed = failed or not ok
    if args.json:
        print(json.dumps(lines, indent=2, sort_keys=True))
    else:
        print(f"spin representation j = {lines['j']}, h0 = {lines['h0']}, dimension {lines['dimension']}")
        print(f"measured casimir: {lines['casimir']}")
        print(f"note: {lines['reconciliation']}")
        print("rank of basis images per degree: " + " ".join(f"{d}:{r}" for d, r in ranks.items()))
        print(f"spans full matrix algebra at degree 2j: {'yes' if lines['full_rank'] else 'NO'}")
        if args.check_homomorphism:
            verdict = "exactly multiplicative" if lines["homomorphism"] else "FAILED"
            print(f"homomorphism on {args.samples} coset pairs: {verdict}")
    return 1 if failed else 0


def _cmd_verify(args) -> int:
    config = SuiteConfig(
        suite=args.suite,
        algebra_path=args.algebra,
        max_degree=args.max_deg,
        samples=args.samples,
        seed=args.seed,
        casimir_c=args.casimir_c,
        l_value=args.l,
        reps=tuple(tuple(pair) for pair in args.rep) if args.rep else SuiteConfig().reps,
    )
    report = run_suite(config)
    if args.json:
        sys.stdout.write(report.render_json(include_timing=args.timing))
    else:
        sys.stdout.write(report.render_text(include_timing=args.timing))
    return 0 if report.passed else 1


_HANDLERS = {
    "bracket": _cmd_bracket,
    "star": _cmd_star,
    "weyl": _cmd_weyl,
    "schouten": _cmd_schouten,
    "rep": _cmd_rep,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return _HANDLERS[args.command](args)
    except (ParseError, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
