"""Seeded property suite over every machine-checkable claim.

``run_suite`` executes the selected suite deterministically: the property
list is fixed per configuration, each property draws from its own random
stream seeded by (config seed, property name), and report serialization
omits wall times unless explicitly requested, so identical configurations
produce byte-identical reports.  Independent properties could run in
parallel; results are always collected in configuration order.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field

from .enveloping import (
    NCPoly,
    commutator,
    is_central,
    nc_mul,
    pbw_reduce,
    star_weyl,
    weyl_inverse,
    weyl_map,
)
from .liealg import LieAlgebraSpec, jacobi_check, load_algebra_file, su2
from .multivector import (
    MultiVector,
    bivector_pairing,
    formal_poisson_check,
    kirillov_bivector,
    schouten_bracket,
)
from .orbit import (
    classical_project,
    ideal_membership,
    ideal_section,
    in_classical_ideal,
    quadratic_invariant,
    quotient_normal_form,
    sphere_basis_size,
    sphere_casimir,
    sphere_to_quotient,
    star_quotient,
    star_tangential,
)
from .parsing import parse_h_scalar
from .poly import CPoly, iter_monomials, kirillov_bracket
from .randgen import gen_random_ncpoly, gen_random_poly, gen_random_word
from .rationals import rat
from .reps import (
    image_dimension,
    pinned_spec,
    basis_image,
    reconciliation_line,
    rep_apply,
    rep_casimir_scalar,
    spin_rep,
)
from .scalars import H, HScalar

SUITE_NAMES = (
    "assoc",
    "deformation",
    "tangential",
    "covariance",
    "quotient",
    "rep",
    "poisson",
    "all",
)

DEFAULT_REPS = (("1/2", "1"), ("1", "1"), ("3/2", "1"))


@dataclass(frozen=True)
class SuiteConfig:
    suite: str = "all"
    algebra_path: str | None = None
    max_degree: int | None = None
    samples: int | None = None
    seed: int = 0
    casimir_c: str | None = None
    l_value: str | None = None
    reps: tuple = DEFAULT_REPS

    def __post_init__(self):
        if self.suite not in SUITE_NAMES:
            raise ValueError(f"unknown suite {self.suite!r}; choose from {SUITE_NAMES}")


@dataclass
class PropertyResult:
    name: str
    claim: str
    samples: int
    passed: bool
    counterexample: str | None = None
    replay: str | None = None
    details: str | None = None
    seconds: float = 0.0


@dataclass
class Report:
    suite: str
    algebra_label: str
    casimir_label: str
    seed: int
    max_degree_label: str
    samples_label: str
    results: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def result(self, name: str) -> PropertyResult:
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)

    def render_text(self, include_timing: bool = False) -> str:
        lines = [
            "verification report",
            f"suite: {self.suite}",
            f"algebra: {self.algebra_label}",
            f"casimir: {self.casimir_label}",
            f"seed: {self.seed}",
            f"max degree: {self.max_degree_label}",
            f"samples: {self.samples_label}",
            "",
        ]
        for r in self.results:
            mark = "PASS" if r.passed else "FAIL"
            timing = f"  time={r.seconds:.3f}s" if include_timing else ""
            lines.append(f"[{mark}] {r.name}  (samples={r.samples}){timing}")
            lines.append(f"       claim: {r.claim}")
            if r.details:
                lines.append(f"       note: {r.details}")
            if not r.passed and r.counterexample:
                lines.append(f"       counterexample: {r.counterexample}")
            if not r.passed and r.replay:
                lines.append(f"       replay: {r.replay}")
        failed = sum(1 for r in self.results if not r.passed)
        lines.append("")
        lines.append(
            f"result: {'PASS' if self.passed else 'FAIL'} "
            f"({len(self.results)} properties, {failed} failed)"
        )
        return "\n".join(lines) + "\n"

    def to_dict(self, include_timing: bool = False) -> dict:
        results = []
        for r in self.results:
            entry = {
                "name": r.name,
                "claim": r.claim,
                "samples": r.samples,
                "passed": r.passed,
                "counterexample": r.counterexample,
                "replay": r.replay,
                "details": r.details,
            }
            if include_timing:
                entry["seconds"] = round(r.seconds, 6)
            results.append(entry)
        return {
            "suite": self.suite,
            "algebra": self.algebra_label,
            "casimir": self.casimir_label,
            "seed": self.seed,
            "max_degree": self.max_degree_label,
            "samples": self.samples_label,
            "passed": self.passed,
            "results": results,
        }

    def render_json(self, include_timing: bool = False) -> str:
        return json.dumps(self.to_dict(include_timing), indent=2, sort_keys=True) + "\n"


class _Failure(Exception):
    def __init__(self, counterexample, replay=None, details=None):
        self.counterexample = counterexample
        self.replay = replay
        self.details = details
        super().__init__(counterexample)


@dataclass
class _Env:
    algebra: LieAlgebraSpec
    algebra_label: str
    algebra_flag: str
    jacobi_ok: bool
    jacobi_witness: object
    spec: object
    spec_error: str | None
    casimir_label: str


def _build_env(config: SuiteConfig) -> _Env:
    if config.algebra_path:
        algebra, fragment = load_algebra_file(config.algebra_path, require_jacobi=False)
        label = config.algebra_path
        flag = f' -a "{config.algebra_path}"'
    else:
        algebra, fragment = su2(), None
        label = "builtin su(2)"
        flag = ""
    jac_ok, witness = jacobi_check(algebra)

    l_value = rat(config.l_value) if config.l_value is not None else None
    spec = None
    spec_error = None
    c_scalar = None
    try:
        if config.casimir_c is not None:
            c_scalar = parse_h_scalar(config.casimir_c, l=l_value)
        elif fragment is not None:
            c_scalar = parse_h_scalar(str(fragment.get("c", "1")), l=l_value)
            if "p" in fragment:
                stated = fragment["p"]
                from .parsing import cpoly_parse

                if cpoly_parse(stated, algebra) != quadratic_invariant(algebra):
                    raise ValueError(
                        "only the quadratic invariant (sum of squares) is supported as p"
                    )
            if "c0" in fragment and rat(str(fragment["c0"])) != c_scalar.constant_term:
                raise ValueError("casimir fragment c0 does not equal c(0)")
        else:
            c_scalar = HScalar.constant(1)
        if algebra.dim == 3:
            spec = sphere_casimir(c_scalar, algebra)
        else:
            spec_error = "orbit machinery requires a 3-dimensional algebra"
    except ValueError as exc:
        spec_error = str(exc)
    casimir_label = f"c(h) = {c_scalar}" if c_scalar is not None else "c(h) = <invalid>"
    if spec is not None:
        casimir_label += f" (c0 = {spec.c0})"
    return _Env(
        algebra=algebra,
        algebra_label=label,
        algebra_flag=flag,
        jacobi_ok=jac_ok,
        jacobi_witness=witness,
        spec=spec,
        spec_error=spec_error,
        casimir_label=casimir_label,
    )


def _require_spec(env: _Env):
    if env.spec is None:
        raise _Failure(f"orbit data unavailable: {env.spec_error}")
    return env.spec


def _deg(config: SuiteConfig, default: int = 4) -> int:
    return default if config.max_degree is None else config.max_degree


def _star_replay(env: _Env, product: str, f, g) -> str:
    return f'orbitstar star -p {product}{env.algebra_flag} -f "{f}" -g "{g}"'


def _random_sphere_poly(rng, env, max_degree):
    return classical_project(gen_random_poly(rng, env.algebra, max_degree), env.spec.c0)


# --------------------------------------------------------------------------
# property registry
# --------------------------------------------------------------------------

_REGISTRY = []


@dataclass(frozen=True)
class _Prop:
    name: str
    claim: str
    suites: tuple
    base_samples: int
    runner: object


def _register(name, claim, suites, base_samples=1):
    def wrap(fn):
        _REGISTRY.append(_Prop(name, claim, tuple(suites), base_samples, fn))
        return fn

    return wrap


_ALL_SUITES = ("assoc", "deformation", "tangential", "covariance", "quotient", "rep", "poisson")


@_register(
    "structure-jacobi",
    "the loaded structure constants satisfy the Jacobi identity",
    _ALL_SUITES,
)
def _prop_jacobi(config, env, rng, n):
    if not env.jacobi_ok:
        raise _Failure(
            f"Jacobiator nonzero at (i, j, k, l) = {env.jacobi_witness}",
            replay=f"orbitstar schouten{env.algebra_flag}",
        )
    return {}


@_register(
    "pbw-confluence",
    "leftmost-first and rightmost-first rewriting yield identical normal forms",
    ("assoc",),
    base_samples=500,
)
def _prop_confluence(config, env, rng, n):
    for _ in range(n):
        word = gen_random_word(rng, env.algebra, 6)
        left = pbw_reduce(word, env.algebra, "leftmost")
        right = pbw_reduce(word, env.algebra, "rightmost")
        if left != right:
            raise _Failure(f"word = {word}")
    return {}


@_register(
    "enveloping-associativity",
    "the ordered-basis product is associative",
    ("assoc",),
    base_samples=100,
)
def _prop_nc_assoc(config, env, rng, n):
    d = _deg(config)
    for _ in range(n):
        a = gen_random_ncpoly(rng, env.algebra, d)
        b = gen_random_ncpoly(rng, env.algebra, d)
        c = gen_random_ncpoly(rng, env.algebra, d)
        if nc_mul(nc_mul(a, b), c) != nc_mul(a, nc_mul(b, c)):
            raise _Failure(f"a = {a}; b = {b}; c = {c}")
    return {}


def _assoc_runner(star, tag, sphere=False):
    def run(config, env, rng, n):
        d = _deg(config)
        for _ in range(n):
            if sphere:
                f = _random_sphere_poly(rng, env, d)
                g = _random_sphere_poly(rng, env, d)
                k = _random_sphere_poly(rng, env, d)
            else:
                f = gen_random_poly(rng, env.algebra, d)
                g = gen_random_poly(rng, env.algebra, d)
                k = gen_random_poly(rng, env.algebra, d)
            left = star(star(f, g), k)
            right = star(f, star(g, k))
            if left != right:
                raise _Failure(
                    f'f = "{f}"; g = "{g}"; k = "{k}"',
                    replay=_star_replay(env, tag, f, g),
                )
        return {}

    return run


@_register(
    "weyl-star-associativity",
    "the symmetrization star product is associative",
    ("assoc",),
    base_samples=200,
)
def _prop_assoc_weyl(config, env, rng, n):
    return _assoc_runner(star_weyl, "S")(config, env, rng, n)


@_register(
    "tangential-star-associativity",
    "the tangential star product is associative",
    ("assoc",),
    base_samples=200,
)
def _prop_assoc_tangential(config, env, rng, n):
    spec = _require_spec(env)
    return _assoc_runner(lambda f, g: star_tangential(f, g, spec), "P")(config, env, rng, n)


@_register(
    "quotient-star-associativity",
    "the quotient star product on sphere polynomials is associative",
    ("assoc",),
    base_samples=200,
)
def _prop_assoc_quotient(config, env, rng, n):
    spec = _require_spec(env)
    return _assoc_runner(lambda f, g: star_quotient(f, g, spec), "quotient", sphere=True)(
        config, env, rng, n
    )


@_register(
    "weyl-star-first-order",
    "the star commutator equals h times the Poisson bracket modulo h^2, "
    "and exactly h z on the first coordinate pair",
    ("deformation",),
    base_samples=200,
)
def _prop_weyl_first_order(config, env, rng, n):
    alg = env.algebra
    if alg.dim >= 3:
        x = CPoly.variable(alg, 0)
        y = CPoly.variable(alg, 1)
        expected = kirillov_bracket(x, y) * H
        got = star_weyl(x, y) - star_weyl(y, x)
        if got != expected:
            raise _Failure(
                f"coordinate commutator is {got}, expected {expected}",
                replay=_star_replay(env, "S", x, y),
            )
    d = _deg(config)
    for _ in range(n):
        f = gen_random_poly(rng, alg, d)
        g = gen_random_poly(rng, alg, d)
        comm = (star_weyl(f, g) - star_weyl(g, f)).truncate_h(2)
        if comm != (kirillov_bracket(f, g) * H).truncate_h(2):
            raise _Failure(f'f = "{f}"; g = "{g}"', replay=_star_replay(env, "S", f, g))
    return {}


@_register(
    "weyl-star-classical-limit",
    "specializing h to 0 in a symmetrization star product gives the pointwise product",
    ("deformation",),
    base_samples=200,
)
def _prop_weyl_classical(config, env, rng, n):
    d = _deg(config)
    for _ in range(n):
        f = gen_random_poly(rng, env.algebra, d)
        g = gen_random_poly(rng, env.algebra, d)
        if star_weyl(f, g).specialize_h(0) != f * g:
            raise _Failure(f'f = "{f}"; g = "{g}"', replay=_star_replay(env, "S", f, g))
    return {}


@_register(
    "tangential-star-classical-limit",
    "specializing h to 0 in a tangential star product gives the pointwise product",
    ("deformation",),
    base_samples=200,
)
def _prop_tangential_classical(config, env, rng, n):
    spec = _require_spec(env)
    d = _deg(config)
    for _ in range(n):
        f = gen_random_poly(rng, env.algebra, d)
        g = gen_random_poly(rng, env.algebra, d)
        if star_tangential(f, g, spec).specialize_h(0) != f * g:
            raise _Failure(f'f = "{f}"; g = "{g}"', replay=_star_replay(env, "P", f, g))
    return {}


@_register(
    "quotient-star-classical-limit",
    "at h = 0 the quotient product is the classical product on the sphere at level c0",
    ("deformation",),
    base_samples=200,
)
def _prop_quotient_classical(config, env, rng, n):
    spec = _require_spec(env)
    d = _deg(config)
    for _ in range(n):
        f = _random_sphere_poly(rng, env, d)
        g = _random_sphere_poly(rng, env, d)
        got = star_quotient(f, g, spec).specialize_h(0)
        if got != classical_project(f * g, spec.c0):
            raise _Failure(f'f = "{f}"; g = "{g}"', replay=_star_replay(env, "quotient", f, g))
    return {}


@_register(
    "weyl-round-trip-monomials",
    "the symmetrization map and its inverse are exact mutual inverses on all "
    "monomials of degree at most 6",
    ("deformation",),
)
def _prop_weyl_roundtrip_monos(config, env, rng, n):
    count = 0
    for xm in iter_monomials(env.algebra.dim, 6):
        f = CPoly.monomial(env.algebra, xm)
        if weyl_inverse(weyl_map(f)) != f:
            raise _Failure(
                f'monomial = "{f}"',
                replay=f'orbitstar weyl{env.algebra_flag} -f "{f}"',
            )
        count += 1
    return {"samples": count}


@_register(
    "weyl-round-trip-random",
    "applying the inverse then the symmetrization map returns random ordered elements",
    ("deformation",),
    base_samples=100,
)
def _prop_weyl_roundtrip_random(config, env, rng, n):
    d = _deg(config)
    for _ in range(n):
        a = gen_random_ncpoly(rng, env.algebra, d)
        if weyl_map(weyl_inverse(a)) != a:
            raise _Failure(
                f"a = {a}",
                replay=f'orbitstar weyl -i{env.algebra_flag} -f "{a}"',
            )
    return {}


@_register(
    "weyl-equivariance",
    "symmetrization intertwines the coordinate bracket with the rescaled commutator",
    ("deformation",),
    base_samples=100,
)
def _prop_weyl_equivariance(config, env, rng, n):
    d = _deg(config)
    alg = env.algebra
    for _ in range(n):
        i = rng.randrange(alg.dim)
        f = gen_random_poly(rng, alg, d)
        xi = CPoly.variable(alg, i)
        lhs = weyl_map(kirillov_bracket(xi, f))
        rhs = commutator(NCPoly.generator(alg, i), weyl_map(f)).divided_by_h()
        if lhs != rhs:
            raise _Failure(f'direction = {alg.names[i]}; f = "{f}"')
    return {}


@_register(
    "weyl-star-homogeneity",
    "for homogeneous inputs every output term satisfies "
    "generator degree plus h degree equals the total input degree",
    ("deformation",),
    base_samples=100,
)
def _prop_weyl_homogeneity(config, env, rng, n):
    d = _deg(config)
    alg = env.algebra
    monos = list(iter_monomials(alg.dim, d))
    for _ in range(n):
        d1 = rng.randrange(d + 1)
        d2 = rng.randrange(d + 1)
        f = CPoly(alg, {
            xm + (0,): rat(rng.randrange(1, 10))
            for xm in monos
            if sum(xm) == d1 and rng.getrandbits(1)
        })
        g = CPoly(alg, {
            xm + (0,): rat(rng.randrange(1, 10))
            for xm in monos
            if sum(xm) == d2 and rng.getrandbits(1)
        })
        if f.is_zero or g.is_zero:
            continue
        prod = star_weyl(f, g)
        for key in prod.coeffs:
            if sum(key) != d1 + d2:
                raise _Failure(f'f = "{f}"; g = "{g}"; term = {key}')
    return {}


@_register(
    "tangential-star-first-order",
    "the tangential star commutator equals h times the Poisson bracket modulo h^2",
    ("deformation",),
    base_samples=100,
)
def _prop_tangential_first_order(config, env, rng, n):
    spec = _require_spec(env)
    d = _deg(config)
    observed = None
    for _ in range(n):
        f = gen_random_poly(rng, env.algebra, d)
        g = gen_random_poly(rng, env.algebra, d)
        comm = star_tangential(f, g, spec) - star_tangential(g, f, spec)
        if comm.truncate_h(2) != (kirillov_bracket(f, g) * H).truncate_h(2):
            raise _Failure(f'f = "{f}"; g = "{g}"', replay=_star_replay(env, "P", f, g))
        residue = comm - kirillov_bracket(f, g) * H
        if not residue.is_zero:
            low = min(key[-1] for key in residue.coeffs)
            observed = low if observed is None else min(observed, low)
    note = (
        "commutator minus h{f,g} vanished on every sample"
        if observed is None
        else f"lowest h-order where the commutator deviates from h{{f,g}}: {observed}"
    )
    return {"details": note}


@_register(
    "quotient-star-first-order",
    "the quotient star commutator equals h times the projected Poisson bracket modulo h^2",
    ("deformation",),
    base_samples=100,
)
def _prop_quotient_first_order(config, env, rng, n):
    spec = _require_spec(env)
    alg = env.algebra
    x = CPoly.variable(alg, 0)
    y = CPoly.variable(alg, 1)
    exact = star_quotient(x, y, spec) - star_quotient(y, x, spec)
    if exact != kirillov_bracket(x, y) * H:
        raise _Failure(
            f"coordinate commutator is {exact}",
            replay=_star_replay(env, "quotient", x, y),
        )
    d = _deg(config)
    for _ in range(n):
        f = _random_sphere_poly(rng, env, d)
        g = _random_sphere_poly(rng, env, d)
        comm = (star_quotient(f, g, spec) - star_quotient(g, f, spec)).truncate_h(2)
        expected = (classical_project(kirillov_bracket(f, g), spec.c0) * H).truncate_h(2)
        if comm != expected:
            raise _Failure(f'f = "{f}"; g = "{g}"', replay=_star_replay(env, "quotient", f, g))
    return {}


@_register(
    "tangential-star-casimir-multiplicative",
    "multiplication by the invariant is undeformed in the tangential product",
    ("tangential",),
    base_samples=100,
)
def _prop_tangential_casimir(config, env, rng, n):
    spec = _require_spec(env)
    d = _deg(config)
    for _ in range(n):
        f = gen_random_poly(rng, env.algebra, d)
        if star_tangential(spec.p, f, spec) != spec.p * f:
            raise _Failure(f'f = "{f}"', replay=_star_replay(env, "P", spec.p, f))
    return {}


@_register(
    "tangential-star-preserves-ideal",
    "the tangential product keeps the classical orbit ideal an ideal",
    ("tangential",),
    base_samples=100,
)
def _prop_tangential_ideal(config, env, rng, n):
    spec = _require_spec(env)
    d = _deg(config)
    shifted = spec.p - CPoly.constant(env.algebra, spec.c0)
    for _ in range(n):
        f = gen_random_poly(rng, env.algebra, d)
        prod = star_tangential(shifted, f, spec)
        if not in_classical_ideal(prod, spec.c0):
            raise _Failure(f'f = "{f}"', replay=_star_replay(env, "P", shifted, f))
    return {}


@_register(
    "weyl-star-not-tangential-witness",
    "the symmetrization product deforms multiplication by the invariant "
    "already on a monomial of degree at most 2",
    ("tangential",),
)
def _prop_weyl_not_tangential(config, env, rng, n):
    spec = _require_spec(env)
    checked = 0
    for xm in iter_monomials(env.algebra.dim, 2):
        f = CPoly.monomial(env.algebra, xm)
        checked += 1
        diff = star_weyl(spec.p, f) - spec.p * f
        if not diff.is_zero:
            return {
                "samples": checked,
                "details": f'witness f = "{f}" with p*f - p (star) f = {-diff}',
            }
    raise _Failure("no monomial of degree <= 2 detects the deformation")


@_register(
    "tangential-star-covariance",
    "every coadjoint direction acts as a derivation of the tangential product",
    ("covariance",),
    base_samples=100,
)
def _prop_tangential_covariance(config, env, rng, n):
    spec = _require_spec(env)
    alg = env.algebra
    d = _deg(config)
    coords = [CPoly.variable(alg, i) for i in range(alg.dim)]
    for _ in range(n):
        f = gen_random_poly(rng, alg, d)
        g = gen_random_poly(rng, alg, d)
        prod = star_tangential(f, g, spec)
        for i in range(alg.dim):
            lhs = kirillov_bracket(coords[i], prod)
            rhs = star_tangential(kirillov_bracket(coords[i], f), g, spec) + star_tangential(
                f, kirillov_bracket(coords[i], g), spec
            )
            if lhs != rhs:
                raise _Failure(
                    f'direction = {alg.names[i]}; f = "{f}"; g = "{g}"',
                    replay=_star_replay(env, "P", f, g),
                )
    return {}


@_register(
    "quotient-basis-count",
    "the number of basis classes of degree at most d is (d+1)^2 for d = 0..6",
    ("quotient",),
)
def _prop_basis_count(config, env, rng, n):
    rows = []
    for d in range(7):
        count = sphere_basis_size(d)
        odd_sum = sum(2 * l + 1 for l in range(d + 1))
        if count != (d + 1) ** 2 or odd_sum != (d + 1) ** 2:
            raise _Failure(f"d = {d}: count = {count}, odd sum = {odd_sum}")
        rows.append(f"{d}:{count}")
    return {"samples": 7, "details": "counts per degree " + " ".join(rows)}


@_register(
    "quotient-coset-invariance",
    "adding any two-sided multiple of the ideal generator leaves the normal form unchanged",
    ("quotient",),
    base_samples=200,
)
def _prop_coset_invariance(config, env, rng, n):
    spec = _require_spec(env)
    gen = spec.P - NCPoly.constant(env.algebra, spec.c)
    d = _deg(config)
    for _ in range(n):
        a = gen_random_ncpoly(rng, env.algebra, d)
        left = gen_random_ncpoly(rng, env.algebra, 3)
        right = gen_random_ncpoly(rng, env.algebra, 3)
        shifted = a + nc_mul(nc_mul(left, gen), right)
        if quotient_normal_form(shifted, spec) != quotient_normal_form(a, spec):
            raise _Failure(f"a = {a}; L = {left}; R = {right}")
    return {}


@_register(
    "casimir-centrality",
    "the quantized invariant is central and generates the kernel of the projection",
    ("quotient",),
)
def _prop_centrality(config, env, rng, n):
    spec = _require_spec(env)
    if not is_central(spec.P):
        raise _Failure(f"P = {spec.P} fails to commute with a generator")
    gen = spec.P - NCPoly.constant(env.algebra, spec.c)
    if not ideal_membership(gen, spec):
        raise _Failure("P - c(h) does not normalize to zero")
    return {}


@_register(
    "deformed-ideal-membership",
    "two-sided multiples of P - c(h) normalize to zero",
    ("quotient",),
    base_samples=100,
)
def _prop_ideal_membership(config, env, rng, n):
    spec = _require_spec(env)
    gen = spec.P - NCPoly.constant(env.algebra, spec.c)
    for _ in range(n):
        left = gen_random_ncpoly(rng, env.algebra, 3)
        right = gen_random_ncpoly(rng, env.algebra, 3)
        if not ideal_membership(nc_mul(nc_mul(left, gen), right), spec):
            raise _Failure(f"L = {left}; R = {right}")
    return {}


@_register(
    "projection-diagram",
    "normalizing the section of f equals the basis image of the classical projection of f",
    ("quotient",),
    base_samples=100,
)
def _prop_diagram(config, env, rng, n):
    spec = _require_spec(env)
    d = _deg(config)
    for _ in range(n):
        f = gen_random_poly(rng, env.algebra, d)
        left = quotient_normal_form(ideal_section(f, spec), spec)
        right = sphere_to_quotient(classical_project(f, spec.c0), spec)
        if left != right:
            raise _Failure(f'f = "{f}"')
    return {}


@_register(
    "section-shifted-level-witness",
    "the section built for level c0 sends some member of the shifted-level ideal "
    "to an element with nonzero normal form",
    ("quotient",),
)
def _prop_section_shift(config, env, rng, n):
    spec = _require_spec(env)
    shifted_level = spec.c0 + 1
    f = spec.p - CPoly.constant(env.algebra, shifted_level)
    if not in_classical_ideal(f, shifted_level):
        raise _Failure("constructed witness is not in the shifted classical ideal")
    image = quotient_normal_form(ideal_section(f, spec), spec)
    if image.is_zero:
        raise _Failure(f'section of "{f}" unexpectedly lands in the deformed ideal')
    return {
        "details": (
            f'witness f = "{f}" lies in the classical ideal at level {shifted_level} '
            f"but its section has normal form {image}"
        )
    }


# -- poisson ----------------------------------------------------------------


@_register(
    "bivector-bracket-pairing",
    "pairing the linear bivector with two differentials reproduces the Poisson "
    "bracket on all monomial pairs of degree at most 3",
    ("poisson",),
)
def _prop_bivector_pairing(config, env, rng, n):
    alg = env.algebra
    beta = kirillov_bivector(alg)
    monos = [CPoly.monomial(alg, xm) for xm in iter_monomials(alg.dim, 3)]
    count = 0
    for f in monos:
        for g in monos:
            count += 1
            if bivector_pairing(beta, f, g) != kirillov_bracket(f, g):
                raise _Failure(f'f = "{f}"; g = "{g}"', replay=f"orbitstar bracket{env.algebra_flag} -f \"{f}\" -g \"{g}\"")
    return {"samples": count}


@_register(
    "kirillov-self-bracket",
    "the Schouten square of the linear bivector vanishes "
    "(equivalent to the Jacobi identity)",
    ("poisson",),
)
def _prop_self_bracket(config, env, rng, n):
    beta = kirillov_bivector(env.algebra)
    square = schouten_bracket(beta, beta)
    if not square.is_zero:
        raise _Failure(
            f"[beta, beta] = {square}",
            replay=f"orbitstar schouten{env.algebra_flag}",
        )
    return {}


@_register(
    "formal-poisson-linear",
    "a single Poisson bivector defines a formal structure at every order",
    ("poisson",),
)
def _prop_formal_linear(config, env, rng, n):
    beta = kirillov_bivector(env.algebra)
    ok, order = formal_poisson_check([beta], 8)
    if not ok:
        raise _Failure(f"h beta fails at order {order}")
    ok, order = formal_poisson_check([beta, beta], 8)
    if not ok:
        raise _Failure(f"h beta + h^2 beta fails at order {order}")
    return {"samples": 2}


@_register(
    "formal-poisson-perturbation",
    "a perturbation that does not commute with the bivector fails the formal "
    "condition at the first mixed order",
    ("poisson",),
)
def _prop_formal_perturbed(config, env, rng, n):
    alg = env.algebra
    beta = kirillov_bivector(alg)
    gamma = MultiVector(alg, 2, {(0, 1): CPoly.variable(alg, 0)})
    bracket = schouten_bracket(beta, gamma)
    if bracket.is_zero:
        raise _Failure("constructed perturbation unexpectedly commutes with the bivector")
    ok, order = formal_poisson_check([beta, gamma], 8)
    if ok:
        raise _Failure("perturbed structure unexpectedly passes")
    return {"details": f"fails at h-order {order} with [a1, a2] = {bracket}"}


@_register(
    "schouten-graded-antisymmetry",
    "the bracket changes by the graded sign under swapping its arguments",
    ("poisson",),
    base_samples=50,
)
def _prop_schouten_antisym(config, env, rng, n):
    for _ in range(n):
        a = _random_multivector(rng, env.algebra)
        b = _random_multivector(rng, env.algebra)
        sign = -1 if ((a.degree - 1) * (b.degree - 1)) % 2 == 0 else 1
        if schouten_bracket(b, a) != schouten_bracket(a, b) * sign:
            raise _Failure(f"a = {a}; b = {b}")
    return {}


@_register(
    "schouten-leibniz",
    "the bracket is a graded derivation of the wedge product",
    ("poisson",),
    base_samples=50,
)
def _prop_schouten_leibniz(config, env, rng, n):
    for _ in range(n):
        a = _random_multivector(rng, env.algebra)
        b = _random_multivector(rng, env.algebra)
        c = _random_multivector(rng, env.algebra)
        lhs = schouten_bracket(a, b.wedge(c))
        sign = -1 if ((a.degree - 1) * b.degree) % 2 else 1
        rhs = schouten_bracket(a, b).wedge(c) + (b.wedge(schouten_bracket(a, c)) * sign)
        if lhs != rhs:
            raise _Failure(f"a = {a}; b = {b}; c = {c}")
    return {}


@_register(
    "selfbracket-jacobi-equivalence",
    "the Schouten square of the induced bivector vanishes exactly when the "
    "constants satisfy Jacobi, over a mixed sample of constant sets",
    ("poisson",),
)
def _prop_equivalence(config, env, rng, n):
    outcomes = {True: 0, False: 0}
    samples = 0
    for algebra in _equivalence_algebras(rng):
        samples += 1
        ok, _w = jacobi_check(algebra)
        square_zero = schouten_bracket(
            kirillov_bivector(algebra), kirillov_bivector(algebra)
        ).is_zero
        if ok != square_zero:
            raise _Failure(f"constants {algebra.constants} disagree: jacobi={ok}")
        outcomes[ok] += 1
    if not outcomes[True] or not outcomes[False]:
        raise _Failure(f"sample did not exercise both outcomes: {outcomes}")
    return {
        "samples": samples,
        "details": f"{outcomes[True]} satisfy Jacobi, {outcomes[False]} do not",
    }


def _equivalence_algebras(rng):
    yield su2()
    yield LieAlgebraSpec.from_brackets(3, ("x", "y", "z"), {})
    yield LieAlgebraSpec.from_brackets(
        3, ("x", "y", "z"), {(0, 1): {2: 2}, (1, 2): {0: 2}, (0, 2): {1: -2}}
    )
    for _ in range(17):
        brackets = {}
        for i in range(3):
            for j in range(i + 1, 3):
                coeffs = {}
                for k in range(3):
                    v = rng.randrange(-2, 3)
                    if v:
                        coeffs[k] = rat(v)
                if coeffs:
                    brackets[(i, j)] = coeffs
        yield LieAlgebraSpec.from_brackets(3, ("x", "y", "z"), brackets)


def _random_multivector(rng, algebra):
    degree = rng.randrange(0, min(algebra.dim, 2) + 1)
    ids_pool = list(range(algebra.dim))
    coeffs = {}
    for _ in range(rng.randrange(1, 3)):
        ids = tuple(sorted(rng.sample(ids_pool, degree)))
        poly = gen_random_poly(rng, algebra, 2)
        if poly.is_zero:
            continue
        existing = coeffs.get(ids)
        coeffs[ids] = poly if existing is None else existing + poly
    coeffs = {ids: p for ids, p in coeffs.items() if not p.is_zero}
    return MultiVector(algebra, degree, coeffs)


# -- representation properties (parameterized, appended at run time) --------


def _rep_properties(config: SuiteConfig):
    props = []
    for j_text, h0_text in config.reps:
        label = f"j={j_text},h0={h0_text}"

        def make(j_text=j_text, h0_text=h0_text, label=label):
            def relations(config, env, rng, n):
                rep = spin_rep(rat(j_text), rat(h0_text))
                return {"details": f"dimension {rep.dim}"}

            def casimir(config, env, rng, n):
                rep = spin_rep(rat(j_text), rat(h0_text))
                measured = rep_casimir_scalar(rep)
                doubled = spin_rep(rat(j_text), rat(h0_text) * 2)
                if rep_casimir_scalar(doubled) != measured * 4:
                    raise _Failure("Casimir does not scale as h0^2")
                return {"details": reconciliation_line(rep.j2, str(rep.h0))}

            def homomorphism(config, env, rng, n):
                rep = spin_rep(rat(j_text), rat(h0_text))
                spec = pinned_spec(rep, env.algebra)
                d = _deg(config)
                for _ in range(n):
                    f = classical_project(gen_random_poly(rng, spec.algebra, d), spec.c0)
                    g = classical_project(gen_random_poly(rng, spec.algebra, d), spec.c0)
                    q1 = sphere_to_quotient(f, spec)
                    q2 = sphere_to_quotient(g, spec)
                    prod = quotient_normal_form(nc_mul(q1.lift(), q2.lift()), spec)
                    if rep_apply(prod, rep) != rep_apply(q1, rep) * rep_apply(q2, rep):
                        raise _Failure(f'f = "{f}"; g = "{g}"')
                return {}

            def image_dim(config, env, rng, n):
                rep = spin_rep(rat(j_text), rat(h0_text))
                maxdeg = rep.j2
                rows = []
                for dd in range(maxdeg + 1):
                    rows.append(f"{dd}:{image_dimension(rep, dd)}")
                got = image_dimension(rep, maxdeg)
                expected = rep.dim**2
                if got != expected or image_dimension(rep, 0) != 1:
                    raise _Failure(f"rank at degree {maxdeg} is {got}, expected {expected}")
                return {"details": "rank per degree " + " ".join(rows)}

            def well_defined(config, env, rng, n):
                rep = spin_rep(rat(j_text), rat(h0_text))
                spec = pinned_spec(rep, env.algebra)
                for _ in range(n):
                    a = gen_random_ncpoly(rng, spec.algebra, _deg(config))
                    direct = None
                    for (m, nn, nu, he), c in a.coeffs.items():
                        term = basis_image(rep, 0, 0, 0)
                        mats = (rep.rx, rep.ry, rep.rz)
                        for mat, e in zip(mats, (m, nn, nu)):
                            for _i in range(e):
                                term = term * mat
                        term = term * (c * rep.h0**he)
                        direct = term if direct is None else direct + term
                    if direct is None:
                        continue
                    if rep_apply(quotient_normal_form(a, spec), rep) != direct:
                        raise _Failure(f"a = {a}")
                return {}

            def specialization(config, env, rng, n):
                rep = spin_rep(rat(j_text), rat(h0_text))
                spec = pinned_spec(rep, env.algebra)
                for _ in range(n):
                    a = gen_random_ncpoly(rng, spec.algebra, _deg(config))
                    q = quotient_normal_form(a, spec)
                    if rep_apply(q.specialize_h(rep.h0), rep) != rep_apply(q, rep):
                        raise _Failure(f"a = {a}")
                return {}

            return relations, casimir, homomorphism, image_dim, well_defined, specialization

        relations, casimir, homomorphism, image_dim, well_defined, specialization = make()
        props.extend(
            [
                _Prop(
                    f"rep-defining-relations-{label}",
                    "the generator images satisfy the deformed bracket relations exactly",
                    ("rep",),
                    1,
                    relations,
                ),
                _Prop(
                    f"rep-casimir-scalar-{label}",
                    "the representation Casimir is scalar and scales as h0 squared",
                    ("rep",),
                    2,
                    casimir,
                ),
                _Prop(
                    f"rep-homomorphism-{label}",
                    "evaluation on the representation is exactly multiplicative for "
                    "the pinned quotient level",
                    ("rep",),
                    100,
                    homomorphism,
                ),
                _Prop(
                    f"rep-image-dimension-{label}",
                    "basis classes of degree up to 2j span the full matrix algebra",
                    ("rep",),
                    1,
                    image_dim,
                ),
                _Prop(
                    f"rep-well-defined-{label}",
                    "normalizing before evaluating equals direct evaluation",
                    ("rep",),
                    50,
                    well_defined,
                ),
                _Prop(
                    f"rep-specialization-{label}",
                    "specializing h before evaluating changes nothing",
                    ("rep",),
                    50,
                    specialization,
                ),
            ]
        )
    return props


# --------------------------------------------------------------------------


def run_suite(config: SuiteConfig) -> Report:
    """Execute the selected property suite and collect a deterministic report."""
    env = _build_env(config)
    props = [p for p in _REGISTRY if config.suite == "all" or config.suite in p.suites]
    if config.suite in ("rep", "all"):
        props.extend(_rep_properties(config))
    report = Report(
        suite=config.suite,
        algebra_label=env.algebra_label,
        casimir_label=env.casimir_label,
        seed=config.seed,
        max_degree_label=str(config.max_degree) if config.max_degree is not None else "default (4)",
        samples_label=str(config.samples) if config.samples is not None else "per-property defaults",
    )
    for prop in props:
        rng = random.Random(f"{config.seed}|{prop.name}")
        n = config.samples if config.samples is not None else prop.base_samples
        start = time.perf_counter()
        outcome = {}
        passed = True
        counterexample = replay = details = None
        try:
            outcome = prop.runner(config, env, rng, n) or {}
        except _Failure as failure:
            passed = False
            counterexample = failure.counterexample
            replay = failure.replay
            details = failure.details
        except Exception as exc:  # defensive: keep the suite running
            passed = False
            counterexample = f"unexpected error: {exc!r}"
        elapsed = time.perf_counter() - start
        report.results.append(
            PropertyResult(
                name=prop.name,
                claim=prop.claim,
                samples=outcome.get("samples", n),
                passed=passed,
                counterexample=counterexample,
                replay=replay,
                details=outcome.get("details", details),
                seconds=elapsed,
            )
        )
    return report
