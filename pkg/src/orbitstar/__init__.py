"""Exact algebraic star products on coadjoint orbits.

The package provides an exact-rational symbolic kernel for the deformed
enveloping algebra of a Lie algebra; the symmetrization (Weyl) map and the
star product it induces on polynomials of the dual space; the quotient by
the deformed Casimir ideal with its sphere basis; the harmonic-adapted
quantization and the tangential star product; exact spin representations
realizing the matrix-algebra quantization; polynomial multivector fields
with the Schouten bracket; and a seeded, deterministic property harness
covering each assertable identity.
"""

from .liealg import LieAlgebraSpec, jacobi_check, load_algebra_file, su2
from .scalars import H, HS_ONE, HS_ZERO, HScalar
from .rationals import rat
from .poly import (
    CPoly,
    cpoly_mul,
    gradient,
    iter_monomials,
    kirillov_bracket,
    laplacian,
    specialize_h,
)
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
from .orbit import (
    CasimirSpec,
    HarmonicDecomposition,
    QuotientElement,
    classical_project,
    harmonic_decompose,
    harmonic_lift,
    harmonic_lower,
    ideal_membership,
    ideal_section,
    in_classical_ideal,
    quadratic_invariant,
    quotient_normal_form,
    quotient_to_sphere,
    sphere_basis_size,
    sphere_casimir,
    sphere_to_quotient,
    star_quotient,
    star_tangential,
)
from .reps import (
    CasimirMismatchError,
    GaussMatrix,
    GaussianRational,
    SpinRep,
    basis_image,
    image_dimension,
    pinned_casimir,
    pinned_spec,
    rep_apply,
    rep_casimir_scalar,
    spin_rep,
)
from .multivector import (
    MultiVector,
    bivector_pairing,
    formal_poisson_check,
    kirillov_bivector,
    schouten_bracket,
)
from .parsing import ParseError, cpoly_parse, ncpoly_parse, parse_h_scalar, parse_multivector
from .randgen import gen_random_ncpoly, gen_random_poly, gen_random_word
from .suite import Report, SuiteConfig, run_suite

__version__ = "0.1.0"

__all__ = [
    "CPoly",
    "CasimirMismatchError",
    "CasimirSpec",
    "GaussMatrix",
    "GaussianRational",
    "H",
    "HS_ONE",
    "HS_ZERO",
    "HScalar",
    "HarmonicDecomposition",
    "LieAlgebraSpec",
    "MultiVector",
    "NCPoly",
    "ParseError",
    "QuotientElement",
    "Report",
    "SpinRep",
    "SuiteConfig",
    "basis_image",
    "bivector_pairing",
    "classical_project",
    "commutator",
    "cpoly_mul",
    "cpoly_parse",
    "formal_poisson_check",
    "gen_random_ncpoly",
    "gen_random_poly",
    "gen_random_word",
    "gradient",
    "harmonic_decompose",
    "harmonic_lift",
    "harmonic_lower",
    "ideal_membership",
    "ideal_section",
    "image_dimension",
    "in_classical_ideal",
    "is_central",
    "iter_monomials",
    "jacobi_check",
    "kirillov_bivector",
    "kirillov_bracket",
    "laplacian",
    "load_algebra_file",
    "nc_mul",
    "ncpoly_parse",
    "parse_h_scalar",
    "parse_multivector",
    "pbw_reduce",
    "pinned_casimir",
    "pinned_spec",
    "quadratic_invariant",
    "quotient_normal_form",
    "quotient_to_sphere",
    "rat",
    "rep_apply",
    "rep_casimir_scalar",
    "run_suite",
    "specialize_h",
    "sphere_basis_size",
    "sphere_casimir",
    "sphere_to_quotient",
    "spin_rep",
    "star_quotient",
    "star_tangential",
    "star_weyl",
    "su2",
    "weyl_inverse",
    "weyl_map",
]
