import random

import pytest

from orbitstar import (
    CPoly,
    H,
    HScalar,
    NCPoly,
    classical_project,
    cpoly_parse,
    gen_random_ncpoly,
    gen_random_poly,
    harmonic_decompose,
    harmonic_lift,
    harmonic_lower,
    ideal_membership,
    ideal_section,
    in_classical_ideal,
    kirillov_bracket,
    laplacian,
    nc_mul,
    ncpoly_parse,
    quadratic_invariant,
    quotient_normal_form,
    quotient_to_sphere,
    rat,
    sphere_basis_size,
    sphere_casimir,
    sphere_to_quotient,
    star_quotient,
    star_tangential,
    weyl_map,
)
from oracles import dense_harmonic_parts


def test_sphere_casimir_validation(alg):
    spec = sphere_casimir(1, alg)
    assert spec.P == weyl_map(spec.p)
    assert spec.c0 == 1
    assert spec.is_regular
    with pytest.raises(ValueError):
        sphere_casimir(0, alg)  # singular level refused by default
    singular = sphere_casimir(HScalar((0, 0, -2)), alg, require_regular=False)
    assert singular.c0 == 0
    with pytest.raises(ValueError):
        sphere_casimir(HScalar((1, 0, 0, 5)), alg)  # h-degree above deg p


def test_qnf_examples(alg, unit_spec):
    z2 = ncpoly_parse("Z^2", alg)
    q = quotient_normal_form(z2, unit_spec)
    assert quotient_to_sphere(q) == cpoly_parse("1 - x^2 - y^2", alg)
    x = ncpoly_parse("X", alg)
    assert quotient_to_sphere(quotient_normal_form(x, unit_spec)) == cpoly_parse("x", alg)
    z3 = ncpoly_parse("Z^3", alg)
    via_left = quotient_normal_form(nc_mul(ncpoly_parse("Z", alg), z2), unit_spec)
    via_right = quotient_normal_form(nc_mul(z2, ncpoly_parse("Z", alg)), unit_spec)
    assert quotient_normal_form(z3, unit_spec) == via_left == via_right


def test_qnf_never_stores_high_z(alg, unit_spec):
    rng = random.Random(71)
    for _ in range(40):
        a = gen_random_ncpoly(rng, alg, 5)
        q = quotient_normal_form(a, unit_spec)
        assert all(key[2] <= 1 for key in q.coeffs)


def test_coset_invariance(alg, unit_spec):
    rng = random.Random(73)
    gen = unit_spec.P - NCPoly.constant(alg, unit_spec.c)
    for _ in range(200):
        a = gen_random_ncpoly(rng, alg, 4)
        left = gen_random_ncpoly(rng, alg, 3)
        right = gen_random_ncpoly(rng, alg, 3)
        shifted = a + nc_mul(nc_mul(left, gen), right)
        assert quotient_normal_form(shifted, unit_spec) == quotient_normal_form(a, unit_spec)


def test_ideal_membership_examples(alg, unit_spec):
    gen = unit_spec.P - NCPoly.constant(alg, unit_spec.c)
    assert ideal_membership(gen, unit_spec)
    item = nc_mul(nc_mul(ncpoly_parse("X", alg), gen), ncpoly_parse("Y", alg))
    assert ideal_membership(item, unit_spec)
    assert not ideal_membership(ncpoly_parse("X", alg), unit_spec)


def test_basis_bijection(alg, unit_spec):
    f = cpoly_parse("x*y*z", alg)
    q = sphere_to_quotient(f, unit_spec)
    assert set(q.coeffs) == {(1, 1, 1, 0)}
    assert quotient_to_sphere(q) == f
    with pytest.raises(ValueError):
        sphere_to_quotient(cpoly_parse("z^2", alg), unit_spec)
    rng = random.Random(79)
    for _ in range(50):
        g = classical_project(gen_random_poly(rng, alg, 4), unit_spec.c0)
        assert quotient_to_sphere(sphere_to_quotient(g, unit_spec)) == g


def test_star_quotient_examples(alg, unit_spec):
    x, y, z = (CPoly.variable(alg, i) for i in range(3))
    assert star_quotient(z, z, unit_spec) == cpoly_parse("1 - x^2 - y^2", alg)
    one = CPoly.constant(alg, 1)
    f = cpoly_parse("x*y + 2*z", alg)
    assert star_quotient(one, f, unit_spec) == f
    assert star_quotient(x, y, unit_spec) - star_quotient(y, x, unit_spec) == z * H


def test_star_quotient_associativity(alg, unit_spec):
    rng = random.Random(83)
    for _ in range(40):
        f = classical_project(gen_random_poly(rng, alg, 4), unit_spec.c0)
        g = classical_project(gen_random_poly(rng, alg, 4), unit_spec.c0)
        k = classical_project(gen_random_poly(rng, alg, 4), unit_spec.c0)
        lhs = star_quotient(star_quotient(f, g, unit_spec), k, unit_spec)
        rhs = star_quotient(f, star_quotient(g, k, unit_spec), unit_spec)
        assert lhs == rhs


def test_harmonic_examples(alg):
    x = CPoly.variable(alg, 0)
    p = quadratic_invariant(alg)
    dec = harmonic_decompose(x * x)
    parts = dict(dec.parts)
    assert parts[0] == x * x - p * rat(1, 3)
    assert parts[1] == CPoly.constant(alg, rat(1, 3))
    xy = cpoly_parse("x*y", alg)
    assert dict(harmonic_decompose(xy).parts) == {0: xy}
    psq = dict(harmonic_decompose(p * p).parts)
    assert psq == {2: CPoly.constant(alg, 1)}


def test_harmonic_reconstruction_and_harmonicity(alg):
    rng = random.Random(89)
    for _ in range(30):
        f = gen_random_poly(rng, alg, 5)
        dec = harmonic_decompose(f)
        assert dec.reconstruct() == f
        for _k, eta in dec:
            assert laplacian(eta).is_zero


def test_harmonic_matches_dense_solver(alg):
    cases = [
        cpoly_parse("x^2", alg),
        cpoly_parse("x^2*y^2 + 3*h*z^4 - x*y + 2", alg),
        cpoly_parse("x^4 + y^4 + z^4", alg),
    ]
    for f in cases:
        expected = dense_harmonic_parts(f)
        assert {k: eta for k, eta in harmonic_decompose(f)} == expected


def test_lift_examples(alg, unit_spec):
    x = CPoly.variable(alg, 0)
    p = quadratic_invariant(alg)
    c0 = CPoly.constant(alg, unit_spec.c0)
    pc = unit_spec.P - NCPoly.constant(alg, unit_spec.c)
    assert harmonic_lift(p - c0, unit_spec) == pc
    assert harmonic_lift(x, unit_spec) == weyl_map(x)
    eta = cpoly_parse("x*y", alg)  # harmonic
    assert harmonic_lift(eta, unit_spec) == weyl_map(eta)
    assert harmonic_lift((p - c0) * x, unit_spec) == nc_mul(pc, weyl_map(x))


def test_lift_lower_round_trip(alg, unit_spec):
    rng = random.Random(97)
    for _ in range(25):
        f = gen_random_poly(rng, alg, 5)
        assert harmonic_lower(harmonic_lift(f, unit_spec), unit_spec) == f


def test_lift_sends_classical_ideal_into_deformed_ideal(alg, unit_spec):
    rng = random.Random(99)
    shifted = quadratic_invariant(alg) - CPoly.constant(alg, unit_spec.c0)
    for _ in range(20):
        f = gen_random_poly(rng, alg, 3)
        assert ideal_membership(harmonic_lift(shifted * f, unit_spec), unit_spec)


def test_tangential_star_properties(alg, unit_spec):
    rng = random.Random(101)
    p = quadratic_invariant(alg)
    shifted = p - CPoly.constant(alg, unit_spec.c0)
    for _ in range(20):
        f = gen_random_poly(rng, alg, 4)
        assert star_tangential(p, f, unit_spec) == p * f
        assert star_tangential(f, p, unit_spec) == p * f
        assert star_tangential(shifted, f, unit_spec) == shifted * f
        assert star_tangential(f, shifted, unit_spec) == shifted * f
        assert in_classical_ideal(star_tangential(shifted, f, unit_spec), unit_spec.c0)


def test_tangential_star_first_order(alg, unit_spec):
    x, y, z = (CPoly.variable(alg, i) for i in range(3))
    comm = star_tangential(x, y, unit_spec) - star_tangential(y, x, unit_spec)
    assert comm.truncate_h(2) == (z * H).truncate_h(2)


def test_tangential_star_requires_constant_level(alg):
    varying = sphere_casimir(HScalar((1, 1)), alg)
    x = CPoly.variable(alg, 0)
    y = CPoly.variable(alg, 1)
    with pytest.raises(ValueError):
        star_tangential(x, y, varying)
    assert star_tangential(x, y, varying, allow_varying_c=True).specialize_h(0) == x * y


def test_tangential_covariance(alg, unit_spec):
    rng = random.Random(103)
    coords = [CPoly.variable(alg, i) for i in range(3)]
    for _ in range(15):
        f = gen_random_poly(rng, alg, 3)
        g = gen_random_poly(rng, alg, 3)
        prod = star_tangential(f, g, unit_spec)
        for xi in coords:
            lhs = kirillov_bracket(xi, prod)
            rhs = star_tangential(kirillov_bracket(xi, f), g, unit_spec) + star_tangential(
                f, kirillov_bracket(xi, g), unit_spec
            )
            assert lhs == rhs


def test_classical_projection(alg):
    f = cpoly_parse("z^2", alg)
    assert classical_project(f, 1) == cpoly_parse("1 - x^2 - y^2", alg)
    p = quadratic_invariant(alg)
    assert in_classical_ideal(p - CPoly.constant(alg, 1), 1)
    assert not in_classical_ideal(p, 1)


def test_section_examples(alg, unit_spec):
    x = CPoly.variable(alg, 0)
    p = quadratic_invariant(alg)
    pc = unit_spec.P - NCPoly.constant(alg, unit_spec.c)
    assert ideal_section(x, unit_spec) == ncpoly_parse("X", alg)
    assert ideal_section(p - CPoly.constant(alg, 1), unit_spec) == pc
    z2 = cpoly_parse("z^2", alg)
    expected = ncpoly_parse("1 - X^2 - Y^2", alg) + pc
    assert ideal_section(z2, unit_spec) == expected
    # quotient-consistency with the normal form of Z^2
    assert quotient_normal_form(ideal_section(z2, unit_spec), unit_spec) == quotient_normal_form(
        ncpoly_parse("Z^2", alg), unit_spec
    )


def test_section_sends_ideal_into_ideal(alg, unit_spec):
    rng = random.Random(107)
    p = quadratic_invariant(alg)
    shifted = p - CPoly.constant(alg, unit_spec.c0)
    for _ in range(25):
        f = gen_random_poly(rng, alg, 3)
        assert ideal_membership(ideal_section(shifted * f, unit_spec), unit_spec)


def test_projection_diagram(alg, unit_spec):
    rng = random.Random(109)
    for _ in range(40):
        f = gen_random_poly(rng, alg, 4)
        left = quotient_normal_form(ideal_section(f, unit_spec), unit_spec)
        right = sphere_to_quotient(classical_project(f, unit_spec.c0), unit_spec)
        assert left == right


def test_section_fails_on_shifted_level(alg, unit_spec):
    p = quadratic_invariant(alg)
    f = p - CPoly.constant(alg, unit_spec.c0 + 1)
    assert in_classical_ideal(f, unit_spec.c0 + 1)
    image = quotient_normal_form(ideal_section(f, unit_spec), unit_spec)
    assert not image.is_zero


def test_basis_count():
    for d in range(7):
        assert sphere_basis_size(d) == (d + 1) ** 2
        assert sum(2 * l + 1 for l in range(d + 1)) == (d + 1) ** 2


def test_quotient_specialize(alg, unit_spec):
    q = quotient_normal_form(ncpoly_parse("Z^2 + h*X", alg), unit_spec)
    q0 = q.specialize_h(0)
    assert quotient_to_sphere(q0) == cpoly_parse("1 - x^2 - y^2", alg)
