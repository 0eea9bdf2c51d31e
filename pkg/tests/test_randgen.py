import json
import pathlib
import random

from orbitstar import gen_random_ncpoly, gen_random_poly

GOLDEN = json.loads(
    (pathlib.Path(__file__).parent / "data" / "randgen_golden.json").read_text()
)


def test_golden_draws(alg):
    for entry in GOLDEN["poly"]:
        rng = random.Random(entry["seed"])
        first = gen_random_poly(rng, alg, entry["max_degree"])
        second = gen_random_poly(rng, alg, entry["max_degree"])
        assert str(first) == entry["first"]
        assert str(second) == entry["second"]


def test_golden_ncpoly_draw(alg):
    rng = random.Random(42)
    assert str(gen_random_ncpoly(rng, alg, 2)) == GOLDEN["ncpoly_seed42_deg2"]


def test_same_seed_same_stream(alg):
    a = [str(gen_random_poly(random.Random(99), alg, 4)) for _ in range(2)]
    b = [str(gen_random_poly(random.Random(99), alg, 4)) for _ in range(2)]
    assert a == b


def test_degree_zero_is_constant(alg):
    for seed in range(20):
        poly = gen_random_poly(random.Random(seed), alg, 0)
        assert poly.x_degree <= 0


def test_degree_bound_and_coefficient_range(alg):
    rng = random.Random(3)
    for _ in range(50):
        poly = gen_random_poly(rng, alg, 4)
        assert poly.x_degree <= 4
        for key, c in poly.coeffs.items():
            assert key[-1] == 0  # h-free
            assert 1 <= abs(c) <= 9
