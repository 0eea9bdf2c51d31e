import json

import pytest

from orbitstar import LieAlgebraSpec, jacobi_check, load_algebra_file, su2


def test_su2_constants():
    alg = su2()
    assert alg.dim == 3
    assert alg.names == ("x", "y", "z")
    assert alg.structure_constant(0, 1, 2) == 1
    assert alg.structure_constant(1, 0, 2) == -1
    assert alg.bracket_terms(1, 2) == ((0, 1),)


def test_jacobi_su2_and_abelian():
    assert jacobi_check(su2()) == (True, None)
    abelian = LieAlgebraSpec.from_brackets(3, ("x", "y", "z"), {})
    assert jacobi_check(abelian) == (True, None)


def test_jacobi_violation_witness():
    # adding a diagonal component c_{01}^0 breaks the identity
    bad = LieAlgebraSpec.from_brackets(
        3,
        ("x", "y", "z"),
        {(0, 1): {0: 1, 2: 1}, (1, 2): {0: 1}, (0, 2): {1: -1}},
    )
    ok, witness = jacobi_check(bad)
    assert not ok
    assert witness == (0, 1, 2, 1)


def test_rescaled_diagonal_constants_still_satisfy_jacobi():
    # any rescaling of one diagonal component keeps a Lie algebra in dim 3:
    # the Jacobiator only sees products of brackets, which all collapse
    scaled = LieAlgebraSpec.from_brackets(
        3, ("x", "y", "z"), {(0, 1): {2: 2}, (1, 2): {0: 1}, (0, 2): {1: -1}}
    )
    assert jacobi_check(scaled) == (True, None)


def test_antisymmetry_enforced():
    with pytest.raises(ValueError):
        LieAlgebraSpec(
            2,
            ("a", "b"),
            (((0, 0), (1, 0)), ((1, 0), (0, 0))),
        )


def test_reserved_and_duplicate_names():
    with pytest.raises(ValueError):
        LieAlgebraSpec.from_brackets(2, ("h", "a"), {})
    with pytest.raises(ValueError):
        LieAlgebraSpec.from_brackets(2, ("a", "a"), {})


def test_file_round_trip(tmp_path):
    alg = su2()
    path = tmp_path / "su2.json"
    path.write_text(alg.to_json())
    loaded, fragment = load_algebra_file(path)
    assert loaded == alg
    assert fragment is None


def test_file_with_casimir_fragment(tmp_path):
    data = json.loads(su2().to_json())
    data["casimir"] = {"p": "x^2+y^2+z^2", "c": "1", "c0": "1"}
    path = tmp_path / "alg.json"
    path.write_text(json.dumps(data))
    loaded, fragment = load_algebra_file(path)
    assert loaded == su2()
    assert fragment == {"p": "x^2+y^2+z^2", "c": "1", "c0": "1"}


def test_non_jacobi_file_rejected_unless_permissive(tmp_path):
    data = {
        "dim": 3,
        "names": ["x", "y", "z"],
        "brackets": [
            {"i": 0, "j": 1, "coeffs": {"0": "1", "2": "1"}},
            {"i": 1, "j": 2, "coeffs": {"0": "1"}},
            {"i": 0, "j": 2, "coeffs": {"1": "-1"}},
        ],
    }
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(data))
    with pytest.raises(ValueError):
        load_algebra_file(path)
    loaded, _ = load_algebra_file(path, require_jacobi=False)
    assert jacobi_check(loaded)[0] is False
