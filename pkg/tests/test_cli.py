import json

from orbitstar.cli import main

BROKEN = {
    "dim": 3,
    "names": ["x", "y", "z"],
    "brackets": [
        {"i": 0, "j": 1, "coeffs": {"0": "1", "2": "1"}},
        {"i": 1, "j": 2, "coeffs": {"0": "1"}},
        {"i": 0, "j": 2, "coeffs": {"1": "-1"}},
    ],
}


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_bracket_command(capsys):
    code, out, _ = run(capsys, "bracket", "-f", "x", "-g", "y")
    assert code == 0
    assert out.strip() == "z"


def test_star_commands(capsys):
    code, out, _ = run(capsys, "star", "-p", "S", "-f", "x", "-g", "y")
    assert (code, out.strip()) == (0, "x*y + 1/2*h*z")
    code, out, _ = run(capsys, "star", "-p", "quotient", "-f", "z", "-g", "z")
    assert (code, out.strip()) == (0, "-x^2 - y^2 + 1")
    code, out, _ = run(capsys, "star", "-p", "P", "-f", "x^2+y^2+z^2", "-g", "x")
    assert (code, out.strip()) == (0, "x^3 + x*y^2 + x*z^2")


def test_star_casimir_override(capsys):
    code, out, _ = run(
        capsys,
        "star", "-p", "quotient", "--casimir-c", "l*(l+h)", "--l", "1", "-f", "z", "-g", "z",
    )
    assert code == 0
    assert out.strip() == "-x^2 - y^2 + 1 + h"


def test_weyl_round_trip_via_cli(capsys):
    code, out, _ = run(capsys, "weyl", "-f", "x*y*z")
    assert code == 0
    forward = out.strip()
    code, out, _ = run(capsys, "weyl", "-i", "-f", forward)
    assert code == 0
    assert out.strip() == "x*y*z"


def test_malformed_input_exits_2(capsys):
    code, _out, err = run(capsys, "bracket", "-f", "x + q", "-g", "y")
    assert code == 2
    assert "unknown variable" in err
    code, _out, err = run(capsys, "star", "-p", "quotient", "-f", "z^2", "-g", "z")
    assert code == 2
    code, _out, _err = run(capsys, "nosuchcommand")
    assert code == 2


def test_rep_command(capsys):
    code, out, _ = run(capsys, "rep", "--j", "1/2", "--h0", "1", "--json",
                       "--check-homomorphism", "--samples", "5")
    assert code == 0
    data = json.loads(out)
    assert data["casimir"] == "-3/4"
    assert data["full_rank"] is True
    assert data["homomorphism"] is True
    assert data["ranks"] == {"0": 1, "1": 4}


def test_schouten_default_and_bracket(capsys):
    code, out, _ = run(capsys, "schouten")
    assert code == 0
    assert "self bracket: 0" in out
    code, out, _ = run(capsys, "schouten", "-f", "d/dx", "-g", "x^2")
    assert code == 0
    assert out.strip() == "2*x"


def test_schouten_alpha_file(capsys, tmp_path):
    alphas = tmp_path / "alphas.txt"
    alphas.write_text(
        "z * d/dx ^ d/dy + (-y) * d/dx ^ d/dz + x * d/dy ^ d/dz\n"
        "x * d/dx ^ d/dy\n"
    )
    code, out, _ = run(capsys, "schouten", "--alpha", str(alphas), "--order", "6")
    assert code == 1
    assert "fails at h-order 3" in out


def test_verify_deterministic_bytes(capsys, tmp_path):
    code1, out1, _ = run(capsys, "verify", "--suite", "poisson", "--seed", "3")
    code2, out2, _ = run(capsys, "verify", "--suite", "poisson", "--seed", "3")
    assert code1 == code2 == 0
    assert out1 == out2
    code3, out3, _ = run(capsys, "verify", "--suite", "poisson", "--seed", "3", "--json")
    assert code3 == 0
    assert json.loads(out3)["passed"] is True


def test_verify_failure_replays_through_cli(capsys, tmp_path):
    path = tmp_path / "broken.json"
    path.write_text(json.dumps(BROKEN))
    code, out, _ = run(capsys, "verify", "--suite", "poisson", "-a", str(path))
    assert code == 1
    assert "[FAIL] structure-jacobi" in out
    assert "Jacobiator nonzero" in out
    replay = None
    for line in out.splitlines():
        if "replay:" in line:
            replay = line.split("replay:", 1)[1].strip()
            break
    assert replay is not None and replay.startswith("orbitstar ")
    args = []
    for piece in replay.split()[1:]:
        args.append(piece.strip('"'))
    code, out, _ = run(capsys, *args)
    assert code == 1  # nonzero self bracket reproduces the failure
    assert "self bracket:" in out and "self bracket: 0" not in out


def test_verify_quotient_suite_counts(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "quotient", "--samples", "20")
    assert code == 0
    assert "counts per degree 0:1 1:4 2:9 3:16 4:25 5:36 6:49" in out


def test_verify_rep_flag_overrides_parameters(capsys):
    code, out, _ = run(
        capsys, "verify", "--suite", "rep", "--samples", "5", "--rep", "2", "1"
    )
    assert code == 0
    assert "rep-image-dimension-j=2,h0=1" in out
    assert "rank per degree 0:1 1:4 2:9 3:16 4:25" in out
    assert "j=1/2" not in out  # defaults replaced, not appended


def test_star_p_with_varying_level_needs_flag(capsys):
    code, _out, err = run(
        capsys, "star", "-p", "P", "--casimir-c", "1+h", "-f", "x", "-g", "y"
    )
    assert code == 2
    assert "allow_varying_c" in err
    code, out, _ = run(
        capsys,
        "star", "-p", "P", "--casimir-c", "1+h", "--allow-varying-c", "-f", "x", "-g", "y",
    )
    assert code == 0
    assert out.strip() == "x*y + 1/2*h*z"


def test_suite_config_rejects_unknown_suite():
    import pytest

    from orbitstar.suite import SuiteConfig

    with pytest.raises(ValueError):
        SuiteConfig(suite="nonsense")
