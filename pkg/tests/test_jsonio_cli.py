import json
import random

import pytest

from mpla import (MPCochain, adjoint_representation, cochain_to_coords,
                  kernel_basis, delta_matrix, cochain_from_coords)
from mpla import jsonio
from mpla.catalog import (aff1, bialgebra_aff1, mp_a, mp_action_pair,
                          mp_double, standard_fixtures)
from mpla.cli import main
from mpla.errors import InputError
from mpla.scalars import DualNumber, format_rational, parse_rational

from helpers import rand_cochain


def test_rational_parsing():
    from fractions import Fraction

    assert parse_rational("3/4") == Fraction(3, 4)
    assert parse_rational("-7") == Fraction(-7)
    assert parse_rational(5) == Fraction(5)
    assert format_rational(Fraction(3, 4)) == "3/4"
    assert format_rational(Fraction(-2)) == -2
    from mpla.errors import MalformedTensor

    for bad in ("1/0", "a/b", 1.5, None, True):
        with pytest.raises(MalformedTensor):
            parse_rational(bad)


def test_dual_number_ring():
    t = DualNumber(0, 1)
    assert t * t == DualNumber(0, 0)
    x = DualNumber(2, 3)
    y = DualNumber(-1, 4)
    assert x * y == DualNumber(-2, 8 - 3)
    assert x - y == DualNumber(3, -1)
    assert bool(DualNumber(0, 0)) is False and bool(t) is True
    assert 2 * t == DualNumber(0, 2)


def test_structure_json_round_trips():
    for name, mp in standard_fixtures():
        data = jsonio.matched_pair_to_json(mp)
        back = jsonio.matched_pair_from_json(json.loads(json.dumps(data)))
        assert back == mp, name
    g = aff1()
    assert jsonio.lie_algebra_from_json(jsonio.lie_algebra_to_json(g)) == g
    b = bialgebra_aff1()
    back = jsonio.bialgebra_from_json(jsonio.bialgebra_to_json(b))
    assert back.g == b.g and back.cobracket == b.cobracket


def test_cochain_json_round_trip():
    rng = random.Random(81)
    mp = mp_double()
    for degree in range(4):
        F = rand_cochain(rng, mp, (2, 2), degree)
        back = jsonio.cochain_from_json(
            json.loads(json.dumps(jsonio.cochain_to_json(F))), (2, 2), (2, 2))
        assert back == F


def test_rep_json_round_trip():
    for name, mp in standard_fixtures():
        rep = adjoint_representation(mp)
        back = jsonio.mp_representation_from_json(
            jsonio.mp_representation_to_json(rep), mp)
        assert back.tensors_equal(rep), name


def test_json_rejects_malformed():
    with pytest.raises(InputError):
        jsonio.lie_algebra_from_json({"dim": 2, "bracket": [[1, 0, 0, "1"]]})
    with pytest.raises(InputError):
        jsonio.lie_algebra_from_json({"dim": 2, "bracket": [[0, 1, 0, "1/0"]]})
    with pytest.raises(InputError):
        jsonio.matched_pair_from_json({"g": {"dim": 1, "bracket": []}})


def write(tmp_path, name, payload):
    path = tmp_path / name
    path.write_text(json.dumps(payload), encoding="utf-8")
    return str(path)


def test_cli_validate_matched_pair(tmp_path, capsys):
    path = write(tmp_path, "mpa.json", jsonio.matched_pair_to_json(mp_a()))
    assert main(["validate", path]) == 0
    out = capsys.readouterr().out
    assert "matched pair: VALID (6/6 axiom groups)" in out


def test_cli_validate_invalid_exit_code(tmp_path, capsys):
    from mpla import LieAlgebra, MatchedPair

    bad = MatchedPair.from_sparse(
        aff1(), LieAlgebra.abelian(1), rho={(0, 0): [1], (1, 0): [1]}
    )
    path = write(tmp_path, "bad.json", jsonio.matched_pair_to_json(bad))
    assert main(["validate", path]) == 1
    assert "INVALID" in capsys.readouterr().out


def test_cli_malformed_input_exit_code(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text("{not json", encoding="utf-8")
    assert main(["validate", str(path)]) == 2
    err = capsys.readouterr().err
    assert "broken.json" in err


def test_cli_cohomology_table(tmp_path, capsys):
    path = write(tmp_path, "mpa.json", jsonio.matched_pair_to_json(mp_a()))
    assert main(["cohomology", path, "--max-degree", "3", "--format", "json"]) == 0
    table = json.loads(capsys.readouterr().out)
    assert table[0] == {"degree": 0, "cochain_dim": 2, "h_dim": 2}
    assert len(table) == 4


def test_cli_bicross_then_validate(tmp_path, capsys):
    path = write(tmp_path, "mpa.json", jsonio.matched_pair_to_json(mp_a()))
    out_path = str(tmp_path / "combined.json")
    assert main(["bicross", path, "--format", "json", "-o", out_path]) == 0
    assert main(["validate", out_path, "--as", "lie"]) == 0
    combined = jsonio.lie_algebra_from_json(
        json.loads((tmp_path / "combined.json").read_text()))
    assert combined == aff1()


def test_cli_mc_check(tmp_path, capsys):
    path = write(tmp_path, "double.json", jsonio.matched_pair_to_json(mp_double()))
    assert main(["mc-check", path]) == 0
    from helpers import rand_mp_candidate

    cand = rand_mp_candidate(random.Random(5), 2, 2)
    path = write(tmp_path, "cand.json", jsonio.matched_pair_to_json(cand))
    code = main(["mc-check", path])
    from mpla import validate_matched_pair

    assert code == (0 if validate_matched_pair(cand).ok else 1)


def test_cli_deform_check(tmp_path, capsys):
    mp = mp_a()
    path = write(tmp_path, "mpa.json", jsonio.matched_pair_to_json(mp))
    zero = write(tmp_path, "zero.json",
                 {"mu1": [], "nu1": [], "rho1": [], "psi1": []})
    assert main(["deform-check", path, zero]) == 0
    out = capsys.readouterr().out
    assert "routes agree: yes" in out


def test_cli_extend_extract_round_trip(tmp_path, capsys):
    mp = mp_double()
    rep = adjoint_representation(mp)
    F = cochain_from_coords(
        (2, 2), (2, 2), 2, kernel_basis(delta_matrix(mp, rep, 2))[0])
    mp_path = write(tmp_path, "double.json", jsonio.matched_pair_to_json(mp))
    co_path = write(tmp_path, "cocycle.json", jsonio.cochain_to_json(F))
    ext_path = str(tmp_path / "extension.json")
    assert main(["extend", mp_path, co_path, "-o", ext_path,
                 "--format", "json"]) == 0
    assert main(["validate", ext_path]) == 0
    capsys.readouterr()
    assert main(["extract-cocycle", ext_path, "--format", "json"]) == 0
    got = json.loads(capsys.readouterr().out)
    assert got == json.loads(json.dumps(jsonio.cochain_to_json(F)))


def test_cli_deterministic_output(tmp_path, capsys):
    path = write(tmp_path, "double.json", jsonio.matched_pair_to_json(mp_double()))
    assert main(["cohomology", path, "--format", "json"]) == 0
    first = capsys.readouterr().out
    assert main(["cohomology", path, "--format", "json"]) == 0
    second = capsys.readouterr().out
    assert first == second


def test_cli_stdin_input(tmp_path, capsys, monkeypatch):
    import io

    payload = json.dumps(jsonio.matched_pair_to_json(mp_a()))
    monkeypatch.setattr("sys.stdin", io.StringIO(payload))
    assert main(["validate", "-"]) == 0


def test_cli_threads_env(tmp_path, capsys, monkeypatch):
    path = write(tmp_path, "mpa.json", jsonio.matched_pair_to_json(mp_a()))
    monkeypatch.setenv("MPLA_THREADS", "4")
    assert main(["validate", path]) == 0
    monkeypatch.setenv("MPLA_THREADS", "zero")
    assert main(["validate", path]) == 2


def test_cli_skeletal_correspond_round_trip(tmp_path, capsys):
    from test_skeletal import zero_cross_pair

    s = zero_cross_pair(mp_action_pair(), 1, 1)
    path = write(tmp_path, "skeletal.json", jsonio.skeletal_pair_to_json(s))
    assert main(["skeletal-validate", path]) == 0
    capsys.readouterr()
    assert main(["skeletal-correspond", path, "--format", "json"]) == 0
    triple = json.loads(capsys.readouterr().out)
    triple_path = write(tmp_path, "triple.json", triple)
    assert main(["skeletal-correspond", triple_path, "--format", "json"]) == 0
    back = json.loads(capsys.readouterr().out)
    assert back == json.loads(json.dumps(jsonio.skeletal_pair_to_json(s)))


def test_cli_semidirect_and_dual(tmp_path, capsys):
    mp = mp_double()
    mp_path = write(tmp_path, "double.json", jsonio.matched_pair_to_json(mp))
    rep_path = write(tmp_path, "rep.json", jsonio.mp_representation_to_json(
        adjoint_representation(mp)))
    assert main(["semidirect", mp_path, "--coefficients", rep_path,
                 "--format", "json"]) == 0
    built = jsonio.matched_pair_from_json(json.loads(capsys.readouterr().out))
    from mpla import validate_matched_pair

    assert validate_matched_pair(built).ok
    assert main(["dual", mp_path, "--coefficients", rep_path,
                 "--format", "json"]) == 0
    dual_data = json.loads(capsys.readouterr().out)
    dual_rep = jsonio.mp_representation_from_json(dual_data, mp)
    from mpla import coadjoint_representation

    assert dual_rep.tensors_equal(coadjoint_representation(mp))


def test_cli_validate_rep_kinds(tmp_path, capsys):
    mp = mp_a()
    mp_path = write(tmp_path, "mpa.json", jsonio.matched_pair_to_json(mp))
    rep_path = write(tmp_path, "rep.json", jsonio.mp_representation_to_json(
        adjoint_representation(mp)))
    assert main(["validate", rep_path, "--base", mp_path]) == 0
    assert "matched-pair representation: VALID" in capsys.readouterr().out
    # a plain action file against its algebra
    lie_path = write(tmp_path, "aff1.json", jsonio.lie_algebra_to_json(aff1()))
    action_path = write(tmp_path, "action.json",
                        {"space_dim": 1, "action": [[0, 0, 0, "1"]]})
    assert main(["validate", action_path, "--algebra", lie_path,
                 "--as", "rep"]) == 0
    # missing the companion file is a usage error
    assert main(["validate", rep_path]) == 2


def test_cli_deform_equiv(tmp_path, capsys):
    mp = mp_double()
    rep = adjoint_representation(mp)
    from mpla import cochain_to_candidate, delta_mpl_coeff
    from mpla.jsonio import deformation_to_json
    from test_deform import one_cochain_from_maps
    from mpla import Matrix

    F = cochain_from_coords(
        (2, 2), (2, 2), 2, kernel_basis(delta_matrix(mp, rep, 2))[0])
    d1 = cochain_to_candidate(F)
    f = Matrix.from_rows([[1, 0], [1, 1]])
    g = Matrix.from_rows([[0, 1], [0, 0]])
    shift = delta_mpl_coeff(mp, rep, one_cochain_from_maps(mp, f, g))
    d2 = cochain_to_candidate(F - shift)
    mp_path = write(tmp_path, "double.json", jsonio.matched_pair_to_json(mp))
    d1_path = write(tmp_path, "d1.json", deformation_to_json(d1))
    d2_path = write(tmp_path, "d2.json", deformation_to_json(d2))
    maps_path = write(tmp_path, "maps.json", {
        "f": [["1", "0"], ["1", "1"]], "g": [["0", "1"], ["0", "0"]]})
    assert main(["deform-equiv", mp_path, d1_path, d2_path, maps_path]) == 0
    zero_maps = write(tmp_path, "zero.json", {
        "f": [["0", "0"], ["0", "0"]], "g": [["0", "0"], ["0", "0"]]})
    assert main(["deform-equiv", mp_path, d1_path, d2_path, zero_maps]) == 1
