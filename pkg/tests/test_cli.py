import json

from baxt.cli import run
from baxt.monoid import canonical, element_to_json_obj
from baxt.represent import phi2
from baxt.semiring import matrix_to_json
from baxt.words import parse_aword


def out_of(capsys):
    return capsys.readouterr().out


def test_canon_json_roundtrip(capsys):
    code = run(["canon", "36131512665", "--n", "6", "--format", "json"])
    obj = json.loads(out_of(capsys))
    assert code == 0
    assert obj == element_to_json_obj(canonical(parse_aword("36131512665", 6)))
    assert obj["rpi"] == [[2, 1, 1], [5, 2, 1], [5, 3, 2]]
    assert obj["lpi"] == [[1, 2, 3], [3, 5, 2], [3, 6, 1]]


def test_canon_text(capsys):
    assert run(["canon", "12", "--n", "2"]) == 0
    assert "lpi: [(1, 2, 1)]" in out_of(capsys)


def test_equiv_exit_codes(capsys):
    assert run(["equiv", "2121", "2211", "--n", "2"]) == 0
    assert run(["equiv", "12", "21", "--n", "2"]) == 1


def test_sharp(capsys):
    assert run(["sharp", "112", "--n", "2"]) == 0
    assert out_of(capsys).strip() == "122"


def test_trees_dot(capsys):
    assert run(["trees", "2121", "--n", "2", "--format", "dot"]) == 0
    text = out_of(capsys)
    assert text.startswith("digraph left_strict {")
    assert "digraph right_strict {" in text
    # byte-reproducible
    run(["trees", "2121", "--n", "2", "--format", "dot"])
    assert out_of(capsys) == text


def test_trees_json(capsys):
    assert run(["trees", "36131512665", "--n", "6", "--format", "json"]) == 0
    obj = json.loads(out_of(capsys))
    assert obj["right"]["label"] == 5
    assert obj["left"]["label"] == 3


def test_repr_small_rank(capsys):
    assert run(["repr", "21", "--n", "2", "--format", "json"]) == 0
    assert out_of(capsys).strip() == matrix_to_json(phi2(parse_aword("21", 2)))


def test_repr_tuple(capsys):
    assert run(["repr", "1234", "--n", "4", "--format", "json"]) == 0
    obj = json.loads(out_of(capsys))
    assert obj["n"] == 4 and len(obj["coords"]) == 6
    assert run(["repr", "1234", "--n", "4", "--materialize", "--format",
                "json"]) == 0
    assert json.loads(out_of(capsys))["dim"] == 180


def test_check_id(capsys):
    assert run(["check-id", "x y ~= y x", "--n", "4", "--format", "json"]) == 1
    obj = json.loads(out_of(capsys))
    assert obj["verdict"] == "NO" and obj["violated"] == "OccLR"
    assert run(["check-id", "x y ~= y x", "--n", "1"]) == 0


def test_check_id_flattens_terms(capsys):
    assert run(["check-id", "x(x*)* ~= x x", "--n", "4"]) == 0
    assert out_of(capsys).strip() == "YES"


def test_family_pipes_into_check_id(capsys):
    assert run(["family", "pkqk", "--k", "2"]) == 0
    fam = out_of(capsys)
    assert run(["check-id", "--n", "3"], stdin_text=fam) == 0
    assert out_of(capsys).strip() == "YES"
    assert run(["check-id", "--n", "4"], stdin_text=fam) == 1
    out_of(capsys)
    assert run(["family", "basis2"]) == 0
    b2 = out_of(capsys)
    assert len(b2.splitlines()) == 44
    assert run(["check-id", "--n", "2"], stdin_text=b2) == 0


def test_family_reverses(capsys):
    assert run(["family", "reverses"]) == 0
    assert len(out_of(capsys).splitlines()) == 22


def test_plain_mode(capsys):
    assert run(["check-id", "x h y k x y s x t y ~= x h y k y x s x t y",
                "--n", "4", "--mode", "plain"]) == 0
    assert run(["check-id", "x x* ~= x* x", "--n", "2", "--mode", "plain"]) == 2


def test_oracle_cmd(capsys):
    assert run(["oracle", "x y ~= y x", "--n", "2", "--max-len", "1",
                "--format", "json"]) == 1
    obj = json.loads(out_of(capsys))
    assert obj["refuted"] and obj["witness"]["assignment"] == {"x": "1", "y": "2"}
    assert run(["oracle", "x ~= x", "--n", "2", "--max-len", "1"]) == 0


def test_oracle_sampled_deterministic(capsys):
    args = ["oracle", "x y x* ~= x* y x", "--n", "3", "--max-len", "2",
            "--samples", "40", "--seed", "9", "--format", "json"]
    assert run(args) in (0, 1)
    first = out_of(capsys)
    run(args)
    assert out_of(capsys) == first


def test_isoterm_cmd(capsys):
    assert run(["isoterm", "x x* y y*", "--n", "2"]) == 0
    assert out_of(capsys).strip() == "isoterm"
    assert run(["isoterm", "x h y k x y s x t y", "--n", "4"]) == 1


def test_error_exits(capsys):
    assert run(["canon", "444", "--n", "3"]) == 2
    assert "letter 4" in capsys.readouterr().err
    assert run(["check-id", "x y", "--n", "2"]) == 2
    assert run(["bogus"]) == 2
