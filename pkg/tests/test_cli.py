import json
import random

import pytest

from boxvas import (
    InstanceFile,
    InstanceParseError,
    Vass1System,
    parse_instance,
    serialize_instance,
)
from boxvas.cli import run_command

from conftest import EX1_GENS, random_vas

EX1_TEXT = """\
# proper cone containing the quadrant
vas 2
-1 2
2 -1
10 10
"""

VASS1_TEXT = """\
vass1
states p q
init p
trans p 2 q
trans q -1 p
"""


@pytest.fixture
def ex1_file(tmp_path):
    path = tmp_path / "ex1.vas"
    path.write_text(EX1_TEXT)
    return str(path)


@pytest.fixture
def vass1_file(tmp_path):
    path = tmp_path / "two.vass1"
    path.write_text(VASS1_TEXT)
    return str(path)


def test_parse_vas():
    inst = parse_instance(EX1_TEXT)
    assert inst.kind == "vas"
    assert inst.vas.dim == 2
    assert inst.vas.generators == EX1_GENS


def test_parse_empty_vas():
    inst = parse_instance("vas 2\n")
    assert inst.vas.generators == ()


def test_parse_vass1():
    inst = parse_instance(VASS1_TEXT)
    assert inst.kind == "vass1"
    assert inst.init_state == "p"
    assert inst.vass1.transitions == (("p", 2, "q"), ("q", -1, "p"))


def test_parse_errors_carry_line_numbers():
    with pytest.raises(InstanceParseError):
        parse_instance("")
    with pytest.raises(InstanceParseError) as exc:
        parse_instance("vas 2\n1 2 3\n")
    assert exc.value.line == 2
    with pytest.raises(InstanceParseError):
        parse_instance("vas 2\n1 x\n")
    with pytest.raises(InstanceParseError):
        parse_instance("vass1\nstates a\ntrans a 1 b\n")
    with pytest.raises(InstanceParseError):
        parse_instance("widget 3\n")


def test_round_trip_identity():
    for text in (EX1_TEXT, VASS1_TEXT):
        inst = parse_instance(text)
        canon = serialize_instance(inst)
        again = parse_instance(canon)
        assert serialize_instance(again) == canon


def test_round_trip_fuzz():
    rng = random.Random(3)
    for _ in range(50):
        vas = random_vas(rng, rng.randint(1, 3), 5, 4)
        inst = InstanceFile(kind="vas", vas=vas)
        assert parse_instance(serialize_instance(inst)).vas == vas
    sys = Vass1System(("a", "b"), (("a", 3, "b"), ("b", -2, "a")))
    inst = InstanceFile(kind="vass1", vass1=sys, init_state="b")
    back = parse_instance(serialize_instance(inst))
    assert back.vass1 == sys and back.init_state == "b"


def run_json(capsys, argv):
    code = run_command(argv)
    out = capsys.readouterr()
    envelope = json.loads(out.out) if out.out else None
    return code, envelope, out.err


def test_cli_decide_box(ex1_file, capsys):
    code, env, err = run_json(
        capsys, ["decide-box", "--instance", ex1_file, "--target", "21,21"]
    )
    assert code == 0
    assert env["command"] == "decide-box"
    assert env["result"] == {"decision": True, "witness": [2, 0, 1, 2]}
    assert "decision: true" in err


def test_cli_decide_box_false(ex1_file, capsys):
    code, env, _ = run_json(
        capsys, ["decide-box", "--instance", ex1_file, "--target", "11,11"]
    )
    assert code == 0
    assert env["result"] == {"decision": False}


def test_cli_decide_reach_witness(ex1_file, capsys):
    code, env, _ = run_json(
        capsys,
        [
            "decide-reach",
            "--instance",
            ex1_file,
            "--target",
            "11,11",
            "--cap",
            "12,12",
            "--witness",
        ],
    )
    assert code == 0
    assert env["result"]["decision"] is True
    assert len(env["result"]["witness"]) == 3


def test_cli_threshold(ex1_file, capsys):
    code, env, err = run_json(capsys, ["threshold", "--instance", ex1_file])
    assert code == 0
    assert env["result"]["w"] == 702464
    assert env["result"]["case"] == "contains-quadrant"
    assert "W = 702464" in err


def test_cli_threshold_with_scan(ex1_file, capsys):
    code, env, _ = run_json(
        capsys,
        ["threshold", "--instance", ex1_file, "--m", "5", "--validate-radius", "10"],
    )
    assert code == 0
    assert env["result"]["m"] == 5
    assert env["result"]["scan"]["counterexamples"] == []


def test_cli_steinitz(capsys):
    code, env, _ = run_json(capsys, ["steinitz", "--vectors", "5,0;-3,0"])
    assert code == 0
    assert sorted(env["result"]["permutation"]) == [0, 1]
    assert env["result"]["verified"] is True


def test_cli_seed(ex1_file, capsys):
    code, env, _ = run_json(capsys, ["seed", "--instance", ex1_file])
    assert code == 0
    assert env["result"]["s"] == [10, 10]
    assert env["result"]["s_pos"] == [560, 560]


def test_cli_lift(ex1_file, capsys):
    code, env, _ = run_json(
        capsys, ["lift", "--instance", ex1_file, "--target", "21,21"]
    )
    assert code == 0
    assert env["result"]["dim"] == 4
    assert env["result"]["decision"] is True
    assert parse_instance(env["result"]["instance"]).vas.dim == 4


def test_cli_verify_window(ex1_file, capsys):
    code, env, _ = run_json(
        capsys,
        ["verify-window", "--instance", ex1_file, "--lo", "11,11", "--size", "0,0"],
    )
    assert code == 0
    assert env["result"]["violations"] == [[11, 11]]


def test_cli_vass1(vass1_file, capsys):
    code, env, _ = run_json(
        capsys, ["vass1-decide", "--instance", vass1_file, "--to", "q", "--x", "2"]
    )
    assert code == 0
    assert env["result"]["decision"] is True
    assert env["result"]["witness"] == [0]

    code, env, _ = run_json(
        capsys, ["vass1-semilinear", "--instance", vass1_file, "--to", "q"]
    )
    assert code == 0
    assert 2 in env["result"]["explicit"]
    assert env["result"]["partial"] is False


def test_cli_exit_codes(ex1_file, vass1_file, tmp_path, capsys):
    # malformed target -> usage
    assert run_command(["decide-box", "--instance", ex1_file, "--target", "x,y"]) == 2
    capsys.readouterr()
    # wrong instance kind -> usage
    assert run_command(["decide-box", "--instance", vass1_file, "--target", "1,1"]) == 2
    capsys.readouterr()
    # missing file -> usage
    assert run_command(["decide-box", "--instance", str(tmp_path / "nope"), "--target", "1,1"]) == 2
    capsys.readouterr()
    # below-threshold witness request -> precondition
    assert (
        run_command(
            [
                "witness",
                "--instance",
                ex1_file,
                "--target",
                "21,21",
                "--evidence",
                "coeffs",
                "--values",
                "1,1,2",
            ]
        )
        == 3
    )
    capsys.readouterr()
    # tiny node budget -> resource
    assert (
        run_command(
            [
                "decide-box",
                "--instance",
                ex1_file,
                "--target",
                "500,500",
                "--node-budget",
                "10",
            ]
        )
        == 4
    )
    capsys.readouterr()
    # unknown flag -> usage
    assert run_command(["decide-box", "--bogus"]) == 2
    capsys.readouterr()


def test_cli_threads_warning(ex1_file, capsys):
    code, env, _ = run_json(
        capsys,
        ["decide-box", "--instance", ex1_file, "--target", "0,0", "--threads", "4"],
    )
    assert code == 0
    assert any("single-threaded" in w for w in env["warnings"])


def test_cli_json_stable(ex1_file, capsys):
    _, env, _ = run_json(
        capsys, ["decide-box", "--instance", ex1_file, "--target", "21,21"]
    )
    assert set(env) == {"command", "result", "timing_ms", "budget", "warnings"}
    dumped = json.dumps(env, sort_keys=True)
    assert json.loads(dumped) == env
