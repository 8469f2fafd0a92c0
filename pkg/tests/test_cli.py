"""End-to-end tests of the command line interface."""

import json

from mullineux.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_mullineux_text(capsys):
    code, out, err = run(capsys, "mullineux", "--e", "3", "--partition", "3")
    assert (code, out, err) == (0, "2,1\n", "")


def test_mullineux_empty_partition(capsys):
    code, out, err = run(capsys, "mullineux", "--e", "5", "--partition", "-")
    assert (code, out, err) == (0, "-\n", "")


def test_mullineux_method_all(capsys):
    code, out, err = run(
        capsys,
        "mullineux",
        "--e",
        "4",
        "--partition",
        "10,8,7,5,4,4,3,2,1,1",
        "--method",
        "all",
    )
    assert code == 0
    assert out == (
        "crystal: 17,9,7,6,3,3\n"
        "xu: 17,9,7,6,3,3\n"
        "kleshchev: 17,9,7,6,3,3\n"
    )


def test_mullineux_single_methods(capsys):
    for method in ("crystal", "xu", "kleshchev"):
        code, out, err = run(
            capsys, "mullineux", "--e", "3", "--partition", "3,3", "--method", method
        )
        assert (code, out) == (0, "6\n"), method


def test_mullineux_json(capsys):
    code, out, err = run(
        capsys, "mullineux", "--e", "3", "--partition", "3", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload == {"e": 3, "input": "3", "method": "crystal", "result": "2,1"}


def test_mullineux_json_all(capsys):
    code, out, err = run(
        capsys,
        "mullineux",
        "--e",
        "3",
        "--partition",
        "3",
        "--method",
        "all",
        "--format",
        "json",
    )
    payload = json.loads(out)
    assert payload["methods"] == {"crystal": "2,1", "kleshchev": "2,1", "xu": "2,1"}
    assert payload["result"] == "2,1"


def test_mullineux_trace(capsys):
    code, out, err = run(
        capsys, "mullineux", "--e", "3", "--partition", "3,3", "--trace"
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "[split] charge 0,2: 3|3"
    assert lines[1] == "[lift] charge 0,8: 1|3,2"
    assert lines[-1] == "6"


def test_mullineux_rejects_irregular(capsys):
    code, out, err = run(capsys, "mullineux", "--e", "3", "--partition", "3,3,3")
    assert code == 2
    assert "e-regular" in err


def test_mullineux_rejects_bad_parse(capsys):
    code, out, err = run(capsys, "mullineux", "--e", "3", "--partition", "2,3")
    assert code == 2
    assert "weakly decreasing" in err


def test_crystal_iso(capsys):
    code, out, err = run(
        capsys,
        "crystal-iso",
        "--e",
        "3",
        "--charge",
        "0,1",
        "--to",
        "0,4",
        "--bipartition",
        "1|2",
    )
    assert (code, out) == (0, "-|2,1\n")


def test_crystal_iso_rejects_wrong_orbit(capsys):
    code, out, err = run(
        capsys,
        "crystal-iso",
        "--e",
        "3",
        "--charge",
        "0,1",
        "--to",
        "0,2",
        "--bipartition",
        "1|2",
    )
    assert code == 2
    assert "residue" in err


def test_crystal_iso_rejects_non_member(capsys):
    code, out, err = run(
        capsys,
        "crystal-iso",
        "--e",
        "3",
        "--charge",
        "0,1",
        "--to",
        "0,4",
        "--bipartition",
        "1,1|1",
    )
    assert code == 2
    assert "member" in err


def test_theta_subcommand(capsys):
    code, out, err = run(
        capsys,
        "theta",
        "--e",
        "4",
        "--charge",
        "0,2,2",
        "--partition",
        "8,8,6,6,4,3,3,2,1,1",
    )
    assert (code, out) == (0, "8,8|6,6,4,3|3,2,1,1\n")


def test_im_subcommand(capsys):
    code, out, err = run(
        capsys, "im", "--e", "3", "--multisegment", "0:1;0:3;1:3"
    )
    assert (code, out) == (0, "2:6;0:1\n")
    # The output parses back and the involution returns.
    code, out, err = run(capsys, "im", "--e", "3", "--multisegment", out.strip())
    assert (code, out) == (0, "0:3;1:3;0:1\n")


def test_im_rejects_periodic(capsys):
    code, out, err = run(capsys, "im", "--e", "2", "--multisegment", "0:1;1:1")
    assert code == 2
    assert "aperiodic" in err


def test_enumerate_partitions(capsys):
    code, out, err = run(capsys, "enumerate", "--e", "3", "--n", "3")
    assert (code, out) == (0, "3\n2,1\n")


def test_enumerate_members(capsys):
    code, out, err = run(capsys, "enumerate", "--e", "3", "--n", "3", "--charge", "0,1")
    assert code == 0
    assert out == "-|3\n1|1,1\n1|2\n2|1\n2,1|-\n3|-\n"


def test_enumerate_is_deterministic(capsys):
    first = run(capsys, "enumerate", "--e", "3", "--n", "4", "--charge", "0,1")
    second = run(capsys, "enumerate", "--e", "3", "--n", "4", "--charge", "0,1")
    assert first == second


def test_enumerate_json(capsys):
    code, out, err = run(capsys, "enumerate", "--e", "3", "--n", "2", "--format", "json")
    payload = json.loads(out)
    assert payload == {
        "e": 3,
        "input": "n=2",
        "method": "enumerate",
        "result": ["2", "1,1"],
    }


def test_difftest_small(capsys):
    code, out, err = run(
        capsys, "difftest", "--e-range", "2..3", "--max-n", "5", "--jobs", "1"
    )
    assert code == 0
    assert out.endswith("OK\n")
    assert "fail=0" in out
    assert "fail=1" not in out


def test_difftest_tiny_passes(capsys):
    code, out, err = run(capsys, "difftest", "--e-range", "3..3", "--max-n", "0")
    assert code == 0
    assert out.endswith("OK\n")


def test_difftest_json(capsys):
    code, out, err = run(
        capsys,
        "difftest",
        "--e-range",
        "2..2",
        "--max-n",
        "4",
        "--format",
        "json",
        "--jobs",
        "1",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["result"] == "pass"
    props = payload["properties"]
    assert props["involution"]["fail"] == 0
    assert props["involution"]["pass"] > 0
    assert props["theta_roundtrip"]["fail"] == 0


def test_difftest_rejects_bad_range(capsys):
    code, out, err = run(capsys, "difftest", "--e-range", "6..2", "--max-n", "3")
    assert code == 2
    assert "e-range" in err
