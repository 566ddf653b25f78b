import io
import json
import subprocess
import sys

from braidlift.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_lift_disc_cube():
    code, out, _ = call("lift", "--d", "3", "--labels", "(1 2),(2 3)", "--braid", "s1^3")
    data = json.loads(out)
    assert code == 0
    assert data["liftable"] is True
    assert data["flags"]["is_identity"] is True


def test_lift_not_liftable():
    code, out, _ = call("lift", "--d", "3", "--labels", "(1 2),(2 3)", "--braid", "s1")
    data = json.loads(out)
    assert code == 0
    assert data["liftable"] is False
    assert data["initial_labels"] == "(1 2),(2 3)"
    assert data["terminal_labels"] == "(1 3),(1 2)"


def test_cover_info_torus():
    code, out, _ = call("cover-info", "--d", "3", "--labels", "(1 2),(2 3),(2 3),(2 3)")
    data = json.loads(out)
    assert (code, data["genus"], len(data["boundary_cycles"])) == (0, 1, 1)


def test_other_commands_run():
    labels = ("--d", "3", "--labels", "(1 2),(1 2),(2 3)")
    for argv in (
        ("hurwitz", *labels, "--braid", "s2"),
        ("liftable", *labels, "--braid", "s1"),
        ("canonical", *labels),
        ("orbit", *labels),
        ("complex", *labels),
        ("complex", *labels, "--graph", "xg", "--radius", "2"),
        ("verify", *labels, "--braid", "s1 s2^3", "--radius", "2"),
        ("rewrite", *labels, "--braid", "s1 s2"),
    ):
        code, out, err = call(*argv)
        assert code == 0, (argv, err)
        json.loads(out)


def test_text_and_dot_formats():
    code, out, _ = call("complex", "--d", "3", "--labels", "(1 2),(2 3)", "--format", "dot")
    assert code == 0 and out.startswith("digraph")
    code, out, _ = call("orbit", "--d", "3", "--labels", "(1 2),(2 3)", "--format", "text")
    assert code == 0 and "size: 3" in out


def test_rewrite_output():
    code, out, _ = call("rewrite", "--d", "3", "--labels", "(1 2),(1 2),(2 3)", "--braid", "s1")
    data = json.loads(out)
    assert data["same_label_crossings_before"] == 1
    assert data["same_label_crossings_after"] == 0
    assert data["lift_equal"] is True


def test_exit_codes():
    code, _, err = call("lift", "--d", "3", "--labels", "(1 2),(2 3)", "--braid", "s4")
    assert code == 1
    assert json.loads(err)["error"] == "BraidError"
    code, _, err = call("lift", "--d", "3", "--labels", "(1 2),(1 2)", "--braid", "s1")
    assert code == 1
    code, _, _ = call("lift", "--d", "3", "--labels", "(1 2),(2 3)")
    assert code == 2
    code, _, _ = call("orbit", "--d", "3", "--labels", "(1 2),(2 3)", "--format", "dot")
    assert code == 2
    code, _, _ = call("frobnicate")
    assert code == 2


def test_output_file_and_determinism(tmp_path):
    target = tmp_path / "out.json"
    argv = ("orbit", "--d", "4", "--labels", "(1 2),(2 3),(3 4),(1 4)")
    assert call(*argv, "--out", str(target))[0] == 0
    assert target.read_text() == call(*argv)[1]


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "braidlift", "canonical", "--labels", "d=3 (2 3),(1 2),(1 2),(1 2)"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["canonical_label"]
