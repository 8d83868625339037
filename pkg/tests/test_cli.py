import json
import shutil
import subprocess

import pytest

from facecover.cli import EXIT_BUDGET, EXIT_FAILED, EXIT_MALFORMED, EXIT_OK, main
from facecover.harness import exit_instances
from facecover.textformat import format_instance, parse_instance, write_instance


@pytest.fixture
def c6(tmp_path, instance_text):
    p = tmp_path / "c6.txt"
    p.write_text(instance_text)
    return p


def test_solve(c6, capsys):
    assert main(["solve", "--exact", str(c6)]) == EXIT_OK
    out = capsys.readouterr().out
    assert "fcn = 1" in out and "answer = yes" in out


def test_kernelize_writes_instance_and_trace(c6, tmp_path):
    out, trace = tmp_path / "k.txt", tmp_path / "k.json"
    assert main(["kernelize", str(c6), "-o", str(out), "--trace", str(trace)]) == EXIT_OK
    parse_instance(out.read_text())
    assert json.loads(trace.read_text())["decision_hint"] in ("yes", "unknown")


def test_p_children_instance_gives_no(tmp_path):
    name, inst, rule = exit_instances()[0]
    src, out, trace = tmp_path / "p.txt", tmp_path / "k.txt", tmp_path / "k.json"
    write_instance(inst, src)
    assert main(["kernelize", str(src), "-o", str(out), "--trace", str(trace)]) == EXIT_OK
    rep = json.loads(trace.read_text())
    assert rep["decision_hint"] == "no"
    assert rule in [r["rule"] for r in rep["rules_fired"]]
    assert parse_instance(out.read_text()).k == 1


def test_verify(c6, tmp_path, capsys):
    out = tmp_path / "k.txt"
    main(["kernelize", str(c6), "-o", str(out)])
    capsys.readouterr()
    assert main(["verify", str(c6), str(out)]) == EXIT_OK
    assert json.loads(capsys.readouterr().out)["pass"] is True


def test_verify_detects_a_wrong_kernel(c6, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text(format_instance(parse_instance("p facecover 4 6 4 1\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n"
                                                  "t 1\nt 2\nt 3\nt 4\n")))
    assert main(["verify", str(c6), str(bad)]) == EXIT_FAILED


def test_classify_and_decompose(c6, tmp_path, capsys):
    assert main(["classify", str(c6)]) == EXIT_OK
    assert "S corners" in capsys.readouterr().out
    dot = tmp_path / "t.dot"
    assert main(["decompose", str(c6), "--dot", str(dot)]) == EXIT_OK
    assert dot.read_text().startswith("graph spr {")


def test_gen_is_seeded(tmp_path):
    a, b = tmp_path / "a.txt", tmp_path / "b.txt"
    for p in (a, b):
        main(["gen", "--seed", "7", "--n", "15", "-o", str(p)])
    assert a.read_text() == b.read_text()
    parse_instance(a.read_text())


@pytest.mark.parametrize("text", ["p facecover 2 1 0\n", "p facecover 2 1 0 1\ne 1 1\n", "nonsense\n"])
def test_malformed_input_exits_2(tmp_path, text):
    p = tmp_path / "bad.txt"
    p.write_text(text)
    assert main(["solve", "--exact", str(p)]) == EXIT_MALFORMED


def test_non_planar_input_exits_2(tmp_path):
    p = tmp_path / "k5.txt"
    edges = "".join(f"e {u} {v}\n" for u in range(1, 6) for v in range(u + 1, 6))
    p.write_text(f"p facecover 5 10 1 1\n{edges}t 1\n")
    assert main(["kernelize", str(p)]) == EXIT_MALFORMED


def test_missing_file_exits_2(tmp_path):
    assert main(["solve", "--exact", str(tmp_path / "nope.txt")]) == EXIT_MALFORMED


def test_budget_refusal_exits_3(tmp_path):
    p = tmp_path / "g.txt"
    main(["gen", "--seed", "1", "--n", "40", "--density", "0.9", "-o", str(p)])
    assert main(["--rotation-budget", "10", "--spr-budget", "1", "solve", "--exact", str(p)]) == EXIT_BUDGET


def test_unknown_suite(capsys):
    assert main(["suite", "no-such-suite"]) == EXIT_MALFORMED


def test_small_suite_runs(capsys):
    assert main(["suite", "decision", "--count", "20"]) == EXIT_OK
    assert json.loads(capsys.readouterr().out)["passed"] is True


@pytest.mark.skipif(shutil.which("facecover") is None, reason="console script not installed")
def test_console_script(c6):
    r = subprocess.run(["facecover", "solve", "--exact", str(c6)], capture_output=True, text=True)
    assert r.returncode == 0 and "fcn = 1" in r.stdout
