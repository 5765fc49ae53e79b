"""CLI behavior: commands, exit codes, determinism, environment overrides."""

import json


from rcgame.cli import compute_record, main
from rcgame.generators import basic_family, named_instance


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_compute_graph6_file(tmp_path, capsys):
    path = tmp_path / "graphs.g6"
    path.write_text("Bw\n")
    code, out, err = run(capsys, "compute", str(path))
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "id,n,m,rad,diam,girth,rc,lb,ub,ms"
    assert lines[1] == "graphs:1,3,3,1,1,3,0,0,0,0"


def test_compute_named_instance(capsys):
    code, out, _ = run(capsys, "compute", "--instance", "CubicVT24_6")
    assert code == 0
    assert out.splitlines()[1] == "CubicVT24_6,24,36,5,5,6,3,2,4,0"


def test_compute_disconnected_warns(tmp_path, capsys):
    path = tmp_path / "m.el"
    path.write_text("n 4\n0 1\n2 3\n")
    code, out, err = run(capsys, "compute", str(path), "--format", "edgelist")
    assert code == 0
    assert "disconnected" in err
    assert out.splitlines()[1] == "m,4,2,,,0,,0,,0"


def test_compute_parse_failure_exit_code(tmp_path, capsys):
    path = tmp_path / "bad.g6"
    path.write_text("Bw\nBwww\nA_\n")
    code, out, err = run(capsys, "compute", str(path))
    assert code == 2
    assert "bad:2" in err
    assert len(out.splitlines()) == 3  # header plus the two good graphs


def test_compute_json_output(tmp_path, capsys):
    path = tmp_path / "one.g6"
    path.write_text("A_\n")
    code, out, _ = run(capsys, "compute", str(path), "--out", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload[0]["rc"] == 0 and payload[0]["n"] == 2


def test_compute_deterministic_output(tmp_path, capsys):
    path = tmp_path / "graphs.g6"
    path.write_text("Bw\nA_\nDqo\n")
    _, first, _ = run(capsys, "compute", str(path))
    _, second, _ = run(capsys, "compute", str(path))
    assert first == second


def test_family_sierpinski_prediction(capsys):
    code, out, _ = run(capsys, "family", "sierpinski", "4", "3")
    assert code == 0
    assert "rc=11" in out
    assert "predicted rc: 11" in out and "match" in out


def test_family_reference_value(capsys):
    code, out, _ = run(capsys, "family", "sierpinski", "3", "4")
    assert code == 0
    assert "predicted rc: 5 (reference value 5) measured: 5 -> match" in out


def test_family_disconnected_warning(capsys):
    code, out, err = run(capsys, "family", "generalized_johnson", "4", "2", "0")
    assert code == 0
    assert "rc=none" in out
    assert "disconnected" in err


def test_family_bad_params(capsys):
    code, _, err = run(capsys, "family", "cycle", "2")
    assert code == 2 and "error" in err


def test_verify_bounds_suite(capsys):
    code, out, err = run(capsys, "verify", "bounds", "--trials", "5", "--seed", "9")
    assert code == 0
    assert "radius-upper-bound: 5/5 pass" in out
    assert "girth-lower-bound: 5/5 pass" in out
    assert err == ""


def test_verify_families_suite(capsys):
    code, out, _ = run(capsys, "verify", "families")
    assert code == 0
    assert "cycle-closed-form: 10/10 pass" in out


def test_verify_transitive_sweep(capsys):
    code, out, _ = run(capsys, "verify", "transitive-sweep")
    assert code == 0
    assert out.splitlines()[0] == "instance rad rc rad/2 rc>=rad/2"
    assert any(line.startswith("CubicVT24_6 5 3") for line in out.splitlines())


def test_strategy_cop_capture(capsys):
    code, out, _ = run(capsys, "strategy", "--family", "cycle", "8",
                       "-k", "3", "--role", "cop")
    assert code == 0
    assert "outcome: captured after 1 move(s)" in out
    assert "capture" in out


def test_strategy_robber_survival(capsys):
    code, out, _ = run(capsys, "strategy", "--family", "cycle", "8",
                       "-k", "2", "--role", "robber", "--max-moves", "40")
    assert code == 0
    assert "outcome: survived after 40 move(s)" in out


def test_strategy_role_cannot_win(capsys):
    code, _, err = run(capsys, "strategy", "--family", "cycle", "8",
                       "-k", "2", "--role", "cop")
    assert code == 1
    assert "does not win" in err


def test_strategy_from_graph6_file(tmp_path, capsys):
    path = tmp_path / "k3.g6"
    path.write_text("Bw\n")
    code, out, _ = run(capsys, "strategy", str(path), "-k", "0", "--role", "cop")
    assert code == 0
    assert "captured" in out


def test_compute_from_stdin(capsys, monkeypatch):
    import io
    monkeypatch.setattr("sys.stdin", io.StringIO("A_\nBw\n"))
    code, out, _ = run(capsys, "compute", "-")
    assert code == 0
    assert out.splitlines()[1].startswith("stdin:1,2,1,")
    assert out.splitlines()[2].startswith("stdin:2,3,3,")


def test_size_guard_env(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("RC_SIZE_GUARD", "10")
    code, _, err = run(capsys, "compute", "--instance", "CubicVT24_6")
    assert code == 2
    assert "exceeds the cap 10" in err
    monkeypatch.setenv("RC_SIZE_GUARD", "frog")
    code, _, err = run(capsys, "compute", "--instance", "CubicVT24_6")
    assert code == 2


def test_usage_error_exit_code(capsys):
    assert main(["compute", "--format", "dot"]) == 2
    assert main(["verify", "imaginary-suite"]) == 2
    capsys.readouterr()


def test_compute_record_matches_known_values():
    rec = compute_record(named_instance("CubicVT24_6"), "cubic")
    assert (rec.rad, rec.rc, rec.lb, rec.ub) == (5, 3, 2, 4)
    rec = compute_record(basic_family("cycle", 6), "c6")
    assert (rec.rad, rec.diam, rec.girth, rec.rc, rec.lb, rec.ub) == (3, 3, 6, 2, 2, 2)


def test_compute_record_timing_flag():
    rec = compute_record(basic_family("cycle", 6), "c6", with_timing=True)
    assert rec.ms > 0
    rec = compute_record(basic_family("cycle", 6), "c6")
    assert rec.ms == 0.0
