import json

import pytest

from geothue.cli import main
from tests.conftest import fixture_path


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--format", "json")
    return code, json.loads(out), err


def test_reduce(capsys):
    code, out, _ = run_json(capsys, "reduce", fixture_path("geoper_S.rws"),
                            "a d d")
    assert code == 0
    assert out["reduced"] == "a b"


def test_reduce_empty_result(capsys):
    code, out, _ = run(capsys, "reduce", fixture_path("z2z2.rws"), "a a")
    assert code == 0
    assert "reduced: ." in out


def test_check_gp_positive_example(capsys):
    code, out, _ = run_json(capsys, "check-gp", fixture_path("geoper_T.rws"))
    assert code == 0
    assert out["holds"] is True


def test_check_gp_negative_example(capsys):
    code, out, _ = run_json(capsys, "check-gp", fixture_path("z2_graph.rws"))
    assert code == 0
    assert out["holds"] is False
    assert out["witness"]["pair"]["z"] == "a A b"


def test_wp_tits(capsys):
    code, out, _ = run_json(capsys, "wp", fixture_path("tits_d3.rws"),
                            "a b a", "b a b")
    assert code == 0
    assert out["equal"] is True


def test_complete_phase_limit_exit_code(capsys):
    code, out, _ = run_json(capsys, "complete", fixture_path("z2_graph.rws"),
                            "--max-phases", "6")
    assert code == 2
    assert out["status"] == "phase-limit"
    counts = [p["total_rules"] for p in out["phases"]]
    assert counts == sorted(counts)


def test_complete_success_with_system(capsys):
    code, out, _ = run_json(capsys, "complete", fixture_path("z2z2_group.rws"),
                            "--emit-system")
    assert code == 0
    assert out["status"] == "completed"
    assert "rule A <-> a" in out["system"] or "rule a <-> A" in out["system"]


def test_weights_undecided_exit(capsys):
    path = fixture_path("geoper_S.rws")
    code, out, _ = run_json(capsys, "weights", path)
    assert code == 0 and out["status"] == "feasible"


def test_dehn_wp(capsys):
    code, out, _ = run_json(capsys, "dehn-wp", fixture_path("z2z2.rws"),
                            "a b b a")
    assert code == 0
    assert out["trivial"] is True


def test_critical_pairs_limit(capsys):
    code, out, _ = run_json(capsys, "critical-pairs",
                            fixture_path("tits_d3.rws"), "--limit", "2")
    assert code == 0
    assert out["count"] == 4 and len(out["pairs"]) == 2


def test_geodesics(capsys):
    code, out, _ = run_json(capsys, "geodesics", fixture_path("tits_d3.rws"),
                            "a b a b")
    assert code == 0
    assert out["geodesics"] == ["b a"]


def test_geodesic_check_undecided_exit(capsys):
    code, out, _ = run_json(capsys, "geodesic-check",
                            fixture_path("z2_graph.rws"),
                            "--max-len", "3", "--caps", "nodes=3")
    assert code == 2
    assert out["status"] == "undecided"


def test_pregroup_check(capsys):
    code, out, _ = run_json(capsys, "pregroup", "check",
                            fixture_path("amalgam_z4z6.pg"))
    assert code == 0
    assert out["ok"] is True


def test_pregroup_to_system_and_back(capsys, tmp_path):
    out_path = tmp_path / "sprime.rws"
    code, _, _ = run(capsys, "pregroup", "to-system-prime",
                     fixture_path("amalgam_z4z6.pg"), "-o", out_path)
    assert code == 0 and out_path.exists()
    code, out, _ = run(capsys, "system", "to-pregroup", out_path,
                       "--reducing-part")
    assert code == 0
    assert "elements 1 r r2 r3 s s2 s4 s5" in out


def test_build_graph(capsys):
    code, out, _ = run(capsys, "build", "graph", "--vertices", "a", "b",
                       "--edges", "a-b")
    assert code == 0
    assert "rule a b <-> b a" in out


def test_build_coxeter(capsys):
    code, out, _ = run(capsys, "build", "coxeter", "--matrix", "1,3;3,1")
    assert code == 0
    assert "rule a b a <-> b a b" in out


def test_build_amalgam_from_files(capsys):
    code, out, _ = run(capsys, "build", "amalgam",
                       "--group-a", fixture_path("z4.grp"),
                       "--group-b", fixture_path("z6.grp"),
                       "--subgroup", fixture_path("z2h.grp"),
                       "--map-a", fixture_path("amalgam_a.map"),
                       "--map-b", fixture_path("amalgam_b.map"))
    assert code == 0
    assert "rule s4 r3 <-> s r" in out


def test_build_hnn_example(capsys):
    code, out, _ = run(capsys, "build", "hnn", "--example")
    assert code == 0
    assert "rule t 123 -> 12 t 23" in out


def test_build_britton_example(capsys):
    code, out, _ = run(capsys, "build", "britton", "--example")
    assert code == 0
    assert "rule T 12 t -> 12" in out


def test_build_hnn_pregroup_example(capsys):
    code, out, _ = run(capsys, "build", "hnn-pregroup", "--example")
    assert code == 0
    assert "1.t.1" in out


def test_oracle_wp_unknown_exit(capsys):
    # distinct words, but the budget cannot finish either closure
    code, out, _ = run_json(capsys, "oracle", "wp",
                            fixture_path("z2_graph.rws"), "a", "b",
                            "--caps", "nodes=3")
    assert code == 2
    assert out["verdict"] == "unknown"


def test_oracle_count(capsys):
    code, out, _ = run_json(capsys, "oracle", "count",
                            fixture_path("tits_d3.rws"),
                            "--max-word-length", "5")
    assert code == 0
    assert out["count"] == 6


def test_unknown_letter_is_data_error(capsys):
    code, _, err = run(capsys, "reduce", fixture_path("z2z2.rws"), "a q")
    assert code == 1
    assert "error" in err


def test_missing_file_is_error(capsys):
    code, _, err = run(capsys, "reduce", fixture_path("nope.rws"), "a")
    assert code == 1


def test_bad_caps_string(capsys):
    code, _, err = run(capsys, "reduce", fixture_path("z2z2.rws"), "a",
                       "--caps", "bogus=3")
    assert code == 1


def test_usage_error_exits_one():
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 1
