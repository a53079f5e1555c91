import json

import pytest

from spex.cli import main
from spex.constructions import complete_bipartite, cycle, g_extremal, h_extremal
from spex.graph6 import to_graph6

from conftest import SQRT5, close


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_q_k2(capsys):
    code, out, _ = run(capsys, "q", "A_")
    assert code == 0
    assert close(float(json.loads(out)["q"]), 2)


def test_q_k23_with_check_and_perron(capsys):
    code, out, _ = run(capsys, "q", to_graph6(complete_bipartite(2, 3)), "--check", "--perron")
    payload = json.loads(out)
    assert code == 0 and payload["agrees"]
    assert close(float(payload["q"]), 5)
    assert len(payload["perron"]) == 5


def test_q_reads_files(capsys, tmp_path):
    source = tmp_path / "in.g6"
    source.write_text(f"{to_graph6(cycle(4))}\n{to_graph6(g_extremal(6, 4))}\n")
    code, out, _ = run(capsys, "q", str(source), "--output", "text")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 2
    assert close(float(lines[1].split("q=")[1]), 3 + SQRT5)


@pytest.mark.parametrize("bad", ["", "A", "~~"])
def test_q_bad_input_exits_2(capsys, bad):
    assert run(capsys, "q", bad)[0] == 2


def test_construct(capsys):
    code, out, _ = run(capsys, "construct", "gmg", "6", "4", "--output", "text")
    assert code == 0 and out.strip() == to_graph6(g_extremal(6, 4))
    code, out, _ = run(capsys, "construct", "hmc", "8", "4")
    assert json.loads(out)["graph6"] == to_graph6(h_extremal(8, 4))


@pytest.mark.parametrize("argv", [["construct", "gmg", "3", "4"], ["construct", "star", "1", "2"]])
def test_construct_bad_parameters(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_verify_girth(capsys):
    code, out, _ = run(capsys, "verify", "girth", "6", "4", "--workers", "1")
    assert code == 0
    assert json.loads(out)["verdict"] == "confirmed-unique"


def test_verify_outside_range_exits_2(capsys):
    assert run(capsys, "verify", "circumference", "7", "4", "--workers", "1")[0] == 2


def test_audit(capsys):
    code, out, _ = run(capsys, "audit", "circumference", "8", "4", "--workers", "1")
    assert code == 0
    assert json.loads(out)["audit"]["passed"]


def test_enumerate(capsys):
    code, out, err = run(capsys, "enumerate", "3", "--workers", "1")
    assert code == 0 and len(out.splitlines()) == 5
    assert json.loads(err.strip().splitlines()[-1])["matching"] == 5


def test_enumerate_girth_to_file(capsys, tmp_path):
    target = tmp_path / "g.g6"
    code, out, _ = run(capsys, "enumerate", "5", "--girth", "5", "--out", str(target), "--workers", "1")
    assert code == 0 and out == ""
    assert target.read_text().split() == [to_graph6(cycle(5))]


def test_check_lemma(capsys):
    code, out, _ = run(capsys, "check-lemma", "2.4", "--trials", "20")
    payload = json.loads(out)
    assert code == 0 and payload["violations"] == 0 and payload["seed"] == 42


def test_bounds_c5(capsys):
    code, out, _ = run(capsys, "bounds", to_graph6(cycle(5)))
    payload = json.loads(out)
    assert code == 0
    assert float(payload["feng_yu"]) == 4
    assert payload["equality"]["feng_yu"] == "regular"


def test_bounds_on_edgeless_graph_is_usage_error(capsys, caplog):
    code, out, _ = run(capsys, "bounds", "A?")
    assert code == 2
    assert out == ""
    assert "no edges" in caplog.text


def test_explore_csv(capsys):
    code, out, _ = run(capsys, "explore", "4", "--output", "csv", "--workers", "1")
    rows = out.splitlines()
    assert code == 0
    assert rows[0] == "spec,verdict,q_max,gap,unique_count,wall_time"
    assert len(rows) == 4 and all(",exploratory," in r for r in rows[1:])


def test_explore_is_byte_stable(capsys):
    first = run(capsys, "explore", "4", "--workers", "1")[1]
    second = run(capsys, "explore", "4", "--workers", "2")[1]
    assert first == second


def test_env_override_is_validated(capsys, monkeypatch):
    monkeypatch.setenv("SPEX_TOLERANCE", "-1")
    assert run(capsys, "q", "A_")[0] == 2


def test_usage_error_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "girth", "six", "4"])
    assert exc.value.code == 2
