"""Command line interface: output shapes, determinism, exit codes."""

import json

import pytest

from ringwalk import cli
from ringwalk import verify as verify_mod


def _run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_ring_text_output(capsys):
    code, out = _run(capsys, "ring", "Z12")
    assert code == 0
    assert "Z3 x Z4" in out
    assert "units: 4" in out
    for u in ("1", "5", "7", "11"):
        assert u in out


def test_ring_json_output(capsys):
    code, out = _run(capsys, "ring", "Z12", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["ring"] == "Z3 x Z4"
    assert payload["order"] == 12
    assert payload["units"]["count"] == 4
    assert payload["units"]["elements"] == ["1", "5", "7", "11"]
    assert payload["sum_of_units_ring"] is True


def test_ring_json_galois(capsys):
    code, out = _run(capsys, "ring", "GF(9)", "--format", "json")
    payload = json.loads(out)
    assert code == 0
    assert payload["square_units"]["count"] == 4


def test_graph_dot_output(capsys):
    code, out = _run(capsys, "graph", "Z4")
    assert code == 0
    assert out.count(" -- ") == 4


def test_graph_json_quadratic_cycle(capsys):
    code, out = _run(capsys, "graph", "Z10", "--family", "quadratic-unitary",
                     "--format", "json")
    payload = json.loads(out)
    assert code == 0
    assert payload["graph"]["vertices"] == 10
    assert payload["regularity"] == 2
    assert payload["connected"] is True


def test_walk_json_z12(capsys):
    code, out = _run(capsys, "walk", "Z12")
    assert code == 0
    payload = json.loads(out)
    comp = payload["components"][0]
    assert comp["periodic"] is True
    assert comp["period"] == 12
    pairs = comp["pst"]["pairs"]
    assert pairs[0] == {"source": "0", "target": "6", "time": 6, "phase": 1}


def test_walk_json_nonperiodic(capsys):
    code, out = _run(capsys, "walk", "Z13", "--family", "quadratic-unitary")
    assert code == 0
    payload = json.loads(out)
    comp = payload["components"][0]
    assert comp["periodic"] is False
    assert comp["period"] is None
    assert comp["pst"]["pairs"] == []
    assert comp["pst"]["pruned_by_transitivity"] is True


def test_walk_text_format(capsys):
    code, out = _run(capsys, "walk", "Z5", "--format", "text")
    assert code == 0
    assert "periodic" in out


def test_output_is_deterministic(capsys):
    _, first = _run(capsys, "walk", "Z12")
    _, second = _run(capsys, "walk", "Z12")
    assert first == second


def test_out_flag_writes_file(tmp_path, capsys):
    target = tmp_path / "z12.json"
    code = cli.main(["ring", "Z12", "--format", "json", "--out", str(target)])
    capsys.readouterr()
    assert code == 0
    payload = json.loads(target.read_text())
    assert payload["order"] == 12


def test_bad_ring_spec_exits_one(capsys):
    code, out = _run(capsys, "ring", "Z0")
    err = capsys.readouterr().err
    assert code == 1


def test_usage_error_exits_one(capsys):
    with pytest.raises(SystemExit) as info:
        cli.main(["walk", "Z12", "--tau-max", "0"])
    assert info.value.code == 1
    with pytest.raises(SystemExit):
        cli.main(["frobnicate"])


def test_order_cap_exits_three(capsys, monkeypatch):
    code, _ = _run(capsys, "walk", "Z37")
    assert code == 3
    monkeypatch.setenv("GROVER_RING_CAP", "100")
    code, out = _run(capsys, "walk", "Z37", "--tau-max", "10")
    assert code == 0


def test_bad_cap_env_exits_three(capsys, monkeypatch):
    monkeypatch.setenv("GROVER_RING_CAP", "banana")
    code, _ = _run(capsys, "walk", "Z12")
    assert code == 3


def test_verify_json_small_sweep(capsys):
    code, out = _run(capsys, "verify", "--max-order", "6")
    assert code == 0
    payload = json.loads(out)
    assert payload["status"] == "pass"
    assert payload["family"] == "unitary"
    records = payload["records"]
    assert [r["ring"] for r in records][:2] == ["Z2", "Z3"]
    z4 = next(r for r in records if r["ring"] == "Z4")
    assert z4["computed"]["period"] == 4
    assert z4["computed"]["pst_pairs"] == [
        {"source": 0, "target": 2, "time": 2, "phase": 1},
        {"source": 2, "target": 0, "time": 2, "phase": 1}]
    assert z4["predicted"]["pst"] is True
    assert z4["status"] == "pass"


def test_verify_text_format(capsys):
    code, out = _run(capsys, "verify", "--max-order", "4", "--format", "text")
    assert code == 0
    assert "pass" in out


def test_verify_quadratic_family(capsys):
    code, out = _run(capsys, "verify", "--family", "quadratic-unitary",
                     "--max-order", "6")
    assert code == 0
    payload = json.loads(out)
    z5 = next(r for r in payload["records"] if r["ring"] == "Z5")
    assert z5["computed"]["period"] == 5
    assert z5["computed"]["pst_positive"] is False


def test_verify_failure_exits_two(capsys, monkeypatch):
    real = verify_mod.verify_ring

    def sabotage(ring, family="unitary", tau_max=120):
        rec = real(ring, family=family, tau_max=tau_max)
        if ring.token == "Z4":
            rec = rec.__class__(**{**rec.__dict__, "failures": ("synthetic",)})
        return rec

    monkeypatch.setattr(cli.verify_mod, "verify_ring", sabotage)
    code, out = _run(capsys, "verify", "--max-order", "4")
    assert code == 2
    payload = json.loads(out)
    assert payload["status"] == "fail"
    assert any(r["status"] == "fail" for r in payload["records"])
