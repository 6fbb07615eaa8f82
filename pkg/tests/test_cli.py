"""Command line behaviour, including graceful resource failures."""

import json

from coxcells.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_cells_command(capsys):
    code, out, _ = run(capsys, "cells", "--group", "A2", "--side", "left")
    assert code == 0
    doc = json.loads(out)
    assert doc["side"] == "left" and len(doc["blocks"]) == 4


def test_cells_twosided_metadata(capsys):
    code, out, _ = run(capsys, "cells", "--group", "A2", "--side", "twosided")
    doc = json.loads(out)
    assert code == 0
    specials = {b["special"] for b in doc["blocks"]}
    assert specials == {"1_0", "2_1", "1_3"}


def test_tau_command_modes(capsys):
    for mode, expected in [("simple", 4), ("strings", 4)]:
        code, out, _ = run(capsys, "tau", "--group", "A2", "--mode", mode)
        assert code == 0
        assert len(json.loads(out)["blocks"]) == expected


def test_tau_subset(tmp_path, capsys):
    sub = tmp_path / "subset.json"
    sub.write_text(json.dumps([[], [0], [1], [0, 1]]))
    code, out, _ = run(capsys, "tau", "--group", "A2", "--subset", str(sub))
    assert code == 0
    doc = json.loads(out)
    assert sum(len(b) for b in doc["blocks"]) == 4


def test_avalues_and_specials(capsys):
    code, out, _ = run(capsys, "avalues", "--group", "B2")
    assert code == 0
    avs = {b["a"] for b in json.loads(out)["two_sided_cells"]}
    assert avs == {0, 1, 4}
    code, out, _ = run(capsys, "specials", "--group", "B2")
    assert code == 0
    doc = json.loads(out)
    assert len(doc["two_sided_cells"]) == 3


def test_check_commands(capsys):
    for what in ["kottwitz", "left-connected", "tilde-tau", "rsk", "count-identity"]:
        code, out, _ = run(capsys, "check", what, "--group", "A3")
        assert code == 0, (what, out)
        assert json.loads(out)["pass"] is True


def test_intersections_command(capsys):
    code, out, _ = run(capsys, "intersections", "--group", "B3", "--cuspidal-only")
    assert code == 0
    doc = json.loads(out)
    for row in doc["rows"]:
        assert sum(row["counts"].values()) == row["min_size"]


def test_lookup_command(capsys):
    code, out, _ = run(capsys, "lookup", "--group", "A3", "--element", "0,1,0,2")
    assert code == 0
    doc = json.loads(out)
    assert doc["cell_size"] == 3 and doc["a"] == 3


def test_resource_errors_are_graceful(capsys):
    # E7 and E8 parse fine but refuse to enumerate
    for spec in ("E7", "E8"):
        code, out, err = run(capsys, "cells", "--group", spec)
        assert code == 2
        assert "EnumerationBoundExceeded" in err
        code, out, err = run(capsys, "avalues", "--group", spec)
        assert code == 2
        code, out, err = run(capsys, "check", "kottwitz", "--group", spec)
        assert code == 2
        code, out, err = run(capsys, "lookup", "--group", spec, "--element", "0")
        assert code == 2


def test_usage_errors(capsys):
    assert run(capsys, "cells")[0] == 2  # missing --group
    assert run(capsys, "cells", "--group", "NOPE")[0] == 2
    assert run(capsys, "frobnicate", "--group", "A2")[0] == 2


def test_enum_bound_env_override(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("COXCELLS_ENUM_BOUND", "10")
    code, out, err = run(capsys, "cells", "--group", "A3")
    assert code == 2
    assert "EnumerationBoundExceeded" in err
    monkeypatch.delenv("COXCELLS_ENUM_BOUND")


def test_out_file(tmp_path, capsys):
    path = tmp_path / "cells.json"
    code, _, _ = run(capsys, "cells", "--group", "A2", "--out", str(path))
    assert code == 0
    assert len(json.loads(path.read_text())["blocks"]) == 4
