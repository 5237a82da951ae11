import json
import subprocess
import sys

import pytest

from conftest import subset
from preproj.cli import CommandRequest, dispatch, main, parse_request
from preproj.errors import InvalidInput
from preproj.maya import maya_module
from preproj.modules import (
    direct_sum,
    module_to_json,
    parse_module_file,
    random_basis_change,
    serialize_module,
    simple_module,
)
from preproj.tableaux import generic_scalars, ssyt_enumerate, type_t_module


def run(argv):
    return dispatch(parse_request(argv))


def write_module(tmp_path, m, name="m.json"):
    path = tmp_path / name
    path.write_text(serialize_module(m))
    return str(path)


def test_parse_module_round_trip():
    m = maya_module(subset(3, 2, 3))
    assert parse_module_file(serialize_module(m).encode()) == m


def test_parse_module_relation_failure():
    text = json.dumps({"n": 3, "dims": [1, 1], "right": [[[1]]], "left": [[[1]]]})
    with pytest.raises(InvalidInput, match="vertex 1"):
        parse_module_file(text)


def test_parse_zero_module():
    m = parse_module_file(b'{"n": 4, "dims": [0, 0, 0], "right": [[], []], "left": [[], []]}')
    assert m.total_dim == 0


@pytest.mark.parametrize(
    "text",
    [
        "not json",
        '{"n": 3, "dims": [1, 1], "right": [[["2/4"]]], "left": [[[0]]]}',
        '{"n": 3, "dims": [1, 1], "right": [[["1/0"]]], "left": [[[0]]]}',
        '{"n": 3, "dims": [1, 1], "right": [[[1, 0]]], "left": [[[0]]]}',
        '{"n": 3, "dims": [1], "right": [], "left": []}',
        '{"n": 3, "dims": [1, 1]}',
    ],
)
def test_parse_module_rejects(text):
    with pytest.raises(InvalidInput):
        parse_module_file(text)


def test_round_trip_corpus():
    corpus = [random_basis_change(maya_module(subset(6, 2, 4, 6)), 2), direct_sum(simple_module(4, 1), simple_module(4, 3))]
    for t in ssyt_enumerate((3, 2), (1, 2, 1, 1)):
        corpus.append(type_t_module(t, generic_scalars(t, 1)))
    for m in corpus:
        assert parse_module_file(serialize_module(m)) == m


def test_dispatch_examples():
    assert run(["hom-formula", "--n", "7", "--a", "3,6,7", "--b", "3,6,7"]).payload == {"dim": 2}
    assert run(["kostant", "--n", "3", "--v", "1,1"]).payload == {"count": 2}
    report = run(["ssyt", "--shape", "2,1", "--content", "1,1,1", "--n", "3"])
    assert report.payload["count"] == 2
    assert [t["rows"] for t in report.payload["tableaux"]] == [[[1, 2], [3]], [[1, 3], [2]]]


def test_other_commands():
    assert run(["maya", "--n", "7", "--a", "3,6,7"]).payload["dims"] == [1, 2, 2, 2, 2, 1]
    assert run(["hom", "--n", "3", "--a", "3", "--b", "2,3"]).payload["dim"] == 1
    assert run(["socle", "--n", "3", "--a", "2,3", "--w", "1,1"]).payload == {
        "dims": [0, 1], "basis": [[], [[1]]], "in_rep_w": True
    }
    assert run(["polytope", "--n", "3", "--b", "1,3"]).payload == {"points": [[0, 0, 0], [0, -1, 1]]}
    assert run(["polytope-max", "--n", "3", "--a", "3", "--b", "1,3"]).payload == {"max": 1}
    assert run(["signature", "--shape", "2,1", "--content", "1,1,1", "--index", "1"]).payload["signature"] == {
        "2": 0, "3": 1, "2,3": 1
    }
    assert run(["signature", "--shape", "2,1", "--content", "1,1,1", "--set", "2"]).payload["signature"] == {"2": 1}
    assert run(["kostka", "--shape", "2,1", "--content", "1,1,1"]).payload == {"count": 2, "ssyt_count": 2}


def test_identify_and_classify_from_files(tmp_path):
    path = write_module(tmp_path, random_basis_change(maya_module(subset(7, 3, 6, 7)), 4))
    assert run(["identify", "--module", path]).payload["subset"] == "3,6,7"

    t_report = run(["type-t", "--shape", "2,1", "--content", "1,1,1", "--index", "0", "--seed", "5"])
    path = tmp_path / "t.json"
    path.write_text(json.dumps(t_report.payload["module"]))
    report = run(["classify", "--module", str(path), "--shape", "2,1", "--content", "1,1,1"])
    assert report.status == "ok"
    assert report.payload["tableau"]["rows"] == [[1, 2], [3]]
    assert report.payload["degenerate"] is False


def test_status_and_exit_codes(tmp_path, monkeypatch, capsys):
    assert main(["hom-formula", "--n", "3", "--a", "2", "--b", "3"]) == 0
    assert main(["nonsense"]) == 2
    assert main(["hom-formula", "--n", "3", "--a", "2"]) == 2
    assert main(["maya", "--n", "3", "--a", "1,2"]) == 2
    assert main(["--bogus-flag"]) == 2
    two_socles = write_module(tmp_path, direct_sum(simple_module(3, 1), simple_module(3, 1)))
    assert main(["identify", "--module", two_socles]) == 3

    import preproj.maya as maya

    monkeypatch.setattr(maya, "is_invertible", lambda m: False)
    scrambled = write_module(tmp_path, random_basis_change(maya_module(subset(4, 2, 4)), 1), "s.json")
    assert main(["identify", "--module", scrambled]) == 4
    out = capsys.readouterr().out.strip().splitlines()
    assert json.loads(out[-1])["status"] == "theorem-violation"


def test_usage_text_on_errors():
    report = run(["hom-formula", "--n", "3"])
    assert report.status == "invalid-input"
    assert "usage: preproj" in report.diagnostics[0]
    assert "usage" in dispatch(CommandRequest("frobnicate")).diagnostics[-1]


def test_dispatch_is_deterministic():
    argv = ["type-t", "--shape", "3,1", "--content", "1,2,1", "--index", "1", "--seed", "17"]
    assert json.dumps(run(argv).to_json()) == json.dumps(run(argv).to_json())


def test_out_flag_writes_module(tmp_path, capsys):
    out = tmp_path / "n.json"
    assert main(["maya", "--n", "5", "--a", "2,4,5", "--out", str(out)]) == 0
    assert parse_module_file(out.read_bytes()) == maya_module(subset(5, 2, 4, 5))


def test_pretty_output(capsys):
    main(["ssyt", "--shape", "2,1", "--content", "1,1,1", "--pretty"])
    text = capsys.readouterr().out
    assert text.startswith("status: ok") and "1 3" in text


def test_selftest_small():
    report = run(["selftest", "--n", "3", "--seed", "0"])
    assert report.status == "ok"
    assert len(report.payload["suites"]) >= 6
    assert report.payload["failed"] == 0


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "preproj", "kostant", "--n", "4", "--v", "1,1,1"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["payload"] == {"count": 4}


def test_help(capsys):
    assert main(["--help"]) == 0
    assert capsys.readouterr().out.startswith("usage: preproj")
