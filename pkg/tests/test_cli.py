import json
import subprocess
import sys

import pytest

from activeset import (
    PathClass,
    active_set,
    activate_gen,
    count_paths,
    deactivate_gen,
    decode,
    encode,
    enumerate_paths,
    format_path,
    parse_path,
)
from activeset.active import LineSet, findings
from activeset.cli import run

from conftest import FIG1_DOMAIN, FIG1_IMAGE


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_count_golden(capsys):
    code, out, _ = call(capsys, "count", "--class", "general", "--n", "4")
    assert code == 0
    assert out == '{"n":4,"class":"general","count":"2568"}\n'


def test_deactivate_figure1(capsys):
    code, out, _ = call(capsys, "deactivate", "--k", "4", "--path", FIG1_DOMAIN)
    assert code == 0
    obj = json.loads(out)
    image, trace = deactivate_gen(parse_path(FIG1_DOMAIN), 4)
    assert obj == {"n": 12, "k": 4, "path": FIG1_IMAGE, "trace": trace.to_json()}
    assert obj["trace"]["h"] == 2
    assert obj["trace"]["P"] == [4, 1] and obj["trace"]["Q"] == [12, 10]


def test_deactivate_trace_diagram(capsys):
    code, _, err = call(capsys, "deactivate", "--k", "4", "--path", FIG1_DOMAIN, "--trace")
    assert code == 0
    assert "before:" in err and "after:" in err and "B' = (4,1)" in err


def test_activate_inverse(capsys):
    code, out, _ = call(capsys, "activate", "--k", "4", "--path", FIG1_IMAGE)
    assert code == 0
    assert json.loads(out)["path"] == FIG1_DOMAIN
    assert json.loads(out)["trace"] == activate_gen(parse_path(FIG1_IMAGE), 4)[1].to_json()


@pytest.mark.parametrize("k, error", [("3", "LineOutOfRange"), ("1", "LineNotInactive"), ("2", "LineNotInactive")])
def test_activate_on_delannoy_path_fails(capsys, k, error):
    code, out, err = call(capsys, "activate", "--k", k, "--path", "1,1 1,1 1,1")
    assert code == 2
    assert out == ""
    assert error in err


def test_bad_path_is_input_error(capsys):
    code, _, err = call(capsys, "active", "--path", "0,0 1,1")
    assert code == 2 and "InvalidStep" in err


def test_usage_error(capsys):
    code, _, err = call(capsys, "count", "--n", "2")
    assert code == 2 and "--class" in err


def test_active_golden(capsys):
    path = "2,1 1,1 1,0 1,3"
    code, out, _ = call(capsys, "active", "--path", path)
    p = parse_path(path)
    assert json.loads(out) == {
        "n": 5,
        "active_set": active_set(p).sorted(),
        "findings": [f.to_json() for f in findings(p)],
    }
    _, out, _ = call(capsys, "active", "--path", path, "--reading", "maximal")
    assert 2 not in json.loads(out)["active_set"]


def test_enumerate_streams(capsys):
    code, out, _ = call(capsys, "enumerate", "--class", "delannoy", "--n", "2")
    assert code == 0
    assert out.splitlines() == [format_path(p) for p in enumerate_paths(2, PathClass.DELANNOY)]
    _, out, _ = call(capsys, "enumerate", "--class", "general", "--n", "3", "--limit", "4")
    assert len(out.splitlines()) == 4


def test_encode_decode(capsys):
    code, out, _ = call(capsys, "encode", "--class", "subdiagonal", "--path", "1,0 1,0 0,2")
    assert json.loads(out) == {"set": [], "delannoy": "1,0 0,1 1,0 0,1"}
    s, d = encode(parse_path("2,0 0,2"), PathClass.GENERAL)
    _, out, _ = call(capsys, "encode", "--class", "general", "--path", "2,0 0,2")
    assert json.loads(out) == {"set": s.sorted(), "delannoy": format_path(d)}
    code, out, _ = call(capsys, "decode", "--class", "subdiagonal", "--set", "", "--delannoy", "1,0 1,1 0,1")
    assert code == 0 and json.loads(out) == {"path": "2,0 0,2"}
    want = decode(LineSet(4, {1, 3}), parse_path("1,1 1,1 1,1 1,1"))
    _, out, _ = call(capsys, "decode", "--class", "general", "--set", "1,3", "--delannoy", "1,1 1,1 1,1 1,1")
    assert json.loads(out)["path"] == format_path(want)


def test_certify(capsys, tmp_path):
    out_file = tmp_path / "report.json"
    code, out, err = call(
        capsys, "certify", "--class", "subdiagonal", "--n", "3", "--checks", "uniformity,bijection",
        "--out", str(out_file), "--all-readings",
    )
    assert code == 0
    assert "uniformity: pass" in err
    on_disk = json.loads(out_file.read_text())
    assert [c["name"] for c in on_disk["checks"]] == ["uniformity", "bijection"]
    assert set(on_disk["checks"][0]["stats"]["histograms"]) == {"existential", "maximal"}
    assert json.loads(out)["checks"] == on_disk["checks"]


def test_certify_failure_exit_code(capsys, monkeypatch):
    from activeset import bijection

    real = bijection.activate_sub
    monkeypatch.setattr(bijection, "activate_sub", lambda p, k: (p, real(p, k)[1]))
    code, out, _ = call(capsys, "certify", "--class", "subdiagonal", "--n", "3", "--checks", "bijection")
    assert code == 1
    assert json.loads(out)["checks"][0]["status"] == "fail"


def test_budget_exceeded_exit_code(capsys, monkeypatch):
    monkeypatch.setenv("ACTIVESET_BUDGET", "10")
    code, _, err = call(capsys, "enumerate", "--class", "general", "--n", "3")
    assert code == 2 and "BudgetExceeded" in err
    code, _, err = call(capsys, "certify", "--class", "general", "--n", "3", "--checks", "uniformity")
    assert code == 2 and "BudgetExceeded" in err


def test_render(capsys):
    code, out, _ = call(capsys, "render", "--path", "1,1 1,1", "--k", "1")
    assert code == 0 and out.count("o") == 3
    code, out, _ = call(capsys, "render", "--path", FIG1_DOMAIN, "--k", "4", "--format", "svg", "--trace")
    assert code == 0 and out.startswith("<svg") and ">P</text>" in out
    code, _, err = call(capsys, "render", "--path", "1,1 1,1", "--trace")
    assert code == 2


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "activeset", "count", "--class", "subdelannoy", "--n", "5"],
        capture_output=True, text=True, check=False,
    )
    assert res.returncode == 0
    assert json.loads(res.stdout)["count"] == str(count_paths(5, PathClass.SUBDELANNOY))
