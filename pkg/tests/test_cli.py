import json
from pathlib import Path

import pytest

from spinnet import cli
from spinnet import corpus as cp
from spinnet.qarith import qint

EXAMPLES = Path(__file__).resolve().parent.parent / "docs" / "examples"


def run(capsys, *argv):
    code = cli.main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_eval_unknot(capsys):
    code, out, _ = run(capsys, "eval", EXAMPLES / "unknot.json")
    assert code == 0 and out == "q^2 + 1 + q^-2\n"


def test_eval_framed_unknot(capsys):
    code, out, _ = run(capsys, "eval", EXAMPLES / "unknot_framed.json")
    assert out == "i * q^(3/4) * (-q - q^-1)\n"


def test_eval_raw_theta_reports_non_integral(capsys):
    code, out, _ = run(capsys, "eval", EXAMPLES / "theta222.json")
    assert code == 0
    assert out.splitlines()[1].startswith("  NotIntegral:")


def test_eval_both_engines(capsys):
    code, out, _ = run(capsys, "eval", EXAMPLES / "theta222.json", "--renormalize", "--engine", "both")
    lines = out.splitlines()
    assert code == 0 and lines[-1] == "EQUAL"
    assert lines[0] == "sliced: -q^6 - 3*q^4 - 5*q^2 - 6 - 5*q^-2 - 3*q^-4 - q^-6"
    assert lines[1] == lines[0].replace("sliced", "shadow")


def test_eval_both_engines_differ(capsys, monkeypatch):
    monkeypatch.setattr(cli, "shadow_eval", lambda p, f: cli.QRatio.of(0))
    code, out, _ = run(capsys, "eval", EXAMPLES / "theta222.json", "--engine", "both")
    assert code == 1 and out.splitlines()[-1] == "DIFFER"


@pytest.mark.parametrize("name", ["crossed_tet.json", "twisted_link.json"])
def test_shadow_engine_matches_sliced(capsys, name):
    _, a, _ = run(capsys, "eval", EXAMPLES / name, "--renormalize")
    _, b, _ = run(capsys, "eval", EXAMPLES / name, "--renormalize", "--engine", "shadow")
    assert a == b


def test_eval_shadow_file(capsys):
    _, a, _ = run(capsys, "eval", EXAMPLES / "crossed_tet.shadow.json", "--renormalize")
    _, b, _ = run(capsys, "symbol", "tetx", 2, 2, 2, 2, 2, 2)
    assert a == b


def test_eval_open_diagram(capsys):
    code, out, _ = run(capsys, "eval", EXAMPLES / "y_vertex.json")
    assert code == 0
    assert out.splitlines()[0] == "[-2] -> [-1, -1]: 1"
    code, out, _ = run(capsys, "eval", EXAMPLES / "y_vertex.json", "--states", "2/1,1")
    assert out.splitlines()[0] == "[2] -> [1, 1]: (q) / (q^2 + 1)"


def test_eval_open_renormalized_is_integral(capsys):
    _, out, _ = run(capsys, "eval", EXAMPLES / "y_vertex.json", "--renormalize", "--format", "json")
    data = json.loads(out)
    assert len(data["entries"]) == 4
    assert all(e["value"]["integral"] for e in data["entries"])


def test_eval_json(capsys):
    code, out, _ = run(capsys, "eval", EXAMPLES / "unknot.json", "--format", "json")
    data = json.loads(out)
    assert data["value"] == {
        "integral": True, "m": 0, "n": 0, "body": [[2, 1], [0, 1], [-2, 1]], "text": "q^2 + 1 + q^-2"
    }


def test_output_is_stable(capsys):
    _, a, _ = run(capsys, "eval", EXAMPLES / "twisted_link.json", "--format", "json")
    _, b, _ = run(capsys, "eval", EXAMPLES / "twisted_link.json", "--format", "json")
    assert a == b


def test_symbol(capsys):
    code, out, _ = run(capsys, "symbol", "unknot", 2)
    assert out == "q^2 + 1 + q^-2\n"
    code, out, _ = run(capsys, "symbol", "theta", 1, 1, 1)
    assert code == 0 and out == "0\nADMISSIBILITY: triple (1, 1, 1) is not admissible\n"
    _, out, _ = run(capsys, "symbol", "tet", 1, 1, 1, 1, 1, 1, "--format", "json")
    assert json.loads(out)["note"].startswith("inadmissible triples")


def test_symbol_tetx_sign(capsys):
    _, a, _ = run(capsys, "symbol", "tetx", 1, 1, 2, 1, 1, 2)
    _, b, _ = run(capsys, "symbol", "tetx", 1, 1, 2, 1, 1, 2, "--sign", "-1")
    assert a and b and a != b


def test_check(capsys):
    code, out, _ = run(capsys, "check", "half-twist", "--max", "2")
    assert code == 0 and out.startswith("half-twist (max doubled color 2): PASS")
    code, out, _ = run(capsys, "check", "fusion", "--max", "1", "--format", "json")
    assert json.loads(out)[0]["passed"] is True


def test_check_failure_exit(capsys, monkeypatch):
    def failing(m):
        rep = cli.vf.IdentityReport("broken", m)
        rep.add((0,), qint(1), qint(2))
        return rep

    monkeypatch.setitem(cli.SUITES, "fusion", (1, failing))
    code, out, _ = run(capsys, "check", "fusion")
    assert code == 1 and "FAIL" in out


def test_convert(capsys, tmp_path):
    target = tmp_path / "out.json"
    code, _, _ = run(capsys, "convert", EXAMPLES / "crossed_tet.json", "-o", target)
    assert code == 0
    _, a, _ = run(capsys, "eval", target, "--renormalize")
    _, b, _ = run(capsys, "eval", EXAMPLES / "crossed_tet.json", "--renormalize")
    assert a == b


def test_convert_matches_shipped_example(capsys):
    _, out, _ = run(capsys, "convert", EXAMPLES / "crossed_tet.json")
    shipped = json.loads((EXAMPLES / "crossed_tet.shadow.json").read_text())
    assert json.loads(out) == shipped


def test_input_errors(capsys, tmp_path):
    assert run(capsys, "eval", tmp_path / "missing.json")[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, _, err = run(capsys, "eval", bad)
    assert code == 2 and "line 1" in err
    bad.write_text(json.dumps({"hello": 1}))
    assert run(capsys, "eval", bad)[0] == 2
    bad.write_text(cp.theta(1, 1, 1).dumps())
    code, _, err = run(capsys, "eval", bad)
    assert code == 2 and "invalid diagram" in err
    assert run(capsys, "symbol", "theta", 1, 1)[0] == 2
    assert run(capsys, "symbol", "unknot", "-1")[0] == 2
    assert run(capsys, "eval", EXAMPLES / "y_vertex.json", "--states", "nonsense")[0] == 2
    assert run(capsys, "eval", EXAMPLES / "y_vertex.json", "--engine", "shadow")[0] == 2
    assert run(capsys, "convert", EXAMPLES / "y_vertex.json")[0] == 2
    assert run(capsys, "check", "nosuch")[0] == 2
    assert run(capsys, "frobnicate")[0] == 2


def test_help_exits_zero(capsys):
    assert run(capsys, "--help")[0] == 0
