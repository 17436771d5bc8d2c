"""The JSON command-line interface: payloads, exit codes, determinism."""

import io
import json
import subprocess
import sys

from cliffbundle.cli import main

CTX = {
    "dim": 2,
    "field": "Q",
    "quadratic": {"diag": ["1", "-1"], "polar_upper": [["0"]]},
}


def run_cli(argv, stdin_text="", monkeypatch=None, capsys=None):
    monkeypatch.setattr(sys, "stdin", io.StringIO(stdin_text))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_product(monkeypatch, capsys):
    payload = {
        "context": CTX,
        "u": {"terms": [{"blade": [1], "coeff": "1"}]},
        "v": {"terms": [{"blade": [1], "coeff": "1"}]},
    }
    code, out, err = run_cli(["product"], json.dumps(payload), monkeypatch, capsys)
    assert code == 0
    data = json.loads(out)
    assert data["schema"] == "cliff-bundle/1"
    # e1 * e1 = Q(e1) = 1
    assert data["product"] == {"terms": [{"blade": [], "coeff": "1"}]}


def test_deform_zero_form_is_identity(monkeypatch, capsys):
    elt = {"terms": [{"blade": [], "coeff": "-1"}, {"blade": [1, 2], "coeff": "3/2"}]}
    payload = {
        "context": CTX,
        "form": {"dim": 2, "field": "Q", "entries": [["0", "0"], ["0", "0"]]},
        "element": elt,
    }
    code, out, _ = run_cli(["deform"], json.dumps(payload), monkeypatch, capsys)
    assert code == 0
    assert json.loads(out)["element"] == elt


def test_pfaffian_four_by_four(monkeypatch, capsys):
    entries = [
        ["0", "2", "3", "5"],
        ["-2", "0", "7", "11"],
        ["-3", "-7", "0", "13"],
        ["-5", "-11", "-13", "0"],
    ]
    payload = {"matrix": {"dim": 4, "field": "Q", "entries": entries}}
    code, out, _ = run_cli(["pfaffian"], json.dumps(payload), monkeypatch, capsys)
    assert code == 0
    # a12 a34 - a13 a24 + a14 a23
    assert json.loads(out)["pfaffian"] == str(2 * 13 - 3 * 11 + 5 * 7)


def test_rho_example(monkeypatch, capsys):
    payload = {
        "form": {"dim": 1, "field": "Q", "entries": [["1"]]},
        "element": {"terms": [{"blade": [1], "coeff": "1"}]},
    }
    code, out, _ = run_cli(["rho"], json.dumps(payload), monkeypatch, capsys)
    assert code == 0
    assert json.loads(out)["matrix"] == [["0", "1"], ["1", "0"]]


def test_symbol_quantize_round_trip(monkeypatch, capsys):
    # terms listed in the canonical (grade, blade) output order
    elt = {"terms": [{"blade": [2], "coeff": "-1/3"}, {"blade": [1, 2], "coeff": "2"}]}
    payload = {"context": CTX, "element": elt}
    code, out, _ = run_cli(["symbol"], json.dumps(payload), monkeypatch, capsys)
    assert code == 0
    sym = json.loads(out)["element"]
    payload = {"context": CTX, "element": sym}
    code, out, _ = run_cli(["quantize"], json.dumps(payload), monkeypatch, capsys)
    assert code == 0
    assert json.loads(out)["element"] == elt


def test_twist_vector_rule(monkeypatch, capsys):
    # e1 twisted-times e2 = e1 e2 + F(e1, e2) 1
    payload = {
        "context": CTX,
        "form": {"dim": 2, "field": "Q", "entries": [["1", "2"], ["0", "1"]]},
        "u": {"terms": [{"blade": [1], "coeff": "1"}]},
        "v": {"terms": [{"blade": [2], "coeff": "1"}]},
    }
    code, out, _ = run_cli(["twist"], json.dumps(payload), monkeypatch, capsys)
    assert code == 0
    data = json.loads(out)
    assert data["product"]["terms"] == [
        {"blade": [], "coeff": "2"},
        {"blade": [1, 2], "coeff": "1"},
    ]


def test_exp_contract_roundtrip_parse(monkeypatch, capsys):
    payload = {
        "context": CTX,
        "two_form": {"dim": 2, "field": "Q", "coeffs": [["5"]]},
        "element": {"terms": [{"blade": [1, 2], "coeff": "1"}]},
    }
    code, out, _ = run_cli(["exp-contract"], json.dumps(payload), monkeypatch, capsys)
    assert code == 0
    got = json.loads(out)["element"]["terms"]
    # pairing of e1*^e2* against e1e2 is -1, so c12 = 5 lands as -5
    assert got == [{"blade": [], "coeff": "-5"},
                   {"blade": [1, 2], "coeff": "1"}]


def test_check_subcommand(monkeypatch, capsys):
    code, out, _ = run_cli(["check", "bl.group-law", "--seed", "42",
                            "--samples", "50"], "", monkeypatch, capsys)
    assert code == 0
    data = json.loads(out)
    assert data["passed"] == 50
    assert data["failed"] == 0
    assert data["seed"] == 42


def test_check_list(monkeypatch, capsys):
    code, out, _ = run_cli(["check", "--list"], "", monkeypatch, capsys)
    assert code == 0
    data = json.loads(out)
    assert "bl.group-law" in data["checks"]


def test_check_unknown_id_exits_two(monkeypatch, capsys):
    code, out, err = run_cli(["check", "definitely.not.real"], "", monkeypatch, capsys)
    assert code == 2
    assert not out
    assert "unknown check" in err


def test_malformed_json_exits_two(monkeypatch, capsys):
    code, out, err = run_cli(["product"], "this is not json", monkeypatch, capsys)
    assert code == 2
    assert not out
    assert "malformed" in err


def test_missing_key_exits_two(monkeypatch, capsys):
    code, out, err = run_cli(["product"], json.dumps({"context": CTX}),
                             monkeypatch, capsys)
    assert code == 2


def test_bad_shape_exits_two(monkeypatch, capsys):
    payload = {
        "context": {"dim": 2, "field": "Q",
                    "quadratic": {"diag": ["1"], "polar_upper": [["0"]]}},
        "element": {"terms": []},
    }
    code, out, err = run_cli(["symbol"], json.dumps(payload), monkeypatch, capsys)
    assert code == 2


def test_domain_error_exits_one(monkeypatch, capsys):
    payload = {
        "context": {"dim": 2, "field": "Fp:2",
                    "quadratic": {"diag": ["1", "1"], "polar_upper": [["0"]]}},
        "element": {"terms": []},
    }
    code, out, err = run_cli(["symbol"], json.dumps(payload), monkeypatch, capsys)
    assert code == 1
    data = json.loads(out)
    assert data["error"]["type"] == "CharacteristicError"
    assert data["schema"] == "cliff-bundle/1"


def test_determinism(monkeypatch, capsys):
    payload = json.dumps({
        "context": CTX,
        "u": {"terms": [{"blade": [1, 2], "coeff": "1/2"}]},
        "v": {"terms": [{"blade": [2], "coeff": "-3"}]},
    })
    _, out1, _ = run_cli(["product"], payload, monkeypatch, capsys)
    _, out2, _ = run_cli(["product"], payload, monkeypatch, capsys)
    assert out1 == out2


def test_responses_reparse(monkeypatch, capsys):
    # round-trip: response elements parse back under the same schemas
    payload = {
        "context": CTX,
        "u": {"terms": [{"blade": [1], "coeff": "2/7"}]},
        "v": {"terms": [{"blade": [1, 2], "coeff": "-1"}]},
    }
    code, out, _ = run_cli(["product"], json.dumps(payload), monkeypatch, capsys)
    assert code == 0
    data = json.loads(out)
    from cliffbundle import CliffElt, CliffordContext
    cctx = CliffordContext.from_json(data["context"])
    elt = CliffElt.from_json(cctx, data["product"])
    assert elt.to_json() == data["product"]


def test_input_file(tmp_path, monkeypatch, capsys):
    req = tmp_path / "req.json"
    req.write_text(json.dumps({
        "matrix": {"dim": 2, "field": "Q", "entries": [["0", "4"], ["-4", "0"]]}}))
    code = main(["pfaffian", "--input", str(req)])
    out, _ = capsys.readouterr()
    assert code == 0
    assert json.loads(out)["pfaffian"] == "4"


def test_missing_input_file(capsys):
    code = main(["pfaffian", "--input", "/no/such/file.json"])
    out, err = capsys.readouterr()
    assert code == 2


def test_console_script_installed():
    proc = subprocess.run(["cliffbundle", "check", "--list"],
                          capture_output=True, text=True, timeout=120)
    assert proc.returncode == 0
    assert "scalars.field-axioms" in proc.stdout
