import io
import json
import os
import subprocess
import sys

import pytest

from schwarz_spectra.cli import run

# (argv, expected exit code)
FIXTURES = [
    (["analyze", '{"coeffs":["1","6","11","6"]}'], 0),
    (["analyze", '{"coeffs":["1","-2","-5","6"]}'], 0),
    (["analyze", '{"coeffs":["1","0","1"]}'], 2),
    (["analyze", '{"coeffs":["1","-1","0","1"]}'], 0),
    (["analyze", '{"roots":["-1","-2","-3"]}'], 0),
    (["analyze", '{"coeffs":["1","x"]}'], 3),
    (["analyze", "not json"], 3),
    (["analyze", '{"coeffs":[1.5,2]}'], 3),
    (["analyze", "--backend", "float", '{"coeffs":[1.5,2]}'], 0),
    (["analyze", '{"coeffs":["0"]}'], 3),
    (["to-schwarz", "--mode", "stable", '{"roots":["-1","-2","-3"]}'], 0),
    (["to-schwarz", "--mode", "holtz", '{"roots":["3","-2","1"]}'], 0),
    (["to-schwarz", '{"roots":[{"re":"0","im":"1"},{"re":"0","im":"-1"}]}'], 2),
    (["to-schwarz", "--mode", "stable", '{"roots":["1","-2"]}'], 4),
    (["to-schwarz", "--mode", "holtz", '{"roots":["1","2","-3"]}'], 4),
    (["to-schwarz", "--mode", "bebiano", '{"roots":["-3","1","2"]}'], 4),
    (["to-schwarz", "--mode", "bebiano", '{"roots":["-1","2","3"]}'], 0),
    (["to-schwarz", "--mode", "stable", '{"coeffs":["1","6","11","6"]}'], 4),
    (["to-schwarz", "--mode", "sn", '{"roots":["1","2","-4"]}'], 4),
    (["to-schwarz", '{"coeffs":["1","-2","-5","6"]}'], 0),
    (["charpoly", '{"b":["-1","1","-1"]}'], 0),
    (["charpoly", '{"b":["5"]}'], 0),
    (["charpoly", '{"b":["6","10","1"]}'], 0),
    (["charpoly", '{"b":["1","0"]}'], 3),
    (["charpoly", '{"coeffs":["1","2"]}'], 3),
    (["charpoly", '{"a":"2","c":["2","3"],"k":1}'], 0),
    (["verify", '{"roots":["3","-2","1"]}'], 0),
    (["verify", '{"b":["2","2"]}'], 0),
    (["verify", '{"roots":[{"re":"1","im":"1"}]}'], 3),
    (["verify", '{"coeffs":["1","6","11","6"]}'], 0),
    (["verify", '{"coeffs":["1","0","1"]}'], 2),
    (["analyze", "--eps-zero", "-1", '{"coeffs":["1","2"]}'], 3),
]


@pytest.mark.parametrize("argv,code", FIXTURES, ids=[" ".join(a[:-1]) + f" -> {c}" for a, c in FIXTURES])
def test_exit_codes(argv, code):
    got, out, err = run(argv)
    assert got == code, (out, err)
    assert (err != "") == (code != 0)


def _json(argv):
    code, out, _ = run(argv)
    assert code == 0
    return json.loads(out)


def test_payloads():
    a = _json(["analyze", '{"coeffs":["1","6","11","6"]}'])
    assert a["wall"]["b"] == ["6", "10", "1"] and a["rhp_count"] == 0
    assert a["verdict"]["kind"] == "HurwitzStable"
    b = _json(["analyze", '{"coeffs":["1","-2","-5","6"]}'])
    assert b["deltas"]["deltas"] == ["-2", "4", "24"] and b["rhp_count"] == 2
    assert b["verdict"]["kind"] == "SelfInterlacing" and b["verdict"]["order"] == 2
    c = _json(["charpoly", '{"b":["-1","1","-1"]}'])
    assert c["charpoly"]["coeffs"] == ["1", "-1", "0", "1"]
    assert (c["verdict"]["kind"], c["verdict"]["type"], c["verdict"]["order"]) == ("GeneralizedHurwitz", "II", 1)
    assert _json(["charpoly", '{"b":["5"]}'])["charpoly"]["coeffs"] == ["1", "5"]
    assert _json(["to-schwarz", "--mode", "holtz", '{"roots":["3","-2","1"]}'])["matrix"]["b"] == ["-2", "-2", "-3"]
    v = _json(["verify", '{"roots":["3","-2","1"]}'])
    assert v["result"] == "PASS" and all(x["passed"] for x in v["checked"])


def test_degenerate_message_names_delta():
    code, _, err = run(["analyze", '{"coeffs":["1","0","1"]}'])
    assert code == 2 and "Delta_1" in err


def test_repeat_runs_are_byte_identical():
    for argv, _ in FIXTURES:
        assert run(argv) == run(argv)


def test_stdin_and_plain_format():
    code, out, _ = run(["charpoly", "--format", "plain", "-"], stdin=io.StringIO('{"b":["6","10","1"]}'))
    assert code == 0 and "charpoly" in out and not out.lstrip().startswith("{")


def test_backend_from_environment(monkeypatch):
    monkeypatch.setenv("SCHWARZ_BACKEND", "float")
    code, out, _ = run(["analyze", '{"coeffs":[1,0.5]}'])
    assert code == 0


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "schwarz_spectra", "charpoly", '{"b":["5"]}'],
                          capture_output=True, text=True, env={**os.environ, "SCHWARZ_BACKEND": "exact"})
    assert proc.returncode == 0 and json.loads(proc.stdout)["charpoly"]["coeffs"] == ["1", "5"]
