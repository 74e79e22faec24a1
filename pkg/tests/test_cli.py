import json
import subprocess
import sys
import time

import pytest

from tcw import verify
from tcw.cli import main
from tcw.codes import code_from_json
from tcw.published import DUAL_GENERATORS_M3, GENERATORS_M3


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_construct(capsys):
    code, out, err = run(capsys, "construct", "--q", "3", "--m", "3", "--pair", "0,3")
    assert code == 0 and "[26, 13]" in out and GENERATORS_M3[0, 3] in out
    code, out, _ = run(capsys, "construct", "--pair", "0,3", "--dual")
    assert code == 0 and "[26, 13]" in out and DUAL_GENERATORS_M3[0, 3] in out


def test_construct_even_m_warns(capsys):
    code, out, err = run(capsys, "construct", "--m", "4", "--pair", "0,3")
    assert code == 0 and "outside paper theorems (even m)" in err


def test_construct_json_round_trip(capsys, tmp_path):
    path = tmp_path / "c.json"
    assert main(["construct", "--pair", "1,2", "--dual", "--json", "--out", str(path)]) == 0
    doc = json.loads(path.read_text())
    assert doc["schema"] == "v1" and doc["k"] == 12
    c = code_from_json(doc)
    assert str(c.generator) == doc["generator"] == DUAL_GENERATORS_M3[1, 2]
    assert c.defining_set.leaders == doc["defining_set_leaders"]


def test_delta_max(capsys):
    code, out, _ = run(capsys, "delta-max", "--pair", "0,3", "--m", "7", "--json")
    assert code == 0 and json.loads(out)["delta_max"] == 19


def test_bound(capsys):
    code, out, _ = run(capsys, "bound", "--pair", "1,2", "--m", "5")
    assert code == 0 and "delta=11" in out and "verified" in out and "d >= 11" in out
    code, out, _ = run(capsys, "bound", "--pair", "1,2", "--m", "5", "--dual", "--json")
    assert json.loads(out)["theorem_bound"] == 8
    code, out, _ = run(capsys, "bound", "--pair", "0,3", "--m", "3", "--v", "5", "--json")
    assert code == 0 and json.loads(out)["v"] == 5


def test_distance(capsys):
    code, out, _ = run(capsys, "distance", "--q", "5", "--m", "3", "--pair", "0,2", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["exact"] == 2 and doc["method"] == "bounded_weight"
    code, out, _ = run(capsys, "distance", "--pair", "0,1", "--complement")
    assert code == 0 and "[26, 12, 9]" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["construct", "--pair", "0,0"],
        ["construct", "--pair", "0,5"],
        ["construct"],
        ["bound", "--pair", "0,3", "--m", "3"],
        ["bound", "--pair", "0,3", "--m", "6"],
        ["construct", "--pair", "0,3", "--dual", "--complement"],
        ["distance", "--pair", "0,3", "--w-max", "0"],
        ["nonsense"],
    ],
)
def test_usage_errors_exit_2(argv, capsys):
    try:
        code = main(argv)
    except SystemExit as exc:
        code = exc.code
    assert code == 2


def test_computation_error_exit_1(capsys):
    code, _, err = run(capsys, "construct", "--q", "4", "--m", "2", "--pair", "0,3")
    assert code == 1 and "NonPrimeQ" in err


def test_verify_quick_under_a_minute(capsys):
    t0 = time.perf_counter()
    code, out, _ = run(capsys, "verify-paper", "--quick")
    assert code == 0 and "FAIL" not in out
    assert time.perf_counter() - t0 < 60


def test_verify_corrupted_modulus():
    led = verify.run(quick=True, modulus="1,1,0,1")  # x^3 + x + 1 is reducible over GF(3)
    failed = {e.claim for e in led.failures()}
    assert "field-gf27" in failed and not led.passed


def test_verify_other_primitive_modulus_fails_golden():
    led = verify.run(quick=True, modulus="1,0,2,1")  # x^3 + 2x^2 + 1: primitive, root is alpha^-1
    failed = {e.claim for e in led.failures()}
    assert "field-gf27" in failed and any(c.startswith("gen-") for c in failed)


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "tcw", "construct", "--pair", "2,3"], capture_output=True, text=True)
    assert res.returncode == 0 and GENERATORS_M3[2, 3] in res.stdout


def test_verify_full_run():
    led = verify.run()
    assert led.passed, [e.claim for e in led.failures()]
    ids = [e.claim for e in led.entries]
    assert len(ids) == len(set(ids))
    assert "dmax-03-m9" in ids and "q5-01-dual-m3" in ids
