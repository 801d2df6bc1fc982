import json
import os
import subprocess
from fractions import Fraction

import pytest

import blowcone as bc


def test_seshadri_four_lines():
    X = bc.BlowupSpace.lines(3, 4)
    value, witnesses, ample = bc.seshadri_lines(X, bc.DivisorClass(5, [1, 1, 1, 1]))
    assert value == 1
    assert isinstance(value, Fraction)
    assert ample
    assert [w.b for w in witnesses] == [[1, 1, 1, 1]]


def test_rationals_round_trip():
    X = bc.BlowupSpace.lines(4, 2)
    D = bc.DivisorClass(Fraction(7, 2), ["1/3", 0])
    assert D.d == Fraction(7, 2)
    assert bc.scale(D, 2).m == [Fraction(2, 3), 0]
    nef, tight = bc.is_nef(X, D)
    assert nef
    assert "m2 >= 0" in tight


def test_decompose_and_not_nef():
    X = bc.BlowupSpace.lines(3, 5)
    terms = bc.decompose(X, bc.DivisorClass(5, [2, 1, 1, 1, 1]))
    assert [w for _, w in terms] == [1, 1]
    with pytest.raises(bc.NotNefError):
        bc.decompose(X, bc.DivisorClass(3, [1, 1, 1, 1, 0]))
    with pytest.raises(bc.OutOfRangeError):
        bc.is_nef(bc.BlowupSpace.lines(3, 7), bc.DivisorClass(9, [1] * 7))


def test_cone_of_seven_lines_in_p4():
    facets, generators = bc.cone_description(bc.BlowupSpace.lines(4, 7))
    assert len(facets) == 43
    assert bc.DivisorClass(3, [1] * 7) in generators


def test_lva():
    X = bc.BlowupSpace.points(3, 3)
    L = bc.DivisorClass(5, [2, 2, 1])
    assert bc.is_l_very_ample(1, X, L) == (True, True)
    assert bc.seshadri_lower_bound(1, X, L) == 1
    assert bc.compute_bl(1, X, L) == (-2, "few-points")
    applicable, verdict = bc.is_l_very_ample(1, bc.BlowupSpace.points(2, 9), bc.DivisorClass(3, [1] * 9))
    assert not applicable and verdict is None


def test_run_document():
    text, code = bc.run("nef generators", json.dumps({"n": 3, "centers": "lines", "count": 2}))
    assert code == 0
    assert json.loads(text)["status"] == "ok"


CLI = os.environ.get("BLOWCONE_CLI")


@pytest.mark.skipif(not CLI, reason="BLOWCONE_CLI not set")
@pytest.mark.parametrize(
    "args, code",
    [
        (["seshadri", "eval", "--n", "3", "--lines", "4", "--d", "5", "--m", "1,1,1,1"], 0),
        (["nef", "check", "--n", "3", "--lines", "1", "--d", "2", "--m", "3"], 1),
        (["nef", "check", "--n", "3", "--lines", "7", "--d", "9", "--m", "1,1,1,1,1,1,1"], 2),
        (["nef", "check", "--n", "3", "--lines", "1", "--d", "2", "--m", "1/0"], 3),
        (["nef", "check", "--bogus"], 3),
    ],
)
def test_cli_exit_codes(args, code):
    proc = subprocess.run([CLI, *args], capture_output=True, text=True)
    assert proc.returncode == code
    doc = json.loads(proc.stdout)
    assert doc["exit_code"] == code


@pytest.mark.skipif(not CLI, reason="BLOWCONE_CLI not set")
def test_cli_spec_from_stdin():
    spec = {"n": 3, "centers": "lines", "count": 4, "d": "10/2", "m": ["1", "1", "1", "1"]}
    proc = subprocess.run([CLI, "seshadri", "eval", "--spec", "-"], input=json.dumps(spec),
                          capture_output=True, text=True)
    assert proc.returncode == 0
    doc = json.loads(proc.stdout)
    assert doc["value"] == "1"
    assert doc["input"]["d"] == "5"
