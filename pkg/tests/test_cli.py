import io
import json
import subprocess
import sys

import pytest

from catlab.cli import ParseError, parse_poly, parse_ring_spec, run
from catlab.ring import CapExceeded


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out)
    return code, out.getvalue()


@pytest.mark.parametrize("spec, size, units", [("Z/4", 4, 2), ("Z/2[x]/(x^2+x+1)", 4, 3),
                                               ("Z/4 x Z/2", 8, 2), ("Z/4 x Z/3", 12, 4),
                                               ("Z/4[x]/(x^2)", 16, 8), (" Z/ 6 ", 6, 2)])
def test_parse_ring_spec(spec, size, units):
    R = parse_ring_spec(spec)
    assert R.n == size and len(R.units) == units


@pytest.mark.parametrize("text, coeffs", [("x^2+x+1", [1, 1, 1]), ("x^2", [0, 0, 1]),
                                          ("x^3-2x+5", [5, -2, 0, 1]), ("2*x+x", [0, 3])])
def test_parse_poly(text, coeffs):
    assert parse_poly(text) == coeffs


@pytest.mark.parametrize("spec, pos", [("Z4", 0), ("Z/4 + Z/2", 3), ("Z/2[x]/(x^2+?)", 11), ("", 0)])
def test_parse_errors_carry_position(spec, pos):
    with pytest.raises(ParseError) as e:
        parse_ring_spec(spec)
    assert e.value.position == pos


def test_size_cap_estimate():
    with pytest.raises(CapExceeded, match="65536"):
        parse_ring_spec("Z/256 x Z/256")


def test_pairs_z4():
    code, out = call("ring", "Z/4", "pairs")
    assert code == 0
    assert out.splitlines() == ["p=1 q=2", "p=2 q=1", "p=2 q=3", "p=3 q=2"]


def test_verify_z4_all_passes_with_informational_gamma():
    code, out = call("ring", "Z/4", "--p", "2", "--q", "1", "verify", "--suite", "all", "--json")
    assert code == 0
    rep = json.loads(out)
    assert set(rep) == {"ring", "p", "q", "groups", "checks", "timing_ms"}
    assert rep["timing_ms"] is None
    gamma = [c for c in rep["checks"] if c["name"].startswith("gamma")]
    assert any("not full" in (c.get("detail") or "") for c in gamma)
    for c in rep["checks"]:
        if c["status"] == "skipped":
            assert c["reason"]
    assert any("p is a zero divisor" in (c.get("reason") or "") for c in rep["checks"])


def test_report_zero_ring_all_trivial():
    code, out = call("ring", "Z/1", "report", "--json")
    assert code == 0
    rep = json.loads(out)
    assert all(v == [] for v in rep["groups"].values())


def test_report_group_table_z4():
    code, out = call("ring", "Z/4", "--p", "2", "--q", "1", "report", "--json")
    groups = json.loads(out)["groups"]
    assert groups["Z_pq"] == [2] and groups["pi0(Qu_f)"] == [2] and groups["pi1(Qu_f)"] == [2]


def test_polynomial_labels_as_p_q():
    code, out = call("ring", "Z/4[x]/(x^2)", "--p", "2", "--q", "1", "report", "--json")
    assert code == 0 and json.loads(out)["p"] == "2"


def test_invalid_pair_is_usage_error():
    assert call("ring", "Z/4", "--p", "1", "--q", "1", "verify")[0] == 2


def test_p_without_q():
    assert call("ring", "Z/4", "--p", "1", "verify")[0] == 2


def test_bad_spec_exit_code():
    assert call("ring", "Z/x", "pairs")[0] == 2


def test_classification_cap_exit_code():
    assert call("ring", "Z/16", "classify-galois")[0] == 3


def test_suite_cap_exit_code():
    assert call("ring", "Z/4 x Z/4 x Z/5", "verify")[0] == 3


def test_classify_json():
    code, out = call("ring", "Z/4", "--p", "2", "--q", "1", "classify-galois", "--json")
    rep = json.loads(out)
    assert code == 0 and len(rep["classes"]) == 2 and rep["matches_pi0"] and rep["normal_form"]


def test_timing_is_opt_in():
    _, out = call("ring", "Z/3", "--p", "1", "--q", "1", "verify", "--suite", "free", "--json", "--timing")
    assert isinstance(json.loads(out)["timing_ms"], (int, float))


def test_verify_deterministic():
    argv = ("ring", "Z/6", "verify", "--suite", "all", "--json")
    assert call(*argv) == call(*argv)


def test_jobs_do_not_change_output():
    argv = ["ring", "Z/5", "verify", "--suite", "free", "--json"]
    assert call(*argv) == call(*argv, "--jobs", "2")


def test_entry_point():
    res = subprocess.run([sys.executable, "-m", "catlab.cli", "ring", "Z/2", "pairs"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0 and res.stdout.count("p=") == 3
