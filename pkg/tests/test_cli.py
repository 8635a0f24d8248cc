import io
import json
import subprocess
import sys

import pytest

from radialmoore.cli import main
from radialmoore.gd import build_gd
from radialmoore.graph import petersen_graph
from radialmoore.graph6 import decode, encode_str


def run(argv, stdin=None, monkeypatch=None):
    out, err = io.StringIO(), io.StringIO()
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv, out, err)
    return code, out.getvalue(), err.getvalue()


def test_bounds_text():
    code, out, _ = run(["bounds", "--d", "7", "--k", "3"])
    assert code == 0 and "moore_bound: 302" in out
    assert "total_status_upper_paper" in out and "total_status_upper_consistent" in out


def test_bounds_json_strings():
    code, out, _ = run(["bounds", "--d", "3", "--k", "2", "--format", "json"])
    doc = json.loads(out)
    assert code == 0 and doc["moore_status"] == "15"


def test_bounds_bad_degree():
    code, _, err = run(["bounds", "--d", "2", "--k", "2"])
    assert code == 2 and "degree" in err


def test_table_default():
    code, out, _ = run(["table"])
    assert code == 0
    assert "41 (53)" in out and "390364 (391910)" in out


def test_table_csv_k2():
    code, out, _ = run(["table", "--d-range", "4-6", "--k", "2", "--format", "csv"])
    lines = out.strip().splitlines()
    assert code == 0 and lines[0] == "d,k,bound,moore"
    assert lines[1:] == ["4,2,11,17", "5,2,20,26", "6,2,31,37"]


def test_table_json_big_ints_as_strings():
    code, out, _ = run(["table", "--d", "7", "--k", "7", "--format", "json"])
    assert json.loads(out) == [{"d": 7, "k": 7, "bound": "390364", "moore": "391910"}]


def test_table_rejects_d3():
    code, _, err = run(["table", "--d-range", "3-5"])
    assert code == 2 and "out of domain" in err


def test_construct_gd():
    code, out, err = run(["construct", "gd", "--d", "4", "--verify"])
    assert code == 0
    assert decode(out.strip()) == build_gd(4)
    assert "(34,16),(28,1)" in err


def test_construct_hs():
    code, out, err = run(["construct", "hoffman-singleton", "--verify"])
    assert code == 0 and decode(out.strip()).n == 50
    assert "50 vertices" in err and "[91]" in err


def test_construct_bad_d():
    assert run(["construct", "gd", "--d", "2"])[0] == 2


def test_verify_stream(monkeypatch):
    stdin = "\n".join([encode_str(build_gd(3)), "bad!!", encode_str(petersen_graph())]) + "\n"
    code, out, err = run(["verify"], stdin, monkeypatch)
    assert "radial-moore d=3 k=2, central=1, status=(17,9),(15,1)" in out
    assert "not radial-moore (diameter 2 ≠ 3)" in out
    assert "line 2" in err
    assert code != 0


def test_verify_all_good(monkeypatch):
    code, out, _ = run(["verify", "--format", "json"], encode_str(build_gd(5)) + "\n", monkeypatch)
    doc = json.loads(out)
    assert code == 0 and doc["summary"]["radial_moore"] == 1


def test_verify_failure_exit(monkeypatch):
    code, _, _ = run(["verify", "--d", "3", "--k", "2"], encode_str(petersen_graph()) + "\n", monkeypatch)
    assert code == 1


def test_census():
    code, out, _ = run(["census", "--d", "3", "--k", "2", "--format", "json"])
    assert code == 0 and json.loads(out)["max_central"] == 4


def test_census_needs_stream():
    code, _, err = run(["census", "--d", "3", "--k", "3"])
    assert code == 2 and "--input" in err


def test_census_from_file(tmp_path):
    f = tmp_path / "g.g6"
    f.write_text(encode_str(build_gd(3)) + "\n" + encode_str(petersen_graph()) + "\n")
    code, out, _ = run(["census", "--d", "3", "--k", "2", "--input", str(f), "--format", "csv"])
    assert code == 0 and len(out.strip().splitlines()) == 2


def test_rank(tmp_path):
    f = tmp_path / "g.g6"
    f.write_text(encode_str(build_gd(3)) + "\n" + encode_str(petersen_graph()) + "\n")
    code, out, _ = run(["rank", "--input", str(f), "--format", "json"])
    doc = json.loads(out)
    assert code == 0 and [r["total_status"] for r in doc] == [150, 168]


def test_aut():
    assert run(["aut", "--family", "gd", "--d", "4"])[1].strip() == "24"
    code, out, _ = run(["aut", "--family", "gd", "--d", "5", "--budget", "2", "--format", "json"])
    assert code == 1 and "error" in json.loads(out)[0]


def test_roots():
    code, out, _ = run(["roots", "--d", "7"])
    assert code == 0
    assert out.splitlines()[0] == "real: 3; complex: −1±i; Δ=289/27"
    assert "cauchy" in out
    code, out, _ = run(["roots", "--d", "17", "--format", "json"])
    doc = json.loads(out)
    assert code == 0 and doc["laguerre_contains_roots"] and doc["complex_pair"] is None
    assert run(["roots", "--d", "3"])[0] == 2


def test_swap_search_small(tmp_path):
    f = tmp_path / "p.g6"
    f.write_text(encode_str(petersen_graph()) + "\n")
    code, out, _ = run(["swap-search", "--input", str(f), "--d", "3", "--k", "2", "--workers", "1", "--format", "json"])
    doc = json.loads(out)
    assert code == 0 and doc["candidates"] > 0


def test_usage_error_exit_code():
    assert run(["table", "--d-range", "x"])[0] == 2
    assert run([])[0] == 2


@pytest.mark.parametrize("argv", [["table", "--format", "json"], ["census", "--d", "3", "--k", "2"], ["roots", "--d", "40"]])
def test_deterministic(argv):
    assert run(argv)[1] == run(argv)[1]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "radialmoore", "bounds", "--d", "3", "--k", "2"], capture_output=True, text=True)
    assert proc.returncode == 0 and "moore_status: 15" in proc.stdout
