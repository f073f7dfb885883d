import json
import subprocess
import sys

import pytest

from trinomial_pp.cli import main
from trinomial_pp.fields import GF2n, Tower, format_tower_elem


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv)
    return code, json.loads(out)


def test_classify_a1_b1(capsys):
    code, rep = run_json(capsys, "classify", "--n", "2", "--a", "1", "--b", "1")
    assert code == 0 and rep["verdict"] == "PP_branch_i"


def test_classify_omega_not_pp(capsys):
    code, rep = run_json(capsys, "classify", "--n", "2", "--a", "2", "--b", "1", "--oracle")
    assert code == 0
    assert rep["verdict"] == "NotPP"
    assert rep["oracles"] == {"thm11": False, "tzlh": False, "brute": False}
    assert rep["diagnostics"]["traces"] == {"Tr(1+1/a)": 1}


def test_classify_generator_pair_matches_bruteforce(capsys):
    T = Tower(GF2n(3))
    g = T._find_generator()
    a, b = format_tower_elem(T, g), format_tower_elem(T, T.pow(g, 3))
    code, rep = run_json(capsys, "classify", "--n", "3", "--a", a, "--b", b, "--oracle")
    assert code == 0 and rep["agree"]
    assert (rep["verdict"] != "NotPP") == rep["oracles"]["brute"]
    assert rep["diagnostics"]["b_in_base_field"] is False


@pytest.mark.parametrize("argv", [
    ["classify", "--n", "2", "--a", "0", "--b", "1"],
    ["classify", "--n", "2", "--a", "xyz", "--b", "1"],
    ["classify", "--n", "4", "--modulus", "15", "--a", "1", "--b", "1"],
    ["sweep", "--n", "9", "--b-range", "full"],
    ["sweep", "--n", "2", "--oracles", "brute"],
    ["verify-identities", "--mutate", "nothing-by-this-name"],
    ["williams", "--n", "9"],
    ["curve", "--n", "3", "--a1", "1", "--b", "1", "--curve-k", "0"],
])
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith("error:")


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["sweep"])
    assert exc.value.code == 2


def test_sweep_q4_full(capsys):
    code, rep = run_json(capsys, "sweep", "--n", "2", "--b-range", "full",
                         "--oracles", "brute,tzlh,thm11")
    assert code == 0
    assert rep["summary"]["disagreements"] == 0
    assert rep["summary"]["pp"] == 5


def test_sweep_csv_to_file(tmp_path, capsys):
    out = tmp_path / "q4.csv"
    code, stdout, _ = run(capsys, "sweep", "--n", "2", "--format", "csv", "--output", str(out))
    assert code == 0 and stdout == ""
    lines = out.read_text().splitlines()
    assert lines[0] == "n,a_hex_u,a_hex_v,b_hex_u,b_hex_v,verdict,branch,oracle_disagreement"
    assert lines[1:] == ["2,1,0,1,0,PP,i,0"]


def test_sweep_timing_flag(capsys):
    _, rep = run_json(capsys, "sweep", "--n", "2", "--timing")
    assert "seconds" in rep["runtime"]


def test_verify_identities_appendix(capsys):
    code, recs = run_json(capsys, "verify-identities", "--section", "appendix")
    assert code == 0
    assert recs and all(r["verdict"] == "pass" for r in recs)


def test_verify_identities_basefield_alias(capsys):
    code, recs = run_json(capsys, "verify-identities", "--section", "4")
    assert code == 0
    names = {r["name"] for r in recs}
    assert "F4-over-E2-squared" in names
    assert all(r["section"] == "basefield" for r in recs)


def test_verify_identities_as_printed(capsys):
    code, recs = run_json(capsys, "verify-identities", "--paper-as-printed")
    assert code == 0
    by_name = {(r["section"], r["name"]): r["verdict"] for r in recs}
    assert by_name[("printed", "coefficient-Y3-as-printed")] == "fail"
    assert by_name[("printed", "eliminate-middle-as-printed")] == "fail"
    assert by_name[("general", "coefficient-Y3")] == "pass"
    assert by_name[("general", "eliminate-middle")] == "pass"


def test_verify_identities_mutation_exits_1(capsys):
    code, recs = run_json(capsys, "verify-identities", "--section", "general",
                          "--mutate", "top-eliminant-h1")
    assert code == 1
    assert [r["name"] for r in recs if r["verdict"] == "fail"] == ["top-eliminant-h1"]


@pytest.mark.parametrize("n,pairs", [(1, 2), (2, 12), (3, 56)])
def test_williams(capsys, n, pairs):
    code, rep = run_json(capsys, "williams", "--n", str(n))
    assert code == 0
    assert rep["violations"] == 0 and rep["pairs"] == pairs
    assert sum(rep["root_count_distribution"].values()) == pairs


def test_construct_d_q4(capsys):
    code, rep = run_json(capsys, "construct-d", "--n", "2", "--a", "1", "--b", "1")
    assert code == 0
    assert (rep["D2"], rep["D1"], rep["D0"]) == ("0", "0", "0")
    assert all(rep["checks"].values())


def test_construct_d_obstruction(capsys):
    # a = t+1 in F_8: 1/a = t^2+t, so Tr(1 + 1/a) = Tr(1) = 1
    code, rep = run_json(capsys, "construct-d", "--n", "3", "--a", "3", "--b", "1")
    assert code == 1
    assert "Tr(F4/E2^2) = 1" in rep["obstruction"]


def test_curve_q8(capsys):
    code, rep = run_json(capsys, "curve", "--n", "3", "--a1", "1", "--b", "1")
    assert code == 0
    assert rep["point_count"] % 2 == 0
    assert rep["checks"]["smooth"] and rep["checks"]["gcd_PQ_is_one"]


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "trinomial_pp", "williams", "--n", "2"],
                         capture_output=True, text=True)
    assert res.returncode == 0
    assert json.loads(res.stdout)["violations"] == 0
