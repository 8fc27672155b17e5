"""End-to-end tests of the command-line surface.

Most cases drive main() in process and inspect captured output; a few
run the installed module through a real interpreter to pin process exit
codes.  Structured output must carry the same data as the plain text.
"""

from __future__ import annotations

import json
import subprocess
import sys

import pytest

from padicroots.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


# ---------------------------------------------------------------------------
# check


def test_check_solvable_square(capsys):
    code, out = run_cli(capsys, "check", "--p", "7", "--q", "2", "--val", "2")
    assert code == 0
    assert "verdict: solvable" in out
    assert "case: square" in out


def test_check_unsolvable_is_still_success(capsys):
    code, out = run_cli(capsys, "check", "--p", "5", "--q", "5", "--val", "12")
    assert code == 0
    assert "verdict: unsolvable" in out
    assert "digit_condition_p2" in out


def test_check_chain_case(capsys):
    code, out = run_cli(capsys, "check", "--p", "3", "--q", "6", "--val", "64")
    assert code == 0
    assert "verdict: solvable" in out and "general_chain" in out


# ---------------------------------------------------------------------------
# root


def test_root_cube_root_of_two(capsys):
    code, out = run_cli(
        capsys, "root", "--p", "5", "--q", "3", "--val", "2", "--precision", "6"
    )
    assert code == 0
    assert "0;3,0,2,2,3,1" in out
    assert "expected_count: 1" in out
    assert "self-check" in out and "ok" in out


def test_root_two_square_roots(capsys):
    code, out = run_cli(
        capsys, "root", "--p", "7", "--q", "2", "--val", "2", "--precision", "5"
    )
    assert code == 0
    roots = [ln.strip() for ln in out.splitlines() if ln.strip().startswith("0;")]
    assert len(roots) == 2
    assert roots == sorted(roots)
    assert {r.split(";")[1].split(",")[0] for r in roots} == {"3", "4"}


def test_root_trivial_one(capsys):
    code, out = run_cli(capsys, "root", "--p", "3", "--q", "3", "--val", "1")
    assert code == 0
    assert "0;1,0" in out


def test_root_unsolvable_empty_list(capsys):
    code, out = run_cli(capsys, "root", "--p", "7", "--q", "3", "--val", "2")
    assert code == 0
    assert "roots (0):" in out and "unsolvable" in out


def test_root_structured_mirrors_plain(capsys):
    code, plain = run_cli(
        capsys, "root", "--p", "5", "--q", "3", "--val", "2", "--precision", "6"
    )
    code2, structured = run_cli(
        capsys,
        "root", "--p", "5", "--q", "3", "--val", "2", "--precision", "6",
        "--format", "structured",
    )
    assert code == code2 == 0
    doc = json.loads(structured)
    for root in doc["roots"]:
        assert root in plain
    assert doc["verdict"]["solvable"] is True
    assert doc["expected_count"] == 1
    assert str(doc["p"]) == "5"[:1] or doc["p"] == 5


# ---------------------------------------------------------------------------
# classify


def test_classify_fifteen_base3(capsys):
    code, out = run_cli(capsys, "classify", "--p", "3", "--q", "3", "--val", "15")
    assert code == 0
    assert "epsilon: 5" in out
    assert "delta: 3^1" in out
    assert "check:" in out and "ok" in out


def test_classify_six_base7_eta_exponent_zero(capsys):
    code, out = run_cli(
        capsys, "classify", "--p", "7", "--q", "3", "--val", "6",
        "--format", "structured",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["form"] == "coprime_with_eta"
    assert doc["eta_exponent"] == 0
    assert doc["check_ok"] is True


def test_classify_eight_base3_trivial(capsys):
    code, out = run_cli(
        capsys, "classify", "--p", "3", "--q", "3", "--val", "8",
        "--format", "structured",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["epsilon_int"] == 1
    assert doc["delta_exponent"] == 0
    assert doc["y"].startswith("0;2,")


def test_classify_structured_plain_same_data(capsys):
    _, plain = run_cli(capsys, "classify", "--p", "7", "--q", "3", "--val", "2")
    _, structured = run_cli(
        capsys, "classify", "--p", "7", "--q", "3", "--val", "2",
        "--format", "structured",
    )
    doc = json.loads(structured)
    assert f"form: {doc['form']}" in plain
    assert f"epsilon: {doc['epsilon']}" in plain
    assert f"y: {doc['y']}" in plain


# ---------------------------------------------------------------------------
# table


TABLE_13 = (
    "p=3: 1\n"
    "p=5: 2\n"
    "p=7: 1, 3, 5\n"
    "p=11: 1, 4, 5, 6, 9\n"
    "p=13: 2, 3, 4, 8, 9, 10\n"
)


def test_table_small_golden(capsys):
    code, out = run_cli(capsys, "table", "--p-max", "13")
    assert code == 0
    assert out == TABLE_13


def test_table_byte_stable(capsys):
    _, first = run_cli(capsys, "table", "--p-max", "41")
    _, second = run_cli(capsys, "table", "--p-max", "41")
    assert first == second


def test_table_structured_fields(capsys):
    code, out = run_cli(capsys, "table", "--p-max", "7", "--format", "structured")
    doc = json.loads(out)
    rows = {row["p"]: row for row in doc["rows"]}
    assert rows[3]["j_no_solution"] == [1]
    assert rows[3]["epsilon_derived"] == [1, 4, 5]
    assert rows[5]["epsilon_derived"] == [1, 11, 12, 13, 14]


# ---------------------------------------------------------------------------
# congr and expand


def test_congr_pow_residue(capsys):
    code, out = run_cli(
        capsys, "congr", "pow-residue", "--m", "7", "--n", "3", "--a", "6"
    )
    assert code == 0
    assert "3, 5, 6" in out


def test_congr_linear(capsys):
    code, out = run_cli(capsys, "congr", "linear", "--a", "6", "--b", "9", "--n", "15")
    assert code == 0
    assert "4, 9, 14" in out


def test_congr_unsolvable(capsys):
    code, out = run_cli(capsys, "congr", "linear", "--a", "2", "--b", "1", "--n", "4")
    assert code == 0
    assert "solvable: no" in out


def test_expand_n2_terms(capsys):
    code, out = run_cli(
        capsys, "expand", "--p", "3", "--q", "3", "--digits", "1,1", "--k", "2"
    )
    assert code == 0
    assert "N_2 = 3" in out
    assert "(1,2)" in out  # the single exponent tuple


# ---------------------------------------------------------------------------
# error handling


def test_error_nonprime_p(capsys):
    code = main(["check", "--p", "4", "--q", "2", "--val", "3"])
    captured = capsys.readouterr()
    assert code == 2
    assert "error:" in captured.err and "prime" in captured.err


def test_error_zero_value(capsys):
    code, out = run_cli(capsys, "root", "--p", "5", "--q", "2", "--val", "0")
    assert code == 2


def test_error_malformed_value(capsys):
    code, out = run_cli(capsys, "root", "--p", "5", "--q", "2", "--val", "0;0,1")
    assert code == 2


def test_error_digit_out_of_range(capsys):
    code, out = run_cli(capsys, "check", "--p", "5", "--q", "2", "--val", "0;2,9")
    assert code == 2


def test_error_precision_cap(capsys):
    code, out = run_cli(
        capsys, "root", "--p", "5", "--q", "2", "--val", "2",
        "--precision", "20000",
    )
    assert code == 2


def test_error_unknown_subcommand_exits_2():
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


# ---------------------------------------------------------------------------
# process-level checks through a real interpreter


def run_process(*argv):
    return subprocess.run(
        [sys.executable, "-m", "padicroots", *argv],
        capture_output=True,
        text=True,
        timeout=120,
    )


def test_process_root_exit_codes():
    ok = run_process("root", "--p", "5", "--q", "3", "--val", "2")
    assert ok.returncode == 0 and "0;3," in ok.stdout
    bad = run_process("check", "--p", "6", "--q", "2", "--val", "5")
    assert bad.returncode == 2


def test_process_console_script_equivalence():
    a = run_process("table", "--p-max", "13")
    assert a.returncode == 0
    assert a.stdout == TABLE_13
