"""Command line interface output and exit codes."""

import csv
import io
import json

import pytest

from sliceobs.cli import build_parser, main


class TestObstructCommand:
    def test_plain_report(self, capsys):
        assert main(["obstruct", "--n", "11"]) == 0
        out = capsys.readouterr().out
        assert "n=11 chi+" in out
        assert "n=11 chi-" in out
        assert "factor degrees: [2, 2, 3, 3, 8]" in out
        assert "factor degrees: [4, 14]" in out
        assert "verdict: not slice" in out
        assert "MISMATCH" not in out

    def test_json_output(self, capsys):
        assert main(["obstruct", "--n", "11", "--json"]) == 0
        rows = json.loads(capsys.readouterr().out)
        assert len(rows) == 2
        assert {r["sign"] for r in rows} == {"+", "-"}
        assert rows[0]["verdict"] == "not slice"

    def test_csv_output(self, capsys):
        assert main(["obstruct", "--n", "11", "--csv"]) == 0
        rows = list(csv.reader(io.StringIO(capsys.readouterr().out)))
        assert rows[0] == ["n", "sign", "s", "theta", "degree_sequence"]
        assert rows[1] == ["11", "+", "23", "2", "2 2 3 3 8"]
        assert rows[2] == ["11", "-", "23", "2", "4 14"]

    def test_explicit_witness(self, capsys):
        assert main(["obstruct", "--n", "5", "--s", "11"]) == 0
        out = capsys.readouterr().out
        assert "verdict: inconclusive" in out
        assert "norm obstructed: NO" in out

    def test_exhaustive_flag(self, capsys):
        assert main(["obstruct", "--n", "11", "--exhaustive"]) == 0
        assert "characters checked: 12" in capsys.readouterr().out


class TestVerifyTableCommand:
    def test_single_row(self, capsys):
        assert main(["verify-table", "--n", "11"]) == 0
        out = capsys.readouterr().out
        assert "[PASS] n=11 chi+" in out
        assert "[PASS] n=11 chi-" in out
        assert "2/2 rows verified" in out

    def test_json_exit_code(self, capsys):
        assert main(["verify-table", "--n", "11", "--json"]) == 0
        rows = json.loads(capsys.readouterr().out)
        assert all(r["ok"] for r in rows)


class TestHomologyCommand:
    def test_triple_cover(self, capsys):
        assert main(["homology", "--n", "11"]) == 0
        out = capsys.readouterr().out
        assert "Z/11 x Z/11 x Z/11 x Z/11" in out
        assert "order: 14641" in out

    def test_figure_eight_double_cover(self, capsys):
        assert main(["homology", "--n", "2", "--q", "2"]) == 0
        out = capsys.readouterr().out
        assert "Z/5" in out and "order: 5" in out


class TestLinkingCommand:
    def test_matrix_and_sign(self, capsys):
        assert main(["linking", "--n", "11"]) == 0
        out = capsys.readouterr().out
        assert "basis (a, ta, b, tb)" in out
        assert "matches closed form with global sign" in out
        # k/n = 5/11 shows up off the diagonal
        assert "5/11" in out


class TestMetabolizersCommand:
    def test_counts_and_orbits(self, capsys):
        assert main(["metabolizers", "--n", "11"]) == 0
        out = capsys.readouterr().out
        assert "12 metabolizers" in out
        assert "orbit sizes [1, 11]" in out
        assert "fixed: generated by" in out
        assert "orbit of 11" in out


class TestParser:
    def test_requires_subcommand(self):
        with pytest.raises(SystemExit):
            build_parser().parse_args([])

    def test_prog_name(self):
        assert build_parser().prog == "sliceobs"
