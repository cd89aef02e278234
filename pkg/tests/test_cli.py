"""Command-line surface: sg, move, verify, table, vectors."""

import csv
import json

import pytest

from pwelter.cli import main


class TestSg:
    def test_p_position_example(self, capsys):
        assert main(["sg", "--coins", "3,7", "--p", "3"]) == 0
        out = capsys.readouterr().out
        assert "sg         0" in out
        assert "tower      [0, 3]" in out
        assert "|lambda|   9" in out

    def test_value_six(self, capsys):
        assert main(["sg", "--coins", "3,4", "--p", "2"]) == 0
        out = capsys.readouterr().out
        assert "sg         6" in out
        assert "[0, 1, 1]" in out

    def test_terminal(self, capsys):
        assert main(["sg", "--coins", "0,1,2", "--p", "5"]) == 0
        out = capsys.readouterr().out
        assert "sg         0" in out
        assert "|lambda|   0" in out

    def test_unsaturated_uses_oracle(self, capsys):
        assert main(["sg", "--coins", "1,3,6", "--p", "3", "--k", "2"]) == 0
        assert "oracle at k=2" in capsys.readouterr().out

    def test_malformed_coins(self):
        with pytest.raises(SystemExit):
            main(["sg", "--coins", "3,x", "--p", "2"])

    def test_duplicate_coins(self):
        with pytest.raises(SystemExit):
            main(["sg", "--coins", "3,3", "--p", "2"])


class TestMove:
    def test_winning_move(self, capsys):
        assert main(["move", "--coins", "3,4", "--p", "2", "--k", "2"]) == 0
        assert "[2, 3]" in capsys.readouterr().out

    def test_p_position(self, capsys):
        assert main(["move", "--coins", "3,7", "--p", "3", "--k", "3"]) == 0
        assert "P-position" in capsys.readouterr().out

    def test_forced_move(self, capsys):
        assert main(["move", "--coins", "0,2", "--p", "2", "--k", "2"]) == 0
        assert "[0, 1]" in capsys.readouterr().out


class TestVerify:
    def test_theorem11(self, capsys):
        code = main(
            ["verify", "theorem11", "--p", "3", "--m", "2", "--bound", "8"]
        )
        assert code == 0
        assert "PASS theorem11" in capsys.readouterr().out

    def test_msg_suite_runs_point_values(self, capsys):
        code = main(["verify", "msg", "--p", "3", "--size", "9"])
        assert code == 0
        assert "PASS msg" in capsys.readouterr().out

    def test_unknown_suite_is_usage_error(self):
        with pytest.raises(SystemExit):
            main(["verify", "bogus"])

    def test_json_flag(self, capsys):
        assert main(["verify", "nim", "--p", "2", "--m", "2", "--bound", "6", "--json"]) == 0
        out = capsys.readouterr().out
        json_start = out.index("\n[") + 1
        payload = json.loads(out[json_start:])
        assert payload[0]["suite"] == "nim"


class TestTable:
    def test_csv_agrees_and_is_deterministic(self, tmp_path):
        out = tmp_path / "table.csv"
        args = [
            "table", "--p", "2", "--k", "2", "--m", "2",
            "--bound", "8", "--format", "csv", "--out", str(out),
        ]
        assert main(args) == 0
        first = out.read_bytes()
        with open(out, newline="") as handle:
            rows = list(csv.DictReader(handle))
        assert rows
        for row in rows:
            assert row["sg_oracle"] == row["sg_closed"]
            assert row["variant"] == "welter"
        assert main(args) == 0
        assert out.read_bytes() == first

    def test_empty_bound_header_only(self, tmp_path):
        out = tmp_path / "empty.csv"
        assert main(
            ["table", "--p", "2", "--k", "2", "--m", "2", "--bound", "0", "--out", str(out)]
        ) == 0
        assert out.read_text() == "coins,p,k,variant,sg_oracle,sg_closed\n"

    def test_jsonl(self, tmp_path):
        out = tmp_path / "table.jsonl"
        assert main(
            [
                "table", "--p", "3", "--k", "3", "--m", "2", "--bound", "6",
                "--variant", "nim", "--format", "jsonl", "--out", str(out),
            ]
        ) == 0
        lines = [json.loads(line) for line in out.read_text().splitlines()]
        assert lines
        for record in lines:
            assert record["sg_oracle"] == record["sg_closed"]
            assert record["variant"] == "nim"


class TestVectors:
    def test_emits_shared_cases(self, capsys):
        assert main(["vectors"]) == 0
        payload = json.loads(capsys.readouterr().out)
        cases = payload["cases"]
        assert len(cases) > 100
        legal = [c for c in cases if c["from"] == [4, 3] and c["to"] == [0, 1] and c["k"] == 3]
        assert legal and legal[0]["legal"]
        illegal = [c for c in cases if c["from"] == [4, 3] and c["to"] == [1, 0] and c["k"] == 3]
        assert illegal and illegal[0]["condition"] == 3
