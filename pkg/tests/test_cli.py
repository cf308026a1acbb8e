"""End-to-end CLI behavior, including the exit-code contract."""

import json

import pytest

from flatstir.cli import main
from flatstir.reference import PAIRS_ORDER4, TABLE1


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestGen:
    def test_flat_order_one(self, capsys):
        code, out, _ = run_cli(capsys, "gen", "flat", "--n", "1")
        assert code == 0 and out == "1 1\n"

    def test_flat_count(self, capsys):
        code, out, _ = run_cli(capsys, "gen", "flat", "--n", "5")
        assert code == 0 and len(out.splitlines()) == 116

    def test_typeb_nodes_order3(self, capsys):
        code, out, _ = run_cli(capsys, "gen", "typeb", "--n", "3")
        assert code == 0
        assert set(out.splitlines()) == {p for p, _ in PAIRS_ORDER4}
        assert len(out.splitlines()) == 24

    def test_stirling_json(self, capsys):
        code, out, _ = run_cli(capsys, "gen", "stirling", "--n", "2", "--format", "json")
        assert code == 0
        assert json.loads(out) == ["2 2 1 1", "1 2 2 1", "1 1 2 2"]

    def test_flat_via_bijection_matches_filter_as_sets(self, capsys):
        code, filt, _ = run_cli(capsys, "gen", "flat", "--n", "4")
        code2, bij, _ = run_cli(capsys, "gen", "flat", "--n", "4", "--via", "bijection")
        assert code == code2 == 0
        assert set(filt.splitlines()) == set(bij.splitlines())

    def test_budget_exit_code(self, capsys):
        code, _, err = run_cli(capsys, "gen", "stirling", "--n", "12", "--m", "5")
        assert code == 3 and "budget" in err

    def test_bijection_needs_m2(self, capsys):
        code, _, err = run_cli(capsys, "gen", "flat", "--n", "3", "--m", "3",
                               "--via", "bijection")
        assert code == 2 and "requires" in err


class TestMap:
    def test_forward_examples(self, capsys):
        assert run_cli(capsys, "map", "phi", "0 1 2 | -4 3")[1] == "1 2 2 3 3 1 5 5 4 4\n"
        assert run_cli(capsys, "map", "phi", "0 | -3 1 2")[1] == "1 1 4 4 2 3 3 2\n"

    def test_inverse_examples(self, capsys):
        assert run_cli(capsys, "map", "psi", "1 1 2 2")[1] == "0 | 1\n"
        assert run_cli(capsys, "map", "psi", "13314422")[1] == "0 2 | -3 1\n"

    def test_parse_error_exit_2(self, capsys):
        code, _, err = run_cli(capsys, "map", "psi", "1 x 2")
        assert code == 2 and "token" in err
        code, _, err = run_cli(capsys, "map", "phi", "0 | 1a")
        assert code == 2

    def test_domain_error_exit_4(self, capsys):
        code, _, err = run_cli(capsys, "map", "psi", "123321445566778899")
        assert code == 4 and "leads with" in err
        code, _, err = run_cli(capsys, "map", "psi", "1 2 1 2")
        assert code == 4
        code, _, err = run_cli(capsys, "map", "phi", "0 | 2 -1")
        assert code == 4


class TestTable:
    def test_table1_smallest(self, capsys):
        code, out, _ = run_cli(capsys, "table", "--max-n", "1", "--threads", "1")
        assert code == 0 and out == "n,|Q_n|,|flat|,k=1\n1,1,1,1\n"

    def test_table1_rows_match_reference(self, capsys):
        code, out, _ = run_cli(capsys, "table", "--max-n", "7", "--threads", "1")
        assert code == 0
        rows = out.strip().split("\n")[1:]
        for row in rows:
            cells = [int(c) for c in row.split(",")]
            n, total, flat, ks = cells[0], cells[1], cells[2], cells[3:]
            ref_total, ref_flat, ref_by = TABLE1[n]
            assert (total, flat) == (ref_total, ref_flat)
            for k, cnt in enumerate(ks, start=1):
                assert cnt == ref_by.get(k, 0)

    def test_filter_and_bijection_modes_agree(self, capsys):
        _, out_f, _ = run_cli(capsys, "table", "--max-n", "5", "--mode", "filter",
                              "--threads", "1")
        _, out_b, _ = run_cli(capsys, "table", "--max-n", "5", "--mode", "bijection",
                              "--threads", "1")
        assert out_f == out_b

    def test_mstirling_matches_reference(self, capsys):
        code, out, _ = run_cli(capsys, "table", "--mstirling", "--max-n", "7",
                               "--threads", "1")
        assert code == 0
        assert out.splitlines()[0] == "n,m=2,m=3,m=4,m=5"
        assert out.splitlines()[7] == "7,4088,25515,96704,276875"

    def test_json_format(self, capsys):
        code, out, _ = run_cli(capsys, "table", "--max-n", "3", "--format", "json",
                               "--threads", "1")
        doc = json.loads(out)
        assert doc["version"] == 1

    def test_output_file(self, capsys, tmp_path):
        path = tmp_path / "t.csv"
        code, out, _ = run_cli(capsys, "table", "--max-n", "2", "--output", str(path),
                               "--threads", "1")
        assert code == 0 and out == ""
        assert path.read_text().startswith("n,|Q_n|,|flat|")

    def test_invalid_mode_combination(self, capsys):
        code, _, err = run_cli(capsys, "table", "--max-n", "3", "--mode", "formula",
                               "--threads", "1")
        assert code == 2
        code, _, err = run_cli(capsys, "table", "--mstirling", "--max-n", "3",
                               "--mode", "bijection", "--threads", "1")
        assert code == 2


class TestVerify:
    def test_pass_suite(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "bijection", "--max-n", "4",
                               "--threads", "1")
        assert code == 0
        assert "result: PASS" in out
        assert "order-4 pair fixture" in out

    def test_budget_failure_exit_1(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "table1", "--max-n", "5",
                               "--budget", "10", "--threads", "1")
        assert code == 1
        assert "budget" in out


class TestOeis:
    def test_bundled_pass(self, capsys):
        for name, seq_id in [("dowling", "A007405"), ("flat2", "A050488"),
                             ("mstirling3", "A355164"), ("mstirling4", "A355167")]:
            code, out, _ = run_cli(capsys, "oeis", name)
            assert code == 0 and "terms match" in out
            code, out, _ = run_cli(capsys, "oeis", seq_id)
            assert code == 0 and seq_id in out

    def test_mismatch_exit_1(self, capsys, tmp_path):
        path = tmp_path / "b007405.txt"
        path.write_text("0 1\n1 2\n2 6\n3 25\n")
        code, out, _ = run_cli(capsys, "oeis", "dowling", "--bfile", str(path))
        assert code == 1
        assert "MISMATCH at index 3" in out

    def test_malformed_exit_2(self, capsys, tmp_path):
        path = tmp_path / "b.txt"
        path.write_text("0 1\nbroken line here\n")
        code, _, err = run_cli(capsys, "oeis", "dowling", "--bfile", str(path))
        assert code == 2 and "line 2" in err

    def test_unknown_sequence(self, capsys):
        code, _, err = run_cli(capsys, "oeis", "A000001")
        assert code == 2

    def test_generator_conflict(self, capsys):
        code, _, err = run_cli(capsys, "oeis", "A007405", "--generator", "flat2")
        assert code == 2

    def test_missing_file_exit_2(self, capsys, tmp_path):
        code, _, err = run_cli(capsys, "oeis", "dowling", "--bfile",
                               str(tmp_path / "none.txt"))
        assert code == 2


class TestCache:
    def test_build_check_clear_cycle(self, capsys, tmp_path):
        path = str(tmp_path / "cache.json")
        code, out, _ = run_cli(capsys, "cache", "build", "--path", path,
                               "--max-n", "5", "--threads", "1")
        assert code == 0 and "entries" in out
        code, out, _ = run_cli(capsys, "cache", "check", "--path", path,
                               "--sample", "5", "--threads", "1")
        assert code == 0 and "coherent" in out
        code, out, _ = run_cli(capsys, "cache", "clear", "--path", path)
        assert code == 0 and "removed" in out
        code, out, _ = run_cli(capsys, "cache", "clear", "--path", path)
        assert code == 0 and "nothing" in out

    def test_tampered_check_exit_1(self, capsys, tmp_path):
        path = str(tmp_path / "cache.json")
        run_cli(capsys, "cache", "build", "--path", path, "--max-n", "4",
                "--threads", "1")
        doc = json.loads(open(path).read())
        for entry in doc["entries"]:
            if entry["kind"] == "flat" and entry["n"] == 4:
                entry["count"] = "23"
        open(path, "w").write(json.dumps(doc))
        code, _, err = run_cli(capsys, "cache", "check", "--path", path,
                               "--sample", "4", "--threads", "1")
        assert code == 1 and "flat" in err

    def test_check_missing_file(self, capsys, tmp_path):
        code, _, err = run_cli(capsys, "cache", "check", "--path",
                               str(tmp_path / "none.json"))
        assert code == 2


class TestUsage:
    def test_unknown_command_exits_2(self, capsys):
        with pytest.raises(SystemExit) as err:
            main(["bogus"])
        assert err.value.code == 2

    def test_missing_required_flag(self, capsys):
        with pytest.raises(SystemExit) as err:
            main(["table"])
        assert err.value.code == 2
