import csv
import io
import json
import pathlib

import pytest

from endochain.cli import main
from endochain.report import VerificationReport
from endochain.verify import CLAIMS

GOLDEN = pathlib.Path(__file__).parent / "golden" / "tables_n7_fixed_1_5.txt"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestAnalyze:
    def test_text_output(self, capsys):
        code, out, _ = run(capsys, "analyze", "2,2,2,4,5,5,5")
        assert code == 0
        assert "fixed points: 2,5" in out
        assert "jump points: 3" in out
        assert "idempotent: no" in out
        assert "omega: 2,2,2,5,5,5,5 (index 2)" in out

    def test_identity(self, capsys):
        code, out, _ = run(capsys, "analyze", "0,1,2")
        assert code == 0
        assert "fixed points: 0,1,2" in out
        assert "jump points: none" in out
        assert "idempotent: yes" in out

    def test_consecutive_jump_idempotent(self, capsys):
        code, out, _ = run(capsys, "analyze", "1,1,1,3,5,5")
        assert code == 0
        assert "idempotent: yes" in out
        assert "jump points: 3,4" in out

    def test_json_envelope(self, capsys):
        code, out, _ = run(capsys, "analyze", "2,2,2,4,5,5,5", "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert doc["command"] == "analyze"
        assert doc["n"] == 7
        assert doc["result"]["fixed_points"] == [2, 5]
        assert doc["result"]["omega_index"] == 2

    def test_compact_form_warns(self, capsys):
        code, out, err = run(capsys, "analyze", "1111555")
        assert code == 0
        assert "compact digit form" in err
        assert "fixed points: 1,5" in out

    def test_parse_error_exits_2(self, capsys):
        code, _, err = run(capsys, "analyze", "2,1")
        assert code == 2
        assert "error" in err


class TestEnumerate:
    def test_family_lines(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--n", "7", "--idempotent", "--fixed", "1,5")
        assert code == 0
        assert out.splitlines() == [
            "1,1,1,1,1,5,5",
            "1,1,1,1,5,5,5",
            "1,1,1,5,5,5,5",
            "1,1,5,5,5,5,5",
        ]

    def test_no_jump_idempotent_count(self, capsys):
        code, out, _ = run(
            capsys, "enumerate", "--n", "3", "--idempotent", "--no-jumps", "--count"
        )
        assert code == 0
        assert out.strip() == "6"

    def test_carrier_count(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--n", "3", "--count")
        assert code == 0
        assert out.strip() == "10"

    def test_conflicting_jump_flags(self, capsys):
        code, _, err = run(capsys, "enumerate", "--n", "3", "--jumps", "1", "--no-jumps")
        assert code == 2
        assert "mutually exclusive" in err

    def test_json_list(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--n", "2", "--format", "json")
        doc = json.loads(out)
        assert code == 0
        assert doc["result"] == ["0,0", "0,1", "1,1"]


class TestClass:
    def test_reference_class(self, capsys):
        code, out, _ = run(capsys, "class", "2,2,2,5,5,5,5")
        assert code == 0
        assert "order (formula): 4" in out
        assert "order (brute force): 4" in out
        assert "closure: pass" in out
        assert "members (4):" in out

    def test_identity_singleton(self, capsys):
        code, out, _ = run(capsys, "class", "0,1,2")
        assert code == 0
        assert "members (1):" in out

    def test_printed_variant_flagged(self, capsys):
        code, out, _ = run(capsys, "class", "1,1,1,5,5,5,5")
        assert code == 0
        assert "order (formula): 2" in out
        assert "order (printed variant): 4  [flagged: disagrees]" in out

    def test_non_idempotent_uses_omega(self, capsys):
        code, out, err = run(capsys, "class", "2,2,2,4,5,5,5")
        assert code == 0
        assert "omega power 2,2,2,5,5,5,5" in err
        assert "idempotent: 2,2,2,5,5,5,5" in out

    def test_json_record(self, capsys):
        code, out, _ = run(capsys, "class", "2,2,2,5,5,5,5", "--format", "json")
        doc = json.loads(out)
        assert code == 0
        rec = doc["result"]
        assert rec["order_formula"] == rec["order_bruteforce"] == 4
        assert rec["closure_ok"] is True
        assert len(rec["members"]) == 4


class TestTables:
    def test_matches_golden_file(self, capsys):
        code, out, _ = run(capsys, "tables", "--n", "7", "--fixed", "1,5")
        assert code == 0
        assert out == GOLDEN.read_text()

    def test_structure_independent_of_golden(self, capsys):
        _, out, _ = run(capsys, "tables", "--n", "7", "--fixed", "1,5")
        lines = out.splitlines()
        names = [f"phi_{i}" for i in range(1, 5)]
        add_rows = lines[lines.index("addition (+)") + 2 : lines.index("addition (+)") + 6]
        for i, row in enumerate(add_rows):
            cells = row.split()
            assert cells[0] == names[i]
            assert cells[1:] == [names[max(i, j)] for j in range(4)]
        mul_rows = lines[lines.index("multiplication (*)") + 2 :][:4]
        for i, row in enumerate(mul_rows):
            cells = row.split()
            assert cells[1:] == [names[i]] * 4

    def test_two_element_family(self, capsys):
        code, out, _ = run(capsys, "tables", "--n", "4", "--fixed", "0,1,3")
        assert code == 0
        assert "phi_1 = 0,1,1,3" in out
        assert "phi_2 = 0,1,3,3" in out

    def test_singleton_family(self, capsys):
        code, out, _ = run(capsys, "tables", "--n", "5", "--fixed", "2")
        assert code == 0
        assert "phi_1 = 2,2,2,2,2" in out

    def test_csv_round_trips(self, capsys):
        code, out, _ = run(capsys, "tables", "--n", "7", "--fixed", "1,5", "--format", "csv")
        assert code == 0
        blocks = out.strip().split("\n\n")
        assert len(blocks) == 2
        add_rows = list(csv.reader(io.StringIO(blocks[0])))
        assert add_rows[0][0] == "+"
        assert add_rows[0][1] == "1,1,1,1,1,5,5"
        assert add_rows[1][1] == "1,1,1,1,1,5,5"
        mul_rows = list(csv.reader(io.StringIO(blocks[1])))
        assert mul_rows[0][0] == "*"
        assert mul_rows[4][4] == "1,1,5,5,5,5,5"

    def test_json(self, capsys):
        code, out, _ = run(capsys, "tables", "--n", "7", "--fixed", "1,5", "--format", "json")
        doc = json.loads(out)
        assert code == 0
        assert doc["result"]["closed"] is True
        assert len(doc["result"]["members"]) == 4


class TestVerify:
    def test_single_theorem_passes(self, capsys):
        code, out, _ = run(capsys, "verify", "--n", "5", "--theorem", "Thm3.9")
        assert code == 0
        assert "Thm3.9" in out and "pass" in out

    def test_unknown_theorem(self, capsys):
        code, _, err = run(capsys, "verify", "--n", "5", "--theorem", "Thm9.9")
        assert code == 2
        assert "unknown theorem id" in err

    def test_requires_theorem_or_all(self, capsys):
        code, _, err = run(capsys, "verify", "--n", "5")
        assert code == 2

    def test_erratum_pass_exits_zero_with_warning(self, capsys):
        code, out, err = run(capsys, "verify", "--n", "5", "--theorem", "Thm4.8")
        assert code == 0
        assert "pass-with-erratum" in out
        assert "warning" in err

    def test_all_small(self, capsys):
        code, out, _ = run(capsys, "verify", "--all", "--n", "4")
        assert code == 0
        for claim_id in CLAIMS:
            assert claim_id in out

    def test_json_round_trip(self, capsys):
        code, out, _ = run(capsys, "verify", "--n", "4", "--theorem", "Prop5.5", "--format", "json")
        doc = json.loads(out)
        assert code == 0
        assert doc["result"][0]["claim"] == "Prop5.5"
        assert doc["result"][0]["status"] == "pass"

    def test_failures_exit_one(self, capsys, monkeypatch):
        def always_fails(n_max, cap=None, **kw):
            return VerificationReport("Fake", (1, n_max), 1, [{"boom": True}])

        monkeypatch.setitem(CLAIMS, "Fake", (always_fails, "injected failing claim"))
        code, out, _ = run(capsys, "verify", "--n", "2", "--theorem", "Fake")
        assert code == 1
        assert "fail" in out


class TestCounterexample:
    def test_smallest_witness_is_n3(self, capsys):
        code, out, _ = run(capsys, "counterexample", "--property", "congruence", "--n", "8")
        assert code == 0
        assert out.startswith("n = 3")
        assert "alpha*gamma" in out

    def test_none_below_three(self, capsys):
        code, out, _ = run(capsys, "counterexample", "--property", "congruence", "--n", "2")
        assert code == 0
        assert out.strip() == "none"

    def test_json(self, capsys):
        code, out, _ = run(capsys, "counterexample", "--property", "congruence", "--n", "3", "--format", "json")
        doc = json.loads(out)
        assert code == 0
        assert doc["result"]["smallest_n"] == 3

    def test_unknown_property_rejected(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["counterexample", "--property", "zero", "--n", "3"])
        assert exc.value.code == 2
