"""Command-line surface: formats, exit codes, JSON round trips."""
import json

from wkostka.cli import main, omega_from_json, omega_to_json
from wkostka.exact import LaurentPoly, RationalFunction
from wkostka.omega import omega_matrix
from wkostka.rpart import default_total_order


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestEnumerate:
    def test_n0(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--n", "0", "--r", "3")
        assert code == 0
        data = json.loads(out)
        assert len(data["rows"]) == 1
        row = data["rows"][0]
        assert row["n_value"] == 0 and row["a_value"] == 0

    def test_a_column_n1(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--n", "1", "--r", "3")
        data = json.loads(out)
        assert [r["a_value"] for r in data["rows"]] == [2, 1, 0]

    def test_n3_row_count_and_csv(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--n", "3", "--r", "3",
                           "--format", "csv")
        assert code == 0
        assert len([l for l in out.strip().splitlines() if l]) == 23

    def test_latex(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--n", "1", "--r", "2",
                           "--format", "latex")
        assert code == 0 and out.startswith("\\begin{tabular}")


class TestOmegaCommand:
    def test_json_is_section71(self, capsys):
        code, out, _ = run(capsys, "omega", "--n", "1", "--r", "3")
        assert code == 0
        data = json.loads(out)
        assert data["entries"] == [["t^4", "t^2", "t^3"],
                                   ["t^3", "t^4", "t^2"],
                                   ["t^2", "t^3", "t^4"]]

    def test_method_both_verdict(self, capsys):
        code, out, _ = run(capsys, "omega", "--n", "1", "--r", "3",
                           "--method", "both")
        assert code == 0
        assert json.loads(out)["verdict"] == "equal"

    def test_symmetric_r2(self, capsys):
        code, out, _ = run(capsys, "omega", "--n", "1", "--r", "2")
        rows = json.loads(out)["entries"]
        assert rows[0][1] == rows[1][0]

    def test_round_trip(self, capsys):
        om = omega_matrix(2, 3, default_total_order(2, 3))
        data = json.loads(json.dumps(omega_to_json(om)))
        back = omega_from_json(data)
        assert back.entries == om.entries
        assert back.order.items == om.order.items


class TestSolveCommand:
    def test_emit_lambda_matches_74_table(self, capsys):
        code, out, _ = run(capsys, "solve", "--n", "3", "--r", "3",
                           "--order", "fixture:n3r3", "--emit", "lambda")
        assert code == 0
        data = json.loads(out)
        lam = [RationalFunction.parse(s) for s in data["lambda"]]
        assert lam[0] == RationalFunction.one()
        assert lam[1] == RationalFunction.parse("t^6 - t^-3")

    def test_emit_p_plus_n1r5(self, capsys):
        code, out, _ = run(capsys, "solve", "--n", "1", "--r", "5",
                           "--emit", "p-plus")
        data = json.loads(out)
        pp = [[LaurentPoly.parse(s) for s in row] for row in data["p_plus"]]
        for i in range(5):
            assert pp[i][i] == LaurentPoly.t_power(5 - 1 - i)
            if i >= 1:
                assert pp[i][0] == LaurentPoly.t_power(i - 1)

    def test_emit_ic_minus(self, capsys):
        code, out, _ = run(capsys, "solve", "--n", "2", "--r", "3",
                           "--order", "fixture:n2r3", "--emit", "ic-minus")
        data = json.loads(out)
        assert data["ic_minus"]["raw"][4][0] == "t^3 + 1"
        assert data["ic_minus"]["in_s"][4][0] == "t + 1"
        assert all(all(row) for row in data["ic_minus"]["ok"])

    def test_round_trip_blocks(self, capsys):
        from wkostka.factor import solve_factorization
        code, out, _ = run(capsys, "solve", "--n", "2", "--r", "2")
        data = json.loads(out)
        res = solve_factorization(omega_matrix(2, 2, default_total_order(2, 2)))
        back_pm = [[LaurentPoly.parse(s) for s in row]
                   for row in data["p_minus"]]
        assert back_pm == [list(row) for row in res.p_minus.rows]
        back_lam = [RationalFunction.parse(s) for s in data["lambda"]]
        assert back_lam == list(res.lam)
        back_omega = [[LaurentPoly.parse(s) for s in row]
                      for row in data["omega"]]
        assert back_omega == [list(row) for row in res.omega.entries.rows]

    def test_unknown_block(self, capsys):
        code, _, err = run(capsys, "solve", "--n", "1", "--r", "2",
                           "--emit", "bogus")
        assert code == 2 and "unknown block" in err

    def test_csv_and_latex(self, capsys):
        code, out, _ = run(capsys, "solve", "--n", "1", "--r", "3",
                           "--format", "csv", "--emit", "lambda,p-minus")
        assert code == 0 and "rpartition,a_value,xi" in out
        code, out, _ = run(capsys, "solve", "--n", "1", "--r", "3",
                           "--format", "latex", "--emit", "lambda")
        assert code == 0 and out.startswith("\\begin{tabular}")


class TestVerifyCommand:
    def test_fixtures_suite(self, capsys):
        code, out, _ = run(capsys, "verify", "fixtures")
        assert code == 0
        assert json.loads(out)["pass"] is True

    def test_thm55(self, capsys):
        code, out, _ = run(capsys, "verify", "thm55", "--n", "2", "--r", "3")
        assert code == 0

    def test_lemma59_small(self, capsys):
        code, out, _ = run(capsys, "verify", "lemma59", "--n", "2", "--r", "2")
        assert code == 0

    def test_classical(self, capsys):
        code, out, _ = run(capsys, "verify", "classical-r1", "--n", "3")
        assert code == 0

    def test_orders_suite(self, capsys):
        code, out, _ = run(capsys, "verify", "orders", "--n", "2", "--r", "2",
                           "--samples", "4", "--seed", "3")
        assert code == 0

    def test_unknown_suite(self, capsys):
        code, _, err = run(capsys, "verify", "nonsense")
        assert code == 2

    def test_missing_suite(self, capsys):
        code, _, err = run(capsys, "verify")
        assert code == 2

    def test_bound_violation_is_exit_1(self, capsys):
        code, _, err = run(capsys, "verify", "oracle", "--n", "2", "--r", "3",
                           "--wreath-bound", "1")
        assert code == 1


class TestOrderSources:
    def test_order_file(self, tmp_path, capsys):
        path = tmp_path / "order.txt"
        path.write_text("(-;-;1)\n(-;1;-)\n(1;-;-)\n")
        code, out, _ = run(capsys, "omega", "--n", "1", "--r", "3",
                           "--order", f"file:{path}")
        assert code == 0
        assert json.loads(out)["order"] == ["(-;-;1)", "(-;1;-)", "(1;-;-)"]

    def test_bad_order_file(self, tmp_path, capsys):
        path = tmp_path / "order.txt"
        path.write_text("(1;-;-)\n")
        code, _, err = run(capsys, "omega", "--n", "1", "--r", "3",
                           "--order", f"file:{path}")
        assert code == 2

    def test_fixture_mismatch(self, capsys):
        code, _, err = run(capsys, "omega", "--n", "1", "--r", "3",
                           "--order", "fixture:n2r3")
        assert code == 2

    def test_missing_nr(self, capsys):
        code, _, err = run(capsys, "omega")
        assert code == 2

    def test_out_file(self, tmp_path, capsys):
        path = tmp_path / "omega.json"
        code, out, _ = run(capsys, "omega", "--n", "1", "--r", "2",
                           "--out", str(path))
        assert code == 0 and out == ""
        assert json.loads(path.read_text())["n"] == 1


class TestOrdersCommand:
    def test_report(self, capsys):
        code, out, _ = run(capsys, "orders", "--n", "2", "--r", "3",
                           "--samples", "5", "--seed", "42")
        assert code == 0
        data = json.loads(out)
        assert data["distinct_orders"] >= 1
        assert "comparable_mismatches" in data
