import json

import pytest

import gradedseries as gs
from gradedseries.cli import main
from gradedseries.exact import Poly, normalize, one_minus_power
from gradedseries.scenario import (
    ParseError,
    UndeclaredInputError,
    parse_matrix_literal,
    parse_scenario,
    parse_series_literal,
    run_scenario,
)


class TestSeriesLiterals:
    def test_polynomial_grammar(self):
        f = parse_series_literal("1 - 2*t + 4t^2 - 2t^3 + t^4")
        assert f == normalize(Poly([1, -2, 4, -2, 1]), Poly([1]))

    def test_rational_function_grammar(self):
        f = parse_series_literal("(1-t^6)/((1-t)(1-t^2)(1-t^3)^2)")
        want = normalize(one_minus_power(6),
                         Poly([1, -1]) * one_minus_power(2) * one_minus_power(3) ** 2)
        assert f == want

    def test_zeta_requires_order(self):
        with pytest.raises(ParseError):
            parse_series_literal("z + 1")

    def test_round_trip_printing(self):
        f = parse_series_literal("(1 + 6t^4 + t^8)/(1 - t^4)^3")
        again = parse_series_literal(str(f))
        assert f == again

    def test_negative_powers(self):
        assert parse_series_literal("(1-t)^-1") == \
            parse_series_literal("1/(1-t)")


class TestMatrixLiterals:
    def test_with_zeta(self):
        m = parse_matrix_literal("[[0, z, 0], [0, 0, z^2], [1, 0, 0]]", 3)
        assert m.dim == 3
        assert m.rows[0][1] == gs.CyclotomicNumber.zeta(3)

    def test_row_length_mismatch(self):
        with pytest.raises(ParseError) as err:
            parse_matrix_literal("[[1, 0], [1, 0, 0]]")
        assert "line 1" in str(err.value)

    def test_entries_must_be_scalars(self):
        with pytest.raises(ParseError):
            parse_matrix_literal("[[t, 0], [0, 1]]")


class TestParseScenario:
    def test_sklyanin_round_trip(self):
        scenario = parse_scenario(gs.load_bundled_scenario("sklyanin.scn"))
        assert scenario.name == "sklyanin"
        assert scenario.zeta_order == 3
        assert len([n for n, (c, _) in scenario.bindings.items()
                    if c == "matrix"]) == 4
        kinds = [t.kind for t in scenario.tasks]
        assert "closure" in kinds and "subgroups" in kinds
        assert "molien" in kinds and "classify" in kinds

    def test_veronese_file_tasks(self):
        scenario = parse_scenario(
            gs.load_bundled_scenario("veronese_sections.scn"))
        rs = [t.args["r"] for t in scenario.tasks]
        assert rs == [2, 3, 4]

    def test_undeclared_reference(self):
        text = "task molien group=nowhere\n"
        with pytest.raises(UndeclaredInputError):
            parse_scenario(text)

    def test_parse_error_location(self):
        text = "let a = series 1 +\n"
        with pytest.raises(ParseError) as err:
            parse_scenario(text)
        assert "line 1" in str(err.value)

    def test_duplicate_declaration(self):
        text = "let a = series 1\nlet a = series t\n"
        with pytest.raises(ParseError):
            parse_scenario(text)

    def test_closure_binding_visible_downstream(self):
        text = (
            "zeta_order: 3\n"
            "let m = matrix [[z]]\n"
            "task closure name=g generators=[m] cap=10\n"
            "task molien group=g\n")
        scenario = parse_scenario(text)
        reports, passed = run_scenario(scenario)
        assert reports[0]["order"] == 3


class TestRunScenarios:
    @pytest.mark.parametrize("name", [
        "square_zero.scn", "mystic_bireflection.scn", "double_transposition.scn",
        "sklyanin.scn", "stanley.scn", "veronese_sections.scn",
    ])
    def test_bundled_expectations_hold(self, name):
        scenario = parse_scenario(gs.load_bundled_scenario(name))
        reports, passed = run_scenario(scenario)
        assert passed, [r.get("failures") for r in reports if r.get("failures")]

    def test_deterministic_reports(self):
        scenario_text = gs.load_bundled_scenario("mystic_bireflection.scn")
        one = json.dumps(run_scenario(parse_scenario(scenario_text))[0])
        two = json.dumps(run_scenario(parse_scenario(scenario_text))[0])
        assert one == two

    def test_failed_expectation_reported(self):
        text = 'task cyc series="1 + 2t + t^2" expect cyc=5\n'
        reports, passed = run_scenario(parse_scenario(text))
        assert not passed
        assert reports[0]["passed"] is False
        assert reports[0]["failures"]


class TestCli:
    def test_run_bundled(self, tmp_path, capsys):
        path = tmp_path / "stanley.scn"
        path.write_text(gs.load_bundled_scenario("stanley.scn"))
        assert main(["run", str(path), "--json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["scenario"] == "stanley"
        assert all(r["passed"] for r in payload["reports"])

    def test_run_exit_code_on_mismatch(self, tmp_path, capsys):
        path = tmp_path / "bad.scn"
        path.write_text('task cyc series="1/(1-t)" expect cyc=7\n')
        assert main(["run", str(path)]) == 1

    def test_input_error_exit_code(self, tmp_path, capsys):
        path = tmp_path / "broken.scn"
        path.write_text("let = matrix [[1]]\n")
        assert main(["run", str(path)]) == 2
        assert "error" in capsys.readouterr().err

    def test_classify_json(self, capsys):
        assert main(["classify", "(1+t)^3/(1-t)^4", "--json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["cyclotomic"] is True
        assert payload["cyc_number"] == 3

    def test_veronese(self, capsys):
        assert main(["veronese", "1/(1-t)^2", "-r", "3", "--json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["section"] == "(1 + 2t) / (1 - 2t + t^2)"
        assert payload["cyclotomic"] is False

    def test_molien_subcommand(self, capsys):
        code = main(["molien", "--zeta-order", "3",
                     "--matrix", "[[z,0,0],[0,z^2,0],[0,0,1]]",
                     "--matrix", "[[0,1,0],[0,0,1],[1,0,0]]", "--json"])
        assert code == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["group_order"] == 27
        assert payload["cyclotomic"] is True

    def test_subgroups_subcommand(self, capsys):
        code = main(["subgroups", "--zeta-order", "3",
                     "--matrix", "[[z,0,0],[0,z^2,0],[0,0,1]]",
                     "--matrix", "[[0,1,0],[0,0,1],[1,0,0]]", "--json"])
        assert code == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["count"] == 19

    def test_trace_subcommand(self, capsys):
        code = main([
            "trace",
            "--algebra",
            "{ kind: quantum_affine, degrees: [1,1,1], "
            "q: [[1,-1,-1],[-1,1,-1],[-1,-1,1]] }",
            "--matrix", "[[0,-1,0],[1,0,0],[0,0,-1]]",
            "--den-bound", "3", "--json"])
        assert code == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["verdict"] == "quasi-bireflection"
        assert payload["hdet"] == "1"

    def test_betti_subcommand(self, capsys):
        code = main([
            "betti",
            "--algebra",
            "{ kind: monomial_quotient, generators: [x, y], "
            "relations: [x^2, x y, y^2] }",
            "--truncation", "6", "--json"])
        assert code == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["row_sums"] == [1, 2, 3, 4, 5, 6, 7]

    def test_bireflection_subcommand(self, capsys):
        code = main(["bireflection",
                     "--matrix", "[[0,1,0,0],[1,0,0,0],[0,0,0,1],[0,0,1,0]]",
                     "--json"])
        assert code == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload == {"rank": 2, "classical_bireflection": True}

    def test_cyc_subcommand(self, capsys):
        assert main(["cyc", "1 + 2t + t^2", "--json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["cyc_number"] == 2
        assert payload["profile"] == {"1": -2, "2": 2}

    def test_cap_exceeded_is_input_error(self, capsys):
        code = main(["molien", "--zeta-order", "12",
                     "--matrix", "[[z,0],[0,1]]", "--cap", "5"])
        assert code == 2
