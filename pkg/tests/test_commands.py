import json

import pytest
from click.testing import CliRunner

from nestrad.commands import EXIT_CORPUS, EXIT_INPUT, EXIT_OK, EXIT_REFUTED, cli
from nestrad.parser.lower import parse_element

S = "root(3,1/9) - root(3,2/9) + root(3,4/9)"


@pytest.fixture
def runner():
    return CliRunner()


def test_verify(runner):
    result = runner.invoke(cli, ["verify", "root(3, root(3,2) - 1)", S])
    assert result.exit_code == EXIT_OK
    assert result.output.startswith("[verified-exact]")
    assert "(interesting)" in result.output

    lhs = "root(3, 28917 + 64638*root(3,7))"
    result = runner.invoke(cli, ["verify", lhs, "12*root(3,49) + 21 - 27*root(3,7)"])
    assert result.exit_code == EXIT_REFUTED
    assert result.output.startswith("[refuted-exact]")


def test_verify_json(runner):
    args = ["verify", "--json", "sqrt(3 - 2*sqrt(2))", "1 - sqrt(2)"]
    result = runner.invoke(cli, args)
    assert result.exit_code == EXIT_REFUTED
    data = json.loads(result.output)
    assert data["status"] == "refuted-branch"
    assert data["interesting"] is False


def test_input_errors(runner):
    result = runner.invoke(cli, ["verify", "root(3, 2", "1"])
    assert result.exit_code == EXIT_INPUT
    assert "position 9" in result.output
    assert "         ^" in result.output

    result = runner.invoke(cli, ["verify", "root(2,-1)", "1"])
    assert result.exit_code == EXIT_INPUT
    assert "negative" in result.output

    result = runner.invoke(cli, ["eval", "sqrt(1 - 2)"])
    assert result.exit_code == EXIT_INPUT
    assert "Error:" in result.output


def test_interesting(runner):
    result = runner.invoke(cli, ["interesting", "root(3, root(3,2) - 1)", S])
    assert result.exit_code == EXIT_OK
    assert result.output.strip() == "2 terms under the root, 3 on the right: interesting"


def test_pow(runner):
    result = runner.invoke(cli, ["pow", S, "24"])
    assert result.exit_code == EXIT_OK
    assert result.output.strip() == "1 + 100 * 2^(1/3) - 80 * 2^(2/3)"


def test_eval(runner):
    result = runner.invoke(cli, ["eval", "-p", "64", "root(3,2)"])
    assert result.exit_code == EXIT_OK
    assert result.output.startswith("1.2599210498948")

    env = {"NESTRAD_PRECISION": "128"}
    result = runner.invoke(cli, ["eval", "--json", "root(3,2)"], env=env)
    assert json.loads(result.output)["precision"] == 128


def test_latex(runner):
    result = runner.invoke(cli, ["latex", "root(3, root(3,2) - 1)"])
    assert result.output.strip() == "\\sqrt[3]{-1 + \\sqrt[3]{2}}"


def test_geom(runner):
    result = runner.invoke(cli, ["geom", "asc", "2"])
    assert result.exit_code == EXIT_OK
    assert result.output.startswith("[verified-exact]")

    result = runner.invoke(cli, ["geom", "--json", "desc", "2", "--unscaled"])
    assert result.exit_code == EXIT_OK
    assert json.loads(result.output)["lhs"] == "root(3, -9/32 + 9/32 * 2^(1/3))"


def test_chain(runner):
    result = runner.invoke(cli, ["chain", "1 + sqrt(2)", "4", "5", "6"])
    assert result.exit_code == EXIT_OK
    lines = result.output.strip().splitlines()
    assert len(lines) == 5
    assert all(line.startswith("[verified-exact]") for line in lines)


def test_search_pow(runner):
    args = ["search-pow", S, "2", "30", "2", "--expect", "3", "--expect", "8"]
    result = runner.invoke(cli, args)
    assert result.exit_code == EXIT_OK
    assert "note:" in result.output

    result = runner.invoke(cli, ["search-pow", "--json", S, "2", "10", "2"])
    degrees = [row["n"] for row in json.loads(result.output)["hits"]]
    assert {2, 3, 8} <= set(degrees)


def test_search_coeff(runner):
    args = ["search-coeff", "--json", "-r", "7", "--vanish", "root(4,343)"]
    args += ["root(4,7)", "?*sqrt(7)", "?*root(4,343)", "?*7"]
    result = runner.invoke(cli, args)
    assert result.exit_code == EXIT_OK
    rows = {(row["x"], row["y"], row["z"]): row for row in json.loads(result.output)}
    radicand = rows[("7", "1", "-1")]["radicand"]
    assert parse_element(radicand) == parse_element("406 + 84*root(4,7) - 90*sqrt(7)")


def test_search_quotient(runner):
    result = runner.invoke(cli, ["search-quotient", "--json", "4", "2", "10", "5"])
    assert result.exit_code == EXIT_OK
    forms = json.loads(result.output)["forms"]
    assert {"x": "7", "y": "4", "z": "3", "w": "1", "b": 3} in forms


def test_dioph(runner):
    result = runner.invoke(cli, ["dioph", "100", "5", "--any-base"])
    assert result.output.splitlines() == ["b=5 z=1 w=1", "b=80 z=2 w=1"]


def test_denest(runner):
    args = ["denest", "root(3,2) - 1", "3", "-r", "3", "-d", "3", "-e", "3:3"]
    result = runner.invoke(cli, args)
    assert result.exit_code == EXIT_OK
    assert parse_element(result.output.strip()) == parse_element(S)

    result = runner.invoke(cli, ["denest", "2", "2", "-e", "two"])
    assert result.exit_code == 2
    assert "PRIME:DEGREE" in result.output

    result = runner.invoke(cli, ["denest", "2", "2"])
    assert result.output.startswith("no denesting")


@pytest.mark.slow
def test_corpus_default(runner):
    result = runner.invoke(cli, ["corpus", "--json"])
    assert result.exit_code == EXIT_OK
    summary = json.loads(result.output)["summary"]
    assert summary["unexpected"] == 0
    assert summary["errors"] == 0


def test_corpus_exit_codes(runner, tmp_path):
    entry = {"id": "x", "lhs": "sqrt(3 + 2*sqrt(2))", "rhs": "1 + sqrt(2)"}
    good = tmp_path / "good.jsonl"
    good.write_text(json.dumps(dict(entry, expect="verified")) + "\n", encoding="utf-8")
    assert runner.invoke(cli, ["corpus", "--no-progress", str(good)]).exit_code == EXIT_OK

    wrong = tmp_path / "wrong.jsonl"
    wrong.write_text(json.dumps(dict(entry, expect="refuted")) + "\n", encoding="utf-8")
    assert runner.invoke(cli, ["corpus", "--no-progress", str(wrong)]).exit_code == (
        EXIT_REFUTED
    )

    empty = tmp_path / "empty.jsonl"
    empty.write_text("", encoding="utf-8")
    assert runner.invoke(cli, ["corpus", str(empty)]).exit_code == EXIT_OK

    broken = tmp_path / "broken.jsonl"
    broken.write_text("{oops\n", encoding="utf-8")
    result = runner.invoke(cli, ["corpus", "--no-progress", str(broken)])
    assert result.exit_code == EXIT_CORPUS
    assert "line 1: invalid JSON" in result.output

    unparsable = tmp_path / "unparsable.jsonl"
    unparsable.write_text(
        json.dumps(dict(entry, rhs="1 + sqrt(2", expect="verified")) + "\n",
        encoding="utf-8",
    )
    result = runner.invoke(cli, ["corpus", "--no-progress", str(unparsable)])
    assert result.exit_code == EXIT_CORPUS
    assert "line 1: rhs does not parse" in result.output
