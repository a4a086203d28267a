import json
from io import StringIO
from pathlib import Path

import pytest
from django.core.management import call_command
from django.core.management.base import CommandError

from eisenstein_cohomology.kostant.representatives import enumerate_kostant
from eisenstein_cohomology.kostant.schemas import KostantRepSchema
from eisenstein_cohomology.weyl.rootsys import RankContext

GOLDEN_DIR = Path(__file__).parent / "golden"


def run(*args: str) -> str:
    out = StringIO()
    call_command(*args, stdout=out)
    return out.getvalue()


class TestTableCommand:
    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_golden_csv(self, k: int):
        output = run("table", "--n", "3", "--k", str(k), "--lambda", "0,0,0", "--format", "csv")
        assert output == (GOLDEN_DIR / f"table_n3_k{k}.csv").read_text(encoding="utf-8")

    def test_json_rows(self):
        rows = json.loads(run("table", "--n", "3", "--k", "1"))
        assert len(rows) == 6
        row = next(r for r in rows if r["I"] == [3])
        assert row["t"] == {"twice": 1}
        assert row["mu"] == [{"twice": 0}, {"twice": 2}, {"twice": 2}]
        assert row["self_dual"] is True

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_json_rows_carry_the_representative(self, k: int):
        rows = json.loads(run("table", "--n", "3", "--k", str(k)))
        reps = [KostantRepSchema.model_validate(row).to_rep() for row in rows]
        expected = enumerate_kostant(RankContext(3, k))
        assert sorted(rep.pair.sort_key() for rep in reps) == [rep.pair.sort_key() for rep in expected]
        by_pair = {rep.pair: rep for rep in expected}
        for rep in reps:
            assert rep.w == by_pair[rep.pair].w
            assert rep.length == by_pair[rep.pair].length

    def test_siegel_row_count(self):
        assert len(json.loads(run("table", "--n", "3", "--k", "3", "--lambda", "0,0,0"))) == 8

    @pytest.mark.parametrize("k", [1, 2, 3])
    @pytest.mark.parametrize("fmt", ["json", "csv", "markdown"])
    def test_deterministic(self, k: int, fmt: str):
        args = ("table", "--n", "3", "--k", str(k), "--lambda", "0,0,0", "--format", fmt)
        assert run(*args) == run(*args)

    def test_markdown_header(self):
        output = run("table", "--n", "2", "--k", "1", "--format", "markdown")
        assert output.splitlines()[0] == "| n | k | I | J | length | t_twice | mu | self_dual | family |"
        assert len(output.splitlines()) == 2 + 4

    def test_out_file(self, tmp_path):
        target = tmp_path / "table.csv"
        assert run("table", "--n", "3", "--k", "1", "--format", "csv", "--out", str(target)) == ""
        assert target.read_text(encoding="utf-8") == (GOLDEN_DIR / "table_n3_k1.csv").read_text(encoding="utf-8")

    def test_non_dominant_lambda(self):
        with pytest.raises(CommandError, match="dominant") as exc_info:
            run("table", "--n", "3", "--k", "1", "--lambda", "1,2,0")
        assert exc_info.value.returncode == 2

    def test_invalid_context(self):
        with pytest.raises(CommandError) as exc_info:
            run("table", "--n", "3", "--k", "4")
        assert exc_info.value.returncode == 2

    def test_lambda_rank_mismatch(self):
        with pytest.raises(CommandError) as exc_info:
            run("table", "--n", "3", "--k", "1", "--lambda", "1,0")
        assert exc_info.value.returncode == 2


class TestClassifyCommand:
    def test_half(self):
        rows = json.loads(run("classify", "--n", "3", "--k", "1", "--lambda", "0,0,0", "--t", "1/2"))
        assert [(row["I"], row["J"], row["family"]) for row in rows] == [([3], [], ["half"])]

    def test_one_iii(self):
        rows = json.loads(run("classify", "--n", "3", "--k", "2", "--lambda", "1,0,0", "--t", "2"))
        families = {(tuple(row["I"]), tuple(row["J"])): row["family"] for row in rows}
        assert families[((1,), (2,))] == ["one_iii"]

    def test_quarter_is_empty(self):
        assert json.loads(run("classify", "--n", "3", "--k", "1", "--lambda", "0,0,0", "--t", "1/4")) == []

    def test_malformed_t(self):
        with pytest.raises(CommandError) as exc_info:
            run("classify", "--n", "3", "--k", "1", "--t", "half")
        assert exc_info.value.returncode == 2


class TestDegreesCommand:
    def test_gl(self):
        payload = json.loads(run("degrees", "--op", "gl", "--k", "3"))
        assert payload == {"op": "gl", "inputs": {"k": 3}, "result": {"lo": 2, "hi": 3}}

    def test_residual_window(self):
        payload = json.loads(run("degrees", "--op", "residual-window", "--n", "3", "--k", "1", "--t", "1/2"))
        assert payload["inputs"]["t"] == "1/2"
        assert payload["result"] == {"lo": 5, "hi": 5}

    def test_residual_degree_csv(self):
        output = run(
            "degrees", "--op", "residual-degree", "--n", "3", "--k", "1", "--q", "6", "--lw", "3", "--format", "csv"
        )
        assert output == "op,n,k,l,q,lw,t,lo,hi,degree\nresidual-degree,3,1,,6,3,,,,5\n"

    def test_missing_input(self):
        with pytest.raises(CommandError, match="--lw") as exc_info:
            run("degrees", "--op", "regular-window", "--n", "3", "--k", "1")
        assert exc_info.value.returncode == 2

    def test_unsupported_window(self):
        with pytest.raises(CommandError, match="No residual window") as exc_info:
            run("degrees", "--op", "residual-window", "--n", "3", "--k", "1", "--t", "1")
        assert exc_info.value.returncode == 2
