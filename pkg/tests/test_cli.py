import csv
import io
import json

import pytest

from symtoric import mutation
from symtoric.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestGenerators:
    def test_n3_rows(self, capsys):
        code, out, _ = run(capsys, "generators", "--n", "3")
        assert code == 0
        assert len(out.strip().splitlines()) == 6

    def test_n2_json(self, capsys):
        code, out, _ = run(capsys, "generators", "--n", "2", "--json")
        rows = json.loads(out)
        assert code == 0 and [tuple(r["vector"]) for r in rows] == [(1, 0), (1, 2), (1, 1)]

    def test_bad_n(self, capsys):
        code, _, err = run(capsys, "generators", "--n", "1")
        assert code == 2 and "error" in err


class TestChi:
    @pytest.mark.parametrize("n, d, chi", [("3", "1,1,1", 1), ("3", "2,2,2", 14), ("2", "2,3", -7)])
    def test_examples(self, capsys, n, d, chi):
        code, out, _ = run(capsys, "chi", "--n", n, "--d", d)
        assert code == 0
        assert f"chi={chi} agreement=true" in out

    def test_json_schema(self, capsys):
        code, out, _ = run(capsys, "chi", "--n", "3", "--d", "2,2,2", "--json")
        data = json.loads(out)
        assert code == 0
        assert data["schema"] == 1 and data["n"] == 3 and data["d"] == [2, 2, 2]
        assert data["chi"] == {"face_sum": 14, "closed": 14, "product": 14}
        assert data["eu"] == {"variety": 1, "function": -13}
        assert data["milnor"] == {"mu": 9, "chi_affine": 10, "identity_ok": True}
        assert data["attestations"] == {"nondegenerate": True, "isolated_critical": True}

    def test_json_and_text_agree(self, capsys):
        _, text, _ = run(capsys, "chi", "--d", "4,1,3")
        _, js, _ = run(capsys, "chi", "--d", "4,1,3", "--json")
        chi = json.loads(js)["chi"]
        assert f"face_sum={chi['face_sum']} closed={chi['closed']} product={chi['product']}" in text

    def test_attestation_flags(self, capsys):
        _, out, _ = run(capsys, "chi", "--d", "1,1", "--json", "--no-nondegenerate")
        assert json.loads(out)["attestations"]["nondegenerate"] is False

    def test_bad_degree(self, capsys):
        code, _, err = run(capsys, "chi", "--n", "2", "--d", "0,1")
        assert code == 2

    def test_n_mismatch(self, capsys):
        assert run(capsys, "chi", "--n", "3", "--d", "1,1")[0] == 2

    def test_garbage_d(self, capsys):
        assert run(capsys, "chi", "--d", "a,b")[0] == 2

    def test_missing_d(self, capsys):
        assert run(capsys, "chi", "--n", "3")[0] == 2

    def test_support_file(self, capsys, tmp_path):
        path = tmp_path / "f.json"
        path.write_text(json.dumps({"n": 3, "monomials": [[1, 2], [2, 2], [3, 2], [5, 7]]}))
        code, out, _ = run(capsys, "chi", "--support", str(path), "--json")
        assert code == 0 and json.loads(out)["chi"]["face_sum"] == 14

    def test_support_missing_ray(self, capsys, tmp_path):
        path = tmp_path / "f.json"
        path.write_text(json.dumps({"n": 2, "monomials": [[1, 3]]}))
        code, _, err = run(capsys, "chi", "--support", str(path))
        assert code == 2 and "rays" in err

    def test_support_outside_newton_warns(self, capsys, tmp_path):
        path = tmp_path / "f.json"
        path.write_text(json.dumps({"n": 3, "monomials": [[1, 2], [2, 2], [3, 2], [4, 1]]}))
        code, _, err = run(capsys, "chi", "--support", str(path))
        assert code == 0 and "warning" in err

    def test_missing_file(self, capsys, tmp_path):
        assert run(capsys, "chi", "--support", str(tmp_path / "nope.json"))[0] == 2

    def test_mutation_gives_exit_3(self, capsys, monkeypatch):
        monkeypatch.setenv(mutation.ENV_VAR, "type2_lattice")
        assert run(capsys, "chi", "--d", "2,2,2")[0] == 3


class TestEu:
    @pytest.mark.parametrize("n, eu", [("5", 1), ("4", 0)])
    def test_variety(self, capsys, n, eu):
        code, out, _ = run(capsys, "eu", "--n", n)
        assert code == 0 and f"Eu={eu}" in out

    def test_function(self, capsys):
        code, out, _ = run(capsys, "eu", "--n", "3", "--d", "2,2,2")
        assert code == 0 and "Eu_f=-13" in out

    def test_json(self, capsys):
        _, out, _ = run(capsys, "eu", "--n", "3", "--d", "2,2,2", "--json")
        assert json.loads(out)["eu"] == {"variety": 1, "function": -13}

    def test_missing_n(self, capsys):
        assert run(capsys, "eu")[0] == 2


class TestMilnor:
    def test_n2(self, capsys):
        code, out, _ = run(capsys, "milnor", "--n", "2", "--d", "3,2")
        assert code == 0 and "mu=6" in out

    def test_n3(self, capsys):
        code, out, _ = run(capsys, "milnor", "--n", "3", "--d", "2,2,2")
        assert code == 0 and "mu=9" in out and "identity=OK" in out

    def test_d1_too_small(self, capsys):
        code, _, err = run(capsys, "milnor", "--n", "2", "--d", "1,1")
        assert code == 2 and "d_1" in err

    def test_json(self, capsys):
        _, out, _ = run(capsys, "milnor", "--d", "3,2", "--json")
        data = json.loads(out)
        assert data["milnor"] == {"mu": 6, "chi_affine": -5, "identity_ok": True}

    def test_mutation_gives_exit_3(self, capsys, monkeypatch):
        monkeypatch.setenv(mutation.ENV_VAR, "affine_type1")
        code, _, err = run(capsys, "milnor", "--d", "2,2,2")
        assert code == 3 and "identity" in err


class TestVerify:
    def test_default(self, capsys):
        code, out, _ = run(capsys, "verify", "--n-max", "5")
        assert code == 0 and "all checks passed" in out

    def test_json(self, capsys):
        code, out, _ = run(capsys, "verify", "--n-max", "4", "--json", "--samples", "10")
        data = json.loads(out)
        assert code == 0 and data["ok"] and data["schema"] == 1 and data["mutation"] is None
        assert {c["name"] for c in data["checks"]} >= {"volumes", "chi_paths", "milnor"}

    @pytest.mark.parametrize("name", sorted(mutation.MUTATIONS))
    def test_each_mutation_fails(self, capsys, monkeypatch, name):
        monkeypatch.setenv(mutation.ENV_VAR, name)
        code, out, _ = run(capsys, "verify", "--n-max", "4", "--samples", "10")
        assert code == 3 and "FAILED" in out

    def test_unknown_mutation(self, capsys, monkeypatch):
        monkeypatch.setenv(mutation.ENV_VAR, "bogus")
        assert run(capsys, "verify", "--n-max", "3")[0] == 2

    def test_bad_n_max(self, capsys):
        assert run(capsys, "verify", "--n-max", "1")[0] == 2


class TestTable:
    def test_parity(self, capsys):
        code, out, _ = run(capsys, "table", "parity", "--n", "2..10", "--csv")
        rows = list(csv.DictReader(io.StringIO(out)))
        assert code == 0
        assert [int(r["eu"]) for r in rows] == [0, 1] * 4 + [0]

    def test_parity_single(self, capsys):
        _, out, _ = run(capsys, "table", "parity", "--n", "2..2", "--json")
        assert json.loads(out) == [{"n": 2, "eu": 0, "chi_linear": 0}]

    def test_chi_grid(self, capsys):
        code, out, _ = run(capsys, "table", "chi-grid", "--n", "3", "--d-max", "3", "--csv")
        rows = list(csv.DictReader(io.StringIO(out)))
        assert code == 0 and len(rows) == 27
        row = next(r for r in rows if r["d"] == "2,2,2")
        assert row["chi_face_sum"] == row["chi_closed"] == row["chi_product"] == "14"
        assert row["eu_f"] == "-13"

    def test_aligned_text_matches_json(self, capsys):
        _, text, _ = run(capsys, "table", "chi-grid", "--n", "2", "--d-max", "2")
        _, js, _ = run(capsys, "table", "chi-grid", "--n", "2", "--d-max", "2", "--json")
        lines = text.strip().splitlines()[1:]
        for line, row in zip(lines, json.loads(js)):
            assert line.split() == [str(row[k]) for k in ("n", "d", "chi_face_sum", "chi_closed", "chi_product", "eu_f")]

    def test_bad_range(self, capsys):
        assert run(capsys, "table", "parity", "--n", "x..y")[0] == 2
        assert run(capsys, "table", "parity", "--n", "1..3")[0] == 2


def test_module_entry_point():
    import subprocess
    import sys

    res = subprocess.run([sys.executable, "-m", "symtoric", "eu", "--n", "7"], capture_output=True, text=True)
    assert res.returncode == 0 and "Eu=1" in res.stdout
