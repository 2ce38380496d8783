import json
import subprocess
import sys

import pytest

from schurtoeplitz.cli import main


def run(args, capsys):
    code = main(args)
    out, err = capsys.readouterr()
    return code, out, err


class TestVerify:
    def test_lemma_product_example(self, capsys):
        code, out, _ = run(["verify", "lemma-product", "--n", "3", "--sigma", "2", "--tau", "1",
                            "--trials", "30", "--seed", "7"], capsys)
        report = json.loads(out)
        assert code == 0
        assert report["passed"] == 30 and report["failed"] == 0
        assert report["first_counterexample"] is None
        assert report["config"]["seed"] == 7

    def test_special_algebra(self, capsys):
        code, _, _ = run(["verify", "special-algebra", "--trials", "5"], capsys)
        assert code == 0

    def test_special_algebra_needs_two_dim_radical(self, capsys):
        code, _, err = run(["verify", "special-algebra", "--sigma", "1", "--tau", "1"], capsys)
        assert code == 2 and "sigma*tau" in err

    @pytest.mark.parametrize("args", [
        ["verify", "lemma-product", "--n", "1"],
        ["verify", "nonsense"],
        ["verify", "maximality", "--sigma", "3", "--tau", "1"],
        ["verify", "maximality", "--trials", "0"],
        ["verify", "maximality", "--seed", "-1"],
        ["verify", "maximality", "--seed", str(2**64)],
        ["verify", "maximality", "--format", "xml"],
        ["frobnicate"],
    ])
    def test_bad_input_exit_2(self, args, capsys):
        code, _, err = run(args, capsys)
        assert code == 2 and "error" in err

    def test_deterministic_output(self, capsys):
        args = ["verify", "pair-equivalence", "--trials", "6", "--seed", "123"]
        _, first, _ = run(args, capsys)
        _, second, _ = run(args, capsys)
        assert first == second

    def test_text_format(self, capsys):
        code, out, _ = run(["verify", "structured-product", "--trials", "3", "--format", "text"], capsys)
        assert code == 0 and out.rstrip().endswith("status: PASS")

    def test_relaxed_shape(self, capsys):
        code, _, _ = run(["verify", "fab-closure", "--sigma", "3", "--tau", "1", "--relaxed",
                          "--n", "2", "--trials", "3"], capsys)
        assert code == 0


class TestExampleAndClassify:
    def test_example1_bundle(self, tmp_path, capsys):
        path = tmp_path / "ex1.json"
        assert run(["example", "1", "--output", str(path)], capsys)[0] == 0
        bundle = json.loads(path.read_text())
        assert set(bundle["fixtures"]) == {"as-displayed", "as-defined"}
        assert "erratum" in bundle
        code, out, _ = run(["classify", "--input", str(path)], capsys)
        results = json.loads(out)["results"]
        assert code == 0
        assert results["as-displayed"]["verdict"] == "contained_in_type_ii"
        assert results["as-displayed"]["dimension"] == 3
        assert results["as-defined"]["verdict"] == "type_i"
        assert results["as-defined"]["dimension"] == 9

    def test_example2_pipeline(self, tmp_path, capsys):
        src, dst = tmp_path / "ex2.json", tmp_path / "out.json"
        run(["example", "2", "--mu", "2", "--output", str(src)], capsys)
        assert run(["classify", "--input", str(src), "--output", str(dst)], capsys)[0] == 0
        res = json.loads(dst.read_text())
        assert res["verdict"] == "type_i" and res["dimension"] == 9

    def test_example3_pipeline(self, tmp_path, capsys):
        src = tmp_path / "ex3.json"
        run(["example", "3", "--lambda", "2", "--a", "1/2", "--output", str(src)], capsys)
        code, out, _ = run(["classify", "--input", str(src), "--format", "text"], capsys)
        assert code == 0 and "verdict: type_ii" in out

    def test_mu_zero(self, capsys):
        code, _, err = run(["example", "2", "--mu", "0"], capsys)
        assert code == 2 and "mu" in err

    def test_rejected_is_still_exit_0(self, tmp_path, capsys):
        gens = {"generators": [
            {"n": 2, "sigma": 1, "tau": 1, "blocks": {"-1": {"sigma": 1, "tau": 1, "lambda": "1"}}},
            {"n": 2, "sigma": 1, "tau": 1, "blocks": {"1": {"sigma": 1, "tau": 1, "lambda": "1"}}},
        ]}
        path = tmp_path / "g.json"
        path.write_text(json.dumps(gens))
        code, out, _ = run(["classify", "--input", str(path)], capsys)
        assert code == 0 and json.loads(out)["verdict"] == "rejected"

    def test_truncated_json(self, tmp_path, capsys):
        src = tmp_path / "ex2.json"
        run(["example", "2", "--output", str(src)], capsys)
        bad = tmp_path / "bad.json"
        bad.write_text(src.read_text()[:250])
        code, _, err = run(["classify", "--input", str(bad)], capsys)
        assert code == 2 and "line" in err and "column" in err

    def test_missing_file(self, tmp_path, capsys):
        code, _, err = run(["classify", "--input", str(tmp_path / "nope.json")], capsys)
        assert code == 2 and "cannot read" in err

    def test_index_violation(self, tmp_path, capsys):
        path = tmp_path / "g.json"
        path.write_text(json.dumps({"generators": [
            {"n": 2, "sigma": 1, "tau": 1, "blocks": {"2": {"sigma": 1, "tau": 1, "lambda": "1"}}}]}))
        assert run(["classify", "--input", str(path)], capsys)[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "schurtoeplitz", "verify", "lemma-product", "--n", "1"],
                          capture_output=True, text=True)
    assert proc.returncode == 2
    proc = subprocess.run([sys.executable, "-m", "schurtoeplitz", "example", "3"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["example"] == 3
