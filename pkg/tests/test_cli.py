import os
import subprocess
import sys

import pytest

CMD = [sys.executable, "-m", "coregcalc.cli"]


def run(*args, env_extra=None):
    env = dict(os.environ)
    if env_extra:
        env.update(env_extra)
    return subprocess.run(
        CMD + list(args), capture_output=True, text=True, env=env
    )


class TestSetCommands:
    def test_plus(self):
        r = run("plus", "--I", "1/3,2/5", "--bounds", "terms=4")
        assert r.returncode == 0
        assert r.stdout == "0\n1/3\n2/5\n2/3\n11/15\n4/5\n1\n"

    def test_dset(self):
        r = run("dset", "--I", "1/2", "--bounds", "terms=4,index=2")
        assert r.returncode == 0
        assert r.stdout == "0\n1/2\n3/4\n1\n"

    def test_ddset(self):
        r = run("ddset", "--I", "0", "--d", "1/2", "--bounds", "terms=4,index=2")
        assert r.returncode == 0
        assert r.stdout == "1/2\n3/4\n1\n"


class TestMembership:
    def test_true_exits_zero(self):
        r = run("mem", "plus", "11/15", "--I", "1/3,2/5")
        assert r.returncode == 0 and r.stdout == "true\n"

    def test_false_exits_one(self):
        r = run("mem", "plus", "7/15", "--I", "1/3,2/5")
        assert r.returncode == 1 and r.stdout == "false\n"

    def test_lct0_reports_witness(self):
        r = run("mem", "lct0", "1/2", "--I", "1/2", "--J", "1")
        assert r.returncode == 0
        assert r.stdout == "true c0(i=1/2,j=1)\n"

    def test_lct1_found(self):
        r = run("mem", "lct1", "1/30", "--J", "1", "--triple-bound", "5")
        assert r.returncode == 0
        assert r.stdout.startswith("true c1(p=")

    def test_lct1_not_found_exits_one(self):
        r = run("mem", "lct1", "9999/10000", "--J", "1", "--triple-bound", "3")
        assert r.returncode == 1
        assert "not-found-within-bound" in r.stdout

    def test_ddset_requires_shift(self):
        r = run("mem", "ddset", "1/2", "--I", "0")
        assert r.returncode == 2
        assert r.stderr.startswith("error:")


class TestThresholdSets:
    def test_lct0_with_integer_value_cap(self):
        r = run("lct0", "--I", "1/2", "--J", "1", "--bounds", "value=6")
        assert r.returncode == 0
        assert r.stdout == "0\n1/6\n1/5\n1/4\n1/3\n1/2\n1\n"

    def test_lct0_witnesses_replayable(self):
        r = run("lct0", "--I", "1/2", "--J", "1", "--bounds", "value=4", "--witness")
        assert r.returncode == 0
        for line in r.stdout.splitlines():
            value, witness = line.split("\t")
            assert witness.startswith("c0(i=")

    def test_lct1_contains_platonic_minimum(self):
        r = run("lct1", "--J", "1", "--bounds", "terms=4,index=5")
        assert r.returncode == 0
        assert "1/30" in r.stdout.splitlines()

    def test_p1_oracle_degree_one(self):
        r = run("p1-oracle", "--I", "1/2", "--J", "1", "--degree", "1",
                "--bounds", "terms=3,index=4")
        assert r.returncode == 0
        assert "1/2" in r.stdout.splitlines()

    def test_acc_above(self):
        r = run("acc-above", "--I", "1/2", "--J", "1", "--c", "0", "--t", "1/3")
        assert r.returncode == 0
        lines = r.stdout.splitlines()
        assert lines[0].startswith("#")
        assert lines[1:] == ["1/3", "1/2", "1"]

    def test_accum(self):
        r = run("accum", "--I", "1", "--J", "1", "--c", "1", "--bounds", "terms=4,index=5")
        assert r.returncode == 0
        assert r.stdout  # candidates with family annotations
        for line in r.stdout.splitlines():
            assert "\t" in line or line.startswith("#")


class TestFileCommands:
    def test_dualcx(self, tmp_path):
        f = tmp_path / "strat.txt"
        f.write_text("dim 4\ndivisors 1\n")
        r = run("dualcx", str(f))
        assert r.returncode == 0
        assert r.stdout == "reg 0, coreg 3\n"

    def test_dualcx_max_convention(self, tmp_path):
        f = tmp_path / "strat.txt"
        f.write_text("dim 3\ndivisors 3\nstratum 1,2 1\n")
        r = run("dualcx", str(f), "--max-convention")
        assert r.stdout == "reg 0, coreg 2\nlargest-simplex dimension 1\n"

    def test_toric_lct_with_oracle(self, tmp_path):
        f = tmp_path / "cone.txt"
        f.write_text("dim 2\n1 0\n1 2\nb: 0 1/2\nc: 1 1\n")
        r = run("toric-lct", str(f), "--oracle", "8")
        assert r.returncode == 0
        assert r.stdout == "1/2\noracle 1/2 (agrees)\n"

    def test_missing_file_exits_two(self):
        r = run("toric-lct", "/no/such/file")
        assert r.returncode == 2 and r.stderr.startswith("error:")


class TestLemmaChecks:
    def test_ddi(self):
        r = run("lemma-check", "ddi", "--I", "1/2", "--bounds", "terms=4,index=6")
        assert r.returncode == 0 and r.stdout == "true\n"

    def test_dd_monotone(self):
        r = run("lemma-check", "dd-monotone", "--I", "0", "--d", "1/2",
                "--bounds", "terms=4,index=3")
        assert r.returncode == 0 and r.stdout == "true\n"

    def test_dd_monotone_needs_shift(self):
        r = run("lemma-check", "dd-monotone", "--I", "0")
        assert r.returncode == 2


class TestRobustness:
    def test_bad_rational_exits_two(self):
        r = run("mem", "plus", "0.5", "--I", "1/2")
        assert r.returncode == 2 and r.stderr.startswith("error:")

    def test_unknown_bounds_key_exits_two(self):
        r = run("plus", "--I", "1/2", "--bounds", "depth=3")
        assert r.returncode == 2

    def test_deterministic_across_hash_seeds(self):
        outs = set()
        for seed in ("0", "1", "424242"):
            r = run("lct1", "--I", "1/2,1/3", "--J", "1,1/2",
                    "--bounds", "terms=3,index=3", "--witness",
                    env_extra={"PYTHONHASHSEED": seed})
            assert r.returncode == 0
            outs.add(r.stdout)
        assert len(outs) == 1
