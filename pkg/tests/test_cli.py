"""Command-line interface: subcommands, output formats, and exit codes."""

import json

import pytest

from braidcable.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestEval:
    def test_burau_generator(self, capsys):
        code, out, _ = run(capsys, "eval", "--rep", "burau", "--n", "2", "--word", "1")
        assert code == 0
        assert "q - q^-1" in out

    def test_bigelow_is_identity(self, capsys):
        code, out, _ = run(
            capsys, "eval", "--rep", "burau", "--n", "5", "--word", "@bigelow", "--json"
        )
        assert code == 0
        m = json.loads(out)
        for i, row in enumerate(m):
            for j, entry in enumerate(row):
                assert entry == ({"0": "1"} if i == j else {})

    def test_sym_empty_word(self, capsys):
        code, out, _ = run(capsys, "eval", "--rep", "sym", "--n", "2", "--word", "")
        assert code == 0
        assert out.splitlines() == ["[ 1  0 ]", "[ 0  1 ]"]

    def test_modifiers(self, capsys):
        code, out, _ = run(
            capsys,
            "eval",
            "--rep",
            "burau, twist=2, frame=q^2",
            "--n",
            "2",
            "--word",
            "1",
        )
        assert code == 0
        assert "q^4" in out

    def test_sum_descriptor(self, capsys):
        code, out, _ = run(
            capsys,
            "eval",
            "--rep",
            "sum(burau; sym)",
            "--n",
            "2",
            "--word",
            "1",
            "--json",
        )
        assert code == 0
        assert len(json.loads(out)) == 4

    def test_series_order(self, capsys):
        code, out, _ = run(
            capsys,
            "eval",
            "--rep",
            "sym",
            "--n",
            "2",
            "--word",
            "1",
            "--series-order",
            "2",
        )
        assert code == 0
        assert "O(h^2)" in out

    def test_bad_letter_exits_1(self, capsys):
        code, _, err = run(capsys, "eval", "--rep", "burau", "--n", "3", "--word", "5")
        assert code == 1
        assert "error" in err

    def test_unknown_rep_exits_1(self, capsys):
        code, _, err = run(capsys, "eval", "--rep", "nope", "--n", "2", "--word", "1")
        assert code == 1

    def test_bigelow_needs_five_strands(self, capsys):
        code, _, err = run(
            capsys, "eval", "--rep", "burau", "--n", "4", "--word", "@bigelow"
        )
        assert code == 1


class TestCable:
    def test_doubled_generator(self, capsys):
        code, out, _ = run(capsys, "cable", "--n", "2", "--r", "2", "--word", "1")
        assert code == 0
        assert out.strip() == "2 1 3 2"

    def test_r1_identity(self, capsys):
        code, out, _ = run(capsys, "cable", "--n", "3", "--r", "1", "--word", "1 -2")
        assert code == 0
        assert out.strip() == "1 -2"

    def test_empty_word(self, capsys):
        code, out, _ = run(capsys, "cable", "--n", "2", "--r", "2", "--word", "")
        assert code == 0
        assert out.strip() == ""

    def test_json_output(self, capsys):
        code, out, _ = run(
            capsys, "cable", "--n", "2", "--r", "2", "--word", "1", "--json"
        )
        assert json.loads(out) == {"n": 4, "word": [2, 1, 3, 2]}


class TestDecompose:
    def test_global_verified(self, capsys):
        code, out, _ = run(capsys, "decompose", "--n", "2", "--r", "2")
        assert code == 0
        assert "verified: True" in out

    def test_infinitesimal_json(self, capsys):
        code, out, _ = run(
            capsys, "decompose", "--n", "2", "--r", "2", "--infinitesimal", "--json"
        )
        assert code == 0
        obj = json.loads(out)
        assert obj["verified"] is True
        assert obj["blocks"][1]["multiplicity"] == 1

    def test_emit_intertwiner(self, capsys):
        code, out, _ = run(
            capsys,
            "decompose",
            "--n",
            "2",
            "--r",
            "2",
            "--json",
            "--emit-intertwiner",
        )
        obj = json.loads(out)
        assert len(obj["intertwiner"]) == 4

    def test_usage_error_on_small_n(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["decompose", "--n", "1", "--r", "2"])
        assert exc.value.code == 2

    def test_usage_error_on_small_r(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["decompose", "--n", "2", "--r", "1"])
        assert exc.value.code == 2


class TestKernel:
    def test_generator_not_in_kernel(self, capsys):
        code, out, _ = run(capsys, "kernel", "--n", "2", "--r", "2", "--word", "1")
        assert code == 0
        obj = json.loads(out)
        assert obj["burau"] is False and obj["cabled"] is False and obj["agree"] is True

    def test_xi13_not_in_kernel(self, capsys):
        code, out, _ = run(
            capsys, "kernel", "--n", "3", "--r", "2", "--word", "2 1 1 -2"
        )
        obj = json.loads(out)
        assert obj["burau"] is False and obj["cabled"] is False and obj["agree"] is True

    def test_bigelow(self, capsys):
        code, out, _ = run(
            capsys, "kernel", "--n", "5", "--r", "2", "--word", "@bigelow"
        )
        assert code == 0
        obj = json.loads(out)
        assert obj["burau"] is True and obj["cabled"] is True and obj["agree"] is True


class TestSelftest:
    def test_quick_run_passes(self, capsys):
        code, out, _ = run(capsys, "selftest", "--quick")
        assert code == 0
        lines = [l for l in out.splitlines() if l.strip()]
        assert len(lines) == 8
        assert all(l.startswith("PASS") for l in lines)
