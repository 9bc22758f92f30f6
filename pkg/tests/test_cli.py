import json

import pytest

from abelcodes.cli import (
    EXIT_BUDGET,
    EXIT_FALSIFIED,
    EXIT_HYPOTHESIS,
    EXIT_OK,
    EXIT_USAGE,
    RunConfig,
    UsageError,
    main,
    parse_budget,
    parse_group_spec,
    run,
)


class TestGroupSpecParsing:
    def test_single_integer_pq(self):
        shape = parse_group_spec("15")
        assert shape.kind == "pq"
        assert (shape.p, shape.m, shape.q, shape.n) == (3, 1, 5, 1)

    def test_two_factor_powers(self):
        shape = parse_group_spec("9x25")
        assert shape.kind == "prime_power"
        assert (shape.p, shape.m, shape.q, shape.n) == (3, 2, 5, 2)

    def test_caret_form(self):
        shape = parse_group_spec("3^2 x 5^1")
        assert shape.kind == "prime_power"
        assert (shape.p, shape.m, shape.q, shape.n) == (3, 2, 5, 1)

    def test_three_primes(self):
        shape = parse_group_spec("3x5x11")
        assert shape.kind == "three_primes"
        assert shape.primes == (3, 5, 11)

    def test_single_integer_three_primes(self):
        assert parse_group_spec("165").kind == "three_primes"

    def test_single_integer_prime_power_pair(self):
        shape = parse_group_spec("45")
        assert shape.kind == "prime_power"
        assert (shape.p, shape.m, shape.q, shape.n) == (3, 2, 5, 1)

    @pytest.mark.parametrize("bad", ["", "8", "9", "27", "4x9", "3x3", "105x2", "abc"])
    def test_rejected_specs(self, bad):
        with pytest.raises(UsageError):
            parse_group_spec(bad)


class TestBudget:
    def test_power_notation(self):
        assert parse_budget("2^20") == 1 << 20

    def test_plain_integer(self):
        assert parse_budget("4096") == 4096

    def test_minimum_enforced(self):
        with pytest.raises(UsageError):
            parse_budget("512")


class TestRun:
    def test_verify_c15(self):
        config = RunConfig(group_spec="15", analyses=("verify",), budget=1 << 12)
        code, report, text = run(config)
        assert code == EXIT_OK
        assert report["verify"]["passed"]
        assert "verification passed" in text

    def test_hypothesis_failure(self):
        config = RunConfig(group_spec="35", analyses=("verify",))
        code, report, _ = run(config)
        assert code == EXIT_HYPOTHESIS
        assert not report["hypotheses"]["satisfied"]

    def test_override_runs_with_warnings(self):
        # (5, 11) fails only the coprimality condition; the construction survives
        config = RunConfig(
            group_spec="55", analyses=("dims",), budget=1 << 12, override=True
        )
        code, report, _ = run(config)
        assert report["hypotheses"]["failures"]
        assert code in (EXIT_OK, EXIT_FALSIFIED)

    def test_override_cannot_save_a_broken_construction(self):
        # 2 has order 3 mod 7, so the block construction degenerates
        config = RunConfig(
            group_spec="35", analyses=("dims",), budget=1 << 12, override=True
        )
        code, report, _ = run(config)
        assert code == EXIT_HYPOTHESIS
        assert any("construction failed" in f for f in report["hypotheses"]["failures"])

    def test_budget_refusal_exit(self):
        config = RunConfig(
            group_spec="143", analyses=("distribution",), budget=1 << 10
        )
        code, report, _ = run(config)
        assert code == EXIT_BUDGET
        assert report["distributions"]["e3"]["refused"]

    def test_distribution_c33(self):
        config = RunConfig(group_spec="33", analyses=("distribution",), budget=1 << 12)
        code, report, _ = run(config)
        assert code == EXIT_OK
        assert report["distributions"]["e3"] == {
            "12": 165, "14": 165, "16": 165, "18": 330, "20": 165, "22": 33,
        }

    def test_theory_values_carry_source_labels(self):
        config = RunConfig(group_spec="33", analyses=("weights",), budget=1 << 12)
        code, report, _ = run(config)
        assert code == EXIT_OK
        for label, entry in report["weights"].items():
            theory = entry["theory"]
            if theory["kind"] != "none":
                assert theory["source"], label


class TestMain:
    def test_json_output_is_deterministic_across_threads(self, capsys):
        outputs = []
        for threads in ("1", "2", "8"):
            assert main(["33", "--distribution", "--format", "json",
                         "--threads", threads]) == EXIT_OK
            outputs.append(capsys.readouterr().out)
        assert outputs[0] == outputs[1] == outputs[2]
        parsed = json.loads(outputs[0])
        assert "distributions" in parsed

    def test_missing_group_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main([])
        assert exc.value.code == EXIT_USAGE

    def test_flag_and_positional_agree(self, capsys):
        assert main(["15", "-g", "15", "--dims"]) == EXIT_OK
        capsys.readouterr()

    def test_export_writes_json(self, tmp_path, capsys):
        path = tmp_path / "report.json"
        assert main(["15", "--idempotents", "--export", str(path)]) == EXIT_OK
        capsys.readouterr()
        payload = json.loads(path.read_text())
        assert payload["group"]["order"] == 15
        e3 = payload["idempotents"]["e3"]
        assert len(e3["hex"]) == 4  # two little-endian bytes
        assert e3["predicted_dimension"] == 4

    def test_exported_hex_reconstructs_the_elements(self, tmp_path, capsys):
        from abelcodes.group_algebra import AbelianGroup, AlgebraElement
        from abelcodes.idempotents import family_pq

        path = tmp_path / "family.json"
        assert main(["33", "--idempotents", "--export", str(path)]) == EXIT_OK
        capsys.readouterr()
        payload = json.loads(path.read_text())
        group = AbelianGroup(payload["group"]["factor_orders"])
        fam = family_pq(3, 11)
        for label, entry in payload["idempotents"].items():
            rebuilt = AlgebraElement.from_hex(group, entry["hex"])
            assert rebuilt == fam.elements[label]
            assert rebuilt.support_ranks() == entry["support_ranks"]

    def test_default_run_prints_summary(self, capsys):
        assert main(["15"]) == EXIT_OK
        out = capsys.readouterr().out
        assert "idempotents" in out and "dimensions" in out
