"""Command-line interface: outputs and exit codes."""

import random

import pytest

from leibalg import GF, QQ, format_algebra, instantiate, parse_algebra
from leibalg import cli as cli_module
from leibalg.cli import main
from leibalg.randomgen import random_nilpotent_algebra


@pytest.fixture
def heisenberg_file(tmp_path):
    path = tmp_path / "heis.alg"
    path.write_text(format_algebra(instantiate("heisenberg3", GF(3), {})))
    return str(path)


@pytest.fixture
def cex_file(tmp_path):
    path = tmp_path / "cex.alg"
    path.write_text(format_algebra(instantiate("cex_fourdim_A1", GF(3), {})))
    return str(path)


class TestVerify:
    def test_valid(self, heisenberg_file, capsys):
        assert main(["verify", heisenberg_file]) == 0
        assert "ok" in capsys.readouterr().out

    def test_invalid_table(self, tmp_path, capsys):
        path = tmp_path / "bad.alg"
        path.write_text(
            "leibalg v1\nfield GF(5)\ndim 3\n[1,2] = 1*3\n[2,1] = -1*3\n[1,3] = 1*1\n"
        )
        assert main(["verify", str(path)]) == 1
        assert "violation" in capsys.readouterr().out

    def test_malformed_file(self, tmp_path, capsys):
        path = tmp_path / "junk.alg"
        path.write_text("not a table\n")
        assert main(["verify", str(path)]) == 2

    def test_missing_file(self):
        assert main(["verify", "/nonexistent/file.alg"]) == 2


class TestAnalyze:
    def test_output_lines(self, heisenberg_file, capsys):
        assert main(["analyze", heisenberg_file]) == 0
        out = capsys.readouterr().out.splitlines()
        assert out[0] == "field GF(3)"
        assert out[1] == "dim 3"
        assert "lower [3, 1, 0]" in out
        assert "upper [0, 1, 3]" in out
        assert "class 2" in out
        assert "coclass 1" in out
        assert "cyclic false" in out
        assert "lie true" in out


class TestMaximals:
    def test_lists_tags(self, heisenberg_file, capsys):
        assert main(["maximals", heisenberg_file]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert len(lines) == 4
        assert lines[0].startswith("[0,1]")


class TestIso:
    def test_yes(self, tmp_path, capsys):
        a = instantiate("heisenberg3", GF(3), {})
        rng = random.Random(1)
        from leibalg.randomgen import change_of_basis, random_invertible_matrix

        b = change_of_basis(a, random_invertible_matrix(rng, GF(3), 3))
        pa, pb = tmp_path / "a.alg", tmp_path / "b.alg"
        pa.write_text(format_algebra(a))
        pb.write_text(format_algebra(b))
        assert main(["iso", str(pa), str(pb)]) == 0
        assert "isomorphic" in capsys.readouterr().out

    def test_no(self, tmp_path, capsys):
        pa, pb = tmp_path / "a.alg", tmp_path / "b.alg"
        pa.write_text(format_algebra(instantiate("heisenberg3", GF(3), {})))
        pb.write_text(format_algebra(instantiate("abelian", GF(3), {"n": 3})))
        assert main(["iso", str(pa), str(pb)]) == 1


class TestProperties:
    def test_p1_true(self, heisenberg_file):
        assert main(["p1", heisenberg_file]) == 0

    def test_p1_false_with_witness(self, tmp_path, capsys):
        path = tmp_path / "a8.alg"
        path.write_text(format_algebra(instantiate("cex_A8", GF(3), {})))
        assert main(["p1", str(path)]) == 1
        assert "P1 fails" in capsys.readouterr().out

    def test_p2_false(self, cex_file, capsys):
        assert main(["p2", cex_file]) == 1
        out = capsys.readouterr().out
        assert "P2 fails" in out

    def test_p2_true(self, heisenberg_file):
        assert main(["p2", heisenberg_file]) == 0


class TestCatalogCommands:
    def test_list(self, capsys):
        assert main(["catalog", "list"]) == 0
        out = capsys.readouterr().out
        assert "cc1_case2" in out and "A1_6dim" in out

    def test_make_and_verify(self, tmp_path):
        out = tmp_path / "cc1.alg"
        code = main(
            [
                "catalog", "make", "cc1_case2",
                "--field", "GF(3)",
                "--param", "tau=1", "--param", "lambda=0", "--param", "epsilon=0",
                "-o", str(out),
            ]
        )
        assert code == 0
        algebra = parse_algebra(out.read_text())
        assert algebra.dim == 3
        assert main(["verify", str(out)]) == 0

    def test_make_rejects_bad_params(self, capsys):
        code = main(
            [
                "catalog", "make", "cc1_case2",
                "--field", "GF(5)",
                "--param", "tau=1", "--param", "lambda=1", "--param", "epsilon=1",
            ]
        )
        assert code == 2

    def test_check_reports(self, capsys):
        code = main(
            [
                "catalog", "check", "holmes_iii",
                "--field", "GF(5)",
                "--param", "gamma=2",
            ]
        )
        assert code == 0
        assert "PASS" in capsys.readouterr().out
        code = main(
            [
                "catalog", "check", "holmes_iii",
                "--field", "Q",
                "--param", "gamma=-4",
            ]
        )
        assert code == 1

    def test_unknown_entry(self):
        assert main(["catalog", "check", "nope", "--field", "Q"]) == 2


class TestDeriveAndRelations:
    def test_derive(self, tmp_path, capsys):
        from leibalg.catalog import parametric_table6
        from leibalg.formats import format_parametric

        path = tmp_path / "table6.palg"
        path.write_text(format_parametric(parametric_table6()))
        assert main(["derive", str(path)]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert sorted(lines) == sorted(
            ["gamma - f - dhat", "gamma - d + f", "gamma + d + fhat"]
        )

    def test_verify_relations(self, tmp_path, capsys):
        from leibalg.catalog import parametric_table6
        from leibalg.formats import format_parametric

        table = tmp_path / "table6.palg"
        table.write_text(format_parametric(parametric_table6()))
        rels = tmp_path / "rels.txt"
        rels.write_text("gamma - d + f\ngamma + d + fhat\ngamma - dhat - f\n")
        code = main(
            [
                "verify-relations", str(table),
                "--relations", str(rels),
                "--trials", "25",
                "--field", "GF(101)",
                "--seed", "4",
            ]
        )
        assert code == 0
        out = capsys.readouterr().out
        assert "locus pass" in out

    def test_verify_relations_fake(self, tmp_path):
        from leibalg.catalog import parametric_table6
        from leibalg.formats import format_parametric

        table = tmp_path / "table6.palg"
        table.write_text(format_parametric(parametric_table6()))
        rels = tmp_path / "rels.txt"
        rels.write_text("gamma - d - f\ngamma + d + fhat\ngamma - dhat - f\n")
        assert (
            main(
                [
                    "verify-relations", str(table),
                    "--relations", str(rels),
                    "--trials", "25",
                ]
            )
            == 1
        )


class TestReproduce:
    def test_subset_run(self, tmp_path, capsys):
        out = tmp_path / "report.txt"
        code = main(
            [
                "reproduce",
                "--fields", "3",
                "--seed", "0",
                "--only", "identity.",
                "--out", str(out),
            ]
        )
        assert code == 0
        text = out.read_text()
        assert "summary:" in text
        assert "identity.heisenberg3@GF(3)" in text
        assert "SKIP" in text.upper()  # A1_6dim over GF(3)

    def test_corrupted_entry_fails(self, monkeypatch, capsys):
        # negative control: break one catalog builder and expect exit 1
        import leibalg.catalog as catalog_module
        from dataclasses import replace

        entry = catalog_module._ENTRIES["heisenberg3"]

        def bad_builder(field, prm):
            from leibalg import LeibnizAlgebra

            return LeibnizAlgebra.from_table(
                3, field, [(1, 2, {3: 1}), (2, 1, {3: -1}), (1, 3, {1: 1})]
            )

        monkeypatch.setitem(
            catalog_module._ENTRIES, "heisenberg3", replace(entry, builder=bad_builder)
        )
        code = main(["reproduce", "--fields", "3", "--only", "identity.heisenberg3"])
        assert code == 1
        assert "FAIL" in capsys.readouterr().out

    def test_determinism_modulo_timing(self, capsys):
        import re

        def run():
            assert main(["reproduce", "--fields", "3", "--seed", "7", "--only", "relations."]) == 0
            out = capsys.readouterr().out
            return re.sub(r"\(\d+ ms\)", "(ms)", out)

        assert run() == run()

    def test_no_timing_byte_exact(self, capsys):
        def run():
            code = main(
                [
                    "reproduce", "--fields", "3", "--seed", "7",
                    "--only", "relations.", "--no-timing",
                ]
            )
            assert code == 0
            return capsys.readouterr().out

        first = run()
        assert "ms)" not in first
        assert first == run()

    def test_seed_env_fallback(self, monkeypatch, capsys):
        monkeypatch.setenv("LEIBALG_SEED", "3")
        from leibalg.cli import build_parser

        args = build_parser().parse_args(["reproduce"])
        assert args.seed == 3

    def test_bad_fields(self, capsys):
        assert main(["reproduce", "--fields", "3,x"]) == 2

    def test_unwritable_output(self, capsys):
        code = main(
            [
                "reproduce", "--fields", "3",
                "--only", "identity.heisenberg3",
                "--out", "/nonexistent-dir/report.txt",
            ]
        )
        assert code == 2

    def test_every_entry_covered_by_claims(self):
        from leibalg import list_catalog
        from leibalg.reproduce import build_claims

        ids = " ".join(c.claim_id for c in build_claims([3, 5, 7], 0))
        for entry in list_catalog():
            assert entry.name in ids


class TestUsage:
    def test_no_command(self):
        assert main([]) == 2

    def test_unknown_command(self):
        assert main(["frobnicate"]) == 2

    def test_maximals_needs_finite_field(self, tmp_path):
        path = tmp_path / "q.alg"
        path.write_text(format_algebra(instantiate("heisenberg3", QQ, {})))
        assert main(["maximals", str(path)]) == 2

    def test_internal_error_exit_code(self, heisenberg_file, monkeypatch):
        from leibalg.errors import InternalError

        def boom(args):
            raise InternalError("synthetic breach")

        monkeypatch.setitem(cli_module._COMMANDS, "analyze", boom)
        assert main(["analyze", heisenberg_file]) == 3


class TestRandomGenerator:
    def test_towers_are_valid_and_nilpotent(self):
        from leibalg import is_nilpotent

        rng = random.Random(123)
        for _ in range(20):
            algebra = random_nilpotent_algebra(rng, GF(3), rng.randrange(1, 6))
            assert algebra.check_leibniz() == []
            assert is_nilpotent(algebra)

    def test_deterministic_given_seed(self):
        a = random_nilpotent_algebra(random.Random(5), GF(2), 4)
        b = random_nilpotent_algebra(random.Random(5), GF(2), 4)
        assert a == b
