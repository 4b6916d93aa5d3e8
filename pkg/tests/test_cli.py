"""End-to-end tests for the binmat command-line interface."""

import pytest

from binmat.catalog import get
from binmat.cli import main, matroid_to_bmx, parse_bmx


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestBmxFormat:
    def test_round_trip(self):
        m = get("S10").matroid
        text = matroid_to_bmx(m, comment="S10")
        assert text.splitlines()[0] == "bmx 1"
        assert parse_bmx(text) == m

    def test_round_trip_all_paper_matrices(self):
        for name in ("F7", "F7*", "S8", "P9", "E4", "E5", "T12", "PG(3,2)"):
            m = get(name).matroid
            assert parse_bmx(matroid_to_bmx(m)) == m

    def test_comments_and_blank_lines_ignored(self):
        text = "bmx 1\n# a comment\n\n2 3\n101\n011\n"
        m = parse_bmx(text)
        assert (m.rank, m.size) == (2, 3)

    def test_malformed_inputs_rejected(self):
        for bad in (
            "bmx 2\n2 3\n101\n011\n",  # unknown version
            "2 3\n101\n011\n",  # missing magic
            "bmx 1\n2 3\n10\n011\n",  # short row
            "bmx 1\n2 3\n1x1\n011\n",  # bad character
            "bmx 1\n2 3\n101\n",  # missing row
        ):
            with pytest.raises(Exception):
                parse_bmx(bad)


class TestCommands:
    def test_list(self, capsys):
        code, out, _ = run(capsys, "list")
        assert code == 0
        assert "S10" in out and "T12" in out and "PG(3,2)" in out

    def test_cat_emits_parseable_bmx(self, capsys):
        code, out, _ = run(capsys, "cat", "P9")
        assert code == 0
        assert parse_bmx(out) == get("P9").matroid

    def test_lambda_catalog_name(self, capsys):
        code, out, _ = run(capsys, "lambda", "S8", "1,2,5,6")
        assert code == 0
        assert out.strip().endswith("2")

    def test_lambda_bmx_file(self, capsys, tmp_path):
        path = tmp_path / "s8.bmx"
        path.write_text(matroid_to_bmx(get("S8").matroid))
        code, out, _ = run(capsys, "lambda", str(path), "1,2,5,6")
        assert code == 0
        assert out.strip().endswith("2")

    def test_exts(self, capsys):
        code, out, _ = run(capsys, "exts", "F7*")
        assert code == 0
        assert "[1110]" in out

    def test_exts_with_exclusion(self, capsys):
        code, out, _ = run(capsys, "exts", "S8", "--exclude", "P9,P9*")
        assert code == 0
        assert "[1110]" in out

    def test_minor_yes_and_no(self, capsys):
        code, out, _ = run(capsys, "minor", "S10", "P9")
        assert code == 0 and out.startswith("yes")
        code, out, _ = run(capsys, "minor", "E4", "S10")
        assert code == 0 and out.startswith("no")

    def test_splitter(self, capsys):
        code, out, _ = run(capsys, "splitter", "S8", "--exclude", "P9,P9*")
        assert code == 0
        assert "no" in out.lower() or "not" in out.lower()

    def test_verify_single_claim(self, capsys):
        code, out, _ = run(
            capsys, "verify-paper", "--claim", "f7star.extension-class-count"
        )
        assert code == 0
        assert "pass" in out

    def test_verify_discrepancy_exit_codes(self, capsys):
        code, _, _ = run(capsys, "verify-paper", "--claim", "f7star.s8-generators")
        assert code == 0  # discrepancies alone do not fail the run
        code, _, _ = run(
            capsys, "verify-paper", "--strict", "--claim", "f7star.s8-generators"
        )
        assert code == 1  # unless strict mode is requested

    def test_verify_json_flag(self, capsys):
        code, out, _ = run(
            capsys, "verify-paper", "--json", "--claim", "f7star.extension-class-count"
        )
        assert code == 0
        import json

        payload = json.loads(out)
        assert payload["summary"]["pass"] == 1


class TestErrorHandling:
    def test_unknown_catalog_name_exits_2(self, capsys):
        code, _, err = run(capsys, "cat", "U24")
        assert code == 2
        assert err

    def test_unknown_claim_id_exits_2(self, capsys):
        code, _, err = run(capsys, "verify-paper", "--claim", "nope")
        assert code == 2
        assert err

    def test_malformed_bmx_file_exits_2(self, capsys, tmp_path):
        path = tmp_path / "bad.bmx"
        path.write_text("not a matrix\n")
        code, _, err = run(capsys, "lambda", str(path), "1,2")
        assert code == 2

    def test_bad_set_argument_exits_2(self, capsys):
        code, _, _ = run(capsys, "lambda", "S8", "1,x")
        assert code == 2

    def test_usage_error_exits_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["lambda"])
        assert exc.value.code == 2
