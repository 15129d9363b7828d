import io
import json
import sys

import pytest

from warpmat import (
    build_projection_matrix,
    grid_from_text,
    load_fixture_grid,
    matrix_to_text,
    parse_gauss_code,
    solve,
)
from warpmat.cli import main
from warpmat.diagrams import LabeledSequence
from warpmat.matrices import WarpingMatrix

MIXED_TREFOIL = "O1+U2+O3-U1+O2+U3-"


def run(capsys, argv, stdin=None):
    if stdin is not None:
        sys.stdin = io.StringIO(stdin)
    try:
        rc = main(argv)
    finally:
        sys.stdin = sys.__stdin__
    out, err = capsys.readouterr()
    return rc, out, err


class TestBuildCommands:
    def test_matrix_text(self, capsys):
        rc, out, err = run(capsys, ["matrix", "O1+U1+"])
        assert rc == 0
        assert sorted(out.splitlines()) == ["0 1", "1 0"]

    def test_code_from_stdin(self, capsys):
        rc, out, _ = run(capsys, ["matrix", "-"], stdin="O1+U1+\n")
        assert rc == 0 and sorted(out.splitlines()) == ["0 1", "1 0"]

    def test_signed_matrix_shows_bars(self, capsys):
        rc, out, _ = run(capsys, ["signed-matrix", "U1-O1-"])
        assert rc == 0
        assert "1- 0" in out.splitlines()

    def test_diagram_matrix_row_count(self, capsys):
        rc, out, _ = run(capsys, ["diagram-matrix", MIXED_TREFOIL])
        assert rc == 0 and len(out.splitlines()) == 7

    def test_json_format(self, capsys):
        rc, out, _ = run(capsys, ["matrix", "O1+U1+", "--format", "json"])
        payload = json.loads(out)
        assert payload["c"] == 1 and payload["kind"] == "projection"

    def test_bad_code_is_a_domain_error(self, capsys):
        rc, _, err = run(capsys, ["matrix", "garbage"])
        assert rc == 1 and err.startswith("error:")


class TestVerify:
    def test_good_matrix_passes(self, capsys, tmp_path):
        path = tmp_path / "m.txt"
        path.write_text(matrix_to_text(build_projection_matrix(parse_gauss_code(MIXED_TREFOIL))))
        rc, out, _ = run(capsys, ["verify", str(path)])
        assert rc == 0
        assert "rule i: pass" in out and "rule iv: pass" in out

    def test_rule_break_exits_nonzero(self, capsys):
        rc, out, _ = run(capsys, ["verify", "-"], stdin="0 1\n0 1\n")
        assert rc == 1 and "rule ii: fail" in out

    def test_json_report(self, capsys):
        rc, out, _ = run(capsys, ["verify", "-", "--format", "json"], stdin="0 1\n1 0\n")
        payload = json.loads(out)
        assert rc == 0 and payload["all_pass"] is True
        assert [r["rule"] for r in payload["rules"]] == ["i", "ii", "iii", "iv"]

    def test_missing_file(self, capsys):
        rc, _, err = run(capsys, ["verify", "/nonexistent/matrix.txt"])
        assert rc == 1 and err.startswith("error:")


class TestReconstruct:
    def test_diagram_matrix_round_trips_through_pipes(self, capsys):
        _, matrix_text, _ = run(capsys, ["diagram-matrix", MIXED_TREFOIL])
        rc, out, err = run(capsys, ["reconstruct", "-"], stdin=matrix_text)
        assert rc == 0
        assert out.strip() == MIXED_TREFOIL
        assert err == ""

    def test_rebuilt_matrix_is_bit_identical(self, capsys):
        _, first, _ = run(capsys, ["diagram-matrix", MIXED_TREFOIL])
        _, code, _ = run(capsys, ["reconstruct", "-"], stdin=first)
        _, second, _ = run(capsys, ["diagram-matrix", code.strip()])
        assert first == second

    def test_projection_matrix_gets_a_representative(self, capsys):
        _, matrix_text, _ = run(capsys, ["matrix", MIXED_TREFOIL])
        rc, out, err = run(capsys, ["reconstruct", "-"], stdin=matrix_text)
        assert rc == 0
        assert out.strip() == "O1+O2+O3+U1+U2+U3+"
        assert "representative" in err

    def test_undetermined_sign_note(self, capsys):
        _, matrix_text, _ = run(capsys, ["diagram-matrix", "O1-U1-"])
        rc, out, err = run(capsys, ["reconstruct", "-"], stdin=matrix_text)
        assert rc == 0 and out.strip() == "O1+U1+"
        assert "crossing 1 undetermined" in err

    def test_json_includes_undetermined_list(self, capsys):
        _, matrix_text, _ = run(capsys, ["diagram-matrix", "O1-U1-"])
        _, out, _ = run(
            capsys, ["reconstruct", "-", "--format", "json"], stdin=matrix_text
        )
        payload = json.loads(out)
        assert payload == {"gauss_code": "O1+U1+", "undetermined_signs": [1]}


class TestCanon:
    def test_moved_copies_agree(self, capsys, tmp_path):
        m = build_projection_matrix(parse_gauss_code(MIXED_TREFOIL))
        rows = [LabeledSequence(r.values[2:] + r.values[:2], r.bars[2:] + r.bars[:2]) for r in m.rows]
        rows.reverse()
        moved = WarpingMatrix(m.kind, m.c, tuple(rows))
        a, b = tmp_path / "a.txt", tmp_path / "b.txt"
        a.write_text(matrix_to_text(m))
        b.write_text(matrix_to_text(moved))
        _, out_a, _ = run(capsys, ["canon", str(a)])
        _, out_b, _ = run(capsys, ["canon", str(b)])
        assert out_a == out_b

    def test_idempotent(self, capsys):
        _, once, _ = run(capsys, ["canon", "-"], stdin="1 0\n0 1\n")
        rc, twice, _ = run(capsys, ["canon", "-"], stdin=once)
        assert rc == 0 and once == twice


class TestPuzzle:
    def test_preset_new_prints_the_fixture(self, capsys):
        rc, out, _ = run(capsys, ["puzzle", "new", "--knot", "trefoil"])
        assert rc == 0
        assert grid_from_text(out) == load_fixture_grid("trefoil")

    def test_seeded_new_is_solvable_and_unique(self, capsys):
        rc, out, _ = run(
            capsys, ["puzzle", "new", "--knot", "O1+U2+O2+U1+", "--seed", "7"]
        )
        assert rc == 0
        assert len(solve(grid_from_text(out), ("i", "ii"), limit=2)) == 1

    def test_solve_pipes_from_new(self, capsys):
        _, grid_text, _ = run(capsys, ["puzzle", "new", "--knot", "trefoil"])
        rc, out, err = run(capsys, ["puzzle", "solve", "-"], stdin=grid_text)
        assert rc == 0
        assert grid_from_text(out).is_full
        assert "1 solution(s)" in err

    def test_solve_unsatisfiable(self, capsys):
        rc, out, err = run(capsys, ["puzzle", "solve", "-"], stdin="0 0\n. .\n")
        assert rc == 1 and out == "" and "0 solution(s)" in err

    def test_check_clean(self, capsys):
        _, grid_text, _ = run(capsys, ["puzzle", "new", "--knot", "trefoil"])
        rc, out, _ = run(capsys, ["puzzle", "check", "-"], stdin=grid_text)
        assert rc == 0 and "no violations" in out

    def test_check_reports_cells(self, capsys):
        rc, out, _ = run(capsys, ["puzzle", "check", "-"], stdin="0 0\n. .\n")
        assert rc == 1 and "rule i" in out and "(0,0)" in out

    def test_json_solve_payload(self, capsys):
        _, grid_text, _ = run(capsys, ["puzzle", "new", "--knot", "trefoil"])
        rc, out, _ = run(
            capsys, ["puzzle", "solve", "-", "--format", "json"], stdin=grid_text
        )
        payload = json.loads(out)
        assert rc == 0 and payload["count"] == 1 and payload["limit"] == 2


class TestEnumerate:
    def test_three_crossing_classes(self, capsys):
        rc, out, _ = run(capsys, ["enumerate", "--c", "3"])
        assert rc == 0
        assert out.splitlines()[0] == "3 equivalence classes"

    def test_json_count(self, capsys):
        rc, out, _ = run(capsys, ["enumerate", "--c", "2", "--format", "json"])
        assert rc == 0 and json.loads(out)["count"] == 1

    def test_rules_must_include_quota(self, capsys):
        rc, _, err = run(capsys, ["enumerate", "--c", "2", "--rules", "i"])
        assert rc == 1 and "error:" in err


class TestUsage:
    def test_unknown_command_exits_two(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["bogus"])
        assert exc.value.code == 2
        capsys.readouterr()

    def test_missing_required_option(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["puzzle", "new"])
        assert exc.value.code == 2
        capsys.readouterr()
