import csv
import io
import json
from fractions import Fraction

import pytest

from cccenergy import report


class TestFormatFraction:
    def test_integer(self):
        assert report.format_fraction(Fraction(8)) == "8/1"

    def test_proper_fraction(self):
        assert report.format_fraction(Fraction(44, 3)) == "44/3"


class TestRunCell:
    def test_n1_cell_all_checks_pass(self):
        row = report.run_cell(2, 2, 1)
        assert row.oracle_ran
        assert row.oracle_agrees is True
        assert row.passed
        assert row.warnings == []
        assert row.decomposition == "3K2"
        assert row.energies.e == row.energies.le == row.energies.le_plus == 6

    def test_n2_cell_fails_honestly(self):
        # closed forms disagree with the brute-force graph at (2, 2, 2)
        row = report.run_cell(2, 2, 2)
        assert row.oracle_ran
        assert row.oracle_agrees is False
        assert not row.passed
        assert row.checks["decomposition"] is False
        assert row.checks["ordering_self_consistent"] is True

    def test_swapped_cell_annotated_not_failed(self):
        row = report.run_cell(2, 1, 2)
        assert row.passed  # m < n rows never fail
        assert row.oracle_agrees is False
        assert any(w.startswith("m<n") for w in row.warnings)
        assert any(w.startswith("oracle-disagrees") for w in row.warnings)
        # the annotation carries the brute-force numbers
        disagree = next(w for w in row.warnings if w.startswith("oracle-disagrees"))
        assert "3K2" in disagree and "E=6/1" in disagree

    def test_canonicalized_swapped_cell_agrees(self):
        row = report.run_cell(2, 1, 2, canonicalize=True)
        assert (row.m, row.n) == (2, 1)
        assert row.oracle_agrees is True
        assert row.passed

    def test_oracle_skipped_over_cap(self):
        row = report.run_cell(2, 3, 1, max_order=16)
        assert not row.oracle_ran
        assert row.oracle_agrees is None
        assert any(w.startswith("oracle-skipped") for w in row.warnings)

    def test_no_oracle(self):
        row = report.run_cell(2, 2, 1, oracle=False)
        assert not row.oracle_ran
        assert row.warnings == []

    def test_charpoly_skipped_when_graph_too_large(self):
        row = report.run_cell(3, 2, 1, charpoly_limit=4)
        assert any(w.startswith("charpoly-skipped") for w in row.warnings)
        assert "char_poly_spectra" not in row.checks

    def test_classification_uncovered_annotation(self):
        row = report.run_cell(3, 3, 3, oracle=False)
        assert any(w.startswith("classification-uncovered") for w in row.warnings)
        assert "classification_table" not in row.checks


class TestGridCells:
    def test_order_cap_and_m_ge_n(self):
        cells = report.grid_cells([2], max_order=64)
        assert cells == [
            (2, 1, 1), (2, 2, 1), (2, 2, 2), (2, 3, 1), (2, 3, 2), (2, 4, 1),
        ]

    def test_include_swapped(self):
        cells = report.grid_cells([2], max_order=32, include_swapped=True)
        assert (2, 1, 2) in cells

    def test_ranges(self):
        cells = report.grid_cells([2, 3], max_order=4096, n_range=(1, 1), m_range=(2, 3))
        assert cells == [(2, 2, 1), (2, 3, 1), (3, 2, 1), (3, 3, 1)]

    def test_acceptance_grid_size(self):
        # p in {2, 3, 5}, m >= n >= 1, order <= 2^15
        cells = report.grid_cells([2, 3, 5], max_order=1 << 15)
        assert len(cells) == 71
        assert len(cells) >= 12


@pytest.fixture(scope="module")
def rows():
    return report.run_grid([(2, 1, 1), (2, 2, 1), (2, 2, 2)])


class TestSerialization:
    def test_csv_columns_and_values(self, rows):
        text = report.to_csv(rows)
        parsed = list(csv.DictReader(io.StringIO(text)))
        assert list(parsed[0]) == report.CSV_COLUMNS
        assert len(parsed) == 3
        first = parsed[0]
        assert first["p"] == "2" and first["decomposition"] == "3K1"
        last = parsed[2]
        assert last["LE_plus"] == "44/3"
        assert last["oracle_agrees"] == "false"

    def test_json_round_trip(self, rows):
        data = json.loads(report.to_json(rows))
        assert [r["decomposition"] for r in data] == ["3K1", "3K2", "2K4+2K2"]
        assert data[1]["E"] == "6/1"

    def test_export_deterministic(self, rows, tmp_path):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        report.export(rows, "csv", str(a))
        report.export(report.run_grid([(2, 1, 1), (2, 2, 1), (2, 2, 2)]), "csv", str(b))
        assert a.read_bytes() == b.read_bytes()

    def test_export_rejects_unknown_format(self, rows, tmp_path):
        with pytest.raises(ValueError):
            report.export(rows, "xml", str(tmp_path / "x"))
