import pytest

from knotforge import knot_table
from knotforge.laurent import LaurentPoly, eval_at_int, units_equal


def test_names_and_lookup():
    assert knot_table.NAMES == ("unknot", "1_1", "2_1", "3_1", "4_1", "5_1", "5_2", "6_1", "6_2", "6_3")
    with pytest.raises(KeyError, match="available"):
        knot_table.entry("7_1")


def test_crossing_counts_match_names():
    for e in knot_table.entries():
        if e.name != "unknot":
            assert len(e.diagram().pd) == int(e.name.split("_")[0])


def test_expected_determinants_match_expected_delta():
    for e in knot_table.entries():
        assert abs(eval_at_int(e.expected_delta, -1)) == e.expected_determinant
        assert e.expected_determinant % 2 == 1


def test_fixture_matrix_shape():
    m = knot_table.printed_fixture_matrix()
    assert m.n == 4
    assert m[2, 2] == LaurentPoly.parse("t - t^2")


def test_printed_rows_parse():
    rows = knot_table.printed_rows()
    assert [r.row for r in rows] == list(range(1, 12))
    assert rows[0].printed == "2-3t+3t^2-t^3"
    assert rows[1].printed_poly.min_degree == -1
    for r in rows:
        assert r.left in knot_table.NAMES and r.right in knot_table.NAMES
        assert not units_equal(r.printed_poly, knot_table.entry(r.left).expected_delta)
