import pytest
from hypothesis import given

from knotforge import knot_table
from knotforge.alexander import alexander_matrix, alexander_polynomial, build_matrix, knot_determinant
from knotforge.diagram import UNKNOT, mirror, reverse
from knotforge.laurent import ONE, LaurentPoly, eval_at_int, normalize_units, units_equal
from knotforge.notation import parse_gauss, parse_pd

from conftest import walked_diagrams


def test_builtin_values(knot_name):
    e = knot_table.entry(knot_name)
    d = e.diagram()
    assert normalize_units(alexander_polynomial(d)) == e.expected_delta
    assert knot_determinant(d) == e.expected_determinant


def test_delta_is_one_at_one(knot_name):
    assert abs(eval_at_int(alexander_polynomial(knot_table.get(knot_name)), 1)) == 1


def test_unknot_conventions():
    assert alexander_polynomial(UNKNOT) == ONE
    assert knot_determinant(UNKNOT) == 1
    with pytest.raises(ValueError):
        build_matrix(UNKNOT)


def test_trefoil_matrix_rows():
    m = build_matrix(knot_table.get("3_1"))
    assert m.n == 3
    one_minus_t = LaurentPoly.parse("1 - t")
    for row in m.rows:
        assert sorted(map(str, row)) == sorted(map(str, [one_minus_t, LaurentPoly.parse("t"), LaurentPoly(-1)]))


def test_links_are_rejected():
    with pytest.raises(ValueError):
        alexander_polynomial(parse_pd("X[1,3,2,4] X[3,1,4,2]"))


def test_row_column_independence(knot_name):
    d = knot_table.get(knot_name)
    n = len(d.pd)
    ref = normalize_units(alexander_polynomial(d))
    for r in range(n):
        for c in range(n):
            assert normalize_units(alexander_polynomial(d, r, c)) == ref


def test_alexander_matrix_records_deletion():
    m = alexander_matrix(knot_table.get("4_1"), 1, 2)
    assert (m.deleted_row, m.deleted_col) == (1, 2)
    assert m.minor.n == 3


def test_gauss_numbering_gives_same_delta():
    d = parse_pd("X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]")
    g = parse_gauss("O1+ U2+ O3+ U1+ O2+ U3+")
    assert units_equal(alexander_polynomial(d), alexander_polynomial(g))


@given(walked_diagrams())
def test_mirror_and_reverse_keep_delta(item):
    _, d = item
    delta = alexander_polynomial(d)
    assert units_equal(alexander_polynomial(mirror(d)), delta)
    assert units_equal(alexander_polynomial(reverse(d)), delta)
    # symmetric up to units
    assert units_equal(delta, LaurentPoly({-e: c for e, c in delta.coeffs.items()}))
