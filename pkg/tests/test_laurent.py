from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from knotforge.laurent import (
    ONE,
    T,
    ZERO,
    LaurentPoly,
    PolyMatrix,
    determinant,
    eval_at_int,
    exact_quotient,
    normalize_units,
    units_equal,
)

from conftest import laurent_polys

P = laurent_polys()


@given(P, P, P)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + ZERO == a and a * ONE == a
    assert a - a == ZERO


@given(P.filter(bool))
def test_normalize_idempotent_and_unit_equal(p):
    n = normalize_units(p)
    assert normalize_units(n) == n
    assert units_equal(n, p)
    assert n.min_degree == 0 and n.coefficient(0) > 0


def test_zero_has_no_normal_form():
    with pytest.raises(ValueError):
        normalize_units(ZERO)
    assert units_equal(ZERO, ZERO) and not units_equal(ZERO, ONE)


@given(P, st.integers(-4, 4), st.sampled_from([1, -1]))
def test_units_equal_ignores_units(p, k, s):
    assert units_equal(p, p.shift(k) * s)


@given(P, P, st.integers(-3, 3).filter(bool))
def test_evaluation_is_multiplicative(a, b, x):
    assert eval_at_int(a * b, x) == eval_at_int(a, x) * eval_at_int(b, x)
    assert eval_at_int(a + b, x) == eval_at_int(a, x) + eval_at_int(b, x)


@given(P, P.filter(bool))
def test_exact_quotient_inverts_product(a, b):
    assert exact_quotient(a * b, b) == a


def test_exact_quotient_rejects_remainder():
    with pytest.raises(ValueError):
        exact_quotient(LaurentPoly.parse("1 + t^2"), LaurentPoly.parse("1 + t"))


@given(P)
def test_render_parse_roundtrip(p):
    assert LaurentPoly.parse(p.render()) == p


@pytest.mark.parametrize(
    "text, expected",
    [
        ("2t", {1: 2}),
        ("3*t^2", {2: 3}),
        ("t^{-1}", {-1: 1}),
        ("t^(-1)", {-1: 1}),
        ("-t^-2 + 4", {-2: -1, 0: 4}),
        ("3-t^{-1}-5t+5t^2-t^3", {0: 3, -1: -1, 1: -5, 2: 5, 3: -1}),
        ("0", {}),
    ],
)
def test_parse_forms(text, expected):
    assert LaurentPoly.parse(text) == LaurentPoly(expected)


def test_render_format():
    assert LaurentPoly.parse("2 - 3t + 3t^2 - t^3").render() == "2 - 3t + 3t^2 - t^3"
    assert (T ** -1).render() == "t^-1"
    assert (-T).render() == "-t"


def test_normalize_negative_exponents():
    assert normalize_units(LaurentPoly.parse("t^-2 - t^-1")) == LaurentPoly.parse("1 - t")


def _cofactor_det(rows):
    """Leibniz expansion, a deliberately naive oracle."""
    n = len(rows)
    if n == 0:
        return ONE
    total = ZERO
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = ONE
        for i, j in enumerate(perm):
            term = term * rows[i][j]
        total = total + (term if inv % 2 == 0 else -term)
    return total


@st.composite
def matrices(draw):
    n = draw(st.integers(0, 6))
    entry = laurent_polys(max_terms=2, span=2, bound=3)
    return [[draw(entry) for _ in range(n)] for _ in range(n)]


@given(matrices())
def test_determinant_matches_cofactor_oracle(rows):
    assert determinant(PolyMatrix(rows)) == _cofactor_det(rows)


@given(matrices(), st.integers(-3, 3).filter(bool))
def test_determinant_commutes_with_evaluation(rows, x):
    if not rows:
        return
    n = len(rows)
    numeric = [[eval_at_int(e, x) for e in row] for row in rows]
    # Fraction Gaussian elimination
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if numeric[r][c] != 0), None)
        if piv is None:
            det = Fraction(0)
            break
        if piv != c:
            numeric[c], numeric[piv] = numeric[piv], numeric[c]
            det = -det
        det *= numeric[c][c]
        for r in range(c + 1, n):
            f = numeric[r][c] / numeric[c][c]
            numeric[r] = [a - f * b for a, b in zip(numeric[r], numeric[c])]
    assert eval_at_int(determinant(PolyMatrix(rows)), x) == det


def test_singular_matrix_has_zero_determinant():
    row = [LaurentPoly.parse("1 - t"), T]
    assert determinant(PolyMatrix([row, row])) == ZERO


def test_matrix_parse_and_minor():
    m = PolyMatrix.parse("1 - t, 0\n# comment\nt, -1\n")
    assert m.n == 2
    assert m.minor(1, 1) == PolyMatrix([[LaurentPoly.parse("1 - t")]])
    assert PolyMatrix.parse(m.render()) == m
