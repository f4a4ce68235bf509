import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from concordium import fixtures
from concordium.laurent import ONE, T1, T2, ZERO, LaurentPoly, normalize_up_to_units
from concordium.polymatrix import (
    EmptyMatrixError,
    PolyMatrix,
    alexander_polynomial,
    det,
    is_alexander_trivial,
    matrix_from_json,
    matrix_to_json,
)

from .oracles import as_dict, leibniz_det
from .strategies import random_poly

PAPER_A = PolyMatrix(
    [
        [0, 1, 0, 0],
        [T1, 0, 0, 0],
        [0, 0, 0, 1],
        [0, 0, T2, T2 - 1],
    ]
)

small_polys = st.lists(
    st.tuples(st.integers(-2, 2), st.integers(-2, 2), st.integers(-3, 3)), max_size=3
).map(LaurentPoly)


def square(n, entries=small_polys):
    return st.lists(st.lists(entries, min_size=n, max_size=n), min_size=n, max_size=n).map(PolyMatrix)


def leibniz(m: PolyMatrix):
    return leibniz_det([[as_dict(e) for e in row] for row in m.rows()])


def test_fixture_is_paper_matrix():
    assert fixtures.matrix_A() == PAPER_A


class TestDet:
    def test_paper_matrix(self):
        assert det(PAPER_A) == T1 * T2
        assert as_dict(T1 * T2) == leibniz(PAPER_A)

    @pytest.mark.parametrize("n", range(1, 9))
    def test_identity(self, n):
        assert det(PolyMatrix.identity(n)) == ONE

    def test_identity_max_dim(self):
        assert det(PolyMatrix.identity(16)) == ONE

    def test_empty(self):
        with pytest.raises(EmptyMatrixError):
            det(PolyMatrix([]))

    def test_non_square_rejected(self):
        with pytest.raises(ValueError):
            PolyMatrix([[1, 2], [3]])

    def test_random_integer_3x3_against_leibniz(self, rng):
        for _ in range(50):
            m = PolyMatrix([[rng.randint(-20, 20) for _ in range(3)] for _ in range(3)])
            a = [[m[i, j].coeff(0, 0) for j in range(3)] for i in range(3)]
            six_terms = (
                a[0][0] * a[1][1] * a[2][2]
                + a[0][1] * a[1][2] * a[2][0]
                + a[0][2] * a[1][0] * a[2][1]
                - a[0][2] * a[1][1] * a[2][0]
                - a[0][0] * a[1][2] * a[2][1]
                - a[0][1] * a[1][0] * a[2][2]
            )
            assert det(m) == six_terms
            assert as_dict(det(m)) == leibniz(m)

    @settings(max_examples=60, deadline=None)
    @given(st.integers(1, 4).flatmap(square))
    def test_agrees_with_leibniz(self, m):
        assert as_dict(det(m)) == leibniz(m)

    @settings(max_examples=60, deadline=None)
    @given(st.integers(2, 4).flatmap(square), st.data())
    def test_row_swap_negates(self, m, data):
        i, j = data.draw(st.lists(st.integers(0, m.n - 1), min_size=2, max_size=2, unique=True))
        rows = m.rows()
        rows[i], rows[j] = rows[j], rows[i]
        assert det(PolyMatrix(rows)) == -det(m)

    @settings(max_examples=60, deadline=None)
    @given(st.integers(2, 4).flatmap(square), st.data())
    def test_duplicate_row_vanishes(self, m, data):
        i, j = data.draw(st.lists(st.integers(0, m.n - 1), min_size=2, max_size=2, unique=True))
        rows = m.rows()
        rows[j] = rows[i]
        assert det(PolyMatrix(rows)) == ZERO

    @settings(max_examples=40, deadline=None)
    @given(square(3), square(3))
    def test_multiplicative(self, m, n):
        assert det(m @ n) == det(m) * det(n)

    @settings(max_examples=40, deadline=None)
    @given(st.integers(1, 3).flatmap(square), st.integers(1, 3).flatmap(square))
    def test_block_diagonal(self, a, b):
        n = a.n + b.n
        rows = [[ZERO] * n for _ in range(n)]
        for i in range(a.n):
            for j in range(a.n):
                rows[i][j] = a[i, j]
        for i in range(b.n):
            for j in range(b.n):
                rows[a.n + i][a.n + j] = b[i, j]
        assert det(PolyMatrix(rows)) == det(a) * det(b)

    def test_paper_matrix_is_block_diagonal(self):
        top = PolyMatrix([[0, 1], [T1, 0]])
        bottom = PolyMatrix([[0, 1], [T2, T2 - 1]])
        assert det(top) == -T1
        assert det(bottom) == -T2
        assert det(PAPER_A) == det(top) * det(bottom)

    def test_dense_laurent_5x5(self, rng):
        m = PolyMatrix([[random_poly(rng, max_terms=3, span=2, cmax=3) for _ in range(5)] for _ in range(5)])
        assert as_dict(det(m)) == leibniz(m)


class TestAlexander:
    def test_paper_matrix(self):
        assert alexander_polynomial(PAPER_A) == ONE

    def test_zero(self):
        assert alexander_polynomial(PolyMatrix([[0]])) == ZERO

    def test_diagonal(self):
        m = PolyMatrix([[T1 - 1, 0], [0, T2 - 1]])
        product = (T1 - 1) * (T2 - 1)
        assert product == T1 * T2 - T1 - T2 + 1
        assert alexander_polynomial(m) == normalize_up_to_units(product)
        assert alexander_polynomial(m) == 1 - T1 - T2 + T1 * T2

    def test_trivial_paper(self):
        assert is_alexander_trivial(PAPER_A)

    def test_trivial_zero(self):
        assert not is_alexander_trivial(PolyMatrix([[0]]))

    def test_trivial_unit_diagonal(self):
        m = PolyMatrix([[T1, 0, 0], [0, T2, 0], [0, 0, -1]])
        assert det(m) == -T1 * T2
        assert is_alexander_trivial(m)


class TestJson:
    def test_round_trip_paper(self):
        assert matrix_from_json(json.loads(json.dumps(matrix_to_json(PAPER_A)))) == PAPER_A

    @pytest.mark.parametrize(
        "bad",
        [{"n": 2, "entries": [[{"terms": []}]]}, {"entries": []}, {"n": -1, "entries": []}],
    )
    def test_malformed(self, bad):
        with pytest.raises(ValueError):
            matrix_from_json(bad)
