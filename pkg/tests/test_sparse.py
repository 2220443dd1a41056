"""Yale codec round-trips, the sparsity metric, and exact products."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import dense_matmul
from ringua.errors import FormatError, RinguaError
from ringua.sparse import (
    CsrMatrix,
    csr_from_json,
    csr_multiply,
    dense_from_json,
    from_yale,
    sparsity,
    to_yale,
    zero_fraction,
)


class TestEncode:
    def test_diagonal(self):
        c = to_yale([[1, 0], [0, 2]])
        assert c.data == (1, 2)
        assert c.indptr == (0, 1, 2)
        assert c.indices == (0, 1)

    def test_all_zero(self):
        c = to_yale([[0, 0, 0]] * 3)
        assert c.data == () and c.indices == ()
        assert c.indptr == (0, 0, 0, 0)

    def test_row_scan_order(self):
        c = to_yale([[0, 5, 0], [7, 0, 0]])
        assert c.data == (5, 7)
        assert c.indptr == (0, 1, 2)
        assert c.indices == (1, 0)

    def test_ragged_rejected(self):
        with pytest.raises(FormatError):
            to_yale([[1, 2], [3]])

    def test_fraction_values(self):
        c = to_yale([[Fraction(1, 3), 0], [0, Fraction(2, 2)]])
        assert c.data == (Fraction(1, 3), 1)


class TestDecode:
    def test_inverse_of_encode_example(self):
        c = CsrMatrix(2, 2, (1, 2), (0, 1, 2), (0, 1))
        assert from_yale(c) == [[1, 0], [0, 2]]

    def test_empty_csr_is_zero_matrix(self):
        c = CsrMatrix(2, 2, (), (0, 0, 0), ())
        assert from_yale(c) == [[0, 0], [0, 0]]

    def test_invariant_violations_named(self):
        with pytest.raises(FormatError, match=r"IA\[m\]"):
            CsrMatrix(2, 2, (1,), (0, 1, 2), (0,))
        with pytest.raises(FormatError, match="nondecreasing"):
            CsrMatrix(2, 2, (1,), (0, 2, 1), (0,))
        with pytest.raises(FormatError, match="strictly increasing"):
            CsrMatrix(1, 3, (1, 2), (0, 2), (1, 1))
        with pytest.raises(FormatError, match="explicit zero"):
            CsrMatrix(1, 2, (0,), (0, 1), (0,))
        with pytest.raises(FormatError, match="outside"):
            CsrMatrix(1, 2, (1,), (0, 1), (5,))

    def test_nondecreasing_violation(self):
        with pytest.raises(FormatError):
            CsrMatrix(2, 2, (1,), (0, 1, 0), (0,))


class TestRoundTrip:
    def test_500_random_grids(self):
        rng = random.Random(1234)
        for _ in range(500):
            m = rng.randint(1, 16)
            n = rng.randint(1, 16)
            dense = [
                [rng.choice([0, 0, 0, 1, -2, 7, Fraction(1, 2)]) for _ in range(n)]
                for _ in range(m)
            ]
            assert from_yale(to_yale(dense)) == dense

    @given(
        st.lists(
            st.lists(st.integers(min_value=-9, max_value=9), min_size=1, max_size=6),
            min_size=1,
            max_size=6,
        ).filter(lambda rows: len({len(r) for r in rows}) == 1)
    )
    @settings(max_examples=200, deadline=None)
    def test_round_trip_property(self, dense):
        assert from_yale(to_yale(dense)) == dense


class TestSparsity:
    def test_eleven_sixteenths(self):
        grid = [
            [1, 1, 1, 1],
            [1, 0, 0, 1],
            [1, 0, 0, 1],
            [1, 1, 0, 1],
        ]
        assert sum(1 for row in grid for v in row if v == 0) == 5
        assert sparsity(grid) == Fraction(11, 16)
        assert zero_fraction(grid) == Fraction(5, 16)

    def test_zero_matrix(self):
        assert sparsity([[0, 0], [0, 0]]) == 0

    def test_dense_matrix(self):
        assert sparsity([[1, 2, 3], [4, 5, 6]]) == 1

    def test_empty_rejected(self):
        with pytest.raises(FormatError):
            sparsity([])


class TestMultiply:
    def test_identity(self):
        rng = random.Random(5)
        eye = to_yale([[1 if i == j else 0 for j in range(5)] for i in range(5)])
        for _ in range(20):
            dense = [[rng.randint(-3, 3) for _ in range(5)] for _ in range(5)]
            x = to_yale(dense)
            assert from_yale(csr_multiply(eye, x)) == from_yale(x)

    def test_nilpotent_square_drops_to_zero(self):
        n = to_yale([[0, 1], [0, 0]])
        sq = csr_multiply(n, n)
        assert sq.nnz == 0
        assert from_yale(sq) == [[0, 0], [0, 0]]

    def test_matches_dense_oracle(self):
        rng = random.Random(99)
        for _ in range(50):
            m, k, n = rng.randint(1, 8), rng.randint(1, 8), rng.randint(1, 8)
            a = [[rng.randint(-2, 2) if rng.random() < 0.25 else 0 for _ in range(k)]
                 for _ in range(m)]
            b = [[rng.randint(-2, 2) if rng.random() < 0.25 else 0 for _ in range(n)]
                 for _ in range(k)]
            assert from_yale(csr_multiply(to_yale(a), to_yale(b))) == dense_matmul(a, b)

    def test_exact_fractions(self):
        a = [[Fraction(1, 3), Fraction(2, 3)]]
        b = [[Fraction(1, 2)], [Fraction(1, 4)]]
        product = csr_multiply(to_yale(a), to_yale(b))
        assert from_yale(product) == [[Fraction(1, 3)]]

    def test_dimension_mismatch(self):
        with pytest.raises(RinguaError):
            csr_multiply(to_yale([[1, 2]]), to_yale([[1, 2]]))


class TestJson:
    def test_wire_format_keys(self):
        payload = to_yale([[0, Fraction(1, 2)], [3, 0]]).to_json()
        assert payload == {"m": 2, "n": 2, "A": ["1/2", 3], "IA": [0, 1, 2], "JA": [1, 0]}
        assert from_yale(csr_from_json(payload)) == [[0, Fraction(1, 2)], [3, 0]]

    def test_dense_value_coercion(self):
        assert dense_from_json([[1.0, "3/4"], [0, 2]]) == [[1, Fraction(3, 4)], [0, 2]]
        with pytest.raises(FormatError):
            dense_from_json([[0.5, 1]])

    def test_missing_keys(self):
        with pytest.raises(FormatError):
            csr_from_json({"m": 1, "n": 1, "A": [], "IA": [0, 0]})
