import random

import pytest

from schurtoeplitz.errors import NotInSchurAlgebra, NotInvertible, ShapeError
from schurtoeplitz.exact import DenseMatrix, mat_mul, nullspace, subspace_contains
from schurtoeplitz.sampling import random_schur
from schurtoeplitz.schur import (
    SchurShape,
    identity,
    kernel_intersection_trivial,
    radical_unit,
    schur_embed,
    schur_extract,
    schur_inverse,
    schur_is_invertible,
    schur_linearly_independent,
    schur_make,
    schur_mul,
    zero,
)

S21 = SchurShape(2, 1)
SHAPES = [SchurShape(1, 1), S21, SchurShape(1, 2), SchurShape(2, 2), SchurShape(3, 2)]


def col(*xs):
    return DenseMatrix.from_rows([[x] for x in xs])


class TestConstruction:
    def test_identity_embeds_to_identity(self):
        assert schur_embed(schur_make(S21, 1)) == DenseMatrix.identity(3)

    def test_radical_layout(self):
        a = schur_make(S21, 0, col(5, 7))
        m = schur_embed(a)
        assert m == DenseMatrix.from_rows([[0, 0, 5], [0, 0, 7], [0, 0, 0]])
        assert a.is_radical()

    def test_wrong_x_shape(self):
        with pytest.raises(ShapeError):
            schur_make(S21, 0, DenseMatrix.from_rows([[1, 2]]))

    def test_shape_hypothesis_guard(self):
        with pytest.raises(ShapeError):
            SchurShape(3, 1)
        relaxed = SchurShape(3, 1, relaxed=True)
        assert not relaxed.in_theorem_hypotheses
        assert relaxed.dim == 4

    def test_dimensions(self):
        assert S21.d == 3 and S21.radical_dim == 2 and S21.dim == 3


class TestMultiplication:
    def test_radical_squares_to_zero(self):
        a, b = radical_unit(S21, 0, 0), radical_unit(S21, 1, 0)
        assert schur_mul(a, b).is_zero()

    def test_identity_is_neutral(self):
        b = schur_make(S21, 3, col(1, -2))
        assert schur_mul(identity(S21), b) == b

    @pytest.mark.parametrize("shape", SHAPES, ids=str)
    def test_matches_dense_embedding(self, shape):
        rng = random.Random(11)
        for _ in range(25):
            a, b = random_schur(rng, shape), random_schur(rng, shape)
            dense = mat_mul(schur_embed(a), schur_embed(b))
            assert schur_extract(dense, shape) == schur_mul(a, b)
            assert schur_mul(a, b) == schur_mul(b, a)


class TestInvertibility:
    def test_inverse(self):
        a = schur_make(S21, 2, col(1, 3))
        assert schur_is_invertible(a)
        assert schur_mul(a, schur_inverse(a)) == identity(S21)

    def test_radical_not_invertible(self):
        a = schur_make(S21, 0, col(1, 0))
        assert not schur_is_invertible(a)
        ns = nullspace(schur_embed(a))
        assert subspace_contains(ns, (1, 0, 0)) and subspace_contains(ns, (0, 1, 0))
        with pytest.raises(NotInvertible):
            schur_inverse(a)

    @pytest.mark.parametrize("shape", SHAPES, ids=str)
    def test_random_inverses(self, shape):
        rng = random.Random(12)
        for _ in range(20):
            a = random_schur(rng, shape, radical=False)
            assert mat_mul(schur_embed(a), schur_embed(a.inverse())) == DenseMatrix.identity(shape.d)


class TestEmbedding:
    def test_zero(self):
        assert schur_embed(zero(S21)).is_zero()

    def test_round_trip(self):
        rng = random.Random(13)
        for shape in SHAPES:
            a = random_schur(rng, shape)
            assert schur_extract(schur_embed(a), shape) == a

    def test_unequal_diagonal_rejected(self):
        m = DenseMatrix.from_rows([[1, 0, 0], [0, 2, 0], [0, 0, 1]])
        with pytest.raises(NotInSchurAlgebra):
            schur_extract(m, S21)

    def test_lower_block_rejected(self):
        m = DenseMatrix.from_rows([[1, 0, 0], [0, 1, 0], [4, 0, 1]])
        with pytest.raises(NotInSchurAlgebra):
            schur_extract(m, S21)


class TestPairPredicates:
    def test_kernel_condition_examples(self):
        assert kernel_intersection_trivial(identity(S21), zero(S21))
        assert not kernel_intersection_trivial(radical_unit(S21, 0, 0), radical_unit(S21, 1, 0))
        assert kernel_intersection_trivial(radical_unit(S21, 0, 0), schur_make(S21, 5))

    def test_kernel_shortcut_agrees_with_nullspace(self):
        # trivial intersection of kernels iff some member is invertible
        rng = random.Random(14)
        for shape in SHAPES:
            for _ in range(20):
                a, b = random_schur(rng, shape), random_schur(rng, shape)
                assert kernel_intersection_trivial(a, b) == (a.is_invertible() or b.is_invertible())

    def test_linear_independence(self):
        a, b = radical_unit(S21, 0, 0), radical_unit(S21, 1, 0)
        assert schur_linearly_independent(a, b)
        assert not schur_linearly_independent(a, a.scale(2))
        assert not schur_linearly_independent(a, zero(S21))
