import random

import pytest

from schurtoeplitz.errors import ConditionViolated, IndexRangeError, NotBlockToeplitz
from schurtoeplitz.exact import DenseMatrix, mat_mul
from schurtoeplitz.sampling import (
    perturb_to_violation,
    random_b_element,
    random_bt,
    random_condition_pair,
)
from schurtoeplitz.schur import SchurShape, identity, schur_make
from schurtoeplitz.toeplitz import (
    BlockToeplitz,
    MulCounter,
    block_grid_product,
    bt_from_dense,
    bt_identity,
    bt_to_dense,
    dense_product,
    is_block_toeplitz,
    product_condition,
    structured_product,
)
from schurtoeplitz.worked_examples import example3_instance

S11, S21, S22 = SchurShape(1, 1), SchurShape(2, 1), SchurShape(2, 2)


class TestLayout:
    def test_index_convention_positive_below_diagonal(self):
        # block (p, q) holds T_{p-q}; O(1,1) blocks are 2x2
        t = BlockToeplitz(3, S11, {1: schur_make(S11, 5), -2: schur_make(S11, 7)})
        m = bt_to_dense(t)
        d = S11.d

        def blk(p, q):
            return m.submatrix(p * d, (p + 1) * d, q * d, (q + 1) * d)

        assert blk(1, 0) == blk(2, 1) == DenseMatrix.identity(d).scale(5)
        assert blk(0, 2) == DenseMatrix.identity(d).scale(7)
        assert blk(0, 1).is_zero() and blk(2, 0).is_zero()

    def test_identity_embeds(self):
        assert bt_to_dense(bt_identity(3, S21)) == DenseMatrix.identity(9)

    def test_example3_instance_valid(self):
        t = example3_instance()
        assert t.n == 3 and not t.has_invertible_off_diagonal()

    def test_index_range_guard(self):
        with pytest.raises(IndexRangeError):
            BlockToeplitz(3, S21, {3: identity(S21)})

    def test_dense_round_trip(self):
        rng = random.Random(1)
        for shape in (S11, S21, S22):
            t = random_bt(rng, 3, shape)
            assert bt_from_dense(bt_to_dense(t), 3, shape) == t

    def test_identity_from_dense(self):
        assert bt_from_dense(DenseMatrix.identity(9), 3, S21) == bt_identity(3, S21)

    def test_coords_round_trip(self):
        rng = random.Random(2)
        t = random_bt(rng, 4, S21)
        assert len(t.coords()) == t.ambient_dim == 7 * 3
        assert BlockToeplitz.from_coords(4, S21, t.coords()) == t


class TestProductLemma:
    @pytest.mark.parametrize("n", [2, 3, 4])
    @pytest.mark.parametrize("shape", [S11, S21, S22], ids=str)
    def test_both_directions(self, n, shape):
        rng = random.Random(100 * n + shape.dim)
        for _ in range(15):
            t, u, _ = random_condition_pair(rng, n, shape)
            assert product_condition(t, u)
            assert is_block_toeplitz(mat_mul(bt_to_dense(t), bt_to_dense(u)), n, shape.d)
            t2, u2 = perturb_to_violation(rng, t, u)
            assert not product_condition(t2, u2)
            prod = mat_mul(bt_to_dense(t2), bt_to_dense(u2))
            assert not is_block_toeplitz(prod, n, shape.d)
            with pytest.raises(NotBlockToeplitz):
                bt_from_dense(prod, n, shape)

    def test_block_diagonal_left_factor(self):
        rng = random.Random(3)
        t = BlockToeplitz(3, S21, {0: schur_make(S21, 2)})
        assert product_condition(t, random_bt(rng, 3, S21))

    def test_b_algebra_pairs(self):
        rng = random.Random(4)
        for _ in range(10):
            assert product_condition(random_b_element(rng, 3, S21), random_b_element(rng, 3, S21))

    def test_random_pairs_usually_fail(self):
        rng = random.Random(5)
        fails = sum(not product_condition(random_bt(rng, 3, S21), random_bt(rng, 3, S21)) for _ in range(20))
        assert fails >= 15


class TestStructuredProduct:
    def test_identity(self):
        i = bt_identity(3, S21)
        assert structured_product(i, i) == i

    def test_example3_product_stays_in_b(self):
        p = structured_product(example3_instance(), example3_instance(2, 1, -1, 0, 5))
        assert not p.has_invertible_off_diagonal()
        assert all(p.block(j).is_radical() for j in p.indices if j)

    def test_violation_raises(self):
        rng = random.Random(6)
        t, u, _ = random_condition_pair(rng, 3, S21)
        t2, u2 = perturb_to_violation(rng, t, u)
        with pytest.raises(ConditionViolated):
            structured_product(t2, u2)

    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
    @pytest.mark.parametrize("method", ["fast", "interpolation", "direct"])
    def test_matches_dense_with_counts(self, n, method):
        rng = random.Random(7 * n)
        bound = {"fast": n * n, "interpolation": 4 * n - 3, "direct": n * (2 * n - 1)}[method]
        for _ in range(8):
            shape = rng.choice([S11, S21, S22])
            t, u, _ = random_condition_pair(rng, n, shape)
            counter = MulCounter()
            assert structured_product(t, u, method=method, counter=counter) == dense_product(t, u)
            assert counter.count <= bound

    def test_grid_product_is_cubic(self):
        rng = random.Random(8)
        t, u, _ = random_condition_pair(rng, 3, S21)
        counter = MulCounter()
        grid = block_grid_product(t, u, counter)
        ref = dense_product(t, u)
        assert counter.count == 27
        assert all(grid[p][q] == ref.block(p - q) for p in range(3) for q in range(3))

    def test_unknown_method(self):
        i = bt_identity(2, S11)
        with pytest.raises(ValueError):
            structured_product(i, i, method="magic")
