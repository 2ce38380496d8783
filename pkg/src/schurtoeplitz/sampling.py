"""Seeded random instances.

Scalars are small rationals ``{-2..2}/{1,2}``, sometimes with an imaginary
part. Scalar parts are zero with probability 1/4 by default so the radical
and degenerate branches get exercised.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .algebras import GeneratorPair
from .exact import ComplexRational, DenseMatrix
from .schur import SchurElement, SchurShape, schur_linearly_independent, schur_make, schur_mul
from .toeplitz import BlockToeplitz, product_condition

ZERO_PROB = 0.25
COMPLEX_PROB = 0.25


def trial_rng(seed: int, trial: int) -> random.Random:
    """Independent generator per (seed, trial); serial and parallel runs agree."""
    return random.Random((seed << 64) | trial)


def random_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-2, 2), rng.choice((1, 2)))


def random_scalar(rng: random.Random, *, nonzero: bool = False, zero_prob: float = ZERO_PROB) -> ComplexRational:
    if not nonzero and rng.random() < zero_prob:
        return ComplexRational(0)
    re = random_rational(rng)
    im = random_rational(rng) if rng.random() < COMPLEX_PROB else Fraction(0)
    if re == 0 and im == 0:
        re = Fraction(rng.choice((-1, 1)))
    return ComplexRational(re, im)


def random_block(rng: random.Random, shape: SchurShape) -> DenseMatrix:
    return DenseMatrix.from_rows(
        [
            [random_scalar(rng, zero_prob=0.2) for _ in range(shape.tau)]
            for _ in range(shape.sigma)
        ]
    )


def random_schur(
    rng: random.Random, shape: SchurShape, *, radical: bool | None = None
) -> SchurElement:
    """``radical=True`` forces lam = 0, ``False`` forces lam != 0."""
    if radical is True:
        lam = ComplexRational(0)
    elif radical is False:
        lam = random_scalar(rng, nonzero=True)
    else:
        lam = random_scalar(rng)
    return schur_make(shape, lam, random_block(rng, shape))


def random_bt(rng: random.Random, n: int, shape: SchurShape) -> BlockToeplitz:
    return BlockToeplitz(n, shape, {j: random_schur(rng, shape) for j in range(1 - n, n)})


def random_b_element(rng: random.Random, n: int, shape: SchurShape) -> BlockToeplitz:
    blocks = {j: random_schur(rng, shape, radical=True) for j in range(1 - n, n) if j}
    blocks[0] = random_schur(rng, shape)
    return BlockToeplitz(n, shape, blocks)


def random_nondegenerate_pair(rng: random.Random, shape: SchurShape) -> GeneratorPair:
    """A pair with at least one invertible member."""
    case = rng.randrange(3)
    if case == 0:
        return GeneratorPair(random_schur(rng, shape, radical=False), random_schur(rng, shape))
    if case == 1:
        return GeneratorPair(random_schur(rng, shape), random_schur(rng, shape, radical=False))
    return GeneratorPair(
        random_schur(rng, shape, radical=False), random_schur(rng, shape, radical=False)
    )


def random_independent_radical_pair(rng: random.Random, shape: SchurShape) -> GeneratorPair:
    if shape.radical_dim < 2:
        raise ValueError(f"the radical of {shape} is {shape.radical_dim}-dimensional; no independent pair")
    while True:
        a = random_schur(rng, shape, radical=True)
        b = random_schur(rng, shape, radical=True)
        if schur_linearly_independent(a, b):
            return GeneratorPair(a, b)


def random_fab_element(rng: random.Random, pair: GeneratorPair, n: int) -> BlockToeplitz:
    """Random element of F_{A,B}, built directly from the defining relation.

    With ``A`` invertible the blocks ``T_0, T_{-1}, ..., T_{1-n}`` are free
    and ``T_j = A^-1 B T_{j-n}``; with ``B`` invertible the roles swap.
    Independent radical pairs give B (x) O elements.
    """
    shape = pair.shape
    blocks = {0: random_schur(rng, shape)}
    if pair.A.is_invertible():
        c = schur_mul(pair.A.inverse(), pair.B)
        for j in range(1, n):
            blocks[j - n] = random_schur(rng, shape)
            blocks[j] = schur_mul(c, blocks[j - n])
    elif pair.B.is_invertible():
        c = schur_mul(pair.B.inverse(), pair.A)
        for j in range(1, n):
            blocks[j] = random_schur(rng, shape)
            blocks[j - n] = schur_mul(c, blocks[j])
    else:
        return random_b_element(rng, n, shape)
    return BlockToeplitz(n, shape, blocks)


def random_condition_pair(
    rng: random.Random, n: int, shape: SchurShape
) -> tuple[BlockToeplitz, BlockToeplitz, str]:
    """A pair ``(T, U)`` whose product is block Toeplitz, plus how it was built."""
    strategy = rng.choice(("fab", "fab", "b_algebra", "block_diagonal"))
    if strategy == "fab":
        pair = random_nondegenerate_pair(rng, shape)
        t, u = random_fab_element(rng, pair, n), random_fab_element(rng, pair, n)
    elif strategy == "b_algebra":
        t, u = random_b_element(rng, n, shape), random_b_element(rng, n, shape)
    else:
        t = BlockToeplitz(n, shape, {0: random_schur(rng, shape)})
        u = random_bt(rng, n, shape)
        if rng.random() < 0.5:
            t, u = u, t
    return t, u, strategy


def perturb_to_violation(
    rng: random.Random, t: BlockToeplitz, u: BlockToeplitz, max_tries: int = 64
) -> tuple[BlockToeplitz, BlockToeplitz]:
    """Change one off-diagonal block of ``T`` or ``U`` until the product condition fails."""
    n, shape = t.n, t.shape
    for _ in range(max_tries):
        j = rng.choice([k for k in range(1 - n, n) if k])
        delta = random_schur(rng, shape, radical=False)
        if rng.random() < 0.5:
            t2, u2 = BlockToeplitz(n, shape, {**t.blocks, j: t.block(j) + delta}), u
        else:
            t2, u2 = t, BlockToeplitz(n, shape, {**u.blocks, j: u.block(j) + delta})
        if not product_condition(t2, u2):
            return t2, u2
        t, u = t2, u2
    # a fully random pair violates the condition almost surely
    while True:
        t2, u2 = random_bt(rng, n, shape), random_bt(rng, n, shape)
        if not product_condition(t2, u2):
            return t2, u2
