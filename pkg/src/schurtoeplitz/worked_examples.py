"""The three worked examples at sigma = 2, tau = 1, n = 3.

All fixtures use this package's index convention (``T_j`` below the main
diagonal for ``j > 0``). Displayed matrices are read position by position:
the block shown at dense position ``(p, q)`` becomes ``T_{p-q}``.
"""

from __future__ import annotations

from fractions import Fraction

from .algebras import GeneratorPair, b_algebra_basis, fab_basis
from .exact import ComplexRational, DenseMatrix
from .schur import SchurShape, coordinate_basis, identity, radical_unit, schur_make, zero
from .toeplitz import BlockToeplitz

SHAPE = SchurShape(2, 1)
N = 3

EXAMPLE1_ERRATUM = (
    "Example 1 displays F_{I,0} as the block-diagonal repeat algebra diag(T0,T0,T0) "
    "(dimension 3). The defining relation I*T_j = 0*T_{j-3} only forces T_1 = T_2 = 0, "
    "leaving T_0, T_-1, T_-2 free (dimension 9). The displayed algebra is commutative "
    "but strictly contained in B (x) O, so it is not maximal."
)

EXAMPLE3_ERRATUM = (
    "Example 3 lists A = E_12 and B = E_13 as the nilpotent pair, but E_12 is not in "
    "O(2,1) (its radical is spanned by E_13 and E_23). The pair used here is "
    "A = E_13, B = E_23, i.e. X = (1,0)^T and X = (0,1)^T."
)


def _radical(x1, x2):
    return schur_make(SHAPE, 0, DenseMatrix.from_rows([[x1], [x2]]))


def example1_as_displayed() -> list[BlockToeplitz]:
    """Generators of ``{diag(T0, T0, T0) : T0 in O(2,1)}``."""
    return [BlockToeplitz(N, SHAPE, {0: e}) for e in coordinate_basis(SHAPE)]


def example1_as_defined() -> list[BlockToeplitz]:
    """Basis of F_{I,0} from the defining relation."""
    return fab_basis(GeneratorPair(identity(SHAPE), zero(SHAPE)), N).elements()


def example2(mu: Fraction | int = 2) -> list[BlockToeplitz]:
    """Generators of F_{I, mu I}: free blocks P0, P1, P2 in the displayed layout.

    The display has P1, P2 above the diagonal (``T_-1``, ``T_-2``) and
    ``mu P2``, ``mu P1`` below it (``T_1``, ``T_2``), which is exactly
    ``T_j = mu T_{j-3}``.
    """
    mu = ComplexRational.coerce(mu)
    if not mu:
        raise ValueError("Example 2 requires mu != 0")
    gens = []
    for e in coordinate_basis(SHAPE):
        gens.append(BlockToeplitz(N, SHAPE, {0: e}))
        gens.append(BlockToeplitz(N, SHAPE, {-1: e, 2: e.scale(mu)}))
        gens.append(BlockToeplitz(N, SHAPE, {-2: e, 1: e.scale(mu)}))
    return gens


def example2_pair(mu: Fraction | int = 2) -> GeneratorPair:
    return GeneratorPair(identity(SHAPE), identity(SHAPE).scale(mu))


def example3_instance(lam=1, a=1, b=2, c=3, d=4) -> BlockToeplitz:
    """The displayed generic element; the blocks below the diagonal mirror those above."""
    d0 = schur_make(SHAPE, lam)
    n1, n2 = _radical(a, b), _radical(c, d)
    return BlockToeplitz(N, SHAPE, {0: d0, -1: n1, -2: n2, 1: n1, 2: n2})


def example3(lam=1, a=1, b=2, c=3, d=4) -> list[BlockToeplitz]:
    """The displayed instance followed by a coordinate basis of B (x) O(2,1)."""
    return [example3_instance(lam, a, b, c, d)] + b_algebra_basis(N, SHAPE).elements()


def example3_pair() -> GeneratorPair:
    return GeneratorPair(radical_unit(SHAPE, 0, 0), radical_unit(SHAPE, 1, 0))


def example3_printed_pair_matrices() -> tuple[DenseMatrix, DenseMatrix]:
    """``E_12`` and ``E_13`` exactly as printed (3x3)."""
    a = DenseMatrix.from_rows([[0, 1, 0], [0, 0, 0], [0, 0, 0]])
    b = DenseMatrix.from_rows([[0, 0, 1], [0, 0, 0], [0, 0, 0]])
    return a, b
