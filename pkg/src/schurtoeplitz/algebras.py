"""Algebras of block Toeplitz matrices over O(sigma, tau) as concrete subspaces.

Every algebra is a linear subspace of the coordinate space of
``T_n (x) O(sigma, tau)``, which has dimension ``(2n-1)(sigma*tau + 1)``
(see :meth:`BlockToeplitz.coords` for the coordinate order).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .errors import DegeneratePair, DimensionError, NotClosed, NotCommutative, NotToeplitzClosed, ShapeError
from .exact import (
    ONE,
    ZERO,
    EchelonBuilder,
    Subspace,
    full_space,
    mat_mul,
    nullspace_of_rows,
    span,
    subspace_equal,
)
from .schur import SchurElement, SchurShape, kernel_intersection_trivial, schur_mul
from .toeplitz import BlockToeplitz, bt_to_dense, product_condition, structured_product


def ambient_dimension(n: int, shape: SchurShape) -> int:
    return (2 * n - 1) * shape.dim


@dataclass(frozen=True)
class AlgebraBasis:
    """A subspace of ``T_n (x) O(sigma, tau)`` in canonical (RREF) form."""

    n: int
    shape: SchurShape
    space: Subspace

    def __post_init__(self) -> None:
        if self.space.ambient_dim != ambient_dimension(self.n, self.shape):
            raise DimensionError("subspace does not live in T_n (x) O(sigma, tau)")

    @property
    def dimension(self) -> int:
        return self.space.dimension

    @property
    def ambient_dim(self) -> int:
        return self.space.ambient_dim

    def elements(self) -> list[BlockToeplitz]:
        return [BlockToeplitz.from_coords(self.n, self.shape, row) for row in self.space.basis]

    def contains(self, t: BlockToeplitz) -> bool:
        if t.n != self.n or t.shape != self.shape:
            raise DimensionError("element does not live in the same ambient space")
        return self.space.contains(t.coords())

    def is_subalgebra_of(self, other: "AlgebraBasis") -> bool:
        return self.space.is_subspace_of(other.space)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlgebraBasis):
            return NotImplemented
        return (
            self.n == other.n
            and self.shape == other.shape
            and subspace_equal(self.space, other.space)
        )

    __hash__ = None  # type: ignore[assignment]


@dataclass(frozen=True)
class GeneratorPair:
    A: SchurElement
    B: SchurElement

    def __post_init__(self) -> None:
        if self.A.shape != self.B.shape:
            raise ShapeError(f"pair members have shapes {self.A.shape} and {self.B.shape}")

    @property
    def shape(self) -> SchurShape:
        return self.A.shape

    def is_nondegenerate(self) -> bool:
        return kernel_intersection_trivial(self.A, self.B)

    def normalized(self) -> "GeneratorPair":
        """Equivalent pair with the invertible member scaled to the identity."""
        if self.A.is_invertible():
            inv = self.A.inverse()
            return GeneratorPair(schur_mul(inv, self.A), schur_mul(inv, self.B))
        if self.B.is_invertible():
            inv = self.B.inverse()
            return GeneratorPair(schur_mul(inv, self.A), schur_mul(inv, self.B))
        raise DegeneratePair("neither member is invertible")


def basis_from_elements(elements: Sequence[BlockToeplitz], n: int | None = None,
                        shape: SchurShape | None = None) -> AlgebraBasis:
    """Linear span only; no closure is taken."""
    if elements:
        n, shape = elements[0].n, elements[0].shape
    if n is None or shape is None:
        raise ValueError("n and shape are required for an empty element list")
    for e in elements:
        if e.n != n or e.shape != shape:
            raise DimensionError("elements live in different ambient spaces")
    dim = ambient_dimension(n, shape)
    return AlgebraBasis(n, shape, span((e.coords() for e in elements), dim))


def coordinate_units(n: int, shape: SchurShape) -> list[BlockToeplitz]:
    dim = ambient_dimension(n, shape)
    return [
        BlockToeplitz.from_coords(n, shape, tuple(ONE if i == k else ZERO for k in range(dim)))
        for i in range(dim)
    ]


def full_algebra(n: int, shape: SchurShape) -> AlgebraBasis:
    """All of ``T_n (x) O(sigma, tau)`` (a subspace, not an algebra)."""
    return AlgebraBasis(n, shape, full_space(ambient_dimension(n, shape)))


def solve_linear_constraints(
    n: int, shape: SchurShape, constraint: Callable[[BlockToeplitz], Sequence]
) -> AlgebraBasis:
    """Kernel of a linear map ``T -> constraint(T)`` on the coordinate space."""
    columns = [tuple(constraint(u)) for u in coordinate_units(n, shape)]
    nrows = len(columns[0]) if columns else 0
    rows = (tuple(col[r] for col in columns) for r in range(nrows))
    return AlgebraBasis(n, shape, nullspace_of_rows(rows, len(columns)))


# F_{A,B} and B (x) O ------------------------------------------------------


def fab_membership(pair: GeneratorPair, t: BlockToeplitz) -> bool:
    """``A T_j == B T_{j-n}`` for ``j = 1..n-1``."""
    if pair.shape != t.shape:
        raise DimensionError(f"pair lives in {pair.shape}, matrix in {t.shape}")
    n = t.n
    return all(
        schur_mul(pair.A, t.block(j)) == schur_mul(pair.B, t.block(j - n)) for j in range(1, n)
    )


def _fab_residual(pair: GeneratorPair, t: BlockToeplitz) -> list:
    out: list = []
    for j in range(1, t.n):
        out.extend((schur_mul(pair.A, t.block(j)) - schur_mul(pair.B, t.block(j - t.n))).coords())
    return out


def fab_basis(pair: GeneratorPair, n: int) -> AlgebraBasis:
    return solve_linear_constraints(n, pair.shape, lambda t: _fab_residual(pair, t))


def b_membership(t: BlockToeplitz) -> bool:
    """Every off-diagonal block is radical (scalar part zero)."""
    return all(t.block(j).is_radical() for j in t.indices if j != 0)


def b_algebra_basis(n: int, shape: SchurShape) -> AlgebraBasis:
    """Coordinate basis of B (x) O: free main diagonal, radical off-diagonals."""
    k = shape.dim
    dim = ambient_dimension(n, shape)
    keep = [
        i for i in range(dim) if (i // k) == n - 1 or i % k != 0
    ]  # position n-1 is diagonal 0; offset 0 inside a block is lam
    vectors = [tuple(ONE if c == i else ZERO for c in range(dim)) for i in keep]
    return AlgebraBasis(n, shape, span(vectors, dim))


def b_algebra_dimension(n: int, shape: SchurShape) -> int:
    return shape.dim + (2 * n - 2) * shape.radical_dim


# closure, commutant, maximality -------------------------------------------


def _commutes_dense(x, y) -> bool:
    return mat_mul(x, y) == mat_mul(y, x)


def algebra_closure(generators: Iterable[BlockToeplitz]) -> AlgebraBasis:
    """Smallest subspace containing ``generators`` and closed under products.

    New basis elements are multiplied against everything found so far until
    no product leaves the span; the ambient dimension bounds the iteration.

    Raises:
        NotCommutative: two generated elements do not commute (dense check).
        NotToeplitzClosed: a product of generated elements is not block Toeplitz.
    """
    gens = list(generators)
    if not gens:
        raise ValueError("at least one generator is required")
    n, shape = gens[0].n, gens[0].shape
    for g in gens:
        if g.n != n or g.shape != shape:
            raise DimensionError("generators live in different ambient spaces")

    eb = EchelonBuilder(ambient_dimension(n, shape))
    elems: list[BlockToeplitz] = []
    dense: list = []
    for g in gens:
        if eb.add(g.coords()):
            elems.append(g)
            dense.append(bt_to_dense(g))

    i = 0
    while i < len(elems):
        e, de = elems[i], dense[i]
        for j in range(i + 1):
            f = elems[j]
            if j != i and not _commutes_dense(de, dense[j]):
                raise NotCommutative(
                    f"generated elements {j} and {i} do not commute", witness=(f, e)
                )
            if not product_condition(f, e):
                raise NotToeplitzClosed(
                    f"product of generated elements {j} and {i} is not block Toeplitz",
                    witness=(f, e),
                )
            prod = structured_product(f, e)
            if eb.add(prod.coords()):
                elems.append(prod)
                dense.append(bt_to_dense(prod))
        i += 1
    return AlgebraBasis(n, shape, eb.to_subspace())


def check_closed_commutative(alg: AlgebraBasis) -> None:
    """Raise unless ``alg`` is a commutative algebra inside ``T_n (x) O``."""
    elems = alg.elements()
    dense = [bt_to_dense(e) for e in elems]
    eb = alg.space.builder()
    for i, e in enumerate(elems):
        for j in range(i + 1):
            if j != i and not _commutes_dense(dense[i], dense[j]):
                raise NotCommutative(f"basis elements {j} and {i} do not commute", witness=(elems[j], e))
            if not product_condition(elems[j], e):
                raise NotToeplitzClosed(
                    f"product of basis elements {j} and {i} is not block Toeplitz", witness=(elems[j], e)
                )
            if not eb.contains(structured_product(elems[j], e).coords()):
                raise NotClosed(f"product of basis elements {j} and {i} leaves the span")


def commutant_in_bt(alg: AlgebraBasis) -> AlgebraBasis:
    """All ``U`` in ``T_n (x) O`` whose dense form commutes with every basis element.

    Solved as one stacked linear system in the coordinates of ``U``: column
    ``i`` holds the entries of ``[T, E_i]`` for the coordinate unit ``E_i``.
    """
    n, shape = alg.n, alg.shape
    units = [bt_to_dense(u) for u in coordinate_units(n, shape)]
    ncols = len(units)

    def rows():
        for t in alg.elements():
            dt = bt_to_dense(t)
            cols = [(mat_mul(dt, du) - mat_mul(du, dt)).flat() for du in units]
            for r in range(len(cols[0])):
                yield tuple(c[r] for c in cols)

    return AlgebraBasis(n, shape, nullspace_of_rows(rows(), ncols))


@dataclass(frozen=True)
class MaximalityCertificate:
    """Outcome of comparing an algebra with its commutant in ``T_n (x) O``.

    ``certified`` means the commutant equals the algebra, which proves
    maximal commutativity. Otherwise ``witness`` lies in the commutant but
    not in the algebra; that alone does not prove non-maximality.
    """

    certified: bool
    algebra_dimension: int
    commutant_dimension: int
    witness: BlockToeplitz | None = None
    # True when adjoining the witness still closes to a commutative algebra,
    # which does prove the input is not maximal.
    witness_extends: bool = False

    @property
    def label(self) -> str:
        return "certified" if self.certified else "inconclusive"


def maximality_certificate(alg: AlgebraBasis, *, check: bool = True) -> MaximalityCertificate:
    if check:
        check_closed_commutative(alg)
    comm = commutant_in_bt(alg)
    if comm == alg:
        return MaximalityCertificate(True, alg.dimension, comm.dimension)
    eb = alg.space.builder()
    outside = [e for e in comm.elements() if not eb.contains(e.coords())]
    # prefer a witness with radical off-diagonal blocks: it stays inside B (x) O
    outside.sort(key=lambda e: not (b_membership(e) and any(j != 0 for j in e.blocks)))
    witness = outside[0]
    try:
        algebra_closure(alg.elements() + [witness])
        extends = True
    except (NotCommutative, NotToeplitzClosed):
        extends = False
    return MaximalityCertificate(False, alg.dimension, comm.dimension, witness, extends)


def pairs_equivalent(p: GeneratorPair, q: GeneratorPair) -> bool:
    """``(A, B) ~ (A', B')`` iff ``A B' == A' B``, for nondegenerate pairs.

    Raises:
        DegeneratePair: either pair has ``Ker A ∩ Ker B != {0}``.
    """
    if p.shape != q.shape:
        raise ShapeError(f"pairs live in {p.shape} and {q.shape}")
    for name, pair in (("first", p), ("second", q)):
        if not pair.is_nondegenerate():
            raise DegeneratePair(f"{name} pair violates Ker A ∩ Ker B = {{0}}")
    return schur_mul(p.A, q.B) == schur_mul(q.A, p.B)
