"""The Schur algebra O(sigma, tau).

An element is a ``d x d`` matrix (``d = sigma + tau``) of the block form

    [[lam * I_sigma, X        ],
     [0,             lam * I_tau]]

and is stored as the pair ``(lam, X)``. The radical consists of the elements
with ``lam == 0``; the product of any two radical elements is zero.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import NotInSchurAlgebra, NotInvertible, ShapeError
from .exact import (
    ONE,
    ZERO,
    ComplexRational,
    DenseMatrix,
    Number,
    nullspace_of_rows,
    rank,
)


@dataclass(frozen=True)
class SchurShape:
    sigma: int
    tau: int
    relaxed: bool = field(default=False, compare=False)

    def __post_init__(self) -> None:
        if not (isinstance(self.sigma, int) and isinstance(self.tau, int)):
            raise ShapeError("sigma and tau must be integers")
        if self.sigma < 1 or self.tau < 1:
            raise ShapeError(f"sigma and tau must be >= 1, got ({self.sigma}, {self.tau})")
        if abs(self.sigma - self.tau) > 1 and not self.relaxed:
            raise ShapeError(
                f"|sigma - tau| must be <= 1, got ({self.sigma}, {self.tau}); "
                "pass relaxed=True to experiment with other shapes"
            )

    @property
    def d(self) -> int:
        return self.sigma + self.tau

    @property
    def radical_dim(self) -> int:
        return self.sigma * self.tau

    @property
    def dim(self) -> int:
        """Dimension of O(sigma, tau) as a linear space."""
        return self.sigma * self.tau + 1

    @property
    def in_theorem_hypotheses(self) -> bool:
        return abs(self.sigma - self.tau) <= 1

    def __str__(self) -> str:
        return f"O({self.sigma},{self.tau})"


@dataclass(frozen=True)
class SchurElement:
    shape: SchurShape
    lam: ComplexRational
    X: DenseMatrix

    def __post_init__(self) -> None:
        if self.X.shape != (self.shape.sigma, self.shape.tau):
            raise ShapeError(
                f"X must be {self.shape.sigma}x{self.shape.tau}, got {self.X.rows}x{self.X.cols}"
            )

    # construction helpers

    @classmethod
    def from_coords(cls, shape: SchurShape, coords) -> "SchurElement":
        """Inverse of :meth:`coords`: ``(lam, X[0][0], X[0][1], ...)``."""
        if len(coords) != shape.dim:
            raise ShapeError(f"expected {shape.dim} coordinates, got {len(coords)}")
        t = shape.tau
        rows = tuple(tuple(coords[1 + i * t : 1 + (i + 1) * t]) for i in range(shape.sigma))
        return cls(shape, coords[0], DenseMatrix(shape.sigma, t, rows))

    def coords(self) -> tuple:
        return (self.lam,) + self.X.flat()

    # predicates

    def is_zero(self) -> bool:
        return not self.lam and self.X.is_zero()

    def is_radical(self) -> bool:
        return not self.lam

    def is_invertible(self) -> bool:
        return bool(self.lam)

    # arithmetic

    def _check(self, other: "SchurElement") -> None:
        if self.shape != other.shape:
            raise ShapeError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: "SchurElement") -> "SchurElement":
        self._check(other)
        return SchurElement(self.shape, self.lam + other.lam, self.X + other.X)

    def __sub__(self, other: "SchurElement") -> "SchurElement":
        self._check(other)
        return SchurElement(self.shape, self.lam - other.lam, self.X - other.X)

    def __neg__(self) -> "SchurElement":
        return SchurElement(self.shape, -self.lam, -self.X)

    def scale(self, c: Number) -> "SchurElement":
        c = ComplexRational.coerce(c)
        return SchurElement(self.shape, c * self.lam, self.X.scale(c))

    def __mul__(self, other: "SchurElement") -> "SchurElement":
        return schur_mul(self, other)

    def inverse(self) -> "SchurElement":
        return schur_inverse(self)

    def embed(self) -> DenseMatrix:
        return schur_embed(self)

    def __str__(self) -> str:
        xs = "; ".join(", ".join(str(v) for v in row) for row in self.X.entries)
        return f"({self.lam} | [{xs}])"


def schur_make(shape: SchurShape, lam: Number, X: DenseMatrix | None = None) -> SchurElement:
    if X is None:
        X = DenseMatrix.zeros(shape.sigma, shape.tau)
    return SchurElement(shape, ComplexRational.coerce(lam), X)


def zero(shape: SchurShape) -> SchurElement:
    return schur_make(shape, ZERO)


def identity(shape: SchurShape) -> SchurElement:
    return schur_make(shape, ONE)


def scalar(shape: SchurShape, lam: Number) -> SchurElement:
    return schur_make(shape, lam)


def radical_unit(shape: SchurShape, i: int, j: int) -> SchurElement:
    """The radical element whose X block has a single 1 at ``(i, j)``."""
    rows = [[ZERO] * shape.tau for _ in range(shape.sigma)]
    rows[i][j] = ONE
    return schur_make(shape, ZERO, DenseMatrix.from_rows(rows))


def coordinate_basis(shape: SchurShape) -> list[SchurElement]:
    """Identity followed by the ``sigma * tau`` radical units (row-major)."""
    return [identity(shape)] + [
        radical_unit(shape, i, j) for i in range(shape.sigma) for j in range(shape.tau)
    ]


def schur_mul(a: SchurElement, b: SchurElement) -> SchurElement:
    """``(la, Xa) * (lb, Xb) = (la*lb, la*Xb + lb*Xa)``."""
    a._check(b)
    la, lb = a.lam, b.lam
    if not la and not lb:
        return zero(a.shape)
    rows = tuple(
        tuple(la * xb + lb * xa for xa, xb in zip(ra, rb))
        for ra, rb in zip(a.X.entries, b.X.entries)
    )
    return SchurElement(a.shape, la * lb, DenseMatrix(a.X.rows, a.X.cols, rows))


def schur_is_invertible(a: SchurElement) -> bool:
    return a.is_invertible()


def schur_inverse(a: SchurElement) -> SchurElement:
    """``(lam, X)^-1 = (1/lam, -X/lam^2)``."""
    if not a.lam:
        raise NotInvertible(f"element {a} has zero scalar part")
    inv = a.lam.inverse()
    return SchurElement(a.shape, inv, a.X.scale(-(inv * inv)))


def schur_embed(a: SchurElement) -> DenseMatrix:
    s, t = a.shape.sigma, a.shape.tau
    d = s + t
    rows = []
    for i in range(d):
        row = [ZERO] * d
        row[i] = a.lam
        if i < s:
            row[s:] = a.X.entries[i]
        rows.append(tuple(row))
    return DenseMatrix(d, d, tuple(rows))


def schur_extract(m: DenseMatrix, shape: SchurShape) -> SchurElement:
    """Read a dense ``d x d`` matrix back as a Schur element.

    Raises:
        NotInSchurAlgebra: an entry outside the block pattern is nonzero, or
            the diagonal is not constant.
    """
    s, d = shape.sigma, shape.d
    if m.shape != (d, d):
        raise ShapeError(f"expected a {d}x{d} matrix, got {m.rows}x{m.cols}")
    lam = m.entries[0][0]
    for i in range(d):
        for j in range(d):
            x = m.entries[i][j]
            if i == j:
                if x != lam:
                    raise NotInSchurAlgebra(f"diagonal entries differ ({lam} at (0,0), {x} at ({i},{i}))")
            elif not (i < s <= j) and x:
                raise NotInSchurAlgebra(f"nonzero entry {x} at ({i},{j}) outside the X block")
    return SchurElement(shape, lam, m.submatrix(0, s, s, d))


def kernel_intersection_trivial(a: SchurElement, b: SchurElement) -> bool:
    """Decide ``Ker A ∩ Ker B = {0}`` from the dense embeddings.

    The intersection of the kernels is the kernel of the stacked matrix
    ``[A; B]``. In O(sigma, tau) this agrees with "lam_A != 0 or lam_B != 0".
    """
    a._check(b)
    ea, eb = schur_embed(a), schur_embed(b)
    return nullspace_of_rows(ea.entries + eb.entries, a.shape.d).dimension == 0


def schur_linearly_independent(a: SchurElement, b: SchurElement) -> bool:
    a._check(b)
    return rank(DenseMatrix(2, a.shape.dim, (a.coords(), b.coords()))) == 2
