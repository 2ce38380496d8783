"""Block Toeplitz matrices with entries in O(sigma, tau).

Index convention: the dense block at ``(p, q)`` is ``T[p - q]``, so positive
diagonal indices sit *below* the main diagonal.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Mapping

from .errors import (
    ConditionViolated,
    DimensionError,
    IndexRangeError,
    NotBlockToeplitz,
    ShapeError,
)
from .exact import ZERO, ComplexRational, DenseMatrix, Number, mat_mul
from .schur import SchurElement, SchurShape, schur_embed, schur_extract, schur_mul, zero


@dataclass(frozen=True, eq=True)
class BlockToeplitz:
    """``n x n`` block Toeplitz matrix; absent diagonals are zero."""

    n: int
    shape: SchurShape
    blocks: Mapping[int, SchurElement]

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 2:
            raise DimensionError(f"block order n must be an integer >= 2, got {self.n!r}")
        clean = {}
        for j, blk in self.blocks.items():
            if not isinstance(j, int) or not (1 - self.n <= j <= self.n - 1):
                raise IndexRangeError(f"diagonal index {j} outside [{1 - self.n}, {self.n - 1}]")
            if blk.shape != self.shape:
                raise ShapeError(f"block {j} has shape {blk.shape}, expected {self.shape}")
            if not blk.is_zero():
                clean[j] = blk
        object.__setattr__(self, "blocks", dict(sorted(clean.items())))

    __hash__ = None  # type: ignore[assignment]

    @property
    def indices(self) -> range:
        return range(1 - self.n, self.n)

    def block(self, j: int) -> SchurElement:
        if not (1 - self.n <= j <= self.n - 1):
            raise IndexRangeError(f"diagonal index {j} outside [{1 - self.n}, {self.n - 1}]")
        blk = self.blocks.get(j)
        return blk if blk is not None else zero(self.shape)

    def is_zero(self) -> bool:
        return not self.blocks

    @property
    def ambient_dim(self) -> int:
        return (2 * self.n - 1) * self.shape.dim

    def coords(self) -> tuple:
        """Coordinates ``(lam, X...)`` of each diagonal, in increasing index order."""
        out: list = []
        for j in self.indices:
            out.extend(self.block(j).coords())
        return tuple(out)

    @classmethod
    def from_coords(cls, n: int, shape: SchurShape, coords) -> "BlockToeplitz":
        k = shape.dim
        if len(coords) != (2 * n - 1) * k:
            raise DimensionError(f"expected {(2 * n - 1) * k} coordinates, got {len(coords)}")
        blocks = {}
        for pos, j in enumerate(range(1 - n, n)):
            blocks[j] = SchurElement.from_coords(shape, tuple(coords[pos * k : (pos + 1) * k]))
        return cls(n, shape, blocks)

    def _check(self, other: "BlockToeplitz") -> None:
        if self.n != other.n or self.shape != other.shape:
            raise DimensionError(
                f"incompatible operands: n={self.n},{self.shape} vs n={other.n},{other.shape}"
            )

    def __add__(self, other: "BlockToeplitz") -> "BlockToeplitz":
        self._check(other)
        return BlockToeplitz(
            self.n, self.shape, {j: self.block(j) + other.block(j) for j in self.indices}
        )

    def __sub__(self, other: "BlockToeplitz") -> "BlockToeplitz":
        self._check(other)
        return BlockToeplitz(
            self.n, self.shape, {j: self.block(j) - other.block(j) for j in self.indices}
        )

    def scale(self, c: Number) -> "BlockToeplitz":
        return BlockToeplitz(self.n, self.shape, {j: b.scale(c) for j, b in self.blocks.items()})

    def to_dense(self) -> DenseMatrix:
        return bt_to_dense(self)

    def has_invertible_off_diagonal(self) -> bool:
        return any(j != 0 and b.is_invertible() for j, b in self.blocks.items())

    def __str__(self) -> str:
        inner = ", ".join(f"{j}: {b}" for j, b in self.blocks.items())
        return f"BlockToeplitz(n={self.n}, {self.shape}, {{{inner}}})"


def bt_make(n: int, shape: SchurShape, blocks: Mapping[int, SchurElement] | None = None) -> BlockToeplitz:
    return BlockToeplitz(n, shape, dict(blocks or {}))


def bt_identity(n: int, shape: SchurShape) -> BlockToeplitz:
    from .schur import identity

    return BlockToeplitz(n, shape, {0: identity(shape)})


def bt_to_dense(t: BlockToeplitz) -> DenseMatrix:
    d, n = t.shape.d, t.n
    embedded = {j: schur_embed(b) for j, b in t.blocks.items()}
    rows = []
    for p in range(n):
        for r in range(d):
            row: list = []
            for q in range(n):
                blk = embedded.get(p - q)
                row.extend(blk.entries[r] if blk is not None else (ZERO,) * d)
            rows.append(tuple(row))
    return DenseMatrix(n * d, n * d, tuple(rows))


def _dense_blocks(m: DenseMatrix, n: int, d: int) -> list[list[DenseMatrix]]:
    if m.shape != (n * d, n * d):
        raise DimensionError(f"expected {n * d}x{n * d} matrix, got {m.rows}x{m.cols}")
    return [
        [m.submatrix(p * d, (p + 1) * d, q * d, (q + 1) * d) for q in range(n)] for p in range(n)
    ]


def is_block_toeplitz(m: DenseMatrix, n: int, d: int) -> bool:
    """True when every block diagonal of the ``nd x nd`` matrix is constant."""
    grid = _dense_blocks(m, n, d)
    return all(
        grid[p][q] == grid[p - 1][q - 1] for p in range(1, n) for q in range(1, n)
    )


def bt_from_dense(m: DenseMatrix, n: int, shape: SchurShape) -> BlockToeplitz:
    """Read a dense matrix as a block Toeplitz matrix over O(sigma, tau).

    Raises:
        NotBlockToeplitz: some block diagonal is not constant.
        NotInSchurAlgebra: a block is not in O(sigma, tau).
    """
    grid = _dense_blocks(m, n, shape.d)
    for p in range(1, n):
        for q in range(1, n):
            if grid[p][q] != grid[p - 1][q - 1]:
                raise NotBlockToeplitz(
                    f"block ({p},{q}) differs from block ({p - 1},{q - 1}) on diagonal {p - q}"
                )
    blocks = {}
    for j in range(1 - n, n):
        p, q = (j, 0) if j >= 0 else (0, -j)
        blocks[j] = schur_extract(grid[p][q], shape)
    return BlockToeplitz(n, shape, blocks)


def product_condition(t: BlockToeplitz, u: BlockToeplitz) -> bool:
    """``T_p U_{q-n} == T_{p-n} U_q`` for all ``p, q in 1..n-1``.

    This holds exactly when the dense product ``T @ U`` is block Toeplitz.
    """
    t._check(u)
    n = t.n
    for p in range(1, n):
        tp, tpn = t.block(p), t.block(p - n)
        for q in range(1, n):
            if schur_mul(tp, u.block(q - n)) != schur_mul(tpn, u.block(q)):
                return False
    return True


class MulCounter:
    """Counts block (Schur x Schur) multiplications."""

    def __init__(self) -> None:
        self.count = 0

    def mul(self, a: SchurElement, b: SchurElement) -> SchurElement:
        self.count += 1
        return schur_mul(a, b)


# Evaluation points 0, 1, -1, 2, -2, ... for the interpolation kernel.
def _points(count: int) -> list[int]:
    pts = [0]
    k = 1
    while len(pts) < count:
        pts.append(k)
        if len(pts) < count:
            pts.append(-k)
        k += 1
    return pts


@lru_cache(maxsize=None)
def _interpolation_matrices(size: int) -> tuple[tuple, tuple]:
    """Vandermonde ``V[i][k] = p_i**k`` and ``(V^-1)^T`` as exact scalars."""
    pts = _points(size)
    V = [[Fraction(p) ** k for k in range(size)] for p in pts]
    # Gauss-Jordan on [V | I]
    aug = [row[:] + [Fraction(int(i == j)) for j in range(size)] for i, row in enumerate(V)]
    for c in range(size):
        piv = next(r for r in range(c, size) if aug[r][c] != 0)
        aug[c], aug[piv] = aug[piv], aug[c]
        f = aug[c][c]
        aug[c] = [x / f for x in aug[c]]
        for r in range(size):
            if r != c and aug[r][c] != 0:
                g = aug[r][c]
                aug[r] = [x - g * y for x, y in zip(aug[r], aug[c])]
    inv = [row[size:] for row in aug]
    cr = ComplexRational
    Vc = tuple(tuple(cr(x) for x in row) for row in V)
    inv_t = tuple(tuple(cr(inv[k][i]) for k in range(size)) for i in range(size))
    return Vc, inv_t


def _lincomb(coeffs, elems: list[SchurElement], shape: SchurShape) -> SchurElement:
    acc = zero(shape)
    for c, e in zip(coeffs, elems):
        if c and not e.is_zero():
            acc = acc + (e if c == 1 else e.scale(c))
    return acc


def _middle_product(
    x: list[SchurElement],
    b: list[SchurElement],
    ny: int,
    mul: Callable[[SchurElement, SchurElement], SchurElement],
    shape: SchurShape,
) -> list[SchurElement]:
    """``y_i = sum_j b_j x_{i+j}`` for ``i < ny`` with ``len(b) + ny - 1`` products.

    Transposed evaluation/interpolation: if ``V`` interpolates the full product
    of an ``ny``-term and an ``nb``-term polynomial, then
    ``y = V[:, :ny]^T diag(V[:, :nb] b) V^-T x``.
    """
    nb = len(b)
    size = nb + ny - 1
    if len(x) != size:
        raise DimensionError(f"middle product needs {size} inputs, got {len(x)}")
    V, inv_t = _interpolation_matrices(size)
    w = [_lincomb(inv_t[i], x, shape) for i in range(size)]
    e = [_lincomb(V[i][:nb], b, shape) for i in range(size)]
    g = [mul(wi, ei) for wi, ei in zip(w, e)]
    return [_lincomb([V[i][m] for i in range(size)], g, shape) for m in range(ny)]


def _product_direct(t: BlockToeplitz, u: BlockToeplitz, mul) -> dict[int, SchurElement]:
    n, shape = t.n, t.shape
    out = {}
    for k in range(0, n):
        acc = zero(shape)
        for l in range(n):
            acc = acc + mul(t.block(k - l), u.block(l))
        out[k] = acc
    for k in range(1 - n, 0):
        acc = zero(shape)
        for l in range(n):
            acc = acc + mul(t.block(-l), u.block(l + k))
        out[k] = acc
    return out


def _product_interpolation(t: BlockToeplitz, u: BlockToeplitz, mul) -> dict[int, SchurElement]:
    n, shape = t.n, t.shape
    # first column: c_k = sum_l T_{k-l} U_l  (n outputs, 2n-1 products)
    x = [t.block(m - n + 1) for m in range(2 * n - 1)]
    b = [u.block(n - 1 - l) for l in range(n)]
    col = _middle_product(x, b, n, mul, shape)
    # first row: r_m = sum_l T_{-l} U_{l-m}, m = 1..n-1  (2n-2 products)
    x = [u.block(s - n + 1) for s in range(2 * n - 2)]
    b = [t.block(-l) for l in range(n)]
    row = _middle_product(x, b, n - 1, mul, shape)
    out = {k: col[k] for k in range(n)}
    for i, r in enumerate(row):
        out[-(n - 1 - i)] = r
    return out


def _product_n2(t: BlockToeplitz, u: BlockToeplitz, mul) -> dict[int, SchurElement]:
    """Four products for ``n = 2``; relies on ``T_1 U_-1 == T_-1 U_1``."""
    tm, t0, tp = t.block(-1), t.block(0), t.block(1)
    um, u0, up = u.block(-1), u.block(0), u.block(1)
    m1 = mul(tp - tm, u0)
    m2 = mul(t0 + tp, um + u0)
    m3 = mul(t0, up - um)
    m4 = mul(t0 - tp, um - u0)
    half = ComplexRational(Fraction(1, 2))
    s = (m2 + m4).scale(half)
    return {0: (m2 - m4).scale(half), 1: s + m3, -1: s - m1}


_METHODS = {
    "direct": _product_direct,
    "interpolation": _product_interpolation,
}


def structured_product(
    t: BlockToeplitz,
    u: BlockToeplitz,
    *,
    method: str = "fast",
    counter: MulCounter | None = None,
) -> BlockToeplitz:
    """Block Toeplitz product ``T @ U`` computed diagonal by diagonal.

    ``method`` selects the kernel:

    * ``"direct"`` sums ``n`` block products per diagonal, ``n(2n-1)`` total;
    * ``"interpolation"`` gets the first column and first row as middle
      products, ``4n-3`` block products;
    * ``"fast"`` (default) uses a 4-product kernel for ``n == 2`` and
      interpolation otherwise, so never more than ``n**2`` products.

    Raises:
        ConditionViolated: the product is not block Toeplitz.
    """
    t._check(u)
    if not product_condition(t, u):
        raise ConditionViolated("product condition T_p U_{q-n} = T_{p-n} U_q fails")
    mul = counter.mul if counter is not None else schur_mul
    if method == "fast":
        kernel = _product_n2 if t.n == 2 else _product_interpolation
    else:
        try:
            kernel = _METHODS[method]
        except KeyError:
            raise ValueError(f"unknown method {method!r}") from None
    return BlockToeplitz(t.n, t.shape, kernel(t, u, mul))


def dense_product(t: BlockToeplitz, u: BlockToeplitz) -> BlockToeplitz:
    """Reference path: multiply the dense embeddings and read the result back."""
    t._check(u)
    return bt_from_dense(mat_mul(bt_to_dense(t), bt_to_dense(u)), t.n, t.shape)


def block_grid_product(
    t: BlockToeplitz, u: BlockToeplitz, counter: MulCounter | None = None
) -> list[list[SchurElement]]:
    """All ``n**2`` blocks of ``T @ U`` by block-level schoolbook (``n**3`` products)."""
    t._check(u)
    n = t.n
    mul = counter.mul if counter is not None else schur_mul
    grid = []
    for p in range(n):
        row = []
        for q in range(n):
            acc = zero(t.shape)
            for l in range(n):
                acc = acc + mul(t.block(p - l), u.block(l - q))
            row.append(acc)
        grid.append(row)
    return grid
