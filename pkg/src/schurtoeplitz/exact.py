"""Exact complex-rational linear algebra.

Scalars are Gaussian rationals held over a common integer denominator,
matrices are immutable row-major grids and subspaces are stored in reduced
row-echelon form, so two equal subspaces always have identical bases.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence, Union

from .errors import DimensionError

Number = Union[int, Fraction, "ComplexRational"]


class ComplexRational:
    """An exact complex number ``re + im*i`` with rational parts.

    Stored as integers ``(a, b, d)`` meaning ``(a + b*i) / d`` with ``d > 0``
    and ``gcd(a, b, d) == 1``; this form is canonical, so equality is tuple
    equality. ``re`` and ``im`` are exposed as reduced fractions.
    """

    __slots__ = ("_a", "_b", "_d")

    def __init__(self, re: int | Fraction | str = 0, im: int | Fraction | str = 0):
        if type(re) is not int:
            re = Fraction(re)
        if type(im) is not int:
            im = Fraction(im)
        if type(re) is int and type(im) is int:
            self._a, self._b, self._d = re, im, 1
            return
        re, im = Fraction(re), Fraction(im)
        d = re.denominator * im.denominator // gcd(re.denominator, im.denominator)
        self._set(re.numerator * (d // re.denominator), im.numerator * (d // im.denominator), d)

    def _set(self, a: int, b: int, d: int) -> None:
        g = gcd(a, b, d)
        if g != 1:
            a //= g
            b //= g
            d //= g
        self._a, self._b, self._d = a, b, d

    @classmethod
    def _raw(cls, a: int, b: int, d: int) -> "ComplexRational":
        obj = cls.__new__(cls)
        if d == 1:
            obj._a, obj._b, obj._d = a, b, 1
        else:
            obj._set(a, b, d)
        return obj

    @classmethod
    def coerce(cls, value: Number | str) -> "ComplexRational":
        if isinstance(value, ComplexRational):
            return value
        return cls(value)

    @property
    def re(self) -> Fraction:
        return Fraction(self._a, self._d)

    @property
    def im(self) -> Fraction:
        return Fraction(self._b, self._d)

    def __repr__(self) -> str:
        return f"ComplexRational({str(self.re)!r}, {str(self.im)!r})"

    def __str__(self) -> str:
        re, im = self.re, self.im
        if not im:
            return str(re)
        if not re:
            return f"{im}i"
        sign = "-" if im < 0 else "+"
        return f"{re}{sign}{abs(im)}i"

    def __bool__(self) -> bool:
        return self._a != 0 or self._b != 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, ComplexRational):
            return self._a == other._a and self._b == other._b and self._d == other._d
        if isinstance(other, int):
            return self._b == 0 and self._d == 1 and self._a == other
        if isinstance(other, Fraction):
            return self._b == 0 and self.re == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._b == 0 and self._d == 1:
            return hash(self._a)
        return hash((self._a, self._b, self._d))

    def __neg__(self) -> "ComplexRational":
        obj = ComplexRational.__new__(ComplexRational)
        obj._a, obj._b, obj._d = -self._a, -self._b, self._d
        return obj

    def __add__(self, other: Number) -> "ComplexRational":
        if not isinstance(other, ComplexRational):
            if isinstance(other, (int, Fraction)):
                other = ComplexRational(other)
            else:
                return NotImplemented
        d1, d2 = self._d, other._d
        if d1 == d2:
            return ComplexRational._raw(self._a + other._a, self._b + other._b, d1)
        return ComplexRational._raw(
            self._a * d2 + other._a * d1, self._b * d2 + other._b * d1, d1 * d2
        )

    __radd__ = __add__

    def __sub__(self, other: Number) -> "ComplexRational":
        if not isinstance(other, ComplexRational):
            if isinstance(other, (int, Fraction)):
                other = ComplexRational(other)
            else:
                return NotImplemented
        d1, d2 = self._d, other._d
        if d1 == d2:
            return ComplexRational._raw(self._a - other._a, self._b - other._b, d1)
        return ComplexRational._raw(
            self._a * d2 - other._a * d1, self._b * d2 - other._b * d1, d1 * d2
        )

    def __rsub__(self, other: Number) -> "ComplexRational":
        return (-self).__add__(other)

    def __mul__(self, other: Number) -> "ComplexRational":
        if not isinstance(other, ComplexRational):
            if isinstance(other, (int, Fraction)):
                other = ComplexRational(other)
            else:
                return NotImplemented
        a, b, c, e = self._a, self._b, other._a, other._b
        if b == 0 and e == 0:
            return ComplexRational._raw(a * c, 0, self._d * other._d)
        return ComplexRational._raw(a * c - b * e, a * e + b * c, self._d * other._d)

    __rmul__ = __mul__

    def inverse(self) -> "ComplexRational":
        a, b, d = self._a, self._b, self._d
        if a == 0 and b == 0:
            raise ZeroDivisionError("inverse of zero")
        # d / (a + bi) = d (a - bi) / (a^2 + b^2)
        norm = a * a + b * b
        return ComplexRational._raw(d * a, -d * b, norm)

    def __truediv__(self, other: Number) -> "ComplexRational":
        return self * ComplexRational.coerce(other).inverse()

    def __rtruediv__(self, other: Number) -> "ComplexRational":
        return ComplexRational.coerce(other) * self.inverse()

    def conjugate(self) -> "ComplexRational":
        return ComplexRational._raw(self._a, -self._b, self._d)


ZERO = ComplexRational(0)
ONE = ComplexRational(1)

Vector = tuple  # tuple[ComplexRational, ...]


def as_vector(values: Iterable[Number]) -> Vector:
    return tuple(ComplexRational.coerce(v) for v in values)


@dataclass(frozen=True)
class DenseMatrix:
    """Immutable ``rows x cols`` matrix of :class:`ComplexRational`."""

    rows: int
    cols: int
    entries: tuple  # tuple of row tuples

    def __post_init__(self) -> None:
        if self.rows < 1 or self.cols < 1:
            raise DimensionError(f"matrix must be at least 1x1, got {self.rows}x{self.cols}")
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise DimensionError("entries do not match declared shape")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Number]]) -> "DenseMatrix":
        grid = tuple(as_vector(r) for r in rows)
        if not grid:
            raise DimensionError("matrix needs at least one row")
        return cls(len(grid), len(grid[0]), grid)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "DenseMatrix":
        return cls(rows, cols, tuple((ZERO,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, size: int) -> "DenseMatrix":
        return cls(
            size,
            size,
            tuple(tuple(ONE if i == j else ZERO for j in range(size)) for i in range(size)),
        )

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, index: tuple[int, int]) -> ComplexRational:
        i, j = index
        return self.entries[i][j]

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.entries)

    def _check_same(self, other: "DenseMatrix") -> None:
        if self.shape != other.shape:
            raise DimensionError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: "DenseMatrix") -> "DenseMatrix":
        self._check_same(other)
        return DenseMatrix(
            self.rows,
            self.cols,
            tuple(tuple(x + y for x, y in zip(r, s)) for r, s in zip(self.entries, other.entries)),
        )

    def __sub__(self, other: "DenseMatrix") -> "DenseMatrix":
        self._check_same(other)
        return DenseMatrix(
            self.rows,
            self.cols,
            tuple(tuple(x - y for x, y in zip(r, s)) for r, s in zip(self.entries, other.entries)),
        )

    def __neg__(self) -> "DenseMatrix":
        return DenseMatrix(self.rows, self.cols, tuple(tuple(-x for x in r) for r in self.entries))

    def scale(self, c: Number) -> "DenseMatrix":
        c = ComplexRational.coerce(c)
        return DenseMatrix(self.rows, self.cols, tuple(tuple(c * x for x in r) for r in self.entries))

    def __matmul__(self, other: "DenseMatrix") -> "DenseMatrix":
        return mat_mul(self, other)

    def submatrix(self, r0: int, r1: int, c0: int, c1: int) -> "DenseMatrix":
        return DenseMatrix(r1 - r0, c1 - c0, tuple(row[c0:c1] for row in self.entries[r0:r1]))

    def flat(self) -> Vector:
        return tuple(x for r in self.entries for x in r)


def mat_mul(a: DenseMatrix, b: DenseMatrix) -> DenseMatrix:
    """Exact product ``a @ b``; zero entries of ``a`` and ``b`` are skipped."""
    if a.cols != b.rows:
        raise DimensionError(f"cannot multiply {a.shape} by {b.shape}")
    b_sparse = [[(j, x) for j, x in enumerate(row) if x] for row in b.entries]
    out = []
    for row in a.entries:
        acc = [ZERO] * b.cols
        for k, x in enumerate(row):
            if not x:
                continue
            for j, y in b_sparse[k]:
                acc[j] = acc[j] + x * y
        out.append(tuple(acc))
    return DenseMatrix(a.rows, b.cols, tuple(out))


def mat_mul_schoolbook(a: DenseMatrix, b: DenseMatrix) -> DenseMatrix:
    """Plain triple-loop product, kept as an independent reference."""
    if a.cols != b.rows:
        raise DimensionError(f"cannot multiply {a.shape} by {b.shape}")
    out = []
    for i in range(a.rows):
        row = []
        for j in range(b.cols):
            s = ZERO
            for k in range(a.cols):
                s = s + a.entries[i][k] * b.entries[k][j]
            row.append(s)
        out.append(tuple(row))
    return DenseMatrix(a.rows, b.cols, tuple(out))


class EchelonBuilder:
    """Incrementally maintained reduced row-echelon basis.

    Rows are kept sparse (``{column: value}``) and fully reduced against each
    other, so a single pass is enough to reduce an incoming vector.
    """

    def __init__(self, ambient_dim: int):
        self.ambient_dim = ambient_dim
        self._rows: dict[int, dict[int, ComplexRational]] = {}

    def __len__(self) -> int:
        return len(self._rows)

    @property
    def rank(self) -> int:
        return len(self._rows)

    def reduce(self, vector: Sequence[Number]) -> dict[int, ComplexRational]:
        if len(vector) != self.ambient_dim:
            raise DimensionError(f"vector length {len(vector)} != ambient dimension {self.ambient_dim}")
        v = {
            i: x if type(x) is ComplexRational else ComplexRational.coerce(x)
            for i, x in enumerate(vector) if x
        }
        for pivot, row in self._rows.items():
            f = v.get(pivot)
            if f is None:
                continue
            for c, y in row.items():
                nv = v.get(c, ZERO) - f * y
                if nv:
                    v[c] = nv
                else:
                    v.pop(c, None)
        return v

    def add(self, vector: Sequence[Number]) -> bool:
        """Insert ``vector``; return True when it enlarged the span."""
        v = self.reduce(vector)
        if not v:
            return False
        pivot = min(v)
        inv = v[pivot].inverse()
        v = {c: x * inv for c, x in v.items()}
        for row in self._rows.values():
            f = row.get(pivot)
            if f is None:
                continue
            for c, y in v.items():
                nv = row.get(c, ZERO) - f * y
                if nv:
                    row[c] = nv
                else:
                    row.pop(c, None)
        self._rows[pivot] = v
        return True

    def contains(self, vector: Sequence[Number]) -> bool:
        return not self.reduce(vector)

    def pivots(self) -> list[int]:
        return sorted(self._rows)

    def to_subspace(self) -> "Subspace":
        basis = []
        for p in sorted(self._rows):
            row = self._rows[p]
            basis.append(tuple(row.get(c, ZERO) for c in range(self.ambient_dim)))
        return Subspace(self.ambient_dim, tuple(basis))


@dataclass(frozen=True)
class Subspace:
    """Linear subspace of ``C^ambient_dim`` with a canonical RREF basis."""

    ambient_dim: int
    basis: tuple  # tuple of row vectors in RREF

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def __len__(self) -> int:
        return len(self.basis)

    def pivots(self) -> list[int]:
        return [next(i for i, x in enumerate(row) if x) for row in self.basis]

    def builder(self) -> EchelonBuilder:
        eb = EchelonBuilder(self.ambient_dim)
        for row in self.basis:
            eb.add(row)
        return eb

    def contains(self, vector: Sequence[Number]) -> bool:
        return subspace_contains(self, vector)

    def is_subspace_of(self, other: "Subspace") -> bool:
        if self.ambient_dim != other.ambient_dim:
            raise DimensionError("ambient dimension mismatch")
        eb = other.builder()
        return all(eb.contains(row) for row in self.basis)


def span(vectors: Iterable[Sequence[Number]], ambient_dim: int) -> Subspace:
    eb = EchelonBuilder(ambient_dim)
    for v in vectors:
        eb.add(as_vector(v))
    return eb.to_subspace()


def zero_subspace(ambient_dim: int) -> Subspace:
    return Subspace(ambient_dim, ())


def full_space(ambient_dim: int) -> Subspace:
    return span(unit_vectors(ambient_dim), ambient_dim)


def unit_vectors(dim: int) -> list[Vector]:
    return [tuple(ONE if i == j else ZERO for j in range(dim)) for i in range(dim)]


def subspace_contains(s: Subspace, v: Sequence[Number]) -> bool:
    v = as_vector(v)
    if len(v) != s.ambient_dim:
        raise DimensionError(f"vector length {len(v)} != ambient dimension {s.ambient_dim}")
    return s.builder().contains(v)


def subspace_equal(s1: Subspace, s2: Subspace) -> bool:
    if s1.ambient_dim != s2.ambient_dim:
        raise DimensionError(f"ambient mismatch {s1.ambient_dim} vs {s2.ambient_dim}")
    return s1.basis == s2.basis


def rank(m: DenseMatrix) -> int:
    eb = EchelonBuilder(m.cols)
    for row in m.entries:
        eb.add(row)
    return eb.rank


def nullspace_of_rows(rows: Iterable[Sequence[ComplexRational]], ncols: int) -> Subspace:
    """Kernel ``{v : r.v = 0 for every row r}`` of a stacked linear system."""
    eb = EchelonBuilder(ncols)
    for row in rows:
        eb.add(row)
        if eb.rank == ncols:
            break
    pivots = set(eb.pivots())
    vectors = []
    for f in range(ncols):
        if f in pivots:
            continue
        v = [ZERO] * ncols
        v[f] = ONE
        for p, row in eb._rows.items():
            x = row.get(f)
            if x is not None:
                v[p] = -x
        vectors.append(tuple(v))
    return span(vectors, ncols)


def nullspace(m: DenseMatrix) -> Subspace:
    return nullspace_of_rows(m.entries, m.cols)


def intersection(s1: Subspace, s2: Subspace) -> Subspace:
    """Intersection via the kernel of ``[B1; -B2]^T``."""
    if s1.ambient_dim != s2.ambient_dim:
        raise DimensionError("ambient dimension mismatch")
    k1, k2 = s1.dimension, s2.dimension
    if k1 == 0 or k2 == 0:
        return zero_subspace(s1.ambient_dim)
    cols = list(s1.basis) + [tuple(-x for x in r) for r in s2.basis]
    rows = [tuple(c[i] for c in cols) for i in range(s1.ambient_dim)]
    ker = nullspace_of_rows(rows, k1 + k2)
    out = []
    for coeffs in ker.basis:
        v = [ZERO] * s1.ambient_dim
        for c, row in zip(coeffs[:k1], s1.basis):
            if c:
                v = [a + c * b for a, b in zip(v, row)]
        out.append(v)
    return span(out, s1.ambient_dim)
