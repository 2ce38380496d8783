"""JSON wire formats.

Scalars are ``{"re": "p/q", "im": "p/q"}`` with reduced fractions and
``q > 0``. Decoders raise :class:`FormatError` with a path to the offending
field.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .algebras import AlgebraBasis, GeneratorPair, MaximalityCertificate
from .classify import ClassificationResult
from .errors import FormatError, SchurToeplitzError
from .exact import ComplexRational, DenseMatrix
from .schur import SchurElement, SchurShape, schur_make
from .toeplitz import BlockToeplitz


def _frac(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: Any, path: str = "$") -> Fraction:
    if isinstance(text, bool) or not isinstance(text, (str, int)):
        raise FormatError(f"{path}: expected a rational string 'p/q', got {text!r}")
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise FormatError(f"{path}: invalid rational {text!r} ({exc})") from None
    if isinstance(text, str) and "." in text:
        raise FormatError(f"{path}: decimal notation not allowed, use 'p/q'")
    return value


def encode_scalar(z: ComplexRational) -> dict:
    return {"re": _frac(z.re), "im": _frac(z.im)}


def decode_scalar(obj: Any, path: str = "$") -> ComplexRational:
    if isinstance(obj, (str, int)) and not isinstance(obj, bool):
        return ComplexRational(parse_rational(obj, path))
    if not isinstance(obj, dict) or "re" not in obj:
        raise FormatError(f"{path}: expected {{'re': 'p/q', 'im': 'p/q'}}, got {obj!r}")
    return ComplexRational(
        parse_rational(obj["re"], f"{path}.re"), parse_rational(obj.get("im", "0/1"), f"{path}.im")
    )


def encode_matrix(m: DenseMatrix) -> dict:
    return {
        "rows": m.rows,
        "cols": m.cols,
        "entries": [[encode_scalar(x) for x in row] for row in m.entries],
    }


def _decode_grid(obj: Any, path: str) -> list[list[ComplexRational]]:
    if not isinstance(obj, list) or not all(isinstance(r, list) for r in obj):
        raise FormatError(f"{path}: expected a list of rows")
    return [[decode_scalar(x, f"{path}[{i}][{j}]") for j, x in enumerate(r)] for i, r in enumerate(obj)]


def decode_matrix(obj: Any, path: str = "$") -> DenseMatrix:
    if not isinstance(obj, dict):
        raise FormatError(f"{path}: expected a matrix object")
    try:
        rows, cols = int(obj["rows"]), int(obj["cols"])
        grid = _decode_grid(obj["entries"], f"{path}.entries")
    except KeyError as exc:
        raise FormatError(f"{path}: missing key {exc}") from None
    if len(grid) != rows or any(len(r) != cols for r in grid):
        raise FormatError(f"{path}: entries do not match {rows}x{cols}")
    return DenseMatrix.from_rows(grid)


def encode_schur(a: SchurElement) -> dict:
    return {
        "sigma": a.shape.sigma,
        "tau": a.shape.tau,
        "lambda": encode_scalar(a.lam),
        "X": [[encode_scalar(x) for x in row] for row in a.X.entries],
    }


def _shape(obj: dict, path: str, relaxed: bool) -> SchurShape:
    try:
        sigma, tau = obj["sigma"], obj["tau"]
    except KeyError as exc:
        raise FormatError(f"{path}: missing key {exc}") from None
    if not isinstance(sigma, int) or not isinstance(tau, int):
        raise FormatError(f"{path}: sigma and tau must be integers")
    try:
        return SchurShape(sigma, tau, relaxed=relaxed)
    except SchurToeplitzError as exc:
        raise FormatError(f"{path}: {exc}") from None


def decode_schur(obj: Any, path: str = "$", relaxed: bool = False) -> SchurElement:
    if not isinstance(obj, dict):
        raise FormatError(f"{path}: expected a Schur element object")
    shape = _shape(obj, path, relaxed)
    lam = decode_scalar(obj.get("lambda", "0/1"), f"{path}.lambda")
    if "X" not in obj:
        return schur_make(shape, lam)
    grid = _decode_grid(obj["X"], f"{path}.X")
    if len(grid) != shape.sigma or any(len(r) != shape.tau for r in grid):
        raise FormatError(f"{path}.X: expected {shape.sigma} rows of {shape.tau} entries")
    return schur_make(shape, lam, DenseMatrix.from_rows(grid))


def encode_bt(t: BlockToeplitz) -> dict:
    return {
        "n": t.n,
        "sigma": t.shape.sigma,
        "tau": t.shape.tau,
        "blocks": {str(j): encode_schur(b) for j, b in t.blocks.items()},
    }


def decode_bt(obj: Any, path: str = "$", relaxed: bool = False) -> BlockToeplitz:
    if not isinstance(obj, dict):
        raise FormatError(f"{path}: expected a block Toeplitz object")
    shape = _shape(obj, path, relaxed)
    n = obj.get("n")
    if not isinstance(n, int) or isinstance(n, bool):
        raise FormatError(f"{path}.n: expected an integer")
    raw = obj.get("blocks", {})
    if not isinstance(raw, dict):
        raise FormatError(f"{path}.blocks: expected an object keyed by diagonal index")
    blocks = {}
    for key, value in raw.items():
        try:
            j = int(key)
        except ValueError:
            raise FormatError(f"{path}.blocks: key {key!r} is not an integer") from None
        blk = decode_schur(value, f"{path}.blocks[{key!r}]", relaxed)
        if blk.shape != shape:
            raise FormatError(f"{path}.blocks[{key!r}]: shape {blk.shape} differs from {shape}")
        blocks[j] = blk
    try:
        return BlockToeplitz(n, shape, blocks)
    except SchurToeplitzError as exc:
        raise FormatError(f"{path}: {exc}") from None


def decode_algebra(obj: Any, path: str = "$", relaxed: bool = False) -> list[BlockToeplitz]:
    """Elements of an Algebra payload (``generators`` or a closed ``basis``)."""
    if not isinstance(obj, dict):
        raise FormatError(f"{path}: expected an algebra object")
    if "generators" in obj:
        key = "generators"
    elif "basis" in obj:
        key = "basis"
    else:
        raise FormatError(f"{path}: expected 'generators' or 'basis'")
    items = obj[key]
    if not isinstance(items, list) or not items:
        raise FormatError(f"{path}.{key}: expected a nonempty list")
    elems = [decode_bt(x, f"{path}.{key}[{i}]", relaxed) for i, x in enumerate(items)]
    n, shape = elems[0].n, elems[0].shape
    for i, e in enumerate(elems):
        if e.n != n or e.shape != shape:
            raise FormatError(f"{path}.{key}[{i}]: ambient space differs from element 0")
    return elems


def encode_algebra(elements: list[BlockToeplitz], closed: bool = False, **extra: Any) -> dict:
    key = "basis" if closed else "generators"
    out: dict = {key: [encode_bt(e) for e in elements]}
    if closed:
        out["closed"] = True
    out.update(extra)
    return out


def encode_algebra_basis(alg: AlgebraBasis) -> dict:
    return {
        "n": alg.n,
        "sigma": alg.shape.sigma,
        "tau": alg.shape.tau,
        "dimension": alg.dimension,
        "basis": [encode_bt(e) for e in alg.elements()],
        "closed": True,
    }


def encode_pair(pair: GeneratorPair) -> dict:
    return {"A": encode_schur(pair.A), "B": encode_schur(pair.B)}


def encode_certificate(cert: MaximalityCertificate) -> dict:
    out = {
        "outcome": cert.label,
        "algebra_dimension": cert.algebra_dimension,
        "commutant_dimension": cert.commutant_dimension,
    }
    if cert.witness is not None:
        out["witness"] = encode_bt(cert.witness)
        out["witness_extends"] = cert.witness_extends
    return out


def encode_result(result: ClassificationResult, *, detail: bool = True) -> dict:
    out: dict = {"verdict": result.verdict.value}
    if result.pair is not None:
        out["pair"] = encode_pair(result.pair)
    out["dimension"] = result.dimension
    out["ambient_dimension"] = result.ambient_dimension
    out["certificate"] = result.certificate.label if result.certificate else "inconclusive"
    out["notes"] = list(result.notes)
    out["n"] = result.n
    out["sigma"] = result.shape.sigma
    out["tau"] = result.shape.tau
    if result.codimension is not None:
        out["codimension"] = result.codimension
    if result.reason is not None:
        out["reason"] = result.reason
    if detail:
        if result.recovered_pair is not None:
            out["recovered_pair"] = encode_pair(result.recovered_pair)
        if result.certificate is not None:
            out["certificate_detail"] = encode_certificate(result.certificate)
    return out


def dumps(obj: Any) -> str:
    """Stable, newline-terminated JSON text."""
    return json.dumps(obj, indent=2, sort_keys=False, ensure_ascii=False) + "\n"


def loads(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"malformed JSON at line {exc.lineno} column {exc.colno} (char {exc.pos}): {exc.msg}") from None
