"""Constructive classification of commutative subalgebras of T_n (x) O(sigma, tau).

Every maximal one is either F_{A,B} with an invertible member in the pair
(type i), or B (x) O, whose off-diagonal blocks are all radical (type ii).
Non-maximal inputs are reported as contained in one of the two.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Sequence, Union

from .algebras import (
    AlgebraBasis,
    GeneratorPair,
    MaximalityCertificate,
    algebra_closure,
    ambient_dimension,
    b_algebra_dimension,
    basis_from_elements,
    fab_basis,
    maximality_certificate,
)
from .errors import NoInvertibleOffDiagonal, NotCommutative, NotToeplitzClosed
from .schur import SchurShape
from .toeplitz import BlockToeplitz


class Verdict(str, enum.Enum):
    TYPE_I = "type_i"
    TYPE_II = "type_ii"
    CONTAINED_IN_TYPE_I = "contained_in_type_i"
    CONTAINED_IN_TYPE_II = "contained_in_type_ii"
    REJECTED = "rejected"


@dataclass
class ClassificationResult:
    verdict: Verdict
    n: int
    shape: SchurShape
    dimension: int
    ambient_dimension: int
    pair: GeneratorPair | None = None
    recovered_pair: GeneratorPair | None = None
    codimension: int | None = None
    certificate: MaximalityCertificate | None = None
    reason: str | None = None
    notes: list[str] = field(default_factory=list)
    algebra: AlgebraBasis | None = None

    @property
    def is_maximal_type(self) -> bool:
        return self.verdict in (Verdict.TYPE_I, Verdict.TYPE_II)


def recover_pair(alg: AlgebraBasis) -> GeneratorPair:
    """Find ``(A, B) = (T_{p-n}, T_p)`` with an invertible member.

    Scans basis elements in order, then ``p = 1..n-1``. Because the algebra is
    closed, ``T U`` is block Toeplitz for every ``U`` in it, and the product
    identity at row ``p`` gives ``A U_q = B U_{q-n}``, i.e. ``alg ⊆ F_{A,B}``.

    Raises:
        NoInvertibleOffDiagonal: every off-diagonal scalar part vanishes on alg.
    """
    n = alg.n
    for t in alg.elements():
        for p in range(1, n):
            a, b = t.block(p - n), t.block(p)
            if a.is_invertible() or b.is_invertible():
                return GeneratorPair(a, b)
    raise NoInvertibleOffDiagonal("no basis element has an invertible off-diagonal block")


Input = Union[AlgebraBasis, Sequence[BlockToeplitz]]


def classify(source: Input) -> ClassificationResult:
    """Close the input, then sort it into type (i), type (ii) or containment."""
    if isinstance(source, AlgebraBasis):
        n, shape = source.n, source.shape
        generators = source.elements()
    else:
        generators = list(source)
        if not generators:
            raise ValueError("nothing to classify: no generators")
        n, shape = generators[0].n, generators[0].shape
    ambient = ambient_dimension(n, shape)
    notes: list[str] = []
    if not shape.in_theorem_hypotheses:
        notes.append(
            f"shape ({shape.sigma},{shape.tau}) violates |sigma - tau| <= 1; "
            "outside the hypotheses of the classification"
        )

    if not generators:
        alg = AlgebraBasis(n, shape, basis_from_elements([], n, shape).space)
    else:
        try:
            alg = algebra_closure(generators)
        except (NotCommutative, NotToeplitzClosed) as exc:
            kind = type(exc).__name__
            span_dim = basis_from_elements(generators).dimension
            return ClassificationResult(
                Verdict.REJECTED, n, shape, span_dim, ambient, reason=f"{kind}: {exc}", notes=notes
            )

    certificate = maximality_certificate(alg, check=False)
    try:
        raw = recover_pair(alg)
    except NoInvertibleOffDiagonal:
        raw = None

    if raw is not None:
        family = fab_basis(raw, n)
        if not alg.is_subalgebra_of(family):
            raise AssertionError("recovered pair does not contain the algebra")
        pair = raw.normalized()
        notes.append(
            "A invertible in recovered pair" if raw.A.is_invertible() else "B invertible in recovered pair"
        )
        codim = family.dimension - alg.dimension
        verdict = Verdict.TYPE_I if codim == 0 else Verdict.CONTAINED_IN_TYPE_I
        result = ClassificationResult(
            verdict, n, shape, alg.dimension, ambient, pair=pair, recovered_pair=raw,
            codimension=codim, certificate=certificate, notes=notes, algebra=alg,
        )
    else:
        notes.append("no off-diagonal block is invertible; algebra lies in B (x) O")
        codim = b_algebra_dimension(n, shape) - alg.dimension
        verdict = Verdict.TYPE_II if codim == 0 else Verdict.CONTAINED_IN_TYPE_II
        result = ClassificationResult(
            verdict, n, shape, alg.dimension, ambient, codimension=codim,
            certificate=certificate, notes=notes, algebra=alg,
        )

    if result.is_maximal_type and not certificate.certified:
        notes.append("commutant is strictly larger than the algebra; maximality not certified")
    return result
