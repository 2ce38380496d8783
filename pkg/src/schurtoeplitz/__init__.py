"""Maximal commutative algebras of block Toeplitz matrices over a Schur algebra.

Everything is computed in exact complex-rational arithmetic.
"""

__version__ = "0.1.0"

from .algebras import (  # noqa: E402
    AlgebraBasis,
    GeneratorPair,
    MaximalityCertificate,
    algebra_closure,
    b_algebra_basis,
    b_membership,
    commutant_in_bt,
    fab_basis,
    fab_membership,
    maximality_certificate,
    pairs_equivalent,
)
from .classify import ClassificationResult, Verdict, classify, recover_pair  # noqa: E402
from .exact import ComplexRational, DenseMatrix, Subspace, mat_mul, nullspace, span  # noqa: E402
from .schur import (  # noqa: E402
    SchurElement,
    SchurShape,
    kernel_intersection_trivial,
    schur_embed,
    schur_extract,
    schur_inverse,
    schur_is_invertible,
    schur_linearly_independent,
    schur_make,
    schur_mul,
)
from .toeplitz import (  # noqa: E402
    BlockToeplitz,
    bt_from_dense,
    bt_make,
    bt_to_dense,
    product_condition,
    structured_product,
)

__all__ = [
    "AlgebraBasis",
    "BlockToeplitz",
    "ClassificationResult",
    "ComplexRational",
    "DenseMatrix",
    "GeneratorPair",
    "MaximalityCertificate",
    "SchurElement",
    "SchurShape",
    "Subspace",
    "Verdict",
    "algebra_closure",
    "b_algebra_basis",
    "b_membership",
    "bt_from_dense",
    "bt_make",
    "bt_to_dense",
    "classify",
    "commutant_in_bt",
    "fab_basis",
    "fab_membership",
    "kernel_intersection_trivial",
    "mat_mul",
    "maximality_certificate",
    "nullspace",
    "pairs_equivalent",
    "product_condition",
    "recover_pair",
    "schur_embed",
    "schur_extract",
    "schur_inverse",
    "schur_is_invertible",
    "schur_linearly_independent",
    "schur_make",
    "schur_mul",
    "span",
    "structured_product",
]
