"""Seeded randomized property suites.

Each target runs ``trials`` independent instances. A trial either passes or
yields a JSON-ready counterexample; the first one is kept verbatim in the
report so a failure can be replayed from the report alone.
"""

from __future__ import annotations

import json
import random
from collections import Counter
from dataclasses import asdict, dataclass, field
from typing import Callable, Optional

from . import __version__
from .algebras import (
    GeneratorPair,
    algebra_closure,
    b_algebra_basis,
    b_algebra_dimension,
    fab_basis,
    fab_membership,
    maximality_certificate,
    pairs_equivalent,
)
from .classify import Verdict, classify
from .errors import SchurToeplitzError
from .exact import mat_mul
from .jsonio import encode_bt, encode_pair
from .sampling import (
    perturb_to_violation,
    random_bt,
    random_condition_pair,
    random_fab_element,
    random_independent_radical_pair,
    random_nondegenerate_pair,
    random_schur,
    trial_rng,
)
from .schur import SchurShape, kernel_intersection_trivial
from .toeplitz import (
    MulCounter,
    block_grid_product,
    bt_to_dense,
    dense_product,
    is_block_toeplitz,
    product_condition,
    structured_product,
)

U64_MAX = 2**64 - 1


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class RunConfig:
    seed: int = 0
    trials: int = 100
    n: int = 3
    sigma: int = 2
    tau: int = 1
    format: str = "json"
    relaxed: bool = False

    def validate(self) -> SchurShape:
        if not 0 <= self.seed <= U64_MAX:
            raise ConfigError(f"seed must be an unsigned 64-bit integer, got {self.seed}")
        if self.trials < 1:
            raise ConfigError(f"trials must be positive, got {self.trials}")
        if self.n < 2:
            raise ConfigError(f"block order n must be >= 2, got {self.n}")
        if self.format not in ("json", "text"):
            raise ConfigError(f"unknown format {self.format!r}")
        try:
            return SchurShape(self.sigma, self.tau, relaxed=self.relaxed)
        except SchurToeplitzError as exc:
            raise ConfigError(str(exc)) from None


@dataclass
class SuiteReport:
    target: str
    config: RunConfig
    passed: int = 0
    failed: int = 0
    checks: Counter = field(default_factory=Counter)
    first_counterexample: Optional[dict] = None

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_json(self) -> dict:
        cfg = asdict(self.config)
        cfg.pop("format")
        return {
            "tool": "schurtoeplitz",
            "version": __version__,
            "target": self.target,
            "config": cfg,
            "trials": self.config.trials,
            "passed": self.passed,
            "failed": self.failed,
            "checks": dict(sorted(self.checks.items())),
            "first_counterexample": self.first_counterexample,
            "status": "pass" if self.ok else "fail",
        }

    def to_text(self) -> str:
        cfg = self.config
        lines = [
            f"schurtoeplitz {__version__} verify {self.target}",
            f"config: n={cfg.n} sigma={cfg.sigma} tau={cfg.tau} trials={cfg.trials} seed={cfg.seed}",
            f"passed: {self.passed}/{cfg.trials}",
            f"failed: {self.failed}",
        ]
        for name, count in sorted(self.checks.items()):
            lines.append(f"  check {name}: {count}")
        if self.first_counterexample is not None:
            lines.append("first counterexample:")
            lines.append(json.dumps(self.first_counterexample, sort_keys=True))
        lines.append("status: " + ("PASS" if self.ok else "FAIL"))
        return "\n".join(lines) + "\n"


Trial = Callable[[random.Random, int, SchurShape, Counter], Optional[dict]]


def _lemma_product(rng, n, shape, checks):
    t, u, strategy = random_condition_pair(rng, n, shape)
    cond = product_condition(t, u)
    toe = is_block_toeplitz(mat_mul(bt_to_dense(t), bt_to_dense(u)), n, shape.d)
    checks["condition_holds_implies_toeplitz"] += 1
    if not (cond and toe):
        return {"check": "satisfying pair", "strategy": strategy, "T": encode_bt(t),
                "U": encode_bt(u), "condition": cond, "dense_is_toeplitz": toe}
    t2, u2 = perturb_to_violation(rng, t, u)
    toe2 = is_block_toeplitz(mat_mul(bt_to_dense(t2), bt_to_dense(u2)), n, shape.d)
    checks["condition_fails_implies_not_toeplitz"] += 1
    if toe2:
        return {"check": "violating pair", "T": encode_bt(t2), "U": encode_bt(u2),
                "condition": False, "dense_is_toeplitz": toe2}
    t3, u3 = random_bt(rng, n, shape), random_bt(rng, n, shape)
    cond3 = product_condition(t3, u3)
    toe3 = is_block_toeplitz(mat_mul(bt_to_dense(t3), bt_to_dense(u3)), n, shape.d)
    checks["random_pair_biconditional"] += 1
    if cond3 != toe3:
        return {"check": "random pair", "T": encode_bt(t3), "U": encode_bt(u3),
                "condition": cond3, "dense_is_toeplitz": toe3}
    return None


def _fab_closure(rng, n, shape, checks):
    pair = random_nondegenerate_pair(rng, shape)
    kit = kernel_intersection_trivial(pair.A, pair.B)
    checks["kernel_condition"] += 1
    if not kit or kit != (pair.A.is_invertible() or pair.B.is_invertible()):
        return {"check": "kernel condition", "pair": encode_pair(pair), "kernel_trivial": kit}
    t, u = random_fab_element(rng, pair, n), random_fab_element(rng, pair, n)
    if not (fab_membership(pair, t) and fab_membership(pair, u)):
        return {"check": "sampled element outside F", "pair": encode_pair(pair),
                "T": encode_bt(t), "U": encode_bt(u)}
    prod = structured_product(t, u)
    checks["product_in_F"] += 1
    if not fab_membership(pair, prod):
        return {"check": "product leaves F", "pair": encode_pair(pair), "T": encode_bt(t), "U": encode_bt(u)}
    dt, du = bt_to_dense(t), bt_to_dense(u)
    checks["dense_commutation"] += 1
    if mat_mul(dt, du) != mat_mul(du, dt):
        return {"check": "TU != UT", "pair": encode_pair(pair), "T": encode_bt(t), "U": encode_bt(u)}
    return None


def _special_algebra(rng, n, shape, checks):
    pair = random_independent_radical_pair(rng, shape)
    f = fab_basis(pair, n)
    b = b_algebra_basis(n, shape)
    checks["dimension"] += 1
    if b.dimension != b_algebra_dimension(n, shape):
        return {"check": "B (x) O dimension", "dimension": b.dimension}
    checks["F_equals_B"] += 1
    if f != b:
        return {"check": "F_{A,B} != B (x) O", "pair": encode_pair(pair), "F_dimension": f.dimension}
    checks["kernel_condition_fails"] += 1
    if kernel_intersection_trivial(pair.A, pair.B):
        return {"check": "kernel intersection unexpectedly trivial", "pair": encode_pair(pair)}
    checks["closure"] += 1
    if algebra_closure(f.elements()) != f:
        return {"check": "F_{A,B} not closed", "pair": encode_pair(pair)}
    return None


def _maximality(rng, n, shape, checks):
    pair = random_nondegenerate_pair(rng, shape)
    f = fab_basis(pair, n)
    checks["dimension"] += 1
    if f.dimension != n * shape.dim:
        return {"check": "dim F_{A,B}", "pair": encode_pair(pair), "dimension": f.dimension}
    cert = maximality_certificate(f)
    checks["F_certified"] += 1
    if not cert.certified:
        return {"check": "F_{A,B} not certified", "pair": encode_pair(pair),
                "commutant_dimension": cert.commutant_dimension}
    return None


def _maximality_b(n, shape, checks) -> Optional[dict]:
    cert = maximality_certificate(b_algebra_basis(n, shape))
    checks["B_certified"] += 1
    if not cert.certified:
        return {"check": "B (x) O not certified", "commutant_dimension": cert.commutant_dimension}
    return None


def _pair_equivalence(rng, n, shape, checks):
    p = random_nondegenerate_pair(rng, shape)
    if rng.random() < 0.5:
        c = random_schur(rng, shape, radical=False)
        q = GeneratorPair(c * p.A, c * p.B)
        kind = "rescaled"
    else:
        q = random_nondegenerate_pair(rng, shape)
        kind = "independent"
    eq = pairs_equivalent(p, q)
    same = fab_basis(p, n) == fab_basis(q, n)
    checks[f"{'equivalent' if eq else 'inequivalent'}_pairs"] += 1
    if eq != same:
        return {"check": "AB' = A'B iff F equal", "kind": kind, "p": encode_pair(p),
                "q": encode_pair(q), "AB'=A'B": eq, "F_equal": same}
    return None


def _structured_product(rng, n, shape, checks):
    t, u, strategy = random_condition_pair(rng, n, shape)
    reference = dense_product(t, u)
    for method, bound in (("fast", n * n), ("interpolation", 4 * n - 3), ("direct", n * (2 * n - 1))):
        counter = MulCounter()
        got = structured_product(t, u, method=method, counter=counter)
        checks[f"{method}_matches_dense"] += 1
        if got != reference:
            return {"check": f"{method} product differs from dense", "strategy": strategy,
                    "T": encode_bt(t), "U": encode_bt(u)}
        if counter.count > bound:
            return {"check": f"{method} used {counter.count} block products > {bound}",
                    "T": encode_bt(t), "U": encode_bt(u)}
    counter = MulCounter()
    grid = block_grid_product(t, u, counter)
    checks["block_grid_matches_dense"] += 1
    if counter.count != n**3 or any(
        grid[p][q] != reference.block(p - q) for p in range(n) for q in range(n)
    ):
        return {"check": "block grid product", "T": encode_bt(t), "U": encode_bt(u)}
    return None


def _classification(rng, n, shape, checks):
    pair = random_nondegenerate_pair(rng, shape)
    res = classify(fab_basis(pair, n))
    checks["type_i_round_trip"] += 1
    if (res.verdict is not Verdict.TYPE_I or not pairs_equivalent(res.pair, pair)
            or not res.certificate.certified
            or not any(e.has_invertible_off_diagonal() for e in res.algebra.elements())):
        return {"check": "type (i) round trip", "pair": encode_pair(pair), "verdict": res.verdict.value}
    if shape.radical_dim >= 2:
        rad = random_independent_radical_pair(rng, shape)
        source = fab_basis(rad, n)
    else:
        rad, source = None, b_algebra_basis(n, shape)
    res = classify(source)
    checks["type_ii_round_trip"] += 1
    if (res.verdict is not Verdict.TYPE_II or not res.certificate.certified
            or any(e.has_invertible_off_diagonal() for e in res.algebra.elements())):
        return {"check": "type (ii) round trip", "pair": encode_pair(rad) if rad else None,
                "verdict": res.verdict.value}
    return None


TARGETS: dict[str, Trial] = {
    "lemma-product": _lemma_product,
    "fab-closure": _fab_closure,
    "special-algebra": _special_algebra,
    "maximality": _maximality,
    "pair-equivalence": _pair_equivalence,
    "structured-product": _structured_product,
    "classification": _classification,
}


def run_suite(target: str, config: RunConfig) -> SuiteReport:
    """Run one named suite.

    Raises:
        ConfigError: unknown target or invalid configuration.
    """
    if target not in TARGETS:
        raise ConfigError(f"unknown target {target!r}; choose from {', '.join(TARGETS)}")
    shape = config.validate()
    if target == "special-algebra" and shape.radical_dim < 2:
        raise ConfigError("special-algebra needs sigma*tau >= 2 (two independent radical elements)")
    trial_fn = TARGETS[target]
    report = SuiteReport(target, config)
    for trial in range(config.trials):
        rng = trial_rng(config.seed, trial)
        counterexample = trial_fn(rng, config.n, shape, report.checks)
        if counterexample is None and target == "maximality" and trial == 0:
            counterexample = _maximality_b(config.n, shape, report.checks)
        if counterexample is None:
            report.passed += 1
        else:
            report.failed += 1
            if report.first_counterexample is None:
                report.first_counterexample = {"trial": trial, **counterexample}
    return report
