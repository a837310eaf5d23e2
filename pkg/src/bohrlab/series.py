"""Coefficient series of an instance and the majorant sum they generate.

A ``BohrInstance`` bundles a matrix ``A``, a self-adjoint budget matrix
``S``, and a sequence of contraction matrices.  Its alpha series collects
``alpha_0 = Re Tr(A)`` and the magnitudes ``|Tr(A adjoint(A_m))|``; the
majorant sum ``alpha_0 + sum |alpha_m| r^m`` is then compared against the
budget ``Tr(S)``, and the critical radius is the supremum of ``r`` at
which the sum still fits.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal

import numpy as np

from .linalg import DEFAULT_TOL, as_complex_matrix, trace_pairing

Mode = Literal["theorem", "relaxed"]

_BISECT_UPPER = 1.0 - 1e-12
_BISECT_MAX_ITERS = 200


class NonrealTraceError(ValueError):
    """Tr(A) has an imaginary part beyond tolerance."""


class NegativeTraceError(ValueError):
    """Re Tr(A) is negative beyond tolerance."""


class RadiusOutOfRangeError(ValueError):
    """Evaluation radius outside [0, 1)."""


class BudgetBelowAlpha0Error(ValueError):
    """The budget is already exceeded at r = 0."""


@dataclass(frozen=True)
class SequenceSpec:
    """Sequence of matrices pairing with A: one repeated matrix ("constant")
    or an explicit finite list treated as zero beyond its length."""

    kind: Literal["constant", "finite-list"]
    matrices: tuple[np.ndarray, ...]

    def __post_init__(self):
        mats = tuple(as_complex_matrix(m, f"sequence matrix {i}") for i, m in enumerate(self.matrices))
        object.__setattr__(self, "matrices", mats)
        if self.kind == "constant":
            if len(mats) != 1:
                raise ValueError("constant sequence takes exactly one matrix")
        elif self.kind != "finite-list":
            raise ValueError(f"unknown sequence kind {self.kind!r}")
        orders = {m.shape[0] for m in mats}
        if len(orders) > 1:
            raise ValueError("sequence matrices must share one order")

    @classmethod
    def constant(cls, matrix) -> "SequenceSpec":
        return cls("constant", (matrix,))

    @classmethod
    def finite(cls, matrices) -> "SequenceSpec":
        return cls("finite-list", tuple(matrices))

    @property
    def order(self) -> int | None:
        return self.matrices[0].shape[0] if self.matrices else None


@dataclass(frozen=True)
class AlphaSeries:
    """alpha_0 plus the magnitude sequence |alpha_m|, m >= 1.

    ``magnitudes`` lists the leading terms explicitly; every later term
    equals ``tail`` (0 for a series that terminates).
    """

    alpha0: float
    magnitudes: tuple[float, ...] = ()
    tail: float = 0.0

    def __post_init__(self):
        if not np.isfinite(self.alpha0):
            raise ValueError(f"alpha0 must be finite, got {self.alpha0}")
        if self.alpha0 < 0.0:
            raise NegativeTraceError(f"alpha0 must be >= 0, got {self.alpha0}")
        mags = tuple(float(m) for m in self.magnitudes)
        object.__setattr__(self, "magnitudes", mags)
        if any(not np.isfinite(m) or m < 0.0 for m in mags):
            raise ValueError("magnitudes must be finite and >= 0")
        if not np.isfinite(self.tail) or self.tail < 0.0:
            raise ValueError(f"tail must be finite and >= 0, got {self.tail}")


@dataclass(frozen=True, eq=False)
class BohrInstance:
    """One experiment: (A, S, sequence) plus the hypothesis mode it targets."""

    A: np.ndarray
    S: np.ndarray
    seq: SequenceSpec
    mode: Mode = "theorem"

    def __post_init__(self):
        object.__setattr__(self, "A", as_complex_matrix(self.A, "A"))
        object.__setattr__(self, "S", as_complex_matrix(self.S, "S"))
        if self.mode not in ("theorem", "relaxed"):
            raise ValueError(f"mode must be 'theorem' or 'relaxed', got {self.mode!r}")
        n = self.A.shape[0]
        if self.S.shape[0] != n:
            raise ValueError("A and S must have the same order")
        if self.seq.order is not None and self.seq.order != n:
            raise ValueError("sequence matrices must match the instance order")

    @property
    def order(self) -> int:
        return self.A.shape[0]


def alpha_series(inst: BohrInstance, tol: float = DEFAULT_TOL) -> AlphaSeries:
    """Alpha series of an instance.

    alpha_0 is Re Tr(A); term m is |Tr(A adjoint(A_m))|.  A constant
    sequence produces a constant tail starting at m = 1; a finite list
    produces explicit magnitudes and a zero tail.
    """
    tr = complex(np.trace(inst.A))
    if abs(tr.imag) > tol * max(1.0, abs(tr)):
        raise NonrealTraceError(f"Tr(A) = {tr} has a nonreal part beyond tolerance")
    if tr.real < -tol:
        raise NegativeTraceError(f"Re Tr(A) = {tr.real} is negative")
    alpha0 = max(tr.real, 0.0)
    pair = lambda m: abs(trace_pairing(inst.A, m))
    if inst.seq.kind == "constant":
        return AlphaSeries(alpha0, (), pair(inst.seq.matrices[0]))
    return AlphaSeries(alpha0, tuple(pair(m) for m in inst.seq.matrices), 0.0)


def bohr_sum(series: AlphaSeries, r: float) -> float:
    """Majorant sum alpha_0 + sum_{m>=1} |alpha_m| r^m at radius r in [0, 1).

    The constant tail is summed in closed form, c r^m0 / (1 - r).
    """
    if not (0.0 <= r < 1.0):
        raise RadiusOutOfRangeError(f"r must lie in [0, 1), got {r}")
    total = series.alpha0
    for m, mag in enumerate(series.magnitudes, start=1):
        total += mag * r**m
    if series.tail > 0.0:
        m0 = len(series.magnitudes) + 1
        total += series.tail * r**m0 / (1.0 - r)
    return float(total)


def critical_radius(series: AlphaSeries, budget: float, tol: float = 1e-12) -> float:
    """sup{ r in [0,1) : bohr_sum(series, r) <= budget }, by bisection.

    Returns 1.0 when the sum never exceeds the budget on [0, 1).  The
    result is within tol of the true supremum (bohr_sum is nondecreasing
    in r).
    """
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    if budget < series.alpha0:
        raise BudgetBelowAlpha0Error(
            f"budget {budget} is below alpha0 {series.alpha0}; the sum fails at r = 0"
        )
    hi = _BISECT_UPPER
    if bohr_sum(series, hi) <= budget:
        return 1.0
    lo = 0.0
    iters = 0
    while hi - lo > tol and iters < _BISECT_MAX_ITERS:
        mid = 0.5 * (lo + hi)
        if bohr_sum(series, mid) <= budget:
            lo = mid
        else:
            hi = mid
        iters += 1
    return 0.5 * (lo + hi)


@dataclass(frozen=True)
class InequalityCheck:
    holds: bool
    lhs: float
    rhs: float
    slack: float = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "slack", self.rhs - self.lhs)


def check_inequality(inst: BohrInstance, r: float, tol: float = DEFAULT_TOL) -> InequalityCheck:
    """Evaluate the majorant sum at r against the budget Re Tr(S)."""
    lhs = bohr_sum(alpha_series(inst, tol=tol), r)
    rhs = float(np.trace(inst.S).real)
    return InequalityCheck(holds=bool(lhs <= rhs + tol), lhs=lhs, rhs=rhs)
