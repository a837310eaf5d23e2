"""Canonical extremal instances and the zero-padding embedding.

Three families.  The general family pins the critical radius at
n/(3n-2) for every order n >= 2.  The 3x3 family sharpens that to
sqrt(2)-1.  The remark family produces 2x2 relaxed-mode instances that
break the inequality at any requested radius above 1/3, showing 1/3
cannot be improved once triangularity is dropped.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from .series import BohrInstance, SequenceSpec

FAMILY_IDS = ("general_n", "three_by_three", "remark_n2")


class InvalidOrderError(ValueError):
    """Order outside the family's range."""


class RadiusNotAboveOneThirdError(ValueError):
    """Target radius must lie strictly between 1/3 and 1."""


class ShrinkNotAllowedError(ValueError):
    """Embedding must not reduce the order."""


def _superdiagonal_ones(n: int) -> np.ndarray:
    return np.eye(n, k=1, dtype=np.complex128)


def general_witness(n: int) -> BohrInstance:
    """Order-n instance with critical radius exactly n/(3n-2).

    A has 1 on the diagonal and -2 strictly above, S = 2I, and the
    sequence repeats the superdiagonal-ones shift.  Then Tr(A) = n,
    Tr(S) = 2n, every |alpha_m| = 2(n-1), and S - Re(A) is the all-ones
    matrix (PSD of rank one).
    """
    if not isinstance(n, (int, np.integer)) or isinstance(n, bool):
        raise InvalidOrderError(f"n must be an integer, got {n!r}")
    if n < 2:
        raise InvalidOrderError(f"n must be >= 2, got {n}")
    n = int(n)
    a = np.eye(n, dtype=np.complex128) - 2.0 * np.triu(np.ones((n, n), dtype=np.complex128), 1)
    s = 2.0 * np.eye(n, dtype=np.complex128)
    return BohrInstance(a, s, SequenceSpec.constant(_superdiagonal_ones(n)), "theorem")


def three_by_three_witness() -> BohrInstance:
    """The 3x3 instance whose critical radius is sqrt(2)-1.

    S - Re(A) is the rank-one outer product of (1, sqrt(2), 1); the
    majorant sum 6 + 4 sqrt(2) r/(1-r) meets Tr(S) = 10 at r = sqrt(2)-1.
    """
    rt2 = math.sqrt(2.0)
    a = np.array(
        [
            [2.0, -2.0 * rt2, -2.0],
            [0.0, 2.0, -2.0 * rt2],
            [0.0, 0.0, 2.0],
        ],
        dtype=np.complex128,
    )
    s = np.diag([3.0, 4.0, 3.0]).astype(np.complex128)
    return BohrInstance(a, s, SequenceSpec.constant(_superdiagonal_ones(3)), "theorem")


def remark_parameters(r_target: float) -> tuple[float, int]:
    """(theta, k) used by the remark family at a given target radius.

    theta is the midpoint of ((1-r)/(2r), 1), the interval on which the
    violation argument works; k is the smallest integer strictly above
    theta/(2(1-theta)), which keeps the sequence matrix a contraction.
    """
    if not (1.0 / 3.0 < r_target < 1.0):
        raise RadiusNotAboveOneThirdError(
            f"r_target must lie in (1/3, 1), got {r_target}"
        )
    theta = 0.5 * ((1.0 - r_target) / (2.0 * r_target) + 1.0)
    k = math.floor(theta / (2.0 * (1.0 - theta))) + 1
    return theta, k


def remark_two_witness(r_target: float) -> BohrInstance:
    """2x2 relaxed-mode instance violating the inequality at r_target.

    A is a full (non-triangular) matrix with unit budget S = I, and the
    repeated sequence matrix pairs with A to give |alpha_m| = 2 theta, so
    the majorant sum 1 + 2 theta r/(1-r) crosses Tr(S) = 2 at
    r = 1/(1+2 theta) < r_target.
    """
    theta, k = remark_parameters(r_target)
    a = np.array(
        [
            [0.5 + 1j * k, 0.5],
            [0.5, 0.5 - 1j * k],
        ],
        dtype=np.complex128,
    )
    m = np.array(
        [
            [-theta / (2.0 * k), 1j * theta],
            [1j * theta, theta / (2.0 * k)],
        ],
        dtype=np.complex128,
    )
    s = np.eye(2, dtype=np.complex128)
    return BohrInstance(a, s, SequenceSpec.constant(m), "relaxed")


def _pad(a: np.ndarray, big: int) -> np.ndarray:
    n = a.shape[0]
    out = np.zeros((big, big), dtype=np.complex128)
    out[:n, :n] = a
    return out


def embed(inst: BohrInstance, big: int) -> BohrInstance:
    """Zero-pad every matrix of an instance to order big >= n.

    Padding adds zero rows and columns only, so traces, the alpha
    series, hypothesis verdicts, and the critical radius all survive
    unchanged.
    """
    n = inst.order
    if not isinstance(big, (int, np.integer)) or isinstance(big, bool):
        raise ShrinkNotAllowedError(f"target order must be an integer, got {big!r}")
    if big < n:
        raise ShrinkNotAllowedError(f"cannot shrink from order {n} to {big}")
    big = int(big)
    if big == n:
        return inst
    seq = SequenceSpec(inst.seq.kind, tuple(_pad(m, big) for m in inst.seq.matrices))
    return BohrInstance(_pad(inst.A, big), _pad(inst.S, big), seq, inst.mode)


@dataclass(frozen=True)
class WitnessFamily:
    """Descriptor naming a family and its parameters; build() assembles it."""

    id: str
    params: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.id not in FAMILY_IDS:
            raise ValueError(f"unknown family {self.id!r}, expected one of {FAMILY_IDS}")
        if self.id == "general_n":
            n = self.params.get("n")
            if not isinstance(n, (int, np.integer)) or isinstance(n, bool) or n < 2:
                raise InvalidOrderError(f"general_n requires integer n >= 2, got {n!r}")
        elif self.id == "remark_n2":
            r_target = self.params.get("r_target")
            if r_target is None or not (1.0 / 3.0 < float(r_target) < 1.0):
                raise RadiusNotAboveOneThirdError(
                    f"remark_n2 requires r_target in (1/3, 1), got {r_target!r}"
                )

    def build(self) -> BohrInstance:
        if self.id == "general_n":
            return general_witness(int(self.params["n"]))
        if self.id == "three_by_three":
            return three_by_three_witness()
        return remark_two_witness(float(self.params["r_target"]))
