"""Borel-Weil-Bott on the Grassmannian G(k, n).

A homogeneous bundle ``K_beta S* (x) K_gamma Q*`` is described by the GL(n)
weight ``alpha = (beta, gamma)``.  Its cohomology is either zero in every
degree, or a single irreducible module ``K_dominant V*`` sitting in degree
``l(alpha)``, the number of mutations needed to make ``alpha`` dominant.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from . import partition as P

Weight = Tuple[int, ...]


class StandingAssumptionWarning(UserWarning):
    """Raised (as a warning) when ``1 < k < n-1`` fails."""


@dataclass(frozen=True)
class BwbResult:
    vanishes: bool
    degree: Optional[int] = None
    dominant: Optional[Weight] = None
    dim: Optional[int] = None

    def to_json(self) -> dict:
        if self.vanishes:
            return {"vanishes": True}
        out = {"vanishes": False, "degree": self.degree, "dominant": list(self.dominant)}
        if self.dim is not None:
            out["dim"] = self.dim
        return out

    @classmethod
    def from_json(cls, data: dict) -> "BwbResult":
        if data["vanishes"]:
            return cls(True)
        return cls(False, int(data["degree"]), tuple(data["dominant"]), data.get("dim"))


def rho(n: int) -> Weight:
    return tuple(range(n - 1, -1, -1))


def is_dominant(alpha: Sequence[int]) -> bool:
    return all(a >= b for a, b in zip(alpha, alpha[1:]))


def mutate_to_dominant(alpha: Sequence[int]) -> BwbResult:
    """Closed form of the mutation process via the shifted weight ``alpha + rho``.

    Vanishes when ``alpha + rho`` repeats an entry; otherwise the degree is its
    inversion count and the dominant weight is its descending sort minus rho.
    The returned result carries no dimension.
    """
    alpha = tuple(int(a) for a in alpha)
    n = len(alpha)
    shifted = [a + r for a, r in zip(alpha, rho(n))]
    if len(set(shifted)) < n:
        return BwbResult(True)
    inversions = sum(1 for i in range(n) for j in range(i + 1, n) if shifted[i] < shifted[j])
    dominant = tuple(s - r for s, r in zip(sorted(shifted, reverse=True), rho(n)))
    return BwbResult(False, inversions, dominant)


def weyl_dim(alpha: Sequence[int], n: Optional[int] = None) -> int:
    """Dimension of the irreducible GL(n)-module with highest weight ``alpha``."""
    alpha = tuple(int(a) for a in alpha)
    if n is not None and len(alpha) != n:
        raise ValueError(f"weight has length {len(alpha)}, expected {n}")
    if not is_dominant(alpha):
        raise ValueError(f"{alpha} is not dominant")
    n = len(alpha)
    d = Fraction(1)
    for i in range(n):
        for j in range(i + 1, n):
            d *= Fraction(alpha[i] - alpha[j] + j - i, j - i)
    assert d.denominator == 1
    return int(d)


def check_standing_assumption(k: int, n: int) -> None:
    if not 1 < k < n - 1:
        warnings.warn(f"G({k},{n}) is outside the range 1 < k < n-1", StandingAssumptionWarning,
                      stacklevel=3)


def bundle_cohomology(k: int, n: int, beta: Sequence[int], gamma: Sequence[int],
                      warn: bool = True) -> BwbResult:
    """Cohomology of ``K_beta S* (x) K_gamma Q*`` on G(k, n)."""
    beta, gamma = tuple(beta), tuple(gamma)
    if not 1 <= k <= n - 1:
        raise ValueError(f"need 1 <= k <= n-1, got k={k}, n={n}")
    if len(beta) != k or len(gamma) != n - k:
        raise ValueError(f"beta needs {k} entries and gamma {n - k}")
    if not is_dominant(beta) or not is_dominant(gamma):
        raise ValueError("beta and gamma must be weakly decreasing")
    if warn:
        check_standing_assumption(k, n)
    res = mutate_to_dominant(beta + gamma)
    if res.vanishes:
        return res
    return BwbResult(False, res.degree, res.dominant, weyl_dim(res.dominant))


def from_KS(lam, k: int) -> Weight:
    """The S*-weight of ``K_lam S``, namely ``(-lam_k, ..., -lam_1)``."""
    return tuple(-x for x in reversed(P.pad(lam, k)))


def cotangent_summand(lam, k: int, n: int) -> tuple[Weight, Weight]:
    """``(beta, gamma)`` for ``K_{lam'} Q* (x) K_lam S``."""
    lam = P.normalize(lam)
    return from_KS(lam, k), P.pad(P.transpose(lam), n - k)
