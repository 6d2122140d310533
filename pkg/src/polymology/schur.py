"""Symmetric functions in the Schur basis (the kappa classes).

A :class:`SchurClass` is a finite combination of Schur classes ``k_lambda``
with exact coefficients.  ``row_bound = k`` places it in the ring of symmetric
polynomials in ``k`` variables, where every ``k_lambda`` with more than ``k``
rows is zero; ``row_bound = None`` is the unbounded ring.

Littlewood-Richardson coefficients come from a tableau-enumeration kernel.
A compiled build of the kernel is used when importable, the pure-Python one
otherwise (or whenever ``POLY_PURE_PYTHON`` is set); ``BACKEND`` names the
one in use.
"""
from __future__ import annotations

import os
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, Iterable, Mapping, Optional

from . import partition as P
from .coeffs import Coefficient, Poly, coeff_str, coeff_to_json, simplify
from .linalg import cofactor_det

try:
    if os.environ.get("POLY_PURE_PYTHON"):
        raise ImportError("pure Python requested")
    from ._lrkernel import lr_product_table as _lr_table
    BACKEND = "compiled"
except ImportError:
    from ._lr_py import lr_product_table as _lr_table
    BACKEND = "python"


@lru_cache(maxsize=200_000)
def _cached_table(lam: P.Partition, mu: P.Partition, rows: int) -> Dict[P.Partition, int]:
    return _lr_table(lam, mu, rows)


def lr_product(lam, mu, row_bound: Optional[int] = None) -> Dict[P.Partition, int]:
    """The expansion ``k_lam * k_mu = sum_nu c^nu_{lam mu} k_nu`` as ``{nu: c}``.

    Only ``nu`` with at most ``row_bound`` rows are returned.
    """
    lam, mu = P.normalize(lam), P.normalize(mu)
    rows = len(lam) + len(mu) if row_bound is None else row_bound
    return dict(_cached_table(lam, mu, rows))


def lr_coeff(lam, mu, nu) -> int:
    """Littlewood-Richardson coefficient ``c^nu_{lam, mu}``."""
    lam, mu, nu = P.normalize(lam), P.normalize(mu), P.normalize(nu)
    if sum(nu) != sum(lam) + sum(mu) or not P.contains(nu, lam) or not P.contains(nu, mu):
        return 0
    return _cached_table(lam, mu, len(nu)).get(nu, 0)


class SchurClass:
    """Immutable linear combination of Schur classes."""

    __slots__ = ("_terms", "row_bound")

    def __init__(self, terms: Mapping[Iterable[int], Coefficient] | None = None,
                 row_bound: Optional[int] = None):
        if row_bound is not None and row_bound < 0:
            raise ValueError("row_bound must be nonnegative")
        self.row_bound = row_bound
        clean: Dict[P.Partition, Coefficient] = {}
        for lam, c in (terms or {}).items():
            lam = P.normalize(lam)
            if row_bound is not None and len(lam) > row_bound:
                continue
            if not isinstance(c, Poly):
                c = Fraction(c)
            s = clean.get(lam, 0) + c
            if s:
                clean[lam] = s
            else:
                clean.pop(lam, None)
        self._terms = clean

    @classmethod
    def _raw(cls, terms: Dict[P.Partition, Coefficient], row_bound):
        obj = cls.__new__(cls)
        obj._terms = terms
        obj.row_bound = row_bound
        return obj

    @classmethod
    def kappa(cls, lam: Iterable[int] = (), row_bound: Optional[int] = None,
              coeff: Coefficient = 1) -> "SchurClass":
        return cls({P.normalize(lam): coeff}, row_bound)

    @classmethod
    def one_row(cls, m: int, row_bound: Optional[int] = None) -> "SchurClass":
        """``k_(m)``; zero for negative ``m`` and the unit for ``m = 0``."""
        if m < 0:
            return cls({}, row_bound)
        return cls.kappa((m,), row_bound)

    @property
    def terms(self) -> Dict[P.Partition, Coefficient]:
        return dict(self._terms)

    def coefficient(self, lam) -> Coefficient:
        return self._terms.get(P.normalize(lam), Fraction(0))

    def support(self) -> list[P.Partition]:
        return sorted(self._terms, key=P.order_key)

    def weights(self) -> set[int]:
        return {sum(lam) for lam in self._terms}

    def is_homogeneous(self, s: Optional[int] = None) -> bool:
        w = self.weights()
        if s is None:
            return len(w) <= 1
        return w <= {s}

    # -- vector space -----------------------------------------------------
    def _check(self, other: "SchurClass"):
        if self.row_bound != other.row_bound:
            raise ValueError(f"row_bound mismatch: {self.row_bound} vs {other.row_bound}")

    def __add__(self, other):
        if not isinstance(other, SchurClass):
            return NotImplemented
        self._check(other)
        out = dict(self._terms)
        for lam, c in other._terms.items():
            s = out.get(lam, 0) + c
            if s:
                out[lam] = s
            else:
                out.pop(lam, None)
        return SchurClass._raw(out, self.row_bound)

    def __neg__(self):
        return SchurClass._raw({lam: -c for lam, c in self._terms.items()}, self.row_bound)

    def __sub__(self, other):
        if not isinstance(other, SchurClass):
            return NotImplemented
        return self + (-other)

    def scale(self, c: Coefficient) -> "SchurClass":
        if not c:
            return SchurClass._raw({}, self.row_bound)
        out = {}
        for lam, v in self._terms.items():
            p = v * c
            if p:
                out[lam] = p
        return SchurClass._raw(out, self.row_bound)

    def __mul__(self, other):
        if isinstance(other, SchurClass):
            return mult(self, other)
        if isinstance(other, (int, Fraction, Poly)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, Poly)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, SchurClass):
            return NotImplemented
        return self.row_bound == other.row_bound and self._terms == other._terms

    def __hash__(self):
        return hash((self.row_bound, frozenset(self._terms.items())))

    def __bool__(self):
        return bool(self._terms)

    def truncate(self, k: Optional[int]) -> "SchurClass":
        """Project to symmetric functions in ``k`` variables (drop partitions with > k rows)."""
        return SchurClass(self._terms, k)

    def map_coefficients(self, f: Callable[[Coefficient], Coefficient]) -> "SchurClass":
        return SchurClass({lam: f(c) for lam, c in self._terms.items()}, self.row_bound)

    def simplified(self) -> "SchurClass":
        return self.map_coefficients(simplify)

    # -- formatting -------------------------------------------------------
    def __repr__(self):
        return f"SchurClass({str(self)!r}, row_bound={self.row_bound})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for lam in self.support():
            c = self._terms[lam]
            name = "k(" + ",".join(map(str, lam)) + ")"
            text = coeff_str(c)
            if text == "1":
                parts.append(name)
            elif text == "-1":
                parts.append("-" + name)
            elif isinstance(c, Poly) and len(c.terms) > 1:
                parts.append(f"({text})*{name}")
            else:
                parts.append(f"{text}*{name}")
        return " + ".join(parts).replace("+ -", "- ")

    def to_json(self) -> dict:
        return {"row_bound": self.row_bound,
                "terms": [{"partition": list(lam), "coeff": coeff_to_json(self._terms[lam])}
                          for lam in self.support()]}

    @classmethod
    def from_json(cls, data: dict) -> "SchurClass":
        terms = {}
        for t in data["terms"]:
            lam = P.normalize(t["partition"])
            terms[lam] = terms.get(lam, 0) + simplify(Poly.from_json(t["coeff"]))
        return cls(terms, data.get("row_bound"))


def mult(a: SchurClass, b: SchurClass) -> SchurClass:
    """Bilinear extension of the LR rule, projected to ``a.row_bound`` rows."""
    a._check(b)
    k = a.row_bound
    out: Dict[P.Partition, Coefficient] = {}
    for lam, ca in a._terms.items():
        for mu, cb in b._terms.items():
            c = ca * cb
            if not c:
                continue
            # fewer content letters means a shallower tableau search
            first, second = (lam, mu) if len(mu) <= len(lam) else (mu, lam)
            rows = len(lam) + len(mu) if k is None else k
            for nu, m in _cached_table(first, second, rows).items():
                s = out.get(nu, 0) + c * m
                if s:
                    out[nu] = s
                else:
                    out.pop(nu, None)
    return SchurClass._raw(out, k)


def power(a: SchurClass, e: int) -> SchurClass:
    result = SchurClass.kappa((), a.row_bound)
    for _ in range(e):
        result = result * a
    return result


def determinant(matrix: list[list[SchurClass]], row_bound: Optional[int]) -> SchurClass:
    """Cofactor expansion of a square matrix with SchurClass entries."""
    if not matrix:
        return SchurClass.kappa((), row_bound)
    return cofactor_det(matrix)


def jacobi_trudi_matrix(lam, row_bound: Optional[int]) -> list[list[SchurClass]]:
    lam = P.normalize(lam)
    n = len(lam)
    return [[SchurClass.one_row(lam[i] + j - i, row_bound) for j in range(n)] for i in range(n)]


def giambelli(lam, row_bound: Optional[int] = None) -> SchurClass:
    """Expand ``det(k_(lam_i + j - i))`` through products of one-row classes.

    Equals ``k_lam``; kept as an independent route for self-tests and as the
    determinant engine reused by the deformed classes in :mod:`polymology.ring`.
    """
    lam = P.normalize(lam)
    if row_bound is not None and len(lam) > row_bound:
        raise ValueError(f"{lam} has more than {row_bound} rows")
    return determinant(jacobi_trudi_matrix(lam, row_bound), row_bound)
