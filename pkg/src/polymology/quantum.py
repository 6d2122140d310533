"""Conjectural quantum deformation of the polymology ring.

CONJECTURAL: the relations below come from a physics argument and have not
been proven.  They are

    kt_(r)               for n-k+1 <= r <= n-1,
    kt_(n+i) + q k_(i)   for i >= 0,

with ``q`` of degree ``n``.  The generator list beyond the displayed pattern is
read as the evident general term ``kt_(n+i) + q k_(i)`` for every ``i``.

A quantum class is a combination of ``q^d k_nu``.  Reduction works degree by
degree on the ambient basis ``{q^d k_nu : d n + |nu| = s, nu with <= k rows}``;
columns outside the ``k x (n-k)`` box are eliminated first, so a normal form
is supported on box partitions whenever the box classes form a basis of the
degree-``s`` piece (true at ``I = 0`` and for generic ``I``).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Optional, Tuple

from . import linalg
from . import partition as P
from .coeffs import Q, Coefficient, Poly, coeff_to_json, format_rational, simplify, substitute
from .ring import RingSpec, kappa_tilde
from .schur import SchurClass, lr_product

CONJECTURAL = True

Key = Tuple[int, P.Partition]


class QuantumClass:
    """Immutable combination of ``q^d k_nu`` over a fixed :class:`RingSpec`."""

    __slots__ = ("spec", "_terms")

    def __init__(self, spec: RingSpec, terms: Dict[Key, Coefficient] | None = None):
        self.spec = spec
        clean: Dict[Key, Coefficient] = {}
        for (d, nu), c in (terms or {}).items():
            nu = P.normalize(nu)
            if d < 0:
                raise ValueError("negative q power")
            if len(nu) > spec.k:
                continue
            s = clean.get((d, nu), 0) + c
            if s:
                clean[(d, nu)] = s
            else:
                clean.pop((d, nu), None)
        self._terms = clean

    @classmethod
    def from_schur(cls, spec: RingSpec, x: SchurClass, qpow: int = 0) -> "QuantumClass":
        return cls(spec, {(qpow, lam): c for lam, c in x.terms.items()})

    @classmethod
    def kappa(cls, spec: RingSpec, lam=(), qpow: int = 0, coeff: Coefficient = 1) -> "QuantumClass":
        return cls(spec, {(qpow, P.normalize(lam)): Fraction(coeff) if not isinstance(coeff, Poly) else coeff})

    @property
    def terms(self) -> Dict[Key, Coefficient]:
        return dict(self._terms)

    def coefficient(self, lam, qpow: int = 0) -> Coefficient:
        return self._terms.get((qpow, P.normalize(lam)), Fraction(0))

    def degrees(self) -> set[int]:
        return {d * self.spec.n + sum(nu) for d, nu in self._terms}

    @property
    def degree(self) -> Optional[int]:
        ds = self.degrees()
        if len(ds) > 1:
            raise ValueError("class is not homogeneous")
        return next(iter(ds)) if ds else None

    def support(self) -> list[Key]:
        return sorted(self._terms, key=lambda t: (t[0], P.order_key(t[1])))

    def _check(self, other: "QuantumClass"):
        if self.spec != other.spec:
            raise ValueError("quantum classes over different rings")

    def __add__(self, other):
        if not isinstance(other, QuantumClass):
            return NotImplemented
        self._check(other)
        out = dict(self._terms)
        for key, c in other._terms.items():
            out[key] = out.get(key, 0) + c
        return QuantumClass(self.spec, out)

    def __neg__(self):
        return QuantumClass(self.spec, {key: -c for key, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c: Coefficient) -> "QuantumClass":
        return QuantumClass(self.spec, {key: v * c for key, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, QuantumClass):
            return q_product(self, other)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, QuantumClass):
            return NotImplemented
        return self.spec == other.spec and self._terms == other._terms

    def __hash__(self):
        return hash((self.spec, frozenset(self._terms.items())))

    def __bool__(self):
        return bool(self._terms)

    def times_schur(self, x: SchurClass) -> "QuantumClass":
        """Plain (unreduced) product with a classical class."""
        out: Dict[Key, Coefficient] = {}
        for (d, nu), c in self._terms.items():
            for lam, b in x.terms.items():
                for rho, m in lr_product(nu, lam, self.spec.k).items():
                    out[(d, rho)] = out.get((d, rho), 0) + c * b * m
        return QuantumClass(self.spec, out)

    def as_schur_class(self) -> SchurClass:
        """The same element with ``q`` moved into the coefficients."""
        terms: Dict[P.Partition, Coefficient] = {}
        for (d, nu), c in self._terms.items():
            terms[nu] = terms.get(nu, 0) + Q ** d * c
        return SchurClass(terms, self.spec.k)

    def classical_limit(self) -> SchurClass:
        """Substitute ``q = 0``."""
        return self.as_schur_class().map_coefficients(
            lambda c: simplify(substitute(c, {"q": 0})))

    def __repr__(self):
        return f"QuantumClass({str(self)!r})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for d, nu in self.support():
            c = self._terms[(d, nu)]
            name = "*".join(filter(None, [
                "" if d == 0 else ("q" if d == 1 else f"q^{d}"),
                f"k({','.join(map(str, nu))})" if nu or d == 0 else ""]))
            text = format_rational(c) if not isinstance(c, Poly) else f"({c})"
            parts.append(name if text == "1" else ("-" + name if text == "-1" else f"{text}*{name}"))
        return " + ".join(parts).replace("+ -", "- ")

    def to_json(self) -> dict:
        terms = []
        for d, nu in self.support():
            c = self._terms[(d, nu)]
            terms.append({"qpow": d, "partition": list(nu),
                          "coeff": coeff_to_json(c) if isinstance(c, Poly) else format_rational(c)})
        out = {"terms": terms, "conjectural": CONJECTURAL}
        if self._terms:
            out["degree"] = self.degree
        return out

    @classmethod
    def from_json(cls, spec: RingSpec, data: dict) -> "QuantumClass":
        terms: Dict[Key, Coefficient] = {}
        for t in data["terms"]:
            key = (int(t["qpow"]), P.normalize(t["partition"]))
            terms[key] = terms.get(key, 0) + simplify(Poly.from_json(t["coeff"]))
        x = cls(spec, terms)
        if "degree" in data and x and x.degree != data["degree"]:
            raise ValueError("declared degree does not match the terms")
        return x


def ambient_basis(spec: RingSpec, s: int) -> list[Key]:
    """Columns for degree ``s``: outside-the-box first, then box; each by q power, then partition order."""
    cols = [(d, nu) for d in range(s // spec.n + 1)
            for nu in P.enumerate_partitions(s - d * spec.n, spec.k)]
    cols.sort(key=lambda t: (P.in_box(t[1], spec.k, spec.n - spec.k), t[0], P.order_key(t[1])))
    return cols


def _generators(spec: RingSpec, top: int):
    """``(degree, quantum class)`` for every ideal generator of degree <= top."""
    n, k = spec.n, spec.k
    for r in range(n - k + 1, min(n - 1, top) + 1):
        yield r, QuantumClass.from_schur(spec, kappa_tilde(spec, r))
    for i in range(0, top - n + 1):
        g = QuantumClass.from_schur(spec, kappa_tilde(spec, n + i)) + \
            QuantumClass.kappa(spec, (i,), qpow=1)
        yield n + i, g


def q_relation_labels(spec: RingSpec, s: int) -> list[tuple[int, int, P.Partition]]:
    """Labels ``(generator degree, d, mu)`` of the products ``q^d k_mu g`` of degree ``s``."""
    out = []
    for r, _ in _generators(spec, s):
        rest = s - r
        for d in range(rest // spec.n + 1):
            for mu in P.enumerate_partitions(rest - d * spec.n, spec.k):
                out.append((r, d, mu))
    return out


def q_relations(spec: RingSpec, s: int) -> list[QuantumClass]:
    gens = dict(_generators(spec, s))
    out = []
    for r, d, mu in q_relation_labels(spec, s):
        shifted = QuantumClass(spec, {(dd + d, nu): c for (dd, nu), c in gens[r].terms.items()})
        out.append(shifted.times_schur(SchurClass.kappa(mu, spec.k)))
    return out


def _vector(x: QuantumClass) -> dict:
    vec = {}
    for key, c in x.terms.items():
        c = simplify(c)
        if isinstance(c, Poly):
            raise ValueError("quantum normal forms need numeric invariants")
        vec[key] = c
    return vec


@lru_cache(maxsize=512)
def _q_echelon(spec: RingSpec, s: int) -> linalg.Echelon:
    if spec.is_symbolic:
        raise ValueError("quantum normal forms need numeric invariants")
    ech = linalg.Echelon(ambient_basis(spec, s))
    for rel in q_relations(spec, s):
        ech.add(_vector(rel))
    return ech


def q_normal_form(x: QuantumClass) -> QuantumClass:
    """Reduce ``x`` against the echelonised relations of its degree."""
    s = x.degree
    if s is None:
        return x
    return QuantumClass(x.spec, _q_echelon(x.spec, s).reduce(_vector(x)))


def q_product(a: QuantumClass, b: QuantumClass) -> QuantumClass:
    a._check(b)
    out: Dict[Key, Coefficient] = {}
    for (d1, nu1), c1 in a.terms.items():
        for (d2, nu2), c2 in b.terms.items():
            for rho, m in lr_product(nu1, nu2, a.spec.k).items():
                key = (d1 + d2, rho)
                out[key] = out.get(key, 0) + c1 * c2 * m
    return q_normal_form(QuantumClass(a.spec, out))


def q_mult(spec: RingSpec, lam, mu) -> QuantumClass:
    """Quantum product ``k_lam * k_mu`` in normal form."""
    lam, mu = P.normalize(lam), P.normalize(mu)
    if len(lam) > spec.k or len(mu) > spec.k:
        raise ValueError(f"partitions must have at most {spec.k} rows")
    return q_product(QuantumClass.kappa(spec, lam), QuantumClass.kappa(spec, mu))
