"""Exact coefficients: rationals and sparse multivariate polynomials over Q.

The indeterminates used by the rest of the package are ``I1 .. In`` (the
characteristic invariants of the deformation matrix), ``eps`` and ``q``.  Any
other identifier is accepted as well, which the tests use for auxiliary
variables.
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Dict, Mapping, Tuple, Union

Monomial = Tuple[Tuple[str, int], ...]
Scalar = Union[int, Fraction]

_I_NAME = re.compile(r"^I(\d+)$")


def var_key(name: str) -> tuple:
    """Storage order of variables: q, eps, I_n, ..., I_1, then anything else."""
    if name == "q":
        return (0, 0, "")
    if name == "eps":
        return (1, 0, "")
    m = _I_NAME.match(name)
    if m:
        return (2, -int(m.group(1)), "")
    return (3, 0, name)


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    exps = dict(a)
    for v, e in b:
        exps[v] = exps.get(v, 0) + e
    return tuple(sorted(exps.items(), key=lambda t: var_key(t[0])))


def parse_rational(text: Union[str, int, Fraction]) -> Fraction:
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    return Fraction(str(text).strip())


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _canonical(m) -> Monomial:
    """Sort a monomial by variable order, merging repeats and dropping zero exponents."""
    powers: Dict[str, int] = {}
    for v, e in m:
        if e < 0:
            raise ValueError("negative exponent in monomial")
        powers[v] = powers.get(v, 0) + e
    return tuple(sorted(((v, e) for v, e in powers.items() if e), key=lambda p: var_key(p[0])))


class Poly:
    """Immutable sparse polynomial with Fraction coefficients.

    ``terms`` maps monomials (sorted tuples of ``(variable, exponent)``) to
    nonzero Fractions.  Arithmetic mixes freely with ``int`` and ``Fraction``.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Scalar] | None = None):
        clean: Dict[Monomial, Fraction] = {}
        if terms:
            for m, c in terms.items():
                m = _canonical(m)
                c = clean.get(m, 0) + Fraction(c)
                if c:
                    clean[m] = c
                else:
                    clean.pop(m, None)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: Dict[Monomial, Fraction]) -> "Poly":
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, c: Scalar) -> "Poly":
        return cls({(): c})

    @classmethod
    def var(cls, name: str, power: int = 1) -> "Poly":
        if power < 0:
            raise ValueError("negative exponent")
        return cls({((name, power),) if power else (): 1})

    @property
    def terms(self) -> Dict[Monomial, Fraction]:
        return dict(self._terms)

    # -- arithmetic -------------------------------------------------------
    @staticmethod
    def _lift(other) -> "Poly":
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Poly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return Poly._raw({})
            return Poly._raw({m: c * other for m, c in self._terms.items()})
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out: Dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = _mono_mul(m1, m2)
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return Poly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        result, base = Poly.const(1), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- comparison -------------------------------------------------------
    def __eq__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self.constant())
            else:
                self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    # -- inspection -------------------------------------------------------
    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and () in self._terms)

    def constant(self) -> Fraction:
        """Constant term (the whole value when ``is_constant()``)."""
        return self._terms.get((), Fraction(0))

    def coefficient(self, monomial: Mapping[str, int] | Monomial) -> Fraction:
        if isinstance(monomial, Mapping):
            monomial = tuple(sorted(((v, e) for v, e in monomial.items() if e),
                                    key=lambda t: var_key(t[0])))
        return self._terms.get(tuple(monomial), Fraction(0))

    def variables(self) -> set[str]:
        return {v for m in self._terms for v, _ in m}

    def weighted_degree(self, weights: Mapping[str, int] | None = None) -> int:
        """Largest weighted degree of a term; 0 for the zero polynomial.

        Default weights: ``deg I_i = i``, ``deg eps = 1``, ``deg q = 1``.
        """
        def w(v: str) -> int:
            if weights and v in weights:
                return weights[v]
            m = _I_NAME.match(v)
            return int(m.group(1)) if m else 1
        return max((sum(w(v) * e for v, e in m) for m in self._terms), default=0)

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        """Terms in storage order: lexicographic on the exponents of (q, eps, I_n..I_1)."""
        names = sorted(self.variables(), key=var_key)

        def key(item):
            d = dict(item[0])
            return tuple(-d.get(v, 0) for v in names)
        return sorted(self._terms.items(), key=key, reverse=True)

    # -- evaluation -------------------------------------------------------
    def substitute(self, bindings: Mapping[str, "Poly | Scalar"]) -> "Poly":
        """Replace variables by polynomials (simultaneous substitution)."""
        if not bindings:
            return self
        power_cache: Dict[tuple, Poly] = {}
        out = Poly._raw({})
        for m, c in self._terms.items():
            term = Poly._raw({(): c})
            rest = []
            for v, e in m:
                if v in bindings:
                    key = (v, e)
                    if key not in power_cache:
                        power_cache[key] = self._lift(bindings[v]) ** e
                    term = term * power_cache[key]
                else:
                    rest.append((v, e))
            if rest:
                term = term * Poly._raw({tuple(rest): Fraction(1)})
            out = out + term
        return out

    def evaluate(self, values: Mapping[str, Scalar]) -> Fraction:
        """Numeric value; every variable present must be bound."""
        total = Fraction(0)
        for m, c in self._terms.items():
            t = c
            for v, e in m:
                t *= Fraction(values[v]) ** e
            total += t
        return total

    # -- formatting -------------------------------------------------------
    def __repr__(self):
        return f"Poly({str(self)!r})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            mono = "*".join(v if e == 1 else f"{v}^{e}" for v, e in m)
            if not mono:
                body = format_rational(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{format_rational(abs(c))}*{mono}"
            parts.append(("- " if c < 0 else "+ ") + body)
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def to_json(self) -> dict:
        return {"terms": [{"monomial": dict(m), "coeff": format_rational(c)}
                          for m, c in self.sorted_terms()]}

    @classmethod
    def from_json(cls, data) -> "Poly":
        if isinstance(data, (str, int)):
            return cls.const(parse_rational(data))
        terms: Dict[Monomial, Fraction] = {}
        for t in data["terms"]:
            mono = tuple(sorted(((str(v), int(e)) for v, e in t["monomial"].items() if int(e)),
                                key=lambda p: var_key(p[0])))
            if any(e < 0 for _, e in mono):
                raise ValueError("negative exponent in monomial")
            terms[mono] = terms.get(mono, 0) + parse_rational(t["coeff"])
        return cls(terms)


Coefficient = Union[Poly, Fraction, int]


def I(i: int) -> Poly:
    """The invariant ``I_i`` as a polynomial (``I_0 = 1``)."""
    return Poly.const(1) if i == 0 else Poly.var(f"I{i}")


EPS = Poly.var("eps")
Q = Poly.var("q")


def as_poly(c: Coefficient) -> Poly:
    return c if isinstance(c, Poly) else Poly.const(c)


def simplify(c: Coefficient) -> Coefficient:
    """Collapse constant polynomials to Fractions; leave real polynomials alone."""
    if isinstance(c, Poly) and c.is_constant():
        return c.constant()
    return c


def substitute(c: Coefficient, bindings: Mapping[str, Coefficient]) -> Poly:
    return as_poly(c).substitute(bindings)


def coeff_to_json(c: Coefficient) -> dict:
    return as_poly(c).to_json()


def coeff_str(c: Coefficient) -> str:
    return format_rational(c) if not isinstance(c, Poly) else str(c)


def poly_from_string(text: str) -> Poly:
    """Parse a small polynomial expression such as ``"1 + I1 - 3/2*I2^2"``."""
    text = text.replace(" ", "")
    if not text:
        raise ValueError("empty polynomial")
    out = Poly()
    for sign, body in re.findall(r"([+-]?)([^+-]+)", text):
        term = Poly.const(-1 if sign == "-" else 1)
        for factor in body.split("*"):
            base, _, exp = factor.partition("^")
            e = int(exp) if exp else 1
            if re.fullmatch(r"\d+(/\d+)?", base):
                term = term * Fraction(base) ** e
            elif re.fullmatch(r"[A-Za-z_]\w*", base):
                term = term * Poly.var(base, e)
            else:
                raise ValueError(f"cannot parse factor {factor!r}")
        out = out + term
    return out

