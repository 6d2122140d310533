import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from polymology import partition as P
from polymology.bwb import StandingAssumptionWarning
from polymology.coeffs import EPS, I, Poly, as_poly
from polymology.deform import BMatrix, char_invariants
from polymology.ring import (RingSpec, augmentation_invariants, b_eps_identity_check, graded_dim,
                             graded_dim_report, graded_dims, kappa_tilde, kappa_tilde_lambda,
                             mult_mod, normal_form, relation_span, vlocus_test)
from polymology.schur import SchurClass

import oracles

GRASSMANNIANS = [(2, 4), (2, 5), (3, 6)]


def k(lam, rows):
    return SchurClass.kappa(lam, rows)


def generic(kk, n, seed=0):
    return RingSpec.random_generic(kk, n, random.Random(seed))


def test_kappa_tilde_corank_one_example():
    with pytest.warns(StandingAssumptionWarning):
        spec = RingSpec.symbolic(3, 4)
    expected = k((2,), 3).scale(1 + I(1) + I(2)) + k((1, 1), 3).scale(I(1) + I(2))
    assert kappa_tilde(spec, 2) == expected


def test_kappa_tilde_corank_two_example():
    spec = RingSpec.symbolic(3, 5)
    expected = (k((3,), 3).scale(1 + I(1) + I(2) + I(3))
                + k((2, 1), 3).scale(I(1) + 2 * I(2) + 2 * I(3))
                + k((1, 1, 1), 3).scale(I(2) + I(3)))
    assert kappa_tilde(spec, 3) == expected


@pytest.mark.parametrize("r", range(1, 8))
def test_undeformed_generator_is_one_row(r):
    assert kappa_tilde(RingSpec.undeformed(2, 5), r) == k((r,), 2)


@pytest.mark.parametrize("kk,n", GRASSMANNIANS + [(3, 5), (2, 6)])
def test_weighted_degree_bound(kk, n):
    spec = RingSpec.symbolic(kk, n)
    for r in range(1, kk * (n - kk) + 2):
        x = kappa_tilde(spec, r)
        assert x.is_homogeneous(r)
        for c in x.terms.values():
            assert as_poly(c).weighted_degree() <= r


@pytest.mark.parametrize("small,big", [((2, 4), (3, 5)), ((2, 5), (3, 6))])
def test_n_stability(small, big):
    a, b = RingSpec.symbolic(*small), RingSpec.symbolic(*big)
    r = small[1] - small[0] + 1
    assert r == big[1] - big[0] + 1
    xa, xb = kappa_tilde(a, r), kappa_tilde(b, r)
    shared = set(xa.terms) & set(xb.terms)
    assert shared == set(xa.terms)
    for lam in shared:
        assert as_poly(xa.coefficient(lam)) == as_poly(xb.coefficient(lam))


def test_relation_span_examples():
    spec = RingSpec.undeformed(2, 4)
    assert relation_span(spec, 3) == [k((3,), 2)]
    assert relation_span(spec, 4) == [k((4,), 2) + k((3, 1), 2), k((4,), 2)]
    assert relation_span(spec, 2) == []


@pytest.mark.parametrize("kk,n", GRASSMANNIANS)
def test_classical_recovery(kk, n):
    spec = RingSpec.undeformed(kk, n)
    top = kk * (n - kk)
    assert [r.dim for r in graded_dims(spec)] == [oracles.box_count(kk, n, s) for s in range(top + 1)]
    assert graded_dim(spec, top + 1) == 0


@pytest.mark.parametrize("kk,n", GRASSMANNIANS)
def test_generic_dims_match_box_counts(kk, n):
    spec = generic(kk, n, seed=kk * 10 + n)
    top = kk * (n - kk)
    assert [r.dim for r in graded_dims(spec, top + 1)] == \
        [oracles.box_count(kk, n, s) for s in range(top + 1)] + [0]


def test_symbolic_dims():
    spec = RingSpec.symbolic(2, 4)
    reports = graded_dims(spec, 5)
    assert [r.dim for r in reports] == [1, 1, 2, 1, 1, 0]
    assert all(r.mode == "exact" for r in reports)
    rnd = graded_dim_report(spec, 4, mode="random", rng=random.Random(1))
    assert (rnd.dim, rnd.mode) == (1, "random-evaluation")
    assert graded_dim(RingSpec.symbolic(2, 5), 5) == 1


def test_graded_dim_examples():
    assert graded_dim(RingSpec.undeformed(2, 5), 3) == 2
    assert graded_dim(RingSpec.symbolic(3, 6), 0) == 1


def test_normal_form_examples():
    spec = RingSpec.undeformed(2, 4)
    assert normal_form(spec, k((3,), 2)) == SchurClass({}, 2)
    assert normal_form(spec, k((3, 1), 2)) == SchurClass({}, 2)
    assert mult_mod(spec, k((2,), 2), k((2,), 2)) == k((2, 2), 2)
    assert mult_mod(spec, k((1,), 2), k((2, 1), 2)) == k((2, 2), 2)
    assert mult_mod(spec, k((), 2), k((1, 1), 2)) == k((1, 1), 2)


def test_normal_form_rejections():
    spec = RingSpec.undeformed(2, 4)
    with pytest.raises(ValueError):
        normal_form(spec, k((1,), 2) + k((2,), 2))
    with pytest.raises(ValueError):
        normal_form(spec, k((1,), 3))
    with pytest.raises(ValueError):
        normal_form(RingSpec.symbolic(2, 4), k((4,), 2))


@pytest.mark.parametrize("kk,n", GRASSMANNIANS)
def test_generators_reduce_to_zero(kk, n):
    spec = generic(kk, n)
    for r in range(n - kk + 1, kk * (n - kk) + 2):
        assert not normal_form(spec, kappa_tilde(spec, r))


SPEC_25 = generic(2, 5, seed=4)


def random_class(data, spec, s):
    basis = P.enumerate_partitions(s, spec.k)
    coeffs = data.draw(st.lists(st.integers(-4, 4), min_size=len(basis), max_size=len(basis)))
    return SchurClass(dict(zip(basis, coeffs)), spec.k)


@settings(max_examples=40)
@given(st.data(), st.integers(0, 6))
def test_normal_form_idempotent_and_linear(data, s):
    x, y = random_class(data, SPEC_25, s), random_class(data, SPEC_25, s)
    c = Fraction(data.draw(st.integers(-5, 5)), data.draw(st.integers(1, 3)))
    nx, ny = normal_form(SPEC_25, x, s), normal_form(SPEC_25, y, s)
    assert normal_form(SPEC_25, nx, s) == nx
    assert normal_form(SPEC_25, x + y.scale(c), s) == nx + ny.scale(c)
    assert all(P.in_box(lam, 2, 3) for lam in nx.terms)


@pytest.mark.parametrize("kk,n", [(2, 4), (2, 5), (3, 6)])
def test_quotient_ring_laws(kk, n):
    spec = generic(kk, n, seed=1)
    rng = random.Random(kk + n)
    box = P.box_partitions(kk, n - kk)
    for _ in range(25):
        a, b, c = (k(rng.choice(box), kk) for _ in range(3))
        if sum(sum(next(iter(x.terms))) for x in (a, b, c)) > kk * (n - kk):
            continue
        assert mult_mod(spec, a, b) == mult_mod(spec, b, a)
        assert mult_mod(spec, mult_mod(spec, a, b), c) == mult_mod(spec, a, mult_mod(spec, b, c))


def test_kappa_tilde_lambda():
    spec = RingSpec.symbolic(2, 4)
    assert kappa_tilde_lambda(spec, (3,)) == kappa_tilde(spec, 3)
    got = kappa_tilde_lambda(spec, (3, 1))
    assert got == kappa_tilde(spec, 3) * k((1,), 2) - kappa_tilde(spec, 4)
    assert got == (k((4,), 2).scale(-I(4))
                   + k((3, 1), 2).scale(1 + I(1) + I(2) - 3 * I(4))
                   + k((2, 2), 2).scale(I(1) + I(2) - 2 * I(4)))
    zero = RingSpec.undeformed(3, 6)
    for lam in P.enumerate_partitions(5, 3):
        assert kappa_tilde_lambda(zero, lam) == k(lam, 3)


def _sym(c):
    return sympy.sympify(str(as_poly(c)).replace("^", "**"))


def test_vlocus_symbolic_minors():
    spec = RingSpec.symbolic(2, 4)
    res = vlocus_test(spec, 4, min_first_row=3)
    assert res.dependent is None
    assert res.members == [(4,), (3, 1)]
    assert res.basis == [(4,), (3, 1), (2, 2)]
    rows = [[_sym(kappa_tilde_lambda(spec, lam).coefficient(nu)) for nu in res.basis] for lam in res.members]
    expected = [sympy.Matrix(rows).extract([0, 1], list(cols)).det() for cols in ([0, 1], [0, 2], [1, 2])]
    assert [sympy.expand(_sym(m) - e) for m, e in zip(res.witness_minors, expected)] == [0, 0, 0]
    full = vlocus_test(spec, 4)
    assert full.members == [(4,), (3, 1), (2, 2)]
    det = sympy.Matrix([[_sym(kappa_tilde_lambda(spec, lam).coefficient(nu)) for nu in full.basis]
                        for lam in full.members]).det()
    assert sympy.expand(_sym(full.witness_minors[0]) - det) == 0


def test_vlocus_numeric():
    assert vlocus_test(RingSpec.undeformed(2, 4), 4).dependent is False
    assert vlocus_test(RingSpec.undeformed(3, 6), 5).dependent is False
    empty = vlocus_test(RingSpec.undeformed(2, 5), 2)
    assert (empty.dependent, empty.witness_minors) == (False, [])
    # on the locus cut out by the full 3x3 determinant the classes become dependent
    spec = RingSpec(2, 4, (0, 0, 0, Fraction(1, 2)))
    det = vlocus_test(RingSpec.symbolic(2, 4), 4).witness_minors[0]
    assert as_poly(det).evaluate({"I1": 0, "I2": 0, "I3": 0, "I4": Fraction(1, 2)}) == 0
    assert vlocus_test(spec, 4).dependent is True


@pytest.mark.parametrize("kk,n,r", [(2, 4, 3), (2, 4, 4), (3, 5, 3), (3, 5, 4), (2, 5, 5)])
def test_b_eps_identity(kk, n, r):
    assert b_eps_identity_check(kk, n, r)


def test_b_eps_precondition():
    with pytest.raises(ValueError):
        b_eps_identity_check(2, 4, 2)


@pytest.mark.parametrize("n", range(1, 5))
@pytest.mark.parametrize("kk", [1, 2, 3])
def test_augmentation_identity(n, kk):
    xs = [Poly.var(f"x{i}") for i in range(n)]
    c = 1 + (kk + 1) * EPS
    eig = [c * x + EPS for x in xs] + [EPS]

    def elementary(vals, m):
        out = [Poly.const(1)] + [Poly()] * m
        for v in vals:
            for j in range(m, 0, -1):
                out[j] = out[j] + out[j - 1] * v
        return out[m]

    binding = {f"I{i}": elementary(xs, i) for i in range(1, n + 1)}
    for m, formula in enumerate(augmentation_invariants(n, kk)):
        assert formula.substitute(binding) == elementary(eig, m)


def test_augmentation_numeric_matrix():
    B = BMatrix(((1, 2, 0), (Fraction(1, 2), -1, 3), (0, 1, 2)))
    eps, kk = Fraction(1, 3), 2
    c = 1 + (kk + 1) * eps
    aug = [[c * B.entries[i][j] + (eps if i == j else 0) for j in range(3)] + [0] for i in range(3)]
    aug.append([0, 0, 0, eps])
    inv = char_invariants(B)
    point = {f"I{i}": inv[i] for i in range(1, 4)} | {"eps": eps}
    want = char_invariants(BMatrix(tuple(map(tuple, aug))))
    assert tuple(f.evaluate(point) for f in augmentation_invariants(3, kk)) == want


def test_spec_validation():
    with pytest.raises(ValueError):
        RingSpec(2, 4, (1, 2))
    with pytest.raises(ValueError):
        RingSpec(2, 4, (2, 0, 0, 0, 0))
    with pytest.raises(ValueError):
        RingSpec(4, 4)
    assert RingSpec(2, 4, (0, 0, 0, 0)) == RingSpec.undeformed(2, 4)
    B = BMatrix.scalar(4, Fraction(1, 2))
    assert RingSpec.from_matrix(2, B).invariants == char_invariants(B)
