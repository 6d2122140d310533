"""Independent, deliberately naive reference implementations used by the tests."""
from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product


def partitions(total, max_rows, max_part=None):
    """All partitions of ``total`` by brute recursion (ascending generation, any order)."""
    max_part = total if max_part is None else max_part
    if total == 0:
        return [()]
    if max_rows == 0:
        return []
    out = []
    for first in range(min(total, max_part), 0, -1):
        for rest in partitions(total - first, max_rows - 1, first):
            out.append((first,) + rest)
    return out


def box_count(k, n, s):
    return sum(1 for lam in partitions(s, k) if not lam or lam[0] <= n - k)


# -- Schur polynomials by semistandard tableaux --------------------------------

def _cells(lam):
    return [(i, j) for i, row in enumerate(lam) for j in range(row)]


@lru_cache(maxsize=None)
def schur_monomials(lam, m):
    """Monomial expansion of s_lam(x_1..x_m) as a Counter of exponent vectors."""
    cells = _cells(lam)
    out = Counter()
    filling = {}

    def fill(idx):
        if idx == len(cells):
            exp = [0] * m
            for v in filling.values():
                exp[v] += 1
            out[tuple(exp)] += 1
            return
        i, j = cells[idx]
        lo = 0
        if j > 0:
            lo = max(lo, filling[(i, j - 1)])
        if i > 0:
            lo = max(lo, filling[(i - 1, j)] + 1)
        for v in range(lo, m):
            filling[(i, j)] = v
            fill(idx + 1)
        filling.pop((i, j), None)

    fill(0)
    return out


def poly_mul(a, b):
    out = Counter()
    for ea, ca in a.items():
        for eb, cb in b.items():
            out[tuple(x + y for x, y in zip(ea, eb))] += ca * cb
    return out


def schur_product_coefficients(lam, mu, m):
    """Schur expansion of s_lam s_mu in m variables by peeling leading monomials."""
    rest = poly_mul(schur_monomials(lam, m), schur_monomials(mu, m))
    rest = Counter({e: c for e, c in rest.items() if c})
    out = {}
    while rest:
        lead = max(rest)  # lex-largest exponent is a partition
        c = rest[lead]
        nu = tuple(x for x in lead if x)
        out[nu] = c
        for e, v in schur_monomials(nu, m).items():
            rest[e] -= c * v
            if rest[e] == 0:
                del rest[e]
    return out


# -- LR coefficients by brute-force skew tableaux ------------------------------

def lr_brute(lam, mu, nu):
    """Count fillings of nu/lam with content mu that are semistandard and whose
    reverse reading word is a lattice word."""
    lam = tuple(lam) + (0,) * (len(nu) - len(lam))
    if any(l > v for l, v in zip(lam, nu)) or sum(nu) != sum(lam) + sum(mu):
        return 0
    cells = [(i, j) for i in range(len(nu)) for j in range(lam[i], nu[i])]
    letters = range(len(mu))
    count = 0
    for values in product(letters, repeat=len(cells)):
        if Counter(values) != Counter({a: mu[a] for a in letters if mu[a]}):
            continue
        T = dict(zip(cells, values))
        ok = True
        for (i, j), v in T.items():
            if (i, j + 1) in T and T[(i, j + 1)] < v:
                ok = False
            if (i + 1, j) in T and T[(i + 1, j)] <= v:
                ok = False
        if not ok:
            continue
        seen = Counter()
        for i in range(len(nu)):
            for j in range(nu[i] - 1, lam[i] - 1, -1):
                v = T[(i, j)]
                seen[v] += 1
                if v > 0 and seen[v] > seen[v - 1]:
                    ok = False
        count += ok
    return count


# -- Borel-Weil-Bott by literal mutation ---------------------------------------

def mutate(alpha):
    """Step-by-step mutation.  Returns (degree, dominant) or None when it vanishes."""
    a = list(alpha)
    steps = 0
    while True:
        for i in range(len(a) - 1):
            if a[i] < a[i + 1]:
                if a[i + 1] == a[i] + 1:
                    return None
                a[i], a[i + 1] = a[i + 1] - 1, a[i] + 1
                steps += 1
                break
        else:
            return steps, tuple(a)


def gl_dim(alpha):
    """Number of Gelfand-Tsetlin patterns with top row alpha."""
    @lru_cache(maxsize=None)
    def count(row):
        if len(row) == 1:
            return 1
        ranges = [range(row[i + 1], row[i] + 1) for i in range(len(row) - 1)]
        return sum(count(tuple(r)) for r in product(*ranges))
    return count(tuple(alpha))


def k_lambda_s_prediction(lam, k, n):
    """Predicted (degree, dominant weight) of the cohomology of K_lam S, or None if it vanishes.

    Needs all k parts of lam positive.
    """
    lam_ext = tuple(lam) + (0,)
    for j in range(1, k + 1):
        if lam_ext[j - 1] >= n - k + j and j >= lam_ext[j]:
            dominant = tuple(-lam[i] for i in range(k - 1, j - 1, -1)) + (-j,) * (n - k) + \
                tuple(-lam[i] + n - k for i in range(j - 1, -1, -1))
            return j * (n - k), dominant
    return None


# -- degenerate locus and invariants -------------------------------------------

def subset_sum_degenerate(eigenvalues, k):
    return any(sum(S) == -1 for S in combinations(eigenvalues, k))


def wedge_det_from_eigenvalues(eigenvalues, k):
    out = Fraction(1)
    for S in combinations(eigenvalues, k):
        out *= 1 + sum(S)
    return out


def _det(m):
    n = len(m)
    if n == 0:
        return Fraction(1)
    total = Fraction(0)
    for j in range(n):
        if m[0][j]:
            minor = [row[:j] + row[j + 1:] for row in m[1:]]
            total += (-1) ** j * m[0][j] * _det(minor)
    return total


def principal_minor_invariants(B):
    """I_i as the sum of i x i principal minors."""
    n = len(B)
    out = [Fraction(1)]
    for i in range(1, n + 1):
        out.append(sum((_det([[B[r][c] for c in S] for r in S]) for S in combinations(range(n), i)),
                       Fraction(0)))
    return out


# -- quantum cohomology by the rim-hook rule -----------------------------------

def rim_hook_reduce(nu, k, n):
    """Remove n-rim hooks from nu (at most k rows).

    Returns (sign, d, box partition) or None when the term vanishes.
    """
    nu = tuple(nu) + (0,) * (k - len(nu))
    beta = [nu[i] + k - 1 - i for i in range(k)]
    sign, d = 1, 0
    while max(beta) >= n:
        moved = False
        for idx in sorted(range(k), key=lambda t: -beta[t]):
            b = beta[idx]
            if b < n:
                continue
            target = b - n
            if target in beta:
                continue
            between = sum(1 for x in beta if target < x < b)
            sign *= (-1) ** (k - (between + 1))
            beta[idx] = target
            d += 1
            moved = True
            break
        if not moved:
            return None
    beta.sort(reverse=True)
    lam = tuple(x for x in (beta[i] - (k - 1 - i) for i in range(k)) if x)
    return sign, d, lam


def quantum_product_rim_hook(lam, mu, k, n):
    """{(d, nu): coeff} for sigma_lam * sigma_mu in QH*(G(k,n))."""
    out = Counter()
    for nu, c in schur_product_coefficients(tuple(lam), tuple(mu), k).items():
        red = rim_hook_reduce(nu, k, n)
        if red is not None:
            sign, d, box = red
            out[(d, box)] += sign * c
    return {key: v for key, v in out.items() if v}
