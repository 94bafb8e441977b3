"""Independent reference computations shared by the tests.

Nothing here imports opdet, so agreement with the library is meaningful.
"""

from fractions import Fraction as F
from itertools import permutations
from math import comb, factorial


def leibniz_det(m):
    """Permutation-expansion determinant (fine up to order 6)."""
    n = len(m)
    total = 0
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = -1 if inv % 2 else 1
        for i, j in enumerate(perm):
            term = term * m[i][j]
            if term == 0:
                break
        total += term
    return total


def horner(coeffs, x):
    out = F(0)
    for c in reversed(coeffs):
        out = out * x + c
    return out


def padd(a, b):
    n = max(len(a), len(b))
    return trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def pscale(a, c):
    return trim([c * v for v in a])


def pshift(a):
    return [F(0)] + list(a)


def trim(a):
    a = [F(v) for v in a]
    while a and a[-1] == 0:
        a.pop()
    return a


def monic_recurrence(n, b, c):
    """P_{k+1} = (x - b(k)) P_k - c(k) P_{k-1}, P_0 = 1."""
    prev, cur = [], [F(1)]
    for k in range(n):
        nxt = padd(pshift(cur), pscale(cur, -b(k)))
        if prev:
            nxt = padd(nxt, pscale(prev, -c(k)))
        prev, cur = cur, nxt
    return cur


def hermite_monic(n):
    return monic_recurrence(n, lambda k: 0, lambda k: F(k, 2))


def laguerre_monic(n, alpha):
    alpha = F(alpha)
    return monic_recurrence(n, lambda k: 2 * k + alpha + 1, lambda k: k * (k + alpha))


def gegenbauer_monic(n, lam):
    lam = F(lam)
    return monic_recurrence(
        n, lambda k: 0, lambda k: F(k * (k + 2 * lam - 1)) / (4 * (k + lam) * (k + lam - 1))
    )


def hermite_moment(k):
    if k % 2:
        return F(0)
    h = k // 2
    return F(factorial(2 * h), 4**h * factorial(h))


def laguerre_moment(k, alpha):
    out = F(1)
    for j in range(k):
        out *= F(alpha) + 1 + j
    return out


def weight_1mx2_moment(k):
    """Moments of (3/4)(1 - x^2) on [-1, 1], i.e. Gegenbauer lambda = 3/2."""
    if k % 2:
        return F(0)
    return F(3, 4) * (F(2, k + 1) - F(2, k + 3))


def shifted_moment_poly(moments, n, m=None):
    """Coefficients in x of sum_j C(m, j) mu_{n+m-j} (-x)^j; m defaults to n with shift 0."""
    if m is None:
        m, n = n, 0
    return trim([comb(m, j) * moments[n + m - j] * (-1) ** j for j in range(m + 1)])


def rising(a, k):
    out = F(1)
    for j in range(k):
        out *= F(a) + j
    return out


def gegenbauer_2f1(n, lam):
    """C_n^lam = (2 lam)_n / n! * 2F1(-n, n + 2 lam; lam + 1/2; (1 - x)/2), coefficients in x."""
    lam = F(lam)
    out = []
    for k in range(n + 1):
        c = rising(-n, k) * rising(n + 2 * lam, k) / (rising(lam + F(1, 2), k) * factorial(k) * 2**k)
        # (1 - x)^k
        out = padd(out, [c * comb(k, j) * (-1) ** j for j in range(k + 1)])
    return pscale(out, rising(2 * lam, n) / factorial(n))


def hermite_classical(n):
    prev, cur = [], [F(1)]
    for k in range(n):
        nxt = pscale(pshift(cur), 2)
        if prev:
            nxt = padd(nxt, pscale(prev, -2 * k))
        prev, cur = cur, nxt
    return cur


def laguerre_classical(n, alpha):
    alpha = F(alpha)
    prev, cur = [], [F(1)]
    for k in range(n):
        nxt = padd(pscale(cur, 2 * k + 1 + alpha), pscale(pshift(cur), -1))
        if prev:
            nxt = padd(nxt, pscale(prev, -(k + alpha)))
        prev, cur = cur, pscale(nxt, F(1, k + 1))
    return cur
