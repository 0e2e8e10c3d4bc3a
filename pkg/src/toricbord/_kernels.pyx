# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled row kernels for the binomial congruence sweeps.

Each kernel returns one full row ``m = 0..n`` for a fixed ``n``.  Moduli are
limited to ``MAX_MODULUS`` so every intermediate product fits in int64.
"""
import numpy as np
cimport numpy as cnp
from libc.stdint cimport int64_t

cnp.import_array()

MAX_MODULUS = 1 << 24


cdef inline int64_t _inv_mod(int64_t a, int64_t m) except -1:
    cdef int64_t r0 = m, r1 = a % m, s0 = 0, s1 = 1, t
    while r1:
        t = r0 // r1
        r0, r1 = r1, r0 - t * r1
        s0, s1 = s1, s0 - t * s1
    if r0 != 1:
        raise ZeroDivisionError("not a unit")
    s0 %= m
    if s0 < 0:
        s0 += m
    return s0


def small_binomials(int64_t p):
    """Table of C(a, b) mod p for 0 <= a, b < p."""
    tab = np.zeros((p, p), dtype=np.int64)
    cdef int64_t[:, ::1] t = tab
    cdef int64_t a, b
    for a in range(p):
        t[a, 0] = 1
        for b in range(1, a + 1):
            t[a, b] = (t[a - 1, b - 1] + t[a - 1, b]) % p
    return tab


def factorial_p_table(int64_t p, int64_t modulus):
    """``x!_p mod modulus`` for 0 <= x < modulus."""
    out = np.empty(modulus, dtype=np.int64)
    cdef int64_t[::1] o = out
    cdef int64_t x, acc = 1
    o[0] = 1
    for x in range(1, modulus):
        if x % p:
            acc = acc * x % modulus
        o[x] = acc
    return out


def lucas_row(int64_t n, int64_t p):
    """C(n, m) mod p for every 0 <= m <= n."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if p * p > MAX_MODULUS:
        raise ValueError("prime too large for the table kernel")
    cdef int64_t[:, ::1] tab = small_binomials(p)
    out = np.empty(n + 1, dtype=np.int64)
    cdef int64_t[::1] o = out
    cdef int64_t m, a, b, nd, md, acc
    for m in range(n + 1):
        a = n
        b = m
        acc = 1
        while b:
            nd = a % p
            md = b % p
            if md > nd:
                acc = 0
                break
            acc = acc * tab[nd, md] % p
            a //= p
            b //= p
        o[m] = acc
    return out


def granville_row(int64_t n, int64_t p, int64_t q):
    """``(e0, C(n, m) / p^e0 mod p^q)`` for every 0 <= m <= n.

    Per-row tables make each entry O(1): ``F[x]`` is the product of
    ``fact[floor(x / p^j) mod p^q]`` over ``j`` (so ``F[x] = fact[x] F[x // p]``),
    ``G`` is its inverse, and carry counts come from digit sums.
    """
    if n < 0 or q < 1:
        raise ValueError("need n >= 0 and q >= 1")
    cdef int64_t modulus = 1, i
    for i in range(q):
        modulus *= p
        if modulus > MAX_MODULUS:
            raise ValueError("prime power too large for the table kernel")
    cdef int64_t top = 1
    for i in range(q - 1):
        top *= p
    cdef int64_t[::1] fact = factorial_p_table(p, modulus)
    inv_fact_arr = np.empty(modulus, dtype=np.int64)
    cdef int64_t[::1] ifact = inv_fact_arr
    cdef int64_t x
    ifact[modulus - 1] = _inv_mod(fact[modulus - 1], modulus)
    for x in range(modulus - 1, 0, -1):
        ifact[x - 1] = ifact[x] * x % modulus if x % p else ifact[x]

    f_arr = np.empty(n + 1, dtype=np.int64)
    g_arr = np.empty(n + 1, dtype=np.int64)
    s_arr = np.empty(n + 1, dtype=np.int64)
    cdef int64_t[::1] F = f_arr
    cdef int64_t[::1] G = g_arr
    cdef int64_t[::1] S = s_arr
    F[0] = 1
    G[0] = 1
    S[0] = 0
    for x in range(1, n + 1):
        F[x] = fact[x % modulus] * F[x // p] % modulus
        G[x] = ifact[x % modulus] * G[x // p] % modulus
        S[x] = x % p + S[x // p]

    cdef bint negate = not (p == 2 and q >= 3)
    e0_out = np.empty(n + 1, dtype=np.int64)
    res_out = np.empty(n + 1, dtype=np.int64)
    cdef int64_t[::1] e0 = e0_out
    cdef int64_t[::1] res = res_out
    cdef int64_t m, r, a, b, c, etop, val
    cdef int64_t nt = n // top
    for m in range(n + 1):
        r = n - m
        e0[m] = (S[m] + S[r] - S[n]) // (p - 1)
        a = m // top
        b = r // top
        c = nt - a - b
        etop = (S[a] + S[b] + c - S[nt]) // (p - 1)
        val = F[n] * G[m] % modulus * G[r] % modulus
        if negate and (etop & 1):
            val = (modulus - val) % modulus
        res[m] = val
    return e0_out, res_out
