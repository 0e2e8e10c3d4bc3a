"""NumPy fallback for the compiled row kernels (same signatures, same results)."""
import numpy as np

MAX_MODULUS = 1 << 24


def small_binomials(p):
    tab = np.zeros((p, p), dtype=np.int64)
    for a in range(p):
        tab[a, 0] = 1
        for b in range(1, a + 1):
            tab[a, b] = (tab[a - 1, b - 1] + tab[a - 1, b]) % p
    return tab


def factorial_p_table(p, modulus):
    out = np.empty(modulus, dtype=np.int64)
    acc = 1
    for i in range(modulus):
        if i and i % p:
            acc = acc * i % modulus
        out[i] = acc
    return out


def lucas_row(n, p):
    if n < 0:
        raise ValueError("n must be non-negative")
    if p * p > MAX_MODULUS:
        raise ValueError("prime too large for the table kernel")
    tab = small_binomials(p)
    m = np.arange(n + 1, dtype=np.int64)
    acc = np.ones(n + 1, dtype=np.int64)
    a = n
    while a:
        nd = a % p
        md = m % p
        ok = md <= nd
        acc = np.where(ok, acc * tab[nd, np.minimum(md, nd)] % p, 0)
        a //= p
        m = m // p
    return acc


def _inverse_mod(values, modulus):
    uniq, idx = np.unique(values, return_inverse=True)
    inv = np.array([pow(int(u), -1, modulus) for u in uniq], dtype=np.int64)
    return inv[idx]


def granville_row(n, p, q):
    if n < 0 or q < 1:
        raise ValueError("need n >= 0 and q >= 1")
    modulus = p**q
    if modulus > MAX_MODULUS:
        raise ValueError("prime power too large for the table kernel")
    fact = factorial_p_table(p, modulus)

    m = np.arange(n + 1, dtype=np.int64)
    r = n - m
    num = 1
    den = np.ones(n + 1, dtype=np.int64)
    shift = 1
    while shift <= n:
        num = num * int(fact[(n // shift) % modulus]) % modulus
        den = den * fact[(m // shift) % modulus] % modulus
        den = den * fact[(r // shift) % modulus] % modulus
        shift *= p

    e0 = np.zeros(n + 1, dtype=np.int64)
    etop = np.zeros(n + 1, dtype=np.int64)
    carry = np.zeros(n + 1, dtype=np.int64)
    a, b = m.copy(), r.copy()
    j = 0
    while a.any() or b.any() or carry.any():
        carry = ((a % p + b % p + carry) >= p).astype(np.int64)
        e0 += carry
        if j >= q - 1:
            etop += carry
        a //= p
        b //= p
        j += 1

    val = num * _inverse_mod(den, modulus) % modulus
    if not (p == 2 and q >= 3):
        val = np.where(etop % 2 == 1, (modulus - val) % modulus, val)
    return e0, val
