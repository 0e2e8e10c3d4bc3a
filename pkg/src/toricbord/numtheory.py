"""Exact binomial arithmetic and the congruence/gcd facts behind the generator lemmas.

Everything here works on Python ints, so there is no overflow anywhere.
Sweeps over every ``m <= n`` go through the batch kernels in
:mod:`toricbord.kernels` instead of calling these scalar functions in a loop.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from math import comb, gcd, isqrt


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    for d in range(3, isqrt(p) + 1, 2):
        if p % d == 0:
            return False
    return True


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise ValueError(f"modulus {p} is not prime")


@dataclass(frozen=True)
class PrimePower:
    p: int
    q: int

    def __post_init__(self):
        _require_prime(self.p)
        if self.q < 1:
            raise ValueError(f"exponent must be >= 1, got {self.q}")

    @property
    def modulus(self) -> int:
        return self.p**self.q


@dataclass(frozen=True)
class BaseExpansion:
    """Digits of a non-negative integer in base ``p``, least significant first."""

    digits: tuple[int, ...]
    p: int

    @classmethod
    def of(cls, n: int, p: int) -> BaseExpansion:
        if n < 0:
            raise ValueError("negative integers have no base expansion here")
        digits = []
        while n:
            n, d = divmod(n, p)
            digits.append(d)
        return cls(tuple(digits) or (0,), p)

    @property
    def value(self) -> int:
        return sum(d * self.p**j for j, d in enumerate(self.digits))

    def digit(self, j: int) -> int:
        return self.digits[j] if j < len(self.digits) else 0

    def __len__(self) -> int:
        return len(self.digits)


def binomial(n: int, m: int) -> int:
    """C(n, m), zero outside ``0 <= m <= n``."""
    if m < 0 or m > n:
        return 0
    return comb(n, m)


def lucas_mod_p(n: int, m: int, p: int) -> int:
    """C(n, m) mod p as the product of digitwise binomials."""
    _require_prime(p)
    if m < 0 or m > n:
        return 0
    result = 1
    while n or m:
        n, nj = divmod(n, p)
        m, mj = divmod(m, p)
        if mj > nj:
            return 0
        result = result * comb(nj, mj) % p
    return result


def kummer_valuation(n: int, m: int, p: int) -> int:
    """Number of carries when adding ``m`` and ``n - m`` in base ``p``."""
    _require_prime(p)
    if m < 0 or m > n:
        raise ValueError(f"need 0 <= m <= n, got n={n}, m={m}")
    return sum(_carries(m, n - m, p))


def _carries(a: int, b: int, p: int) -> list[int]:
    """Carry flags out of each digit position when adding ``a + b`` in base ``p``."""
    flags = []
    carry = 0
    while a or b or carry:
        a, aj = divmod(a, p)
        b, bj = divmod(b, p)
        carry = 1 if aj + bj + carry >= p else 0
        flags.append(carry)
    return flags


def factorial_p(n: int, pq: PrimePower) -> int:
    """Product of the integers ``<= n`` prime to ``p``, reduced mod ``p^q``."""
    mod = pq.modulus
    result = 1
    for i in range(1, n + 1):
        if i % pq.p:
            result = result * i % mod
    return result


def granville_mod_pq(n: int, m: int, pq: PrimePower) -> tuple[int, int]:
    """Return ``(e0, C(n, m) / p^e0 mod p^q)`` by Granville's digit-block formula.

    ``e_j`` counts the carries at or beyond digit ``j`` when adding ``m`` and
    ``n - m``; ``e0`` is therefore the full p-adic valuation of C(n, m).
    """
    if m < 0 or m > n:
        raise ValueError(f"need 0 <= m <= n, got n={n}, m={m}")
    p, q, mod = pq.p, pq.q, pq.modulus
    r = n - m
    flags = _carries(m, r, p)
    e0 = sum(flags)
    e_top = sum(flags[q - 1:])

    num = den = 1
    shift = 1
    while shift <= n:
        num = num * factorial_p(n // shift % mod, pq) % mod
        den = den * factorial_p(m // shift % mod, pq) * factorial_p(r // shift % mod, pq) % mod
        shift *= p
    sign = 1 if (p == 2 and q >= 3) else -1
    value = sign**e_top * num * pow(den, -1, mod) % mod
    return e0, value


def prime_power_base(n: int) -> int | None:
    """The prime ``p`` with ``n = p^s`` (s > 0), or None."""
    if n < 2:
        return None
    for p in range(2, isqrt(n) + 1):
        if n % p == 0:
            while n % p == 0:
                n //= p
            return p if n == 1 else None
    return n


def m_of(i: int) -> int:
    """``p`` if ``i + 1`` is a power of the prime ``p``, else 1."""
    if i < 1:
        raise ValueError("m_i is defined for i >= 1")
    return prime_power_base(i + 1) or 1


def gcd_all(values) -> int:
    """Positive gcd of a family; zeros are ignored (gcd of nothing is 0)."""
    return reduce(gcd, (abs(v) for v in values), 0)


def gcd_binomials(n: int) -> int:
    if n < 2:
        raise ValueError("need n >= 2")
    return gcd_all(comb(n, i) for i in range(1, n))


def gcd_binomials_closed_form(n: int) -> int:
    return prime_power_base(n) or 1


def diff_family(k: int) -> list[int]:
    """C(2k+1, 2i) - C(2k+1, 2i-1) for 0 < i <= k."""
    if k <= 1:
        raise ValueError("need k > 1")
    n = 2 * k + 1
    return [comb(n, 2 * i) - comb(n, 2 * i - 1) for i in range(1, k + 1)]


def gcd_diff_family(k: int) -> int:
    return gcd_all(diff_family(k))


def a_family(k: int) -> list[int]:
    """a_i = -2i - C(2k,1) + C(2k,2) - ... + C(2k,2i) for 0 < i < k."""
    if k <= 2:
        raise ValueError("need k > 2")
    n = 2 * k
    out = []
    partial = 0
    for i in range(1, k):
        partial += comb(n, 2 * i) - comb(n, 2 * i - 1)
        out.append(partial - 2 * i)
    return out


def valuation(x: int, p: int) -> int:
    if x == 0:
        raise ValueError("valuation of 0 is infinite")
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


def pascal_rows_mod(nmax: int, modulus: int):
    """Yield ``(n, row)`` with ``row[m] = C(n, m) mod modulus`` for ``n = 0..nmax``.

    Built by Pascal's rule alone, so it shares no digit arithmetic with the
    Lucas or Granville code it is used to check.
    """
    import numpy as np

    row = np.ones(1, dtype=np.int64)
    yield 0, row
    for n in range(1, nmax + 1):
        nxt = np.empty(n + 1, dtype=np.int64)
        nxt[0] = nxt[n] = 1 % modulus
        nxt[1:n] = (row[:-1] + row[1:]) % modulus
        row = nxt
        yield n, row


def split_p_part(residues, p: int, q: int, headroom: int):
    """Split residues ``C mod p^headroom`` into ``(v_p(C), C / p^v mod p^q)``.

    Valid whenever ``v_p(C) + q <= headroom`` and the residue is nonzero.
    """
    import numpy as np

    r = np.asarray(residues, dtype=np.int64).copy()
    if (r == 0).any():
        raise ValueError("headroom too small: a residue vanished")
    v = np.zeros_like(r)
    while True:
        mask = r % p == 0
        if not mask.any():
            break
        r[mask] //= p
        v[mask] += 1
    if (v + q > headroom).any():
        raise ValueError("headroom too small for the requested precision")
    return v, r % (p**q)
