"""The two characteristic-number engines.

Localization sums fixed-point contributions over the vertices of the polytope
in exact rationals.  The cohomology engine expands the total Chern class in a
family's quotient presentation.  They share nothing beyond the input pair, so
each checks the other.
"""
from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache

from toricbord import linalg
from toricbord.exactpoly import SparsePoly, elementary_symmetric


class LocalizationError(ArithmeticError):
    pass


def _partitions(n, largest=None):
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in _partitions(n - k, k):
            yield (k,) + rest


def chern_monomials(n: int) -> list[tuple[int, ...]]:
    """All exponent vectors ``(i_1..i_n)`` with ``sum k*i_k == n``."""
    out = []
    for part in _partitions(n):
        exps = [0] * n
        for k in part:
            exps[k - 1] += 1
        out.append(tuple(exps))
    return out


def normalize_omega(omega, n: int) -> tuple[int, ...]:
    omega = tuple(int(x) for x in omega)
    if any(x < 0 for x in omega):
        raise ValueError("exponents must be non-negative")
    if len(omega) > n:
        if any(omega[n:]):
            raise ValueError(f"omega uses c_k with k > {n}")
        omega = omega[:n]
    omega = omega + (0,) * (n - len(omega))
    weight = sum((k + 1) * e for k, e in enumerate(omega))
    if weight != n:
        raise ValueError(f"omega has weight {weight}, expected {n}")
    return omega


def _primes():
    yield 2
    k = 3
    while True:
        if all(k % d for d in range(3, int(k**0.5) + 1, 2)):
            yield k
        k += 2


def xi_candidates(n: int, limit: int = 200):
    """The deterministic generic vectors ``(1, j, .., j^{n-1})`` for primes ``j``."""
    for count, j in enumerate(_primes()):
        if count >= limit:
            return
        yield tuple(j**t for t in range(n))


def tangent_weights(M) -> list[list[tuple[int, ...]]]:
    """Per vertex, the weights of the tangent representation (rows of the inverse)."""
    return [
        [tuple(r) for r in linalg.unimodular_inverse(M.vertex_matrix(k))]
        for k in range(len(M.vertices))
    ]


@lru_cache(maxsize=256)
def _fixed_point_data(M, skip: int = 0):
    """Signs and weight pairings at every vertex for the chosen generic vector."""
    weights = tangent_weights(M)
    admissible = 0
    for xi in xi_candidates(M.n):
        pairings = [
            [sum(a * b for a, b in zip(w, xi)) for w in ws] for ws in weights
        ]
        if all(all(pairing) for pairing in pairings):
            if admissible == skip:
                return xi, tuple(zip(M.signs, map(tuple, pairings)))
            admissible += 1
    raise LocalizationError("no admissible generic vector found")


def _elementary(values):
    e = [1] + [0] * len(values)
    for x in values:
        for k in range(len(values), 0, -1):
            e[k] += e[k - 1] * x
    return e


def _vertex_sum(data, numerator):
    total = Fraction(0)
    for sign, pairing in data:
        euler = 1
        for x in pairing:
            euler *= x
        total += Fraction(sign * numerator(pairing), euler)
    if total.denominator != 1:
        raise LocalizationError(f"fixed-point sum {total} is not an integer")
    return int(total)


def chern_number_localization(M, omega, skip: int = 0) -> int:
    omega = normalize_omega(omega, M.n)
    _, data = _fixed_point_data(M, skip)

    def numerator(pairing):
        e = _elementary(pairing)
        out = 1
        for k, i in enumerate(omega, start=1):
            if i:
                out *= e[k] ** i
        return out

    return _vertex_sum(data, numerator)


def chern_numbers_localization(M, skip: int = 0) -> dict[tuple[int, ...], int]:
    """Every top-degree Chern number, sharing the per-vertex symmetric functions."""
    omegas = chern_monomials(M.n)
    _, data = _fixed_point_data(M, skip)
    totals = {w: Fraction(0) for w in omegas}
    for sign, pairing in data:
        e = _elementary(pairing)
        euler = e[M.n]
        for w in omegas:
            num = 1
            for k, i in enumerate(w, start=1):
                if i:
                    num *= e[k] ** i
            totals[w] += Fraction(sign * num, euler)
    out = {}
    for w, t in totals.items():
        if t.denominator != 1:
            raise LocalizationError(f"c_{w} sum {t} is not an integer")
        out[w] = int(t)
    return out


def s_number_localization(M, n: int | None = None, skip: int = 0) -> int:
    if n is None:
        n = M.n
    if n != M.n:
        raise ValueError(f"s_{n} needs a manifold of complex dimension {n}, got {M.n}")
    _, data = _fixed_point_data(M, skip)
    return _vertex_sum(data, lambda pairing: sum(x**n for x in pairing))


# cohomology engine

def chern_classes_cohomology(F) -> list[SparsePoly]:
    """Reduced ``[c_0, c_1, .., c_n]`` from the linear forms of a family."""
    pres = F.presentation
    e = elementary_symmetric(list(F.linear_forms), pres.top_degree)
    return [pres.normal_form(c) for c in e]


def chern_number_cohomology(F, omega) -> int:
    pres = F.presentation
    n = pres.top_degree
    omega = normalize_omega(omega, n)
    c = chern_classes_cohomology(F)
    cls = SparsePoly.const(1, pres.arity)
    for k, i in enumerate(omega, start=1):
        if i:
            cls = pres.multiply(cls, pres.power(c[k], i))
    return pres.evaluate_fundamental(cls)


def chern_numbers_cohomology(F) -> dict[tuple[int, ...], int]:
    pres = F.presentation
    n = pres.top_degree
    c = chern_classes_cohomology(F)
    powers: dict[tuple[int, int], SparsePoly] = {}

    def cpow(k, i):
        if (k, i) not in powers:
            powers[(k, i)] = pres.power(c[k], i)
        return powers[(k, i)]

    out = {}
    for w in chern_monomials(n):
        cls = SparsePoly.const(1, pres.arity)
        for k, i in enumerate(w, start=1):
            if i:
                cls = pres.multiply(cls, cpow(k, i))
        out[w] = pres.evaluate_fundamental(cls)
    return out


def s_number_cohomology(F, n: int | None = None) -> int:
    pres = F.presentation
    top = pres.top_degree
    if n is None:
        n = top
    if n != top:
        raise ValueError(f"s_{n} needs complex dimension {n}, got {top}")
    total = SparsePoly.zero(pres.arity)
    for form, mult in Counter(F.linear_forms).items():
        total = total + pres.power(form, n).scalar_mul(mult)
    return pres.evaluate_fundamental(total)
