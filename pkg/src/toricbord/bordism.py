"""Formal bordism classes, the s-number generator test and certificate searches.

A certificate is an integer combination of family members whose s-number
hits the divisibility target of a polynomial generator.  Searches prefer the
fewest members, then the smallest sum of absolute coefficients, then the
earliest parameters.  :func:`realize_certificate` turns a certificate into a
single characteristic pair by repeated equivariant connected sums.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from math import gcd

from toricbord import engines, numtheory
from toricbord.families import FamilyPresentation, L, parse_family, tildeL, tildeN
from toricbord.quasitoric import (
    CharacteristicPair,
    connected_sum,
    reverse_orientation,
    su_check,
)


class CertificateError(ArithmeticError):
    pass


def _pair_of(member) -> CharacteristicPair:
    return member.pair if isinstance(member, FamilyPresentation) else member


def s_number(member, engine: str = "localization") -> int:
    if engine == "cohomology":
        if not isinstance(member, FamilyPresentation):
            raise TypeError("the cohomology engine needs a family presentation")
        return engines.s_number_cohomology(member)
    return engines.s_number_localization(_pair_of(member))


@dataclass(frozen=True)
class FormalBordismClass:
    terms: tuple[tuple[int, object], ...]
    dim: int

    def __post_init__(self):
        terms = tuple((int(c), m) for c, m in self.terms if c)
        object.__setattr__(self, "terms", terms)
        if self.dim <= 0 or self.dim % 2:
            raise ValueError("dimension must be positive and even")
        for _, member in terms:
            if 2 * _pair_of(member).n != self.dim:
                raise ValueError(f"member {_pair_of(member).name} is not {self.dim}-dimensional")

    @classmethod
    def of(cls, *terms) -> FormalBordismClass:
        if not terms:
            raise ValueError("use FormalBordismClass((), dim) for the empty class")
        return cls(tuple(terms), 2 * _pair_of(terms[0][1]).n)

    @property
    def complex_dim(self) -> int:
        return self.dim // 2

    def __add__(self, other: FormalBordismClass) -> FormalBordismClass:
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        return FormalBordismClass(self.terms + other.terms, self.dim)

    def scaled(self, k: int) -> FormalBordismClass:
        return FormalBordismClass(tuple((k * c, m) for c, m in self.terms), self.dim)

    def chern_numbers(self) -> dict[tuple[int, ...], int]:
        out = {w: 0 for w in engines.chern_monomials(self.complex_dim)}
        for c, member in self.terms:
            for w, x in engines.chern_numbers_localization(_pair_of(member)).items():
                out[w] += c * x
        return out

    def describe(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for c, member in self.terms:
            name = _pair_of(member).name
            body = f"[{name}]" if abs(c) == 1 else f"{abs(c)}[{name}]"
            parts.append(("-" if c < 0 else "+", body))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


def s_of_class(C: FormalBordismClass, engine: str = "localization") -> int:
    return sum(c * s_number(member, engine) for c, member in C.terms)


def milnor_generator_test(C: FormalBordismClass, i: int) -> bool:
    """Whether ``C`` can serve as the ``2i``-dimensional polynomial generator."""
    if C.dim != 2 * i:
        raise ValueError(f"class has dimension {C.dim}, not {2 * i}")
    return abs(s_of_class(C)) == numtheory.m_of(i)


@dataclass(frozen=True)
class GeneratorCertificate:
    klass: FormalBordismClass
    s_value: int
    target: int
    su: bool

    def to_dict(self) -> dict:
        return {
            "dim": self.klass.dim,
            "terms": [{"coefficient": c, "member": _pair_of(m).name} for c, m in self.klass.terms],
            "s_value": self.s_value,
            "target": self.target,
            "su": self.su,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> GeneratorCertificate:
        terms = tuple((int(t["coefficient"]), parse_family(t["member"])) for t in data["terms"])
        klass = FormalBordismClass(terms, int(data["dim"]))
        return cls(klass, int(data["s_value"]), int(data["target"]), bool(data["su"]))

    @classmethod
    def from_json(cls, text: str) -> GeneratorCertificate:
        return cls.from_dict(json.loads(text))

    def check(self) -> list[str]:
        """Recompute everything recorded; an empty list means consistent."""
        problems = []
        s = s_of_class(self.klass)
        if s != self.s_value:
            problems.append(f"recorded s={self.s_value} but engine gives {s}")
        if abs(self.s_value) != abs(self.target):
            problems.append(f"s={self.s_value} misses target {self.target}")
        su = all(su_check(_pair_of(m)) is not None for _, m in self.klass.terms)
        if su != self.su:
            problems.append(f"recorded su={self.su} but members give {su}")
        return problems


def _ext_gcd(a, b):
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def _best_pair(a, b, target):
    """Smallest-l1 solution of ``x*a + y*b = target`` with ``x, y`` nonzero."""
    g, x0, y0 = _ext_gcd(a, b)
    if g < 0:
        g, x0, y0 = -g, -x0, -y0
    if g == 0 or target % g:
        return None
    x0, y0 = x0 * (target // g), y0 * (target // g)
    da, db = a // g, b // g
    # x = x0 + t*db, y = y0 - t*da; the l1 norm is convex in t
    centers = []
    if db:
        centers.append(-x0 / db)
    if da:
        centers.append(y0 / da)
    best = None
    for c in centers:
        base = int(c)
        for t in range(base - 2, base + 3):
            x, y = x0 + t * db, y0 - t * da
            if not x or not y:
                continue
            key = abs(x) + abs(y)
            if best is None or key < best[0]:
                best = (key, x, y)
    return None if best is None else (best[1], best[2])


def small_combination(values: list[int], target: int) -> list[int]:
    """Integer coefficients ``c`` with ``sum c_i * values_i == target``.

    One- and two-term solutions are searched exhaustively (fewest terms, then
    smallest l1 norm, then index order).  Beyond that a full extended-gcd
    chain is used, which is correct but not minimal.
    """
    r = len(values)
    singles = [i for i, v in enumerate(values) if v and target % v == 0]
    if singles:
        i = min(singles, key=lambda j: (abs(target // values[j]), j))
        out = [0] * r
        out[i] = target // values[i]
        return out
    best = None
    for i, j in itertools.combinations(range(r), 2):
        sol = _best_pair(values[i], values[j], target)
        if sol is None:
            continue
        key = abs(sol[0]) + abs(sol[1])
        if best is None or key < best[0]:
            best = (key, i, j, sol)
    if best is not None:
        _, i, j, (x, y) = best
        out = [0] * r
        out[i], out[j] = x, y
        return out
    g, coeffs = 0, [0] * r
    for idx, v in enumerate(values):
        ng, a, b = _ext_gcd(g, v)
        coeffs = [a * c for c in coeffs]
        coeffs[idx] += b
        g = ng
    if g < 0:
        g, coeffs = -g, [-c for c in coeffs]
    if g == 0 or target % g:
        raise CertificateError(f"target {target} is not a multiple of the gcd {g}")
    return [c * (target // g) for c in coeffs]


def _certificate(members, target, engine="cohomology") -> GeneratorCertificate:
    values = [s_number(m, engine) for m in members]
    g = 0
    for v in values:
        g = gcd(g, v)
    if g != target:
        raise CertificateError(f"gcd of member s-numbers is {g}, expected {target}")
    coeffs = small_combination(values, target)
    terms = tuple((c, m) for c, m in zip(coeffs, members) if c)
    klass = FormalBordismClass(terms, 2 * members[0].dim)
    s = sum(c * v for c, v in zip(coeffs, values))
    su = all(su_check(m.pair) is not None for _, m in terms)
    return GeneratorCertificate(klass, s, target, su)


def find_y_odd(k: int) -> GeneratorCertificate:
    """SU combination of ``tildeL(n1, 2k+1-n1)`` with s = m_{2k+1} m_{2k}."""
    if k <= 1:
        raise ValueError("need k > 1")
    n = 2 * k + 1
    members = [tildeL(n1, n - n1) for n1 in range(2, n, 2)]
    return _certificate(members, numtheory.m_of(n) * numtheory.m_of(n - 1))


def find_y_even(k: int) -> GeneratorCertificate:
    """SU combination of ``tildeN(n1, 2k-1-n1)`` with s = 2 m_{2k} m_{2k-1}."""
    if k <= 2:
        raise ValueError("need k > 2")
    n = 2 * k
    members = [tildeN(n1, n - 1 - n1) for n1 in range(2, n - 1, 2)]
    return _certificate(members, 2 * numtheory.m_of(n) * numtheory.m_of(n - 1))


def find_unitary(i: int) -> GeneratorCertificate:
    """Combination of ``L(n1, i-n1)`` with s = m_i (a generator of the unitary ring)."""
    if i < 1:
        raise ValueError("need i >= 1")
    members = [L(n1, i - n1) for n1 in range(0, i)]
    return _certificate(members, numtheory.m_of(i))


def find_generator(i: int, su: bool = False) -> GeneratorCertificate:
    if not su:
        return find_unitary(i)
    if i % 2:
        return find_y_odd((i - 1) // 2)
    return find_y_even(i // 2)


def _fold(acc: CharacteristicPair, nxt: CharacteristicPair) -> CharacteristicPair:
    for k, s in enumerate(acc.signs):
        for l, t in enumerate(nxt.signs):
            if s == -t:
                return connected_sum(acc, k, nxt, l)
    return connected_sum(acc, 0, nxt, 0)


def realize_certificate(C: GeneratorCertificate | FormalBordismClass) -> CharacteristicPair:
    """A single pair representing the class, built from connected sums."""
    klass = C.klass if isinstance(C, GeneratorCertificate) else C
    if not klass.terms:
        raise ValueError("cannot realize the empty class")
    if klass.complex_dim < 3:
        raise ValueError("realization needs real dimension > 4")
    copies = []
    for c, member in klass.terms:
        pair = _pair_of(member)
        if c < 0:
            pair = reverse_orientation(pair)
        copies.extend([pair] * abs(c))
    acc = copies[0]
    for nxt in copies[1:]:
        acc = _fold(acc, nxt)
    return acc
