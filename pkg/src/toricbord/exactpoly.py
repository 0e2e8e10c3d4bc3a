"""Sparse integer polynomials and normal forms in solved-form quotient rings.

A :class:`SparsePoly` maps exponent tuples to nonzero Python ints.  A
:class:`QuotientPresentation` describes a ring ``Z[x_0..x_{k-1}] / I`` where
each generator of ``I`` is either ``x^d`` or ``x^d - (lower terms)``; this is
enough for the cohomology rings of iterated projectivisations of sums of line
bundles, and no Groebner machinery is needed.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Iterable, Mapping


class ArityError(ValueError):
    pass


class PresentationError(ValueError):
    pass


class ReductionError(RuntimeError):
    """A rewriting step failed to decrease the monomial order."""


Monomial = tuple[int, ...]


class SparsePoly:
    __slots__ = ("arity", "terms")

    def __init__(self, arity: int, terms: Mapping[Monomial, int] | Iterable = ()):
        self.arity = arity
        clean: dict[Monomial, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for mono, c in items:
            mono = tuple(mono)
            if len(mono) != arity:
                raise ArityError(f"monomial {mono} does not have arity {arity}")
            if any(e < 0 for e in mono):
                raise ValueError(f"negative exponent in {mono}")
            c = clean.get(mono, 0) + c
            if c:
                clean[mono] = c
            else:
                clean.pop(mono, None)
        self.terms = clean

    @classmethod
    def _raw(cls, arity, terms):
        obj = cls.__new__(cls)
        obj.arity = arity
        obj.terms = terms
        return obj

    @classmethod
    def zero(cls, arity: int) -> SparsePoly:
        return cls._raw(arity, {})

    @classmethod
    def const(cls, c: int, arity: int) -> SparsePoly:
        return cls._raw(arity, {(0,) * arity: c} if c else {})

    @classmethod
    def var(cls, i: int, arity: int, coeff: int = 1) -> SparsePoly:
        if not 0 <= i < arity:
            raise ArityError(f"variable index {i} out of range for arity {arity}")
        mono = tuple(1 if j == i else 0 for j in range(arity))
        return cls._raw(arity, {mono: coeff} if coeff else {})

    @classmethod
    def monomial(cls, exponents: Monomial, coeff: int = 1) -> SparsePoly:
        return cls(len(exponents), {tuple(exponents): coeff})

    def _check(self, other: SparsePoly) -> None:
        if self.arity != other.arity:
            raise ArityError(f"arity mismatch: {self.arity} vs {other.arity}")

    def _coerce(self, other):
        if isinstance(other, SparsePoly):
            self._check(other)
            return other
        if isinstance(other, int):
            return SparsePoly.const(other, self.arity)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for mono, c in other.terms.items():
            c = out.get(mono, 0) + c
            if c:
                out[mono] = c
            else:
                out.pop(mono, None)
        return SparsePoly._raw(self.arity, out)

    __radd__ = __add__

    def __neg__(self):
        return SparsePoly._raw(self.arity, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scalar_mul(self, k: int) -> SparsePoly:
        if not k:
            return SparsePoly.zero(self.arity)
        return SparsePoly._raw(self.arity, {m: k * c for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scalar_mul(other)
        if not isinstance(other, SparsePoly):
            return NotImplemented
        self._check(other)
        out: dict[Monomial, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = tuple(a + b for a, b in zip(m1, m2))
                c = out.get(mono, 0) + c1 * c2
                if c:
                    out[mono] = c
                else:
                    del out[mono]
        return SparsePoly._raw(self.arity, out)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scalar_mul(other)
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        result = SparsePoly.const(1, self.arity)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = SparsePoly.const(other, self.arity)
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self.arity == other.arity and self.terms == other.terms

    def __hash__(self):
        return hash((self.arity, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def coefficient(self, mono: Monomial) -> int:
        return self.terms.get(tuple(mono), 0)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self.terms), default=-1)

    def degree_in(self, i: int) -> int:
        return max((m[i] for m in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    def homogeneous_part(self, d: int) -> SparsePoly:
        return SparsePoly._raw(self.arity, {m: c for m, c in self.terms.items() if sum(m) == d})

    def truncated(self, max_degree: int) -> SparsePoly:
        return SparsePoly._raw(
            self.arity, {m: c for m, c in self.terms.items() if sum(m) <= max_degree}
        )

    def embed(self, arity: int, offset: int) -> SparsePoly:
        """Re-express in a larger ring, placing our variables at ``offset``."""
        if offset < 0 or offset + self.arity > arity:
            raise ArityError("embedding does not fit")
        pad_left = (0,) * offset
        pad_right = (0,) * (arity - offset - self.arity)
        return SparsePoly._raw(arity, {pad_left + m + pad_right: c for m, c in self.terms.items()})

    def to_str(self, names: Iterable[str] | None = None) -> str:
        names = list(names) if names is not None else [f"x{i}" for i in range(self.arity)]
        if not self.terms:
            return "0"
        parts = []
        for mono in sorted(self.terms, key=lambda m: (-sum(m), tuple(-e for e in m))):
            c = self.terms[mono]
            factors = [n if e == 1 else f"{n}^{e}" for n, e in zip(names, mono) if e]
            body = "*".join(factors)
            if not body:
                text = str(abs(c))
            elif abs(c) == 1:
                text = body
            else:
                text = f"{abs(c)}*{body}"
            parts.append(("-" if c < 0 else "+", text))
        head_sign, head = parts[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, text in parts[1:]:
            out += f" {sign} {text}"
        return out

    def __repr__(self):
        return f"SparsePoly({self.to_str()})"


def elementary_symmetric(forms: list[SparsePoly], max_degree: int | None = None) -> list[SparsePoly]:
    """``[e_0, e_1, ...]`` of the given polynomials via the product of ``(1 + f)``."""
    if not forms:
        raise ValueError("need at least one form")
    arity = forms[0].arity
    top = len(forms) if max_degree is None else min(max_degree, len(forms))
    e = [SparsePoly.const(1, arity)] + [SparsePoly.zero(arity) for _ in range(top)]
    for f in forms:
        for k in range(top, 0, -1):
            e[k] = e[k] + e[k - 1] * f
    return e


@dataclass(frozen=True)
class QuotientPresentation:
    """``Z[x_0..x_{k-1}]`` modulo ``x^d = 0`` and ``x^d = replacement`` rules.

    ``ranking`` lists variable indices from most to least significant; every
    replacement may only involve variables ranked at or below its own, and must
    have strictly smaller degree in it.  This makes rewriting terminate.
    """

    arity: int
    annihilators: tuple[tuple[int, int], ...]
    solved_relations: tuple[tuple[int, int, SparsePoly], ...]
    fundamental_monomial: Monomial
    fundamental_value: int = 1
    ranking: tuple[int, ...] = ()
    names: tuple[str, ...] = ()
    _rules: dict = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        k = self.arity
        if not self.ranking:
            object.__setattr__(self, "ranking", tuple(reversed(range(k))))
        if sorted(self.ranking) != list(range(k)):
            raise PresentationError("ranking must be a permutation of the variables")
        if not self.names:
            object.__setattr__(self, "names", tuple(f"x{i}" for i in range(k)))
        if len(self.fundamental_monomial) != k:
            raise PresentationError("fundamental monomial has the wrong arity")
        if self.fundamental_value not in (1, -1):
            raise PresentationError("fundamental value must be +1 or -1")

        rank = {var: len(self.ranking) - pos for pos, var in enumerate(self.ranking)}
        rules: dict[int, list] = {}
        seen_ann, seen_solved = set(), set()
        for var, d in self.annihilators:
            if var in seen_ann or d < 1:
                raise PresentationError(f"bad annihilator on variable {var}")
            seen_ann.add(var)
            rules.setdefault(var, []).append((d, None))
        for var, d, repl in self.solved_relations:
            if var in seen_solved or d < 1:
                raise PresentationError(f"bad solved relation on variable {var}")
            if repl.arity != k:
                raise ArityError("replacement has the wrong arity")
            seen_solved.add(var)
            for mono in repl.terms:
                if mono[var] >= d:
                    raise PresentationError(
                        f"replacement for x{var}^{d} is not of lower degree in x{var}"
                    )
                if any(mono[j] and rank[j] > rank[var] for j in range(k)):
                    raise PresentationError(
                        f"replacement for x{var}^{d} involves a higher-ranked variable"
                    )
            rules.setdefault(var, []).append((d, repl))
        for var in rules:
            rules[var].sort(key=lambda r: (r[1] is not None, r[0]))
        object.__setattr__(self, "_rules", rules)
        nf = self.normal_form(SparsePoly.monomial(self.fundamental_monomial))
        if nf != SparsePoly.monomial(self.fundamental_monomial):
            raise PresentationError("fundamental monomial is not in normal form")

    @property
    def top_degree(self) -> int:
        return sum(self.fundamental_monomial)

    def _order_key(self, mono: Monomial) -> tuple[int, ...]:
        return tuple(mono[i] for i in self.ranking)

    def _rule_for(self, mono: Monomial):
        for var, rules in self._rules.items():
            for d, repl in rules:
                if mono[var] >= d:
                    return var, d, repl
        return None

    def normal_form(self, p: SparsePoly) -> SparsePoly:
        if p.arity != self.arity:
            raise ArityError(f"polynomial arity {p.arity} != presentation arity {self.arity}")
        pending = dict(p.terms)
        heap = [(tuple(-e for e in self._order_key(m)), m) for m in pending]
        heapq.heapify(heap)
        out: dict[Monomial, int] = {}
        while heap:
            _, mono = heapq.heappop(heap)
            c = pending.pop(mono, 0)
            if not c:
                continue
            rule = self._rule_for(mono)
            if rule is None:
                out[mono] = c
                continue
            var, d, repl = rule
            if repl is None:
                continue
            base = list(mono)
            base[var] -= d
            key = self._order_key(mono)
            for rmono, rc in repl.terms.items():
                new = tuple(a + b for a, b in zip(base, rmono))
                if self._order_key(new) >= key:
                    raise ReductionError(f"rewriting {mono} produced non-decreasing {new}")
                if new in pending:
                    pending[new] += c * rc
                else:
                    pending[new] = c * rc
                    heapq.heappush(heap, (tuple(-e for e in self._order_key(new)), new))
        return SparsePoly._raw(self.arity, out)

    def multiply(self, a: SparsePoly, b: SparsePoly) -> SparsePoly:
        return self.normal_form(a * b)

    def power(self, a: SparsePoly, k: int) -> SparsePoly:
        result = SparsePoly.const(1, self.arity)
        base = self.normal_form(a)
        while k:
            if k & 1:
                result = self.multiply(result, base)
            k >>= 1
            if k:
                base = self.multiply(base, base)
        return result

    def evaluate_fundamental(self, p: SparsePoly) -> int:
        """Pair a top-degree class with the fundamental class."""
        if p.arity != self.arity:
            raise ArityError("arity mismatch")
        top = self.top_degree
        if any(sum(m) != top for m in p.terms):
            raise PresentationError(f"class is not homogeneous of top degree {top}")
        nf = self.normal_form(p)
        fund = tuple(self.fundamental_monomial)
        extra = [m for m in nf.terms if m != fund]
        if extra:
            raise PresentationError(f"normal form keeps non-fundamental top monomials {extra}")
        return nf.coefficient(fund) * self.fundamental_value

    def tensor(self, other: QuotientPresentation) -> QuotientPresentation:
        """Presentation of the product ring (``other``'s variables appended)."""
        k = self.arity + other.arity

        def lift(poly, offset):
            return poly.embed(k, offset)

        off = self.arity
        return QuotientPresentation(
            arity=k,
            annihilators=self.annihilators + tuple((v + off, d) for v, d in other.annihilators),
            solved_relations=tuple((v, d, lift(r, 0)) for v, d, r in self.solved_relations)
            + tuple((v + off, d, lift(r, off)) for v, d, r in other.solved_relations),
            fundamental_monomial=tuple(self.fundamental_monomial) + tuple(other.fundamental_monomial),
            fundamental_value=self.fundamental_value * other.fundamental_value,
            ranking=tuple(v + off for v in other.ranking) + tuple(self.ranking),
            names=tuple(self.names) + tuple(other.names),
        )

    def describe(self) -> str:
        lines = []
        names = self.names
        for var, d in self.annihilators:
            lines.append(f"{names[var]}^{d} = 0")
        for var, d, repl in self.solved_relations:
            lines.append(f"{names[var]}^{d} = {repl.to_str(names)}")
        fund = SparsePoly.monomial(self.fundamental_monomial).to_str(names)
        lines.append(f"<{fund}, [M]> = {self.fundamental_value}")
        return "\n".join(lines)
