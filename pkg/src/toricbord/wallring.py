"""The ring Z[x_1, x_i : i > 2] with the boundary operator used for SU-bordism.

Elements are polynomials in generators ``x_1, x_3, x_4, ...`` (there is no
``x_2``), graded by ``deg x_i = 2i``.  The twisted product of the underlying
bordism ring is already absorbed into this polynomial presentation, so
multiplication here is plain polynomial multiplication.

The boundary is fixed on generators (``d x_1 = 2``, ``d x_{2i} = x_{2i-1}``,
odd generators other than ``x_1`` are cycles) and extended to monomials by

    d(a b) = a d(b) + d(a) b - x_1 d(a) d(b),

peeling one generator at a time.
"""
from __future__ import annotations

import ast
import re
from functools import lru_cache

Monomial = tuple[int, ...]


def _check_generator(i: int) -> None:
    if i < 1 or i == 2:
        raise ValueError(f"x{i} is not a generator (use x1 or x_i with i > 2)")


class WallElement:
    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean: dict[Monomial, int] = {}
        for mono, c in (terms or {}).items():
            mono = tuple(sorted(mono))
            for g in mono:
                _check_generator(g)
            c = clean.get(mono, 0) + c
            if c:
                clean[mono] = c
            else:
                clean.pop(mono, None)
        self.terms = clean

    @classmethod
    def _raw(cls, terms):
        obj = cls.__new__(cls)
        obj.terms = terms
        return obj

    @classmethod
    def const(cls, c: int) -> WallElement:
        return cls._raw({(): c} if c else {})

    @classmethod
    def gen(cls, i: int, coeff: int = 1) -> WallElement:
        _check_generator(i)
        return cls._raw({(i,): coeff} if coeff else {})

    @classmethod
    def monomial(cls, mono, coeff: int = 1) -> WallElement:
        return cls({tuple(mono): coeff})

    def _coerce(self, other):
        if isinstance(other, WallElement):
            return other
        if isinstance(other, int):
            return WallElement.const(other)
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
        return WallElement._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return WallElement._raw({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return w_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not defined")
        out = WallElement.const(1)
        for _ in range(k):
            out = w_mul(out, self)
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def degree(self) -> int:
        """Top (real) degree; -1 for zero."""
        return max((2 * sum(m) for m in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for mono in sorted(self.terms, key=lambda m: (-sum(m), m)):
            c = self.terms[mono]
            factors = []
            for g in sorted(set(mono)):
                e = mono.count(g)
                factors.append(f"x{g}" if e == 1 else f"x{g}^{e}")
            body = "*".join(factors)
            if not body:
                text = str(abs(c))
            elif abs(c) == 1:
                text = body
            else:
                text = f"{abs(c)}*{body}"
            parts.append(("-" if c < 0 else "+", text))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, text in parts[1:]:
            out += f" {sign} {text}"
        return out

    def __repr__(self):
        return f"WallElement({self})"


def w_mul(a: WallElement, b: WallElement) -> WallElement:
    out: dict[Monomial, int] = {}
    for m1, c1 in a.terms.items():
        for m2, c2 in b.terms.items():
            mono = tuple(sorted(m1 + m2))
            c = out.get(mono, 0) + c1 * c2
            if c:
                out[mono] = c
            else:
                del out[mono]
    return WallElement._raw(out)


def boundary_generator(i: int) -> WallElement:
    _check_generator(i)
    if i == 1:
        return WallElement.const(2)
    if i % 2 == 0:
        return WallElement.gen(i - 1)
    return WallElement.const(0)


def _peel(mono: Monomial, index: int, rest_boundary) -> WallElement:
    g = WallElement.gen(mono[index])
    rest_mono = mono[:index] + mono[index + 1:]
    rest = WallElement._raw({rest_mono: 1})
    dg = boundary_generator(mono[index])
    dr = rest_boundary(rest_mono)
    x1 = WallElement.gen(1)
    return w_mul(g, dr) + w_mul(dg, rest) - w_mul(x1, w_mul(dg, dr))


@lru_cache(maxsize=None)
def _boundary_monomial(mono: Monomial) -> WallElement:
    if not mono:
        return WallElement.const(0)
    return _peel(mono, 0, _boundary_monomial)


def boundary_monomial(mono, peel_index: int = 0) -> WallElement:
    """Boundary of one monomial, peeling the factor at ``peel_index`` first."""
    mono = tuple(sorted(mono))
    if not mono:
        return WallElement.const(0)
    if peel_index == 0:
        return _boundary_monomial(mono)
    return _peel(mono, peel_index, _boundary_monomial)


def boundary(a: WallElement) -> WallElement:
    out = WallElement.const(0)
    for mono, c in a.terms.items():
        d = _boundary_monomial(mono)
        out = out + WallElement._raw({m: c * k for m, k in d.terms.items()})
    return out


def yidescr_image(i: int) -> WallElement:
    """Image in the ring of the SU generator ``y_i``."""
    if i <= 1:
        raise ValueError("need i > 1")
    if i == 2:
        return WallElement.monomial((1, 1), 2)
    if i % 2:
        return WallElement.gen(i)
    return WallElement.gen(i, 2) - WallElement.monomial((1, i - 1))


_NAME = re.compile(r"^x(\d+)$")


def parse(text: str) -> WallElement:
    """Parse expressions like ``2*x4 - x1*x3`` or ``x1^2 + 3``."""
    try:
        tree = ast.parse(text.replace("^", "**"), mode="eval")
    except SyntaxError as exc:
        raise ValueError(f"cannot parse {text!r}: {exc.msg}") from exc
    return _eval(tree.body)


def _eval(node) -> WallElement:
    if isinstance(node, ast.Constant) and isinstance(node.value, int) and not isinstance(node.value, bool):
        return WallElement.const(node.value)
    if isinstance(node, ast.Name):
        match = _NAME.match(node.id)
        if not match:
            raise ValueError(f"unknown symbol {node.id!r}")
        return WallElement.gen(int(match.group(1)))
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        inner = _eval(node.operand)
        return -inner if isinstance(node.op, ast.USub) else inner
    if isinstance(node, ast.BinOp):
        if isinstance(node.op, ast.Pow):
            exp = node.right
            if not (isinstance(exp, ast.Constant) and isinstance(exp.value, int) and exp.value >= 0):
                raise ValueError("exponents must be non-negative integer literals")
            return _eval(node.left) ** exp.value
        left, right = _eval(node.left), _eval(node.right)
        if isinstance(node.op, ast.Add):
            return left + right
        if isinstance(node.op, ast.Sub):
            return left - right
        if isinstance(node.op, ast.Mult):
            return w_mul(left, right)
    raise ValueError(f"unsupported expression element {type(node).__name__}")
