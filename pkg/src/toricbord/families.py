"""Constructors for the manifold families, each with a cohomology presentation.

Every constructor returns a :class:`FamilyPresentation`: the characteristic
pair together with the reduced linear forms of the facet classes and a
:class:`QuotientPresentation` of the cohomology ring.  The presentation is
derived from the matrix itself (see :func:`presentation_from_matrix`), so the
printed relations become checks rather than inputs.

Column layouts (0-based facet indices), all over products of simplices:

``cpn(n)``
    ``(I | -1)``; one variable ``v`` (basis facet ``n``).
``proj(n1, degrees)``
    facets ``0..n1-1`` are ``e_1..e_n1``, facet ``n1`` is ``(-1..-1 | i_1..i_n2)``,
    facets ``n1+1..n1+n2`` are ``e``'s of the second block, the last facet is
    ``(0 | -1..-1)``.  Variables ``u`` (facet ``n1``), ``v`` (last facet).
``tildeL(n1, n2)``
    ``L``'s layout with the conjugated columns renormalized to the printed
    matrix; ``u`` is facet ``n1`` and the last facet has class ``-v``.
``tildeN(n1, n2)``
    facets ``0, 1`` (first factor), ``2..2+n1`` (second), ``3+n1..3+n1+n2``
    (third).  Variables ``u, v, w`` on facets ``1``, ``2+n1`` and the last.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from math import comb

from toricbord import linalg
from toricbord.exactpoly import PresentationError, QuotientPresentation, SparsePoly
from toricbord.quasitoric import (
    CharacteristicPair,
    SimplePolytope,
    conjugate_facet,
    left_multiply,
)
from toricbord.quasitoric import product as pair_product


@dataclass(frozen=True)
class FamilyPresentation:
    pair: CharacteristicPair
    presentation: QuotientPresentation
    linear_forms: tuple[SparsePoly, ...]

    @property
    def dim(self) -> int:
        """Complex dimension."""
        return self.pair.n

    @property
    def name(self) -> str:
        return self.pair.name

    def first_chern_class(self) -> SparsePoly:
        total = SparsePoly.zero(self.presentation.arity)
        for f in self.linear_forms:
            total = total + f
        return self.presentation.normal_form(total)

    def renamed(self, name: str) -> FamilyPresentation:
        return FamilyPresentation(self.pair.renamed(name), self.presentation, self.linear_forms)


def simplex_product_vertices(blocks: list[list[int]]) -> tuple[tuple[int, ...], ...]:
    """Vertices of a product of simplices: omit exactly one facet from each block."""
    out = [()]
    for block in blocks:
        out = [v + tuple(f for f in block if f != skip) for v in out for skip in block]
    return tuple(tuple(sorted(v)) for v in out)


def presentation_from_matrix(pair, blocks, basis, names=None, orient=False) -> FamilyPresentation:
    """Cohomology of a pair over a product of simplices, read off the matrix.

    ``blocks[b]`` lists the facets of the ``b``-th simplex factor and
    ``basis[b] = (facet, sign)`` declares that facet's class to be
    ``sign * x_b``.  The remaining facets must form a vertex; their classes
    follow from the linear relations ``lam @ v = 0``.  Each block contributes
    the relation "product of its facet classes = 0", which must be monic in
    ``x_b`` up to sign and otherwise involve only ``x_b`` and earlier
    variables.  Later blocks rank higher in the rewriting order.

    With ``orient`` the vertex signs are flipped globally if needed so that
    the fundamental monomial evaluates to +1.
    """
    k = len(blocks)
    n, m = pair.n, pair.m
    if sorted(f for b in blocks for f in b) != list(range(m)):
        raise PresentationError("blocks must partition the facets")
    basis_facets = [f for f, _ in basis]
    rest = [f for f in range(m) if f not in basis_facets]
    if len(rest) != n:
        raise PresentationError("basis leaves the wrong number of facets")
    lam_c = [[row[f] for f in rest] for row in pair.lam]
    lam_b = [[row[f] * s for f, s in basis] for row in pair.lam]
    inv = linalg.unimodular_inverse(lam_c)
    coeffs = linalg.matmul(inv, lam_b)

    forms: list[SparsePoly | None] = [None] * m
    for b, (f, s) in enumerate(basis):
        forms[f] = SparsePoly.var(b, k, s)
    for idx, f in enumerate(rest):
        p = SparsePoly.zero(k)
        for b in range(k):
            if coeffs[idx][b]:
                p = p + SparsePoly.var(b, k, -coeffs[idx][b])
        forms[f] = p

    annihilators, solved = [], []
    for b, block in enumerate(blocks):
        rel = SparsePoly.const(1, k)
        for f in block:
            rel = rel * forms[f]
        d = len(block)
        lead_mono = tuple(d if j == b else 0 for j in range(k))
        lead = rel.coefficient(lead_mono)
        if lead not in (1, -1):
            raise PresentationError(f"relation of block {b} is not monic in its variable")
        tail = rel - SparsePoly.monomial(lead_mono, lead)
        for mono in tail.terms:
            if any(mono[j] for j in range(b + 1, k)):
                raise PresentationError(f"relation of block {b} involves a later variable")
        if tail:
            earlier = QuotientPresentation(k, tuple(annihilators), tuple(solved), (0,) * k)
            tail = earlier.normal_form(tail)
        if tail:
            solved.append((b, d, tail.scalar_mul(-lead)))
        else:
            annihilators.append((b, d))
    fundamental = tuple(len(block) - 1 for block in blocks)
    pres = QuotientPresentation(
        arity=k,
        annihilators=tuple(annihilators),
        solved_relations=tuple(solved),
        fundamental_monomial=fundamental,
        fundamental_value=1,
        ranking=tuple(reversed(range(k))),
        names=tuple(names) if names else tuple(f"x{i}" for i in range(k)),
    )
    if orient:
        eps = _vertex_class(pres, forms, pair.vertices[0]) * pair.signs[0]
        if eps == -1:
            pair = CharacteristicPair(pair.polytope, pair.lam, tuple(-s for s in pair.signs), pair.name)
    return FamilyPresentation(pair, pres, tuple(forms))


def _vertex_class(pres, forms, vertex):
    cls = SparsePoly.const(1, pres.arity)
    for f in vertex:
        cls = cls * forms[f]
    return pres.evaluate_fundamental(cls)


def vertex_sign_mismatches(F: FamilyPresentation) -> list[int]:
    """Vertices where the product of facet classes does not evaluate to the sign.

    For a consistent omniorientation the facet classes at a fixed point
    intersect in exactly that point, with multiplicity its sign.
    """
    pres, forms = F.presentation, F.linear_forms
    return [k for k, v in enumerate(F.pair.vertices)
            if _vertex_class(pres, forms, v) != F.pair.signs[k]]


def reference_normals(blocks, n):
    """Facet normals of a standard product of simplices, ``(I | -1)`` per block."""
    cols = {}
    row = 0
    for block in blocks:
        d = len(block) - 1
        for t, f in enumerate(block):
            col = [0] * n
            if t < d:
                col[row + t] = 1
            else:
                for r in range(row, row + d):
                    col[r] = -1
            cols[f] = col
        row += d
    return cols


def orientation_signs(lam, vertices, blocks) -> tuple[int, ...]:
    """Vertex signs ``det(lam_v) * det(normals_v)`` for the standard orientation."""
    n = len(lam)
    normals = reference_normals(blocks, n)
    out = []
    for v in vertices:
        a = linalg.det([[row[f] for f in v] for row in lam])
        b = linalg.det([[normals[f][r] for f in v] for r in range(n)])
        out.append(a * b)
    return tuple(out)


def _pair(n, m, blocks, columns, signs=None, name=""):
    lam = tuple(tuple(col[r] for col in columns) for r in range(n))
    vertices = simplex_product_vertices(blocks)
    if signs is None:
        signs = (1,) * len(vertices)
    return CharacteristicPair(SimplePolytope(n, m, vertices), lam, tuple(signs), name)


def _unit(n, i):
    return tuple(1 if r == i else 0 for r in range(n))


@lru_cache(maxsize=None)
def cpn(n: int) -> FamilyPresentation:
    if n < 1:
        raise ValueError("cpn needs n >= 1")
    cols = [_unit(n, i) for i in range(n)] + [(-1,) * n]
    pair = _pair(n, n + 1, [list(range(n + 1))], cols, name=f"cpn({n})")
    return presentation_from_matrix(pair, [list(range(n + 1))], [(n, 1)], ("v",))


def _proj_columns(n1, degrees):
    n2 = len(degrees)
    n = n1 + n2
    cols = [_unit(n, i) for i in range(n1)]
    cols.append((-1,) * n1 + tuple(degrees))
    cols += [_unit(n, n1 + j) for j in range(n2)]
    cols.append((0,) * n1 + (-1,) * n2)
    return cols


def _proj_blocks(n1, n2):
    return [list(range(n1 + 1)), list(range(n1 + 1, n1 + n2 + 2))]


def proj_sum_line_bundles(n1: int, degrees) -> FamilyPresentation:
    """Projectivisation of ``eta^{i_1} + .. + eta^{i_n2} + C`` over ``CP^{n1}``."""
    degrees = tuple(int(d) for d in degrees)
    n2 = len(degrees)
    if n1 < 1 or n2 < 1:
        raise ValueError("proj needs n1 >= 1 and at least one degree")
    n = n1 + n2
    blocks = _proj_blocks(n1, n2)
    name = f"proj({n1};{','.join(map(str, degrees))})"
    pair = _pair(n, n + 2, blocks, _proj_columns(n1, degrees), name=name)
    return presentation_from_matrix(pair, blocks, [(n1, 1), (n + 1, 1)], ("u", "v"))


@lru_cache(maxsize=None)
def L(n1: int, n2: int) -> FamilyPresentation:
    if n1 < 0 or n2 < 0 or n1 + n2 == 0:
        raise ValueError("L needs n1, n2 >= 0, not both zero")
    if n1 == 0:
        return cpn(n2).renamed(f"L(0,{n2})")
    if n2 == 0:
        return cpn(n1).renamed(f"L({n1},0)")
    return proj_sum_line_bundles(n1, (1,) + (0,) * (n2 - 1)).renamed(f"L({n1},{n2})")


def _check_parity(n1, n2, tag):
    if n1 <= 0 or n1 % 2 or n2 <= 0 or n2 % 2 == 0:
        raise ValueError(f"{tag} needs n1 positive even and n2 positive odd, got ({n1},{n2})")


def tilde_l_conjugated_facets(n1: int, n2: int) -> tuple[int, ...]:
    """Facets of ``L(n1, n2)`` whose line bundles get conjugated."""
    first = list(range(0, n1 - 1, 2))
    second = [n1 + 1 + o for o in range(1, n2 - 1, 2)]
    return tuple(first + second + [n1 + n2 + 1])


def tilde_l_normalizer(n1: int, n2: int) -> list[list[int]]:
    """Diagonal basis change taking the conjugated matrix to the printed one."""
    flips = set(range(0, n1 - 1, 2)) | set(range(n1 + 1, n1 + n2 - 1, 2))
    n = n1 + n2
    return [[(-1 if i in flips else 1) if i == j else 0 for j in range(n)] for i in range(n)]


@lru_cache(maxsize=None)
def tildeL(n1: int, n2: int) -> FamilyPresentation:
    _check_parity(n1, n2, "tildeL")
    base = L(n1, n2).pair
    pair = base
    for f in tilde_l_conjugated_facets(n1, n2):
        pair = conjugate_facet(pair, f)
    pair = left_multiply(pair, tilde_l_normalizer(n1, n2)).renamed(f"tildeL({n1},{n2})")
    return presentation_from_matrix(
        pair, _proj_blocks(n1, n2), [(n1, 1), (n1 + n2 + 1, -1)], ("u", "v")
    )


def _alternating(length):
    return [1 if r % 2 == 0 else -1 for r in range(length)]


@lru_cache(maxsize=None)
def tildeN(n1: int, n2: int) -> FamilyPresentation:
    """The SU family over ``D^1 x D^n1 x D^n2`` built from three simplices.

    For ``n2 == 1`` the rows below the third block's first row do not exist;
    the entries they would carry are folded into that row so that every
    column still sums to 1.
    """
    _check_parity(n1, n2, "tildeN")
    n = 1 + n1 + n2
    m = n + 3
    cols = [[0] * n for _ in range(m)]
    cols[0][0] = 1
    cols[1][0] = 1
    for i in range(n1):
        cols[2 + i][1 + i] = 1
    for r, x in enumerate(_alternating(n1)):
        cols[2 + n1][1 + r] = x
    for j in range(n2):
        cols[3 + n1 + j][n1 + 1 + j] = 1
    for r, x in enumerate(_alternating(n2)):
        cols[3 + n1 + n2][n1 + 1 + r] = x
    if n2 >= 3:
        cols[1][n1 + 1] = -1
        cols[1][n1 + 2] = 1
        cols[2 + n1][n1 + 3] = 1
    else:
        cols[2 + n1][n1 + 1] = 1
    blocks = [[0, 1], list(range(2, 3 + n1)), list(range(3 + n1, m))]
    lam = [[c[r] for c in cols] for r in range(n)]
    signs = orientation_signs(lam, simplex_product_vertices(blocks), blocks)
    pair = _pair(n, m, blocks, [tuple(c) for c in cols], signs, name=f"tildeN({n1},{n2})")
    return presentation_from_matrix(pair, blocks, [(1, 1), (2 + n1, 1), (m - 1, 1)], ("u", "v", "w"),
                                    orient=True)


def product(F: FamilyPresentation, G: FamilyPresentation) -> FamilyPresentation:
    pres = F.presentation.tensor(G.presentation)
    k = pres.arity
    forms = tuple(f.embed(k, 0) for f in F.linear_forms) + tuple(
        g.embed(k, F.presentation.arity) for g in G.linear_forms
    )
    pair = pair_product(F.pair, G.pair).renamed(f"product({F.name},{G.name})")
    return FamilyPresentation(pair, pres, forms)


def closed_form_s(tag: str, *params: int) -> int:
    """Binomial closed forms for s-numbers of the families."""
    if tag == "lemma1":
        n1, n2 = params
        if n1 < 0 or n2 <= 0:
            raise ValueError("lemma1 needs n1 >= 0 and n2 > 0")
        n = n1 + n2
        return sum((-1) ** j * comb(n, j) for j in range(n1 + 1)) + n2
    if tag == "snL":
        n1, n2 = params
        _check_parity(n1, n2, "snL")
        n = n1 + n2
        return sum((-1) ** j * comb(n, j) for j in range(1, n1 + 1))
    if tag == "snN":
        n1, n2 = params
        _check_parity(n1, n2, "snN")
        n = n1 + n2 + 1
        return 2 * (-n1 + sum((-1) ** j * comb(n, j) for j in range(1, n1 + 1)))
    if tag == "snmilnor":
        n1, n2 = params
        if n1 < 0 or n2 <= 0:
            raise ValueError("snmilnor needs n1 >= 0 and n2 > 0")
        return n2 if n1 == 0 else -comb(n1 + n2, n1)
    if tag == "cpn":
        (n,) = params
        return n + 1
    raise ValueError(f"unknown closed-form tag {tag!r}")


_CALL = re.compile(r"^\s*(\w+)\s*\((.*)\)\s*$")


def _split_top(text):
    parts, depth, cur = [], 0, ""
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append(cur)
            cur = ""
        else:
            cur += ch
    parts.append(cur)
    return [p.strip() for p in parts]


def parse_family(text: str) -> FamilyPresentation:
    """Build a family from strings such as ``L(2,1)``, ``proj(1;2,0)``,
    ``tildeN(2,3)`` or ``product(cpn(1),cpn(2))``."""
    match = _CALL.match(text)
    if not match:
        raise ValueError(f"cannot parse family {text!r}")
    tag, inner = match.group(1), match.group(2)
    try:
        if tag == "product":
            args = _split_top(inner)
            if len(args) < 2:
                raise ValueError("product needs at least two factors")
            out = parse_family(args[0])
            for a in args[1:]:
                out = product(out, parse_family(a))
            return out
        if tag == "proj":
            head, _, degs = inner.partition(";")
            return proj_sum_line_bundles(int(head), [int(d) for d in degs.split(",") if d.strip()])
        nums = [int(a) for a in inner.split(",") if a.strip()]
    except ValueError as exc:
        raise ValueError(f"cannot parse family {text!r}: {exc}") from exc
    builders = {"cpn": cpn, "L": L, "tildeL": tildeL, "tildeN": tildeN}
    if tag not in builders:
        raise ValueError(f"unknown family tag {tag!r}")
    return builders[tag](*nums)


def family_instances(max_dim: int, include_products: bool = True):
    """Every family instance of complex dimension at most ``max_dim``."""
    out = [cpn(n) for n in range(1, max_dim + 1)]
    for total in range(2, max_dim + 1):
        for n1 in range(1, total):
            out.append(L(n1, total - n1))
    for total in range(2, max_dim + 1):
        for n1 in range(1, total):
            n2 = total - n1
            if n2 <= 2:
                for d in (-1, 2):
                    out.append(proj_sum_line_bundles(n1, (d,) + (0,) * (n2 - 1)))
    for n1 in range(2, max_dim + 1, 2):
        for n2 in range(1, max_dim + 1 - n1, 2):
            out.append(tildeL(n1, n2))
            if 1 + n1 + n2 <= max_dim:
                out.append(tildeN(n1, n2))
    if include_products:
        small = [cpn(1), cpn(2), L(1, 1)]
        for a in small:
            for b in small:
                if a.dim + b.dim <= max_dim:
                    out.append(product(a, b))
        if max_dim >= 5:
            out.append(product(tildeL(2, 1), cpn(2)))
    return out
