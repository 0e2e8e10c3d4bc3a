"""Combinatorial quasitoric manifolds: polytope vertices, characteristic matrix, signs.

A manifold is described by a :class:`CharacteristicPair`.  Only vertex data
is stored for the polytope (each vertex is the sorted tuple of the facets
meeting there); both characteristic-number engines need nothing more.

Vertex signs are stored rather than derived from the matrix.  Constructors of
toric families set them all to +1, and the operations here update them:
negating a column flips the sign at every vertex on that facet, reversing the
global orientation flips all of them, and a lattice change of basis
(``refine``) leaves them alone.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field

from toricbord import linalg


@dataclass(frozen=True)
class SimplePolytope:
    n: int
    m: int
    vertices: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(
            self, "vertices", tuple(tuple(sorted(v)) for v in self.vertices)
        )

    def problems(self) -> list[str]:
        out = []
        seen = set()
        used = set()
        for k, v in enumerate(self.vertices):
            if len(v) != self.n or len(set(v)) != self.n:
                out.append(f"vertex {k} does not have {self.n} distinct facets: {v}")
            if any(f < 0 or f >= self.m for f in v):
                out.append(f"vertex {k} uses a facet outside [0, {self.m}): {v}")
            if v in seen:
                out.append(f"vertex {k} repeats facet set {v}")
            seen.add(v)
            used.update(v)
        missing = sorted(set(range(self.m)) - used)
        if missing:
            out.append(f"facets {missing} meet no vertex")
        return out

    def vertex_index(self, facets) -> int:
        return self.vertices.index(tuple(sorted(facets)))


@dataclass(frozen=True)
class CharacteristicPair:
    polytope: SimplePolytope
    lam: tuple[tuple[int, ...], ...]
    signs: tuple[int, ...]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "lam", tuple(tuple(int(x) for x in row) for row in self.lam))
        object.__setattr__(self, "signs", tuple(int(s) for s in self.signs))
        if len(self.lam) != self.polytope.n:
            raise ValueError(f"matrix has {len(self.lam)} rows, expected n={self.polytope.n}")
        if any(len(row) != self.polytope.m for row in self.lam):
            raise ValueError(f"matrix rows must have m={self.polytope.m} entries")
        if len(self.signs) != len(self.polytope.vertices):
            raise ValueError("one sign per vertex is required")
        if any(s not in (1, -1) for s in self.signs):
            raise ValueError("vertex signs must be +1 or -1")

    @property
    def n(self) -> int:
        return self.polytope.n

    @property
    def m(self) -> int:
        return self.polytope.m

    @property
    def vertices(self):
        return self.polytope.vertices

    def column(self, i: int) -> tuple[int, ...]:
        return tuple(row[i] for row in self.lam)

    def vertex_matrix(self, k: int) -> list[list[int]]:
        """Square matrix whose columns are the facet vectors at vertex ``k``."""
        facets = self.vertices[k]
        return [[row[f] for f in facets] for row in self.lam]

    def renamed(self, name: str) -> CharacteristicPair:
        return CharacteristicPair(self.polytope, self.lam, self.signs, name)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "n": self.n,
            "m": self.m,
            "vertices": [list(v) for v in self.vertices],
            "lambda": [list(row) for row in self.lam],
            "signs": list(self.signs),
        }

    @classmethod
    def from_dict(cls, data: dict) -> CharacteristicPair:
        try:
            n, m = int(data["n"]), int(data["m"])
            polytope = SimplePolytope(n, m, tuple(tuple(v) for v in data["vertices"]))
            return cls(polytope, tuple(tuple(r) for r in data["lambda"]),
                       tuple(data["signs"]), str(data.get("name", "")))
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed manifold descriptor: {exc}") from exc

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> CharacteristicPair:
        return cls.from_dict(json.loads(text))


@dataclass(frozen=True)
class Violation:
    kind: str
    vertex: int | None
    detail: str


def validate(M: CharacteristicPair) -> list[Violation]:
    """All invariant violations of ``M``; an empty list means the pair is valid."""
    out = [Violation("polytope", None, msg) for msg in M.polytope.problems()]
    for k, v in enumerate(M.vertices):
        if len(set(v)) != M.n or any(f < 0 or f >= M.m for f in v):
            continue
        d = linalg.det(M.vertex_matrix(k))
        if d not in (1, -1):
            out.append(Violation("determinant", k, f"det at vertex {v} is {d}"))
    return out


def is_valid(M: CharacteristicPair) -> bool:
    return not validate(M)


def su_check(M: CharacteristicPair) -> list[int] | None:
    """An integer functional taking the value 1 on every column, if one exists."""
    phi = linalg.solve_left([list(r) for r in M.lam], [1] * M.m)
    return phi


def conjugate_facet(M: CharacteristicPair, i: int) -> CharacteristicPair:
    if not 0 <= i < M.m:
        raise IndexError(f"facet {i} out of range for m={M.m}")
    lam = tuple(tuple(-x if j == i else x for j, x in enumerate(row)) for row in M.lam)
    signs = tuple(-s if i in v else s for s, v in zip(M.signs, M.vertices))
    return CharacteristicPair(M.polytope, lam, signs, f"{M.name}[conj {i}]")


def reverse_orientation(M: CharacteristicPair) -> CharacteristicPair:
    name = M.name[1:] if M.name.startswith("-") else f"-{M.name}"
    return CharacteristicPair(M.polytope, M.lam, tuple(-s for s in M.signs), name)


def left_multiply(M: CharacteristicPair, g) -> CharacteristicPair:
    """Change of lattice basis: replace the matrix by ``g @ lam`` (``g`` in GL(n, Z))."""
    if linalg.det(g) not in (1, -1):
        raise ValueError("basis change must be unimodular")
    lam = linalg.matmul(g, [list(r) for r in M.lam])
    return CharacteristicPair(M.polytope, tuple(map(tuple, lam)), M.signs, M.name)


def permute_facets(M: CharacteristicPair, perm) -> CharacteristicPair:
    """Relabel facets so that new facet ``j`` is old facet ``perm[j]``."""
    if sorted(perm) != list(range(M.m)):
        raise ValueError("not a permutation of the facets")
    new_of_old = {old: new for new, old in enumerate(perm)}
    lam = tuple(tuple(row[old] for old in perm) for row in M.lam)
    vertices = tuple(tuple(sorted(new_of_old[f] for f in v)) for v in M.vertices)
    return CharacteristicPair(SimplePolytope(M.n, M.m, vertices), lam, M.signs, M.name)


def refine(M: CharacteristicPair, k: int) -> tuple[CharacteristicPair, tuple[int, ...]]:
    """Bring the matrix to the form ``(I | L*)`` at vertex ``k``.

    The facets at ``k`` become facets ``0..n-1`` (in increasing old order) and
    the matrix is multiplied on the left by the inverse of the vertex
    submatrix.  Returns the new pair and ``perm`` with ``perm[new] = old``.
    """
    facets = M.vertices[k]
    g = linalg.unimodular_inverse(M.vertex_matrix(k))
    perm = tuple(facets) + tuple(f for f in range(M.m) if f not in facets)
    return permute_facets(left_multiply(M, g), perm), perm


def sphere_product(n: int) -> CharacteristicPair:
    """``S = (S^2)^n`` over the cube with matrix ``(I | I)``; null-bordant.

    Facet ``i`` and facet ``n + i`` both carry ``e_i``.  Vertices are listed in
    lexicographic order of the choice vector ``s`` (0 picks facet ``i``, 1
    picks ``n + i``) and carry sign ``(-1)^{sum s}``.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    lam = tuple(tuple(1 if j % n == i else 0 for j in range(2 * n)) for i in range(n))
    vertices, signs = [], []
    for s in itertools.product((0, 1), repeat=n):
        vertices.append(tuple(i + n * si for i, si in enumerate(s)))
        signs.append(-1 if sum(s) % 2 else 1)
    return CharacteristicPair(SimplePolytope(n, 2 * n, tuple(vertices)), lam,
                              tuple(signs), f"S^{n}" if n > 1 else "S")


def _glue(M, k, fv, N, l, fw, name):
    """Equivariant connected sum at vertices with matching facet vectors.

    ``fv`` and ``fw`` list the facets at the two vertices in matching order.
    The new facet order is: facets of M away from the vertex, merged facets,
    facets of N away from the vertex.  Returns the pair and both facet maps.
    """
    if M.signs[k] != -N.signs[l]:
        raise ValueError("gluing needs fixed points of opposite sign")
    if set(fv) != set(M.vertices[k]) or set(fw) != set(N.vertices[l]):
        raise ValueError("facet lists do not match the chosen vertices")
    for a, b in zip(fv, fw):
        if M.column(a) != N.column(b):
            raise ValueError("facet vectors at the glued vertices differ")
    m_rest = [f for f in range(M.m) if f not in fv]
    n_rest = [f for f in range(N.m) if f not in fw]
    map_m, map_n = {}, {}
    for idx, f in enumerate(m_rest):
        map_m[f] = idx
    base = len(m_rest)
    for t, (a, b) in enumerate(zip(fv, fw)):
        map_m[a] = map_n[b] = base + t
    base += len(fv)
    for idx, f in enumerate(n_rest):
        map_n[f] = base + idx
    cols = [M.column(f) for f in m_rest] + [M.column(a) for a in fv] + [N.column(f) for f in n_rest]
    lam = tuple(tuple(c[r] for c in cols) for r in range(M.n))
    vertices, signs = [], []
    for j, v in enumerate(M.vertices):
        if j != k:
            vertices.append(tuple(sorted(map_m[f] for f in v)))
            signs.append(M.signs[j])
    for j, v in enumerate(N.vertices):
        if j != l:
            vertices.append(tuple(sorted(map_n[f] for f in v)))
            signs.append(N.signs[j])
    pair = CharacteristicPair(SimplePolytope(M.n, len(cols), tuple(vertices)), lam,
                              tuple(signs), name)
    return pair, map_m, map_n


def _bits(s):
    return "".join(map(str, s))


def connected_sum(M: CharacteristicPair, k: int, N: CharacteristicPair, l: int) -> CharacteristicPair:
    """Connected sum at vertices ``k`` of ``M`` and ``l`` of ``N``; represents ``[M] + [N]``.

    If the fixed points have equal signs the null-bordant ``S = (S^2)^n`` is
    inserted between the summands.  The cube vertices used are the
    lexicographically first one of the required sign and the one of that sign
    farthest from it; the choice is recorded in the result's name.
    """
    if M.n != N.n:
        raise ValueError(f"dimension mismatch: {M.n} vs {N.n}")
    n = M.n
    if n < 2:
        raise ValueError("connected sum needs n >= 2")
    Mr, _ = refine(M, k)
    Nr, _ = refine(N, l)
    ident = list(range(n))
    if Mr.signs[k] == -Nr.signs[l]:
        return _glue(Mr, k, ident, Nr, l, ident, f"{M.name}#{N.name}")[0]

    S = sphere_product(n)
    choices = list(itertools.product((0, 1), repeat=n))
    target = -Mr.signs[k]
    c1 = next(j for j, s in enumerate(choices) if S.signs[j] == target)
    c2 = max(
        (j for j, s in enumerate(choices) if S.signs[j] == target and j != c1),
        key=lambda j: (sum(a != b for a, b in zip(choices[j], choices[c1])), -j),
    )
    s1, s2 = choices[c1], choices[c2]
    fw1 = [i + n * s1[i] for i in range(n)]
    MS, _, map_s = _glue(Mr, k, ident, S, c1, fw1, "")
    c2_in_ms = (len(Mr.vertices) - 1) + (c2 - (1 if c2 > c1 else 0))
    fv2 = [map_s[i + n * s2[i]] for i in range(n)]
    name = f"{M.name}#S[{_bits(s1)}|{_bits(s2)}]#{N.name}"
    return _glue(MS, c2_in_ms, fv2, Nr, l, ident, name)[0]


def product(M: CharacteristicPair, N: CharacteristicPair) -> CharacteristicPair:
    """Cartesian product: block-diagonal matrix, product polytope, product signs."""
    n, m = M.n + N.n, M.m + N.m
    lam = tuple(tuple(row) + (0,) * N.m for row in M.lam) + tuple(
        (0,) * M.m + tuple(row) for row in N.lam
    )
    vertices, signs = [], []
    for v, s in zip(M.vertices, M.signs):
        for w, t in zip(N.vertices, N.signs):
            vertices.append(tuple(v) + tuple(f + M.m for f in w))
            signs.append(s * t)
    return CharacteristicPair(SimplePolytope(n, m, tuple(vertices)), lam, tuple(signs),
                              f"{M.name}x{N.name}")
