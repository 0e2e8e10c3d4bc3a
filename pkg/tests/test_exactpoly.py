import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from toricbord.exactpoly import (
    ArityError,
    PresentationError,
    QuotientPresentation,
    SparsePoly,
    elementary_symmetric,
)

X = sympy.symbols("x0:3")


def polys(arity=3, max_terms=5, max_exp=3):
    mono = st.tuples(*[st.integers(0, max_exp)] * arity)
    return st.dictionaries(mono, st.integers(-20, 20), max_size=max_terms).map(
        lambda d: SparsePoly(arity, d)
    )


def to_sympy(p):
    return sympy.expand(sum(c * sympy.prod([x**e for x, e in zip(X, m)]) for m, c in p.terms.items()))


@given(polys(), polys())
def test_ring_operations_match_sympy(a, b):
    assert to_sympy(a + b) == sympy.expand(to_sympy(a) + to_sympy(b))
    assert to_sympy(a - b) == sympy.expand(to_sympy(a) - to_sympy(b))
    assert to_sympy(a * b) == sympy.expand(to_sympy(a) * to_sympy(b))


@given(polys(max_terms=3, max_exp=2), st.integers(0, 4))
def test_power_matches_repeated_product(a, k):
    expected = SparsePoly.const(1, 3)
    for _ in range(k):
        expected = expected * a
    assert a**k == expected


def test_zero_coefficients_are_dropped():
    p = SparsePoly(2, [((1, 0), 3), ((1, 0), -3)])
    assert not p and len(p) == 0 and p.degree() == -1


def test_arity_checks():
    with pytest.raises(ArityError):
        SparsePoly.var(0, 2) + SparsePoly.var(0, 3)
    with pytest.raises(ArityError):
        SparsePoly(2, {(1,): 1})
    with pytest.raises(ValueError):
        SparsePoly(1, {(-1,): 1})


def test_views_and_printing():
    u, v = SparsePoly.var(0, 2), SparsePoly.var(1, 2)
    p = u * u * v - 3 * v + 2
    assert p.degree() == 3 and p.degree_in(0) == 2
    assert not p.is_homogeneous()
    assert p.homogeneous_part(1) == v.scalar_mul(-3)
    assert p.truncated(1) == 2 - 3 * v
    assert p.to_str(["u", "v"]) == "u^2*v - 3*v + 2"
    assert p.embed(4, 1).coefficient((0, 2, 1, 0)) == 1


def test_elementary_symmetric_of_variables():
    xs = [SparsePoly.var(i, 3) for i in range(3)]
    e = elementary_symmetric(xs)
    assert to_sympy(e[2]) == sympy.expand(X[0] * X[1] + X[0] * X[2] + X[1] * X[2])
    assert to_sympy(e[3]) == X[0] * X[1] * X[2]
    assert len(elementary_symmetric(xs, 1)) == 2


def _hirzebruch():
    # Z[u, v] / (u^2, v^2 - u v), <u v> = 1
    u, v = SparsePoly.var(0, 2), SparsePoly.var(1, 2)
    return QuotientPresentation(2, ((0, 2),), ((1, 2, u * v),), (1, 1)), u, v


def test_normal_form_and_evaluation():
    pres, u, v = _hirzebruch()
    assert pres.normal_form(v * v) == u * v
    assert pres.normal_form(u * u) == SparsePoly.zero(2)
    assert pres.evaluate_fundamental((u + v) ** 2) == 3
    assert pres.power(v, 2) == u * v


def test_evaluate_requires_top_degree():
    pres, u, v = _hirzebruch()
    with pytest.raises(PresentationError):
        pres.evaluate_fundamental(u)


def test_presentation_validation():
    u, v = SparsePoly.var(0, 2), SparsePoly.var(1, 2)
    with pytest.raises(PresentationError):
        QuotientPresentation(2, (), ((0, 2, v * v),), (1, 1))
    with pytest.raises(PresentationError):
        QuotientPresentation(2, (), ((1, 2, v * v),), (1, 1))
    with pytest.raises(PresentationError):
        QuotientPresentation(2, ((0, 1),), (), (1, 0))
    with pytest.raises(PresentationError):
        QuotientPresentation(2, ((0, 2),), (), (1, 1), fundamental_value=2)


@given(polys(arity=2, max_terms=4, max_exp=4), polys(arity=2, max_terms=4, max_exp=4))
def test_normal_form_is_a_ring_map(a, b):
    pres, _, _ = _hirzebruch()
    lhs = pres.normal_form(a * b)
    rhs = pres.normal_form(pres.normal_form(a) * pres.normal_form(b))
    assert lhs == rhs
    assert pres.normal_form(lhs) == lhs


def test_tensor_multiplies_fundamental_values():
    pres, u, v = _hirzebruch()
    t = pres.tensor(pres)
    assert t.arity == 4 and t.top_degree == 4
    x = [SparsePoly.var(i, 4) for i in range(4)]
    assert t.evaluate_fundamental(x[0] * x[1] * x[2] * x[3]) == 1
    assert t.evaluate_fundamental(x[1] ** 2 * x[3] ** 2) == 1
    assert "<" in t.describe()
