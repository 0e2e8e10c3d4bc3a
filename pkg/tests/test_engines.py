from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from toricbord import engines, families, quasitoric as qt
from toricbord.quasitoric import CharacteristicPair


def test_chern_monomials_are_partitions():
    counts = [len(engines.chern_monomials(n)) for n in range(1, 11)]
    assert counts == [1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
    for w in engines.chern_monomials(6):
        assert sum((k + 1) * e for k, e in enumerate(w)) == 6


def test_normalize_omega():
    assert engines.normalize_omega([1, 1], 3) == (1, 1, 0)
    assert engines.normalize_omega([0, 0, 1, 0, 0], 3) == (0, 0, 1)
    for bad in ([1, 1, 1], [0, 0, 0, 1], [-1, 2]):
        with pytest.raises(ValueError):
            engines.normalize_omega(bad, 3)


def test_top_chern_class_counts_vertices():
    p = families.product(families.cpn(1), families.cpn(1)).pair
    assert engines.chern_number_localization(p, (0, 1)) == 4
    for fam in (families.cpn(4), families.L(2, 3), families.proj_sum_line_bundles(2, [3, -1])):
        top = (0,) * (fam.dim - 1) + (1,)
        assert engines.chern_number_localization(fam.pair, top) == len(fam.pair.vertices)


def test_projective_space_numbers():
    for n in range(1, 7):
        pair = families.cpn(n).pair
        assert engines.s_number_localization(pair, n) == n + 1
        # c_1^n [CP^n] = (n+1)^n
        assert engines.chern_number_localization(pair, (n,) + (0,) * (n - 1)) == (n + 1) ** n


def test_s_number_dimension_check():
    with pytest.raises(ValueError):
        engines.s_number_localization(families.cpn(3).pair, 2)
    with pytest.raises(ValueError):
        engines.s_number_cohomology(families.cpn(3), 2)


def test_generic_vector_is_independent_of_choice():
    for fam in (families.L(2, 2), families.tildeL(2, 3), families.tildeN(2, 3)):
        first = engines.chern_numbers_localization(fam.pair, skip=0)
        assert engines.chern_numbers_localization(fam.pair, skip=1) == first
        assert engines.chern_numbers_localization(fam.pair, skip=3) == first
        assert engines.s_number_localization(fam.pair, skip=2) == engines.s_number_localization(fam.pair)


def test_inconsistent_signs_are_detected():
    pair = families.tildeN(2, 1).pair
    broken = CharacteristicPair(pair.polytope, pair.lam, (1,) * len(pair.signs), "all-plus")
    with pytest.raises(engines.LocalizationError):
        engines.chern_numbers_localization(broken)


def test_tangent_weights_are_dual_bases():
    pair = families.tildeL(2, 1).pair
    for k, ws in enumerate(engines.tangent_weights(pair)):
        cols = list(zip(*pair.vertex_matrix(k)))
        for i, w in enumerate(ws):
            assert [sum(a * b for a, b in zip(w, c)) for c in cols] == [int(i == j) for j in range(pair.n)]


@pytest.mark.parametrize("fam", families.family_instances(6), ids=lambda f: f.name)
def test_engines_agree(fam):
    assert engines.chern_numbers_localization(fam.pair) == engines.chern_numbers_cohomology(fam)
    assert engines.s_number_localization(fam.pair) == engines.s_number_cohomology(fam)


@given(st.integers(1, 3), st.lists(st.integers(-3, 3), min_size=1, max_size=3))
def test_engines_agree_on_random_projectivisations(n1, degrees):
    fam = families.proj_sum_line_bundles(n1, degrees)
    assert engines.chern_numbers_localization(fam.pair) == engines.chern_numbers_cohomology(fam)


def test_single_number_matches_batch():
    fam = families.tildeN(2, 3)
    batch = engines.chern_numbers_localization(fam.pair)
    for w in list(batch)[:6]:
        assert engines.chern_number_localization(fam.pair, w) == batch[w]
        assert engines.chern_number_cohomology(fam, w) == batch[w]


def test_su_members_have_vanishing_c1_numbers():
    for fam in [families.tildeL(n1, n2) for n1, n2 in ((2, 1), (2, 3), (4, 1), (2, 5), (4, 3), (6, 1))] + [
        families.tildeN(n1, n2) for n1, n2 in ((2, 1), (2, 3), (4, 1), (2, 5), (4, 3), (6, 1))
    ]:
        assert qt.su_check(fam.pair) is not None
        assert not fam.first_chern_class()
        nums = engines.chern_numbers_localization(fam.pair)
        assert all(c == 0 for w, c in nums.items() if w[0] >= 1), fam.name


def test_low_dimensional_su_members_vanish():
    for fam in (families.tildeL(2, 1), families.tildeN(2, 1)):
        assert set(engines.chern_numbers_localization(fam.pair).values()) == {0}


def test_product_numbers_multiply():
    a, b = families.cpn(1), families.cpn(2)
    p = families.product(a, b)
    assert engines.chern_number_localization(p.pair, (0, 0, 1)) == 2 * 3
    # c_1^3 [CP1 x CP2] = C(3,1) c_1[CP1] c_1^2[CP2] = 3 * 2 * 9
    assert engines.chern_number_localization(p.pair, (3, 0, 0)) == comb(3, 1) * 2 * 9
    assert engines.s_number_localization(p.pair) == 0
    q = families.product(families.cpn(2), families.cpn(2))
    assert engines.s_number_localization(q.pair) == 0 == engines.s_number_cohomology(q)
