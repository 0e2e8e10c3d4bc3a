"""The ten acceptance criteria, one test each.

Every test prints a single ``PASS``/``FAIL`` line (visible with ``-s`` or in
the captured output of ``-v`` runs) and then asserts.  Runtime budgets are
checked where a criterion states one.
"""
import itertools
import random
import time


from toricbord import bordism, engines, families, numtheory, sweeps, wallring
from toricbord.quasitoric import connected_sum, reverse_orientation, su_check


def report(capsys, label, ok, detail=""):
    with capsys.disabled():
        print(f"\n[acceptance] {label}: {'PASS' if ok else 'FAIL'} {detail}".rstrip())
    assert ok, detail


def within(t0, budget):
    return time.perf_counter() - t0 < budget


def test_01_l_family_closed_form(capsys):
    t0 = time.perf_counter()
    res = sweeps.lemma1(10)
    ok = res.ok and within(t0, 10)
    report(capsys, "1 s-number of L(n1,n2), n1+n2<=10", ok,
           f"{res.checked} cases, {time.perf_counter() - t0:.2f}s, failures={res.failures[:3]}")


def test_02_three_term_combination(capsys):
    # the identity needs L(n1-2, n2+2) and a nontrivial L(n1, n2): n1 >= 2, n2 >= 1
    res = sweeps.projcobgen(10)
    spot = sum(c * engines.s_number_localization(families.L(*p).pair)
               for c, p in ((1, (2, 1)), (-2, (1, 2)), (1, (0, 3))))
    ok = res.ok and spot == 6
    report(capsys, "2 three-term L combination, n1>=2, n2>=1, n1+n2<=10", ok,
           f"{res.checked} cases, spot(2,1)={spot}")


def test_03_su_checks(capsys):
    res = sweeps.su_families(12)
    report(capsys, "3 SU functional on tildeL/tildeN, none on cpn/L", res.ok,
           f"{res.checked} cases, failures={res.failures[:3]}")


def test_04_low_dimensional_vanishing(capsys):
    t0 = time.perf_counter()
    res = sweeps.lowdimqt()
    counts = {name: len(engines.chern_monomials(n)) for name, n in (("tildeL(2,1)", 3), ("tildeN(2,1)", 4))}
    ok = res.ok and res.checked == sum(counts.values()) and within(t0, 5)
    report(capsys, "4 all Chern numbers of tildeL(2,1), tildeN(2,1) vanish", ok,
           f"{res.checked} numbers, {time.perf_counter() - t0:.2f}s")


def test_05_spot_values(capsys):
    got = {
        "tildeL(2,1)": engines.s_number_localization(families.tildeL(2, 1).pair),
        "tildeN(2,1)": engines.s_number_localization(families.tildeN(2, 1).pair),
        "tildeN(2,3)": engines.s_number_localization(families.tildeN(2, 3).pair),
        "tildeL(2,3)": engines.s_number_localization(families.tildeL(2, 3).pair),
    }
    n = 6
    want = {"tildeL(2,1)": 0, "tildeN(2,1)": 0, "tildeN(2,3)": n * n - 3 * n - 4, "tildeL(2,3)": 5}
    report(capsys, "5 s-number spot values", got == want, str(got))


def test_06_engine_agreement(capsys):
    t0 = time.perf_counter()
    bad, count = [], 0
    for fam in families.family_instances(8):
        count += 1
        loc = engines.chern_numbers_localization(fam.pair)
        coh = engines.chern_numbers_cohomology(fam)
        if loc != coh or engines.s_number_localization(fam.pair) != engines.s_number_cohomology(fam):
            bad.append(fam.name)
    products = sum(1 for f in families.family_instances(8) if f.name.startswith("product"))
    ok = not bad and products > 0 and within(t0, 60)
    report(capsys, "6 localization and cohomology engines agree, dim<=8", ok,
           f"{count} instances ({products} products), {time.perf_counter() - t0:.2f}s, bad={bad[:3]}")


def test_07_number_theory(capsys):
    t0 = time.perf_counter()
    results = [
        sweeps.lucas(2000),
        sweeps.granville(2000, 3),
        sweeps.granville_bigint_sample(2000),
        sweeps.gcdbinom(256),
        sweeps.gcddif(64),
        sweeps.nmod2(64),
        sweeps.nmodp(64),
    ]
    elapsed = time.perf_counter() - t0
    ok = all(r.ok for r in results) and elapsed < 60
    summary = ", ".join(f"{r.name}:{r.checked}/{len(r.failures)}" for r in results)
    report(capsys, "7 Lucas, Granville, gcd lemmas", ok, f"{summary} ({elapsed:.1f}s)")


def test_08_generator_certificates(capsys):
    bad = []
    for k in range(2, 17):
        c = bordism.find_y_odd(k)
        if c.s_value != numtheory.m_of(2 * k + 1) * numtheory.m_of(2 * k) or not c.su:
            bad.append(("odd", k, c.s_value))
    for k in range(3, 17):
        c = bordism.find_y_even(k)
        if c.s_value != 2 * numtheory.m_of(2 * k) * numtheory.m_of(2 * k - 1) or not c.su:
            bad.append(("even", k, c.s_value))
    spots = {
        "y5": (bordism.find_y_odd(2), "[tildeL(2,3)]", 5),
        "y6": (bordism.find_y_even(3), "[tildeN(2,3)]", 14),
        "y8": (bordism.find_y_even(4), "2[tildeN(2,5)] - [tildeN(4,3)]", 12),
    }
    for key, (cert, text, s) in spots.items():
        if cert.klass.describe() != text or cert.s_value != s:
            bad.append((key, cert.klass.describe(), cert.s_value))
    report(capsys, "8 SU generator certificates, 2<=k<=16", not bad, f"bad={bad[:3]}")


def test_09_connected_sum_additivity(capsys):
    t0 = time.perf_counter()
    M = families.L(1, 2).pair
    base = engines.chern_numbers_localization(M)
    double = engines.chern_numbers_localization(connected_sum(M, 0, M, 0))
    zero = engines.chern_numbers_localization(connected_sum(M, 0, reverse_orientation(M), 0))
    y8 = bordism.realize_certificate(bordism.find_y_even(4))
    s8 = engines.s_number_localization(y8)
    ok = (double == {w: 2 * c for w, c in base.items()} and set(zero.values()) == {0}
          and s8 == 12 and su_check(y8) is not None and within(t0, 30))
    report(capsys, "9 connected sums add Chern numbers; realized y8", ok,
           f"s(y8)={s8}, {len(y8.vertices)} vertices, {time.perf_counter() - t0:.2f}s")


def _random_monomial(rng, max_degree):
    gens = [1] + list(range(3, max_degree + 1))
    mono, deg = [], 0
    while True:
        g = rng.choice([x for x in gens if deg + x <= max_degree] or [0])
        if not g or rng.random() < 0.25:
            return tuple(sorted(mono))
        mono.append(g)
        deg += g


def test_10_wall_ring(capsys):
    rng = random.Random(20261015)
    bad = []
    # degree is real: 2 * sum(indices) <= 40
    for _ in range(1000):
        mono = _random_monomial(rng, 20)
        if wallring.boundary(wallring.boundary(wallring.WallElement.monomial(mono))):
            bad.append(("d^2", mono))
    gens = [1, 3, 4, 5, 6, 7, 8, 9, 10]
    peel_checked = 0
    for size in range(1, 5):
        for mono in itertools.combinations_with_replacement(gens, size):
            ref = wallring.boundary_monomial(mono)
            for k in range(size):
                peel_checked += 1
                if wallring.boundary_monomial(mono, k) != ref:
                    bad.append(("peel", mono, k))
    for i in range(2, 21):
        if wallring.boundary(wallring.yidescr_image(i)):
            bad.append(("cycle", i))
    report(capsys, "10 Wall ring boundary", not bad,
           f"1000 random monomials, {peel_checked} peelings, bad={bad[:3]}")
