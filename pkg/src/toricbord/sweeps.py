"""Parameter sweeps that check the lemmas and engines; shared by the CLI and tests.

Each sweep returns a :class:`SweepResult` holding the number of cases
checked and the failing cases (empty means the sweep passed).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from toricbord import engines, kernels, numtheory
from toricbord.families import L, closed_form_s, tildeL, tildeN
from toricbord.quasitoric import su_check

PRIMES = (2, 3, 5, 7)


@dataclass
class SweepResult:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, case, good: bool, detail=None) -> None:
        self.checked += 1
        if not good:
            self.failures.append({"case": case, "detail": detail})

    def to_dict(self) -> dict:
        return {"name": self.name, "checked": self.checked, "failed": len(self.failures),
                "ok": self.ok, "failures": self.failures[:20]}


def lemma1(max_total: int = 10) -> SweepResult:
    """Engine s-numbers of L(n1, n2) against the alternating binomial sum."""
    out = SweepResult("lemma1")
    for total in range(1, max_total + 1):
        for n1 in range(0, total):
            n2 = total - n1
            s = engines.s_number_localization(L(n1, n2).pair)
            ref = closed_form_s("lemma1", n1, n2)
            out.record([n1, n2], s == ref, {"engine": s, "closed_form": ref})
    return out


def projcobgen(max_total: int = 10) -> SweepResult:
    """The three-term combination of L's, on the range where it is an identity."""
    out = SweepResult("projcobgen")
    for total in range(3, max_total + 1):
        for n1 in range(2, total):
            n2 = total - n1
            s = [engines.s_number_localization(L(n1 - j, n2 + j).pair) for j in range(3)]
            val = s[0] - 2 * s[1] + s[2]
            ref = (-1) ** n1 * comb(n1 + n2 + 1, n1)
            out.record([n1, n2], val == ref, {"value": val, "expected": ref})
    return out


def _tilde_params(max_dim, extra):
    for n1 in range(2, max_dim + 1, 2):
        for n2 in range(1, max_dim + 1, 2):
            if n1 + n2 + extra <= max_dim:
                yield n1, n2


def snL(max_dim: int = 11) -> SweepResult:
    out = SweepResult("snL")
    for n1, n2 in _tilde_params(max_dim, 0):
        s = engines.s_number_localization(tildeL(n1, n2).pair)
        ref = closed_form_s("snL", n1, n2)
        out.record([n1, n2], s == ref, {"engine": s, "closed_form": ref})
    return out


def snN(max_dim: int = 12) -> SweepResult:
    out = SweepResult("snN")
    for n1, n2 in _tilde_params(max_dim, 1):
        s = engines.s_number_localization(tildeN(n1, n2).pair)
        ref = closed_form_s("snN", n1, n2)
        out.record([n1, n2], s == ref, {"engine": s, "closed_form": ref})
    return out


def su_families(max_dim: int = 12) -> SweepResult:
    """SU members pass the functional test; the toric families fail it."""
    out = SweepResult("su")
    for n1, n2 in _tilde_params(max_dim, 0):
        out.record(["tildeL", n1, n2], su_check(tildeL(n1, n2).pair) is not None)
    for n1, n2 in _tilde_params(max_dim, 1):
        out.record(["tildeN", n1, n2], su_check(tildeN(n1, n2).pair) is not None)
    for total in range(1, max_dim + 1):
        out.record(["cpn", total], su_check(L(0, total).pair) is None)
        for n1 in range(1, total):
            out.record(["L", n1, total - n1], su_check(L(n1, total - n1).pair) is None)
    return out


def gcdbinom(max_n: int = 256) -> SweepResult:
    out = SweepResult("gcdbinom")
    for n in range(2, max_n + 1):
        g = numtheory.gcd_binomials(n)
        ref = numtheory.gcd_binomials_closed_form(n)
        out.record(n, g == ref, {"gcd": g, "expected": ref})
    return out


def gcddif(max_k: int = 64) -> SweepResult:
    out = SweepResult("gcddif")
    for k in range(2, max_k + 1):
        g = numtheory.gcd_diff_family(k)
        ref = numtheory.m_of(2 * k + 1) * numtheory.m_of(2 * k)
        out.record(k, g == ref, {"gcd": g, "expected": ref})
    return out


def _a_gcd(k):
    return numtheory.gcd_all(numtheory.a_family(k))


def nmod2(max_k: int = 64) -> SweepResult:
    out = SweepResult("nmod2")
    for k in range(3, max_k + 1):
        v = numtheory.valuation(_a_gcd(k), 2)
        ref = 1 if numtheory.prime_power_base(2 * k) == 2 else 0
        out.record(k, v == ref, {"valuation": v, "expected": ref})
    return out


def nmodp(max_k: int = 64) -> SweepResult:
    """Odd-prime part of gcd{a_i}, and the full gcd against m_{2k} m_{2k-1}."""
    out = SweepResult("nmodp")
    for k in range(3, max_k + 1):
        g = _a_gcd(k)
        for p in range(3, 2 * k + 2, 2):
            if not numtheory.is_prime(p):
                continue
            v = numtheory.valuation(g, p)
            ref = 1 if numtheory.prime_power_base(2 * k + 1) == p else 0
            out.record([k, p], v == ref, {"valuation": v, "expected": ref})
        target = numtheory.m_of(2 * k) * numtheory.m_of(2 * k - 1)
        out.record([k, "gcd"], g == target, {"gcd": g, "expected": target})
    return out


def lucas(max_n: int = 2000, primes=PRIMES, backend=None) -> SweepResult:
    """Digit-product kernel against Pascal rows reduced mod p."""
    kern = kernels.available_backends()[backend] if backend else kernels
    out = SweepResult("lucas")
    for p in primes:
        for n, row in numtheory.pascal_rows_mod(max_n, p):
            got = kern.lucas_row(n, p)
            bad = (got != row).nonzero()[0]
            out.record([p, n], not len(bad), None if not len(bad) else {"m": bad[:5].tolist()})
    return out


def _digits(n, p):
    d = 0
    while n:
        n //= p
        d += 1
    return max(d, 1)


def granville(max_n: int = 2000, max_q: int = 3, primes=PRIMES, backend=None) -> SweepResult:
    """Granville's congruence (valuation and unit part) against Pascal rows mod p^K."""
    kern = kernels.available_backends()[backend] if backend else kernels
    out = SweepResult("granville")
    for p in primes:
        headroom = _digits(max_n, p) + max_q
        modulus = p**headroom
        for n, row in numtheory.pascal_rows_mod(max_n, modulus):
            v, unit_top = numtheory.split_p_part(row, p, max_q, headroom)
            for q in range(1, max_q + 1):
                e0, val = kern.granville_row(n, p, q)
                bad = ((e0 != v) | (val != unit_top % p**q)).nonzero()[0]
                out.record([p, q, n], not len(bad), None if not len(bad) else {"m": bad[:5].tolist()})
    return out


def granville_bigint_sample(max_n: int = 2000, stride: int = 37, max_q: int = 3) -> SweepResult:
    """Scalar formula against exact big-int binomials on a deterministic sample."""
    out = SweepResult("granville-bigint")
    for p in PRIMES:
        for q in range(1, max_q + 1):
            pq = numtheory.PrimePower(p, q)
            for n in range(0, max_n + 1, stride):
                for m in range(0, n + 1, max(1, n // 7)):
                    c = comb(n, m)
                    v = numtheory.valuation(c, p)
                    ref = (c // p**v) % pq.modulus
                    got = numtheory.granville_mod_pq(n, m, pq)
                    out.record([p, q, n, m], got == (v, ref), {"got": list(got), "expected": [v, ref]})
    return out


def lowdimqt() -> SweepResult:
    """Every Chern number of the low-dimensional SU members vanishes."""
    out = SweepResult("lowdimqt")
    for fam in (tildeL(2, 1), tildeN(2, 1)):
        for w, c in engines.chern_numbers_localization(fam.pair).items():
            out.record([fam.name, list(w)], c == 0, {"value": c})
    return out


SWEEPS = {
    "lemma1": (lemma1, 10),
    "snL": (snL, 11),
    "snN": (snN, 12),
    "gcdbinom": (gcdbinom, 256),
    "gcddif": (gcddif, 64),
    "nmod2": (nmod2, 64),
    "nmodp": (nmodp, 64),
    "lucas": (lucas, 2000),
    "granville": (granville, 2000),
    "lowdimqt": (lowdimqt, None),
    "projcobgen": (projcobgen, 10),
    "su": (su_families, 12),
}


def run(name: str, bound: int | None = None) -> SweepResult:
    if name not in SWEEPS:
        raise ValueError(f"unknown sweep {name!r}")
    fn, default = SWEEPS[name]
    if default is None:
        return fn()
    return fn(default if bound is None else bound)
