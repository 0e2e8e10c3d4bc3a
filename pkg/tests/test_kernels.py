import os
import subprocess
import sys
from math import comb

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from toricbord import kernels, numtheory

BACKENDS = sorted(kernels.available_backends())


@pytest.fixture(params=BACKENDS)
def kern(request):
    return kernels.available_backends()[request.param]


@pytest.mark.skipif(bool(os.environ.get("TORICBORD_PURE_PYTHON")), reason="fallback forced")
def test_compiled_backend_is_built():
    # the package ships a compiled core; a silent fallback would hide a build failure
    assert kernels.BACKEND == "compiled"


def test_environment_variable_forces_fallback():
    env = dict(os.environ, TORICBORD_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", "from toricbord import kernels; print(kernels.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


@given(st.integers(0, 300), st.sampled_from([2, 3, 5, 7, 11]))
def test_lucas_row_matches_bigint(n, p):
    for kern in kernels.available_backends().values():
        assert kern.lucas_row(n, p).tolist() == [comb(n, m) % p for m in range(n + 1)]


@given(st.integers(0, 300), st.sampled_from([2, 3, 5, 7]), st.integers(1, 4))
def test_granville_row_matches_scalar_formula(n, p, q):
    pq = numtheory.PrimePower(p, q)
    expected = [numtheory.granville_mod_pq(n, m, pq) for m in range(n + 1)]
    for kern in kernels.available_backends().values():
        e0, val = kern.granville_row(n, p, q)
        assert list(zip(e0.tolist(), val.tolist())) == expected


def test_backends_agree_on_large_rows():
    backs = kernels.available_backends()
    for n in (1023, 1024, 2000):
        for p in (2, 3, 5, 7):
            rows = [b.lucas_row(n, p) for b in backs.values()]
            assert all(np.array_equal(rows[0], r) for r in rows)
            for q in (1, 2, 3):
                outs = [b.granville_row(n, p, q) for b in backs.values()]
                assert all(np.array_equal(outs[0][0], o[0]) and np.array_equal(outs[0][1], o[1]) for o in outs)


def test_factorial_table(kern):
    tab = kern.factorial_p_table(3, 27)
    for x in range(27):
        assert tab[x] == numtheory.factorial_p(x, numtheory.PrimePower(3, 3))


def test_kernel_argument_checks(kern):
    with pytest.raises(ValueError):
        kern.lucas_row(-1, 3)
    with pytest.raises(ValueError):
        kern.granville_row(5, 3, 0)
    with pytest.raises(ValueError):
        kern.granville_row(5, 7, 20)


def test_edge_rows(kern):
    assert kern.lucas_row(0, 2).tolist() == [1]
    e0, val = kern.granville_row(0, 5, 2)
    assert e0.tolist() == [0] and val.tolist() == [1]
