import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from cartier_lab import kernels


@st.composite
def matrices(draw):
    p = draw(st.sampled_from((2, 3, 5, 7, 11)))
    shape = draw(st.tuples(st.integers(1, 12), st.integers(1, 12)))
    return p, draw(arrays(np.int64, shape, elements=st.integers(0, p - 1)))


@pytest.mark.skipif(not kernels.HAVE_NUMBA, reason="numba not installed")
@settings(max_examples=300)
@given(matrices())
def test_backends_agree(case):
    p, m = case
    r1, piv1 = kernels.rref_numpy(m, p)
    r2, piv2 = kernels.rref_numba(m, p)
    assert np.array_equal(r1, r2)
    assert tuple(piv1) == tuple(piv2)


@settings(max_examples=300)
@given(matrices())
def test_kernel_basis_is_kernel(case):
    p, m = case
    basis, free = kernels.kernel_basis(m, p)
    assert basis.shape[0] == m.shape[1] - kernels.rank(m, p)
    assert not ((m @ basis.T) % p).any()
    if basis.size:
        assert np.array_equal(basis[:, list(free)], np.eye(len(free), dtype=np.int64))


def test_power_ranks_nilpotent_and_unipotent():
    j = np.diag(np.ones(4, dtype=np.int64), 1)
    assert kernels.power_ranks(j, 3, 7) == [4, 3, 2, 1, 0, 0, 0]
    assert kernels.power_ranks(np.eye(3, dtype=np.int64), 5, 3) == [3, 3, 3]


def test_backend_env_flag():
    env = dict(os.environ, CARTIER_LAB_BACKEND="numpy")
    out = subprocess.run(
        [sys.executable, "-c", "from cartier_lab import kernels; print(kernels.BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "numpy"
    env["CARTIER_LAB_BACKEND"] = "bogus"
    bad = subprocess.run([sys.executable, "-c", "import cartier_lab.kernels"], env=env, capture_output=True)
    assert bad.returncode != 0
