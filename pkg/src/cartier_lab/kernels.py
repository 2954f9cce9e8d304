"""Dense linear algebra over F_p on int64 arrays.

The row reduction is the hot loop of every rank and kernel computation, so it
exists twice: a numba ``@njit`` kernel and a pure-numpy version.  Which one the
dispatching functions use is chosen once at import time from the environment
variable ``CARTIER_LAB_BACKEND``:

``auto`` (default)
    numba when it can be imported, numpy otherwise.
``numba`` / ``numpy``
    force one backend (``numba`` raises if numba is missing).

Both backends pivot on the first nonzero entry of each column, so they return
bit-identical results.  Entries must lie in ``[0, p)`` and ``n * p**2`` must
fit in an int64.
"""

import os

import numpy as np

try:
    import numba

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a hard dependency in practice
    numba = None
    HAVE_NUMBA = False

_choice = os.environ.get("CARTIER_LAB_BACKEND", "auto").strip().lower()
if _choice not in ("auto", "numba", "numpy"):
    raise ValueError(f"CARTIER_LAB_BACKEND must be auto, numba or numpy, not {_choice!r}")
if _choice == "numba" and not HAVE_NUMBA:
    raise ImportError("CARTIER_LAB_BACKEND=numba but numba is not installed")
BACKEND = "numba" if (_choice != "numpy" and HAVE_NUMBA) else "numpy"


def _as_matrix(a, p):
    m = np.array(a, dtype=np.int64, copy=True)
    if m.ndim != 2:
        raise ValueError("expected a 2-d matrix")
    m %= p
    return m


# --- numpy backend -----------------------------------------------------------


def rref_numpy(a, p):
    """Reduced row echelon form of ``a`` mod ``p``; returns (R, pivot_columns)."""
    m = _as_matrix(a, p)
    rows, cols = m.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(m[r:, c])
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            m[[r, k]] = m[[k, r]]
        inv = pow(int(m[r, c]), -1, p)
        m[r] = (m[r] * inv) % p
        factors = m[:, c].copy()
        factors[r] = 0
        if factors.any():
            m -= np.outer(factors, m[r])
            m %= p
        pivots.append(c)
        r += 1
    return m, np.array(pivots, dtype=np.int64)


# --- numba backend -----------------------------------------------------------

if HAVE_NUMBA:

    @numba.njit(cache=True)
    def _inv_mod(a, p):
        t, new_t = 0, 1
        r, new_r = p, a % p
        while new_r != 0:
            q = r // new_r
            t, new_t = new_t, t - q * new_t
            r, new_r = new_r, r - q * new_r
        return t % p

    @numba.njit(cache=True)
    def _rref_kernel(m, p):
        rows, cols = m.shape
        pivots = np.empty(min(rows, cols), dtype=np.int64)
        r = 0
        for c in range(cols):
            if r == rows:
                break
            k = -1
            for i in range(r, rows):
                if m[i, c] != 0:
                    k = i
                    break
            if k < 0:
                continue
            if k != r:
                for j in range(cols):
                    tmp = m[r, j]
                    m[r, j] = m[k, j]
                    m[k, j] = tmp
            inv = _inv_mod(m[r, c], p)
            for j in range(c, cols):
                m[r, j] = (m[r, j] * inv) % p
            for i in range(rows):
                if i == r:
                    continue
                fac = m[i, c]
                if fac == 0:
                    continue
                for j in range(c, cols):
                    m[i, j] = (m[i, j] - fac * m[r, j]) % p
            pivots[r] = c
            r += 1
        return pivots[:r]

    def rref_numba(a, p):
        m = _as_matrix(a, p)
        pivots = _rref_kernel(m, np.int64(p))
        return m, pivots.copy()

else:  # pragma: no cover

    def rref_numba(a, p):
        raise ImportError("numba is not installed")


_rref_impl = rref_numba if BACKEND == "numba" else rref_numpy


def rref(a, p):
    """Reduced row echelon form mod p with the configured backend."""
    return _rref_impl(a, p)


def rank(a, p):
    m = np.asarray(a)
    if m.size == 0:
        return 0
    return len(rref(m, p)[1])


def kernel_basis(a, p):
    """Right kernel of ``a`` mod ``p`` as (basis rows, free columns).

    Vectors come out in increasing order of their free column, and each has a
    1 in its own free column and 0 in the other free columns.
    """
    m = np.asarray(a, dtype=np.int64)
    cols = m.shape[1]
    if m.shape[0] == 0:
        return np.eye(cols, dtype=np.int64), tuple(range(cols))
    r, pivots = rref(m, p)
    pivot_set = set(int(c) for c in pivots)
    free = [c for c in range(cols) if c not in pivot_set]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for k, f in enumerate(free):
        basis[k, f] = 1
        for i, c in enumerate(pivots):
            basis[k, c] = (-r[i, f]) % p
    return basis, tuple(free)


def nullspace(a, p):
    return kernel_basis(a, p)[0]


def matmul(a, b, p):
    return (np.asarray(a, dtype=np.int64) @ np.asarray(b, dtype=np.int64)) % p


def power_ranks(m, p, n_max):
    """Ranks of m, m^2, ..., m^n_max mod p.

    Stops multiplying once two consecutive ranks agree (the chain of images is
    then stable) and pads with the stable rank.
    """
    m = np.asarray(m, dtype=np.int64) % p
    ranks = []
    power = m
    while len(ranks) < n_max:
        rk = rank(power, p) if power.size else 0
        if ranks and rk == ranks[-1]:
            ranks.extend([rk] * (n_max - len(ranks)))
            break
        ranks.append(rk)
        if len(ranks) < n_max:
            power = matmul(power, m, p)
    return ranks


def warmup():
    """Trigger JIT compilation so later timings exclude it."""
    small = np.array([[1, 2], [3, 4]], dtype=np.int64)
    rref(small, 5)
    if HAVE_NUMBA:
        rref_numba(small, 5)
