"""Dense coefficient-array helpers for polynomials over F_p.

Arrays are int64, lowest degree first, entries in [0, p), with no trailing
zeros; the zero polynomial is the empty array.  These are the shared
primitives under :class:`Polynomial` and the split-fraction engine.
"""

import numpy as np

EMPTY = np.zeros(0, dtype=np.int64)


def trim(a):
    nz = np.flatnonzero(a)
    if nz.size == 0:
        return EMPTY
    return a[: nz[-1] + 1]


def from_seq(seq, p):
    return trim(np.asarray(seq, dtype=np.int64) % p)


def add(a, b, p):
    if a.size < b.size:
        a, b = b, a
    out = a.copy()
    out[: b.size] += b
    out %= p
    return trim(out)


def sub(a, b, p):
    n = max(a.size, b.size)
    out = np.zeros(n, dtype=np.int64)
    out[: a.size] += a
    out[: b.size] -= b
    out %= p
    return trim(out)


def scale(a, c, p):
    c %= p
    if c == 0 or a.size == 0:
        return EMPTY
    return (a * c) % p


def mul(a, b, p):
    if a.size == 0 or b.size == 0:
        return EMPTY
    if a.size == 1:
        return scale(b, int(a[0]), p)
    if b.size == 1:
        return scale(a, int(b[0]), p)
    return trim(np.convolve(a, b) % p)


def shift(a, k):
    """Multiply by x^k (k >= 0)."""
    if a.size == 0 or k == 0:
        return a
    return np.concatenate((np.zeros(k, dtype=np.int64), a))


def power(a, k, p):
    result = np.ones(1, dtype=np.int64)
    base = a
    while k:
        if k & 1:
            result = mul(result, base, p)
        k >>= 1
        if k:
            base = mul(base, base, p)
    return result


def divmod_(a, b, p):
    if b.size == 0:
        raise ZeroDivisionError("polynomial division by zero")
    db = b.size - 1
    if a.size - 1 < db:
        return EMPTY, a
    inv = pow(int(b[-1]), -1, p)
    r = a.copy()
    q = np.zeros(a.size - db, dtype=np.int64)
    for k in range(a.size - 1 - db, -1, -1):
        c = (int(r[k + db]) * inv) % p
        if c:
            q[k] = c
            r[k : k + db + 1] = (r[k : k + db + 1] - c * b) % p
    return trim(q), trim(r[:db])


def monic(a, p):
    if a.size == 0:
        return a
    inv = pow(int(a[-1]), -1, p)
    return (a * inv) % p


def gcd(a, b, p):
    while b.size:
        a, b = b, divmod_(a, b, p)[1]
    return monic(a, p)


def evaluate(a, c, p):
    acc = 0
    for coef in a[::-1]:
        acc = (acc * c + int(coef)) % p
    return acc


def synthetic_div(a, c, p):
    """Divide by (x - c); returns (quotient, remainder value)."""
    n = a.size
    if n == 0:
        return EMPTY, 0
    q = np.zeros(n - 1, dtype=np.int64)
    acc = 0
    for k in range(n - 1, 0, -1):
        acc = (acc * c + int(a[k])) % p
        q[k - 1] = acc
    rem = (acc * c + int(a[0])) % p
    return q, rem


def root_multiplicity(a, c, p, limit=None):
    """Strip factors (x - c) from a; returns (cofactor, multiplicity)."""
    m = 0
    while a.size and (limit is None or m < limit):
        q, rem = synthetic_div(a, c, p)
        if rem:
            break
        a, m = q, m + 1
    return a, m


def taylor_shift(a, c, p):
    """Coefficients of a(t + c) in t."""
    c %= p
    if c == 0 or a.size <= 1:
        return a
    out = np.zeros(a.size, dtype=np.int64)
    n = 0
    for coef in a[::-1]:
        # out <- out * (t + c) + coef
        if n:
            out[1 : n + 1] = out[:n].copy()
            out[0] = 0
            out[:n] = (out[:n] + c * out[1 : n + 1]) % p
        out[0] = (out[0] + int(coef)) % p
        n += 1
    return trim(out)


def linear_power(c, k, p):
    """(x - c)^k."""
    return power(np.array([(-c) % p, 1], dtype=np.int64), k, p)


def series_inverse(a, prec, p):
    """Power-series inverse of a (a[0] != 0) modulo t^prec."""
    if a.size == 0 or a[0] == 0:
        raise ZeroDivisionError("series with zero constant term is not invertible")
    out = np.zeros(prec, dtype=np.int64)
    inv0 = pow(int(a[0]), -1, p)
    for k in range(prec):
        acc = 1 if k == 0 else 0
        upper = min(k, a.size - 1)
        if upper >= 1:
            acc -= int(np.dot(a[1 : upper + 1], out[k - 1 :: -1][:upper]) % p)
        out[k] = (acc * inv0) % p
    return out


def frobenius_split(a, p):
    """Write a = sum_i x^i A_i(x^p); returns [A_0, ..., A_{p-1}]."""
    return [trim(a[i::p].copy()) for i in range(p)]


def frobenius_compose(a, p):
    """a(x^p) as a coefficient array."""
    if a.size == 0:
        return a
    out = np.zeros((a.size - 1) * p + 1, dtype=np.int64)
    out[::p] = a
    return out
