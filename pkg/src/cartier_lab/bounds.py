"""Closed-form bounds on dim ker V_Y^n for Artin-Schreier covers.

Everything is exact integer arithmetic; floors of rationals are taken with
integer floor division on a common denominator, never with floats.
"""

from dataclasses import dataclass, field
from math import gcd

from .ascurve import as_datum, g_minus_s as _g_minus_s
from .errors import BoundViolation, InputError
from .exactalg import check_prime


@dataclass(frozen=True)
class SigmaParams:
    p: int
    d: int
    i: int
    n: int

    def __post_init__(self):
        check_prime(self.p)
        if self.d < 1 or gcd(self.d, self.p) != 1:
            raise InputError(f"d={self.d} must be positive and coprime to p={self.p}")
        if not 0 <= self.i <= self.p - 1:
            raise InputError(f"i={self.i} must lie in [0, p-1]")
        if self.n < 1:
            raise InputError("n must be >= 1")


def _ceil_div(a, b):
    return -(-a // b)


def sigma_p(params):
    """Number of 0 < l <= ceil(i d / p), l != 1 mod p^n, whose first n p-adic
    digits of (1 - l)/d sum to at most p - 1 - i."""
    p, d, i, n = params.p, params.d, params.i, params.n
    pn = p**n
    d_inv = pow(d, -1, pn)
    limit = p - 1 - i
    count = 0
    for l in range(1, _ceil_div(i * d, p) + 1):
        if (l - 1) % pn == 0:
            continue
        v = ((1 - l) * d_inv) % pn
        s = 0
        while v and s <= limit:
            s += v % p
            v //= p
        if s <= limit:
            count += 1
    return count


def upper_bound(p, data, a_X_n, n):
    """p a_X^n + sum_Q sum_{i=1}^{p-1} floor(i d/p) - floor(i d/p^(n+1)) - sigma_p(d, i, n)."""
    data = as_datum(p, data)
    if a_X_n < 0 or n < 1:
        raise InputError("need a_X^n >= 0 and n >= 1")
    total = p * a_X_n
    for d in data.d_list:
        for i in range(1, p):
            total += i * d // p - i * d // p ** (n + 1) - sigma_p(SigmaParams(p, d, i, n))
    return total


def lower_bound_j(p, data, n, j):
    """sum_Q sum_{i=j}^{p-1} floor(i d/p) - floor(i d/p - (1 - 1/p^n) j d/p)."""
    data = as_datum(p, data)
    pn = p**n
    total = 0
    for d in data.d_list:
        for i in range(j, p):
            # i d/p - (p^n - 1) j d / p^(n+1), over the common denominator p^(n+1)
            inner = i * d * pn - (pn - 1) * j * d
            total += i * d // p - inner // (pn * p)
    return total


def lower_bound_closed(p, data, n):
    """Best lower bound over all 0 <= j <= p-1."""
    return max(lower_bound_j(p, data, n, j) for j in range(p))


def lower_bound_combined(p, data, n, g_minus_s):
    """L(1) = L_closed(1); L(n) = max(L_closed(n), min(g - s, L(n-1) + 1))."""
    current = lower_bound_closed(p, data, 1)
    for k in range(2, n + 1):
        current = max(lower_bound_closed(p, data, k), min(g_minus_s, current + 1))
    return current


def cor_p2_value(data, n):
    """Exact a^n for p = 2 over an ordinary base: sum (d-1)/2 - floor(d/2^(n+1))."""
    data = as_datum(2, data)
    return sum((d - 1) // 2 - d // 2 ** (n + 1) for d in data.d_list)


def classical_upper_n1(p, data, a_X=0):
    """The n = 1 upper bound in the form p a_X + sum floor(i d/p) - (p - i) floor(d/p^2)."""
    data = as_datum(p, data)
    return p * a_X + sum(i * d // p - (p - i) * (d // p**2) for d in data.d_list for i in range(1, p))


def compare_n1_forms(primes, d_max):
    """List (p, d, classical, upper_bound(n=1)) wherever the two n = 1 upper bounds differ."""
    out = []
    for p in primes:
        for d in range(1, d_max + 1):
            if d % p == 0:
                continue
            classical = classical_upper_n1(p, [d])
            ub = upper_bound(p, [d], 0, 1)
            if classical != ub:
                out.append((p, d, classical, ub))
    return out


@dataclass(frozen=True)
class BoundsRow:
    n: int
    L_closed: int
    L_combined: int
    U_closed: int
    U_capped: int
    a_exact: object = None


@dataclass(frozen=True)
class BoundsTable:
    p: int
    d_list: tuple
    a_X_profile: tuple
    g_minus_s: int
    rows: tuple = field(default_factory=tuple)

    def column(self, name):
        return [getattr(r, name) for r in self.rows]


def bounds_table(p, data, a_X_profile=None, n_max=10, attach_exact=None, g_X=0, s_X=0):
    """Per-n bounds for one ramification datum.

    ``attach_exact`` may be a sequence of exact kernel dimensions a^1, a^2, ...
    (or a KernelProfile); each must lie in [L_combined, U_capped] or
    BoundViolation is raised.
    """
    data = as_datum(p, data)
    if n_max < 0:
        raise InputError("n_max must be >= 0")
    a_X = tuple(a_X_profile) if a_X_profile is not None else (0,) * n_max
    if len(a_X) < n_max:
        raise InputError(f"a_X profile has {len(a_X)} entries, need {n_max}")
    gms = _g_minus_s(p, data, g_X, s_X)
    exact = None
    if attach_exact is not None:
        exact = tuple(getattr(attach_exact, "a", attach_exact))
    rows = []
    combined = None
    for n in range(1, n_max + 1):
        l_closed = lower_bound_closed(p, data, n)
        combined = l_closed if combined is None else max(l_closed, min(gms, combined + 1))
        u_closed = upper_bound(p, data, a_X[n - 1], n)
        u_capped = min(u_closed, gms)
        a_n = exact[n - 1] if exact is not None and n <= len(exact) else None
        if a_n is not None and not combined <= a_n <= u_capped:
            raise BoundViolation(
                f"p={p}, d={list(data.d_list)}, n={n}: exact a^n={a_n} outside "
                f"[L={combined}, U={u_capped}]"
            )
        rows.append(BoundsRow(n, l_closed, combined, u_closed, u_capped, a_n))
    return BoundsTable(p, data.d_list, a_X[:n_max], gms, tuple(rows))
