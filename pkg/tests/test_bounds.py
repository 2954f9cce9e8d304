from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cartier_lab import bounds
from cartier_lab.ascurve import g_minus_s
from cartier_lab.bounds import (
    SigmaParams,
    bounds_table,
    compare_n1_forms,
    cor_p2_value,
    lower_bound_closed,
    lower_bound_combined,
    lower_bound_j,
    sigma_p,
    upper_bound,
)
from cartier_lab.errors import BoundViolation, InputError


def sigma_oracle(p, d, i, n):
    """Count l by long division of (1 - l) by d in Z_p, one digit at a time."""
    d_inv = next(e for e in range(1, p) if (d * e) % p == 1)
    count = 0
    for l in range(1, -(-i * d // p) + 1):
        if (l - 1) % p**n == 0:
            continue
        r, digits = 1 - l, []
        for _ in range(n):
            a = (r * d_inv) % p
            digits.append(a)
            r = (r - a * d) // p
        if sum(digits) <= p - 1 - i:
            count += 1
    return count


def test_sigma_matches_oracle_grid():
    for p in (2, 3, 5, 7):
        for d in range(1, 51):
            if gcd(d, p) != 1:
                continue
            for i in range(p):
                for n in range(1, 5):
                    assert sigma_p(SigmaParams(p, d, i, n)) == sigma_oracle(p, d, i, n), (p, d, i, n)


def test_sigma_examples():
    assert sigma_p(SigmaParams(3, 100, 1, 1)) == 11
    assert sigma_p(SigmaParams(3, 100, 1, 2)) == 7
    for d in range(1, 40, 2):
        for n in range(1, 5):
            assert sigma_p(SigmaParams(2, d, 1, n)) == 0
    for p in (3, 5, 7):
        assert sigma_p(SigmaParams(p, 11 if p != 11 else 12, p - 1, 3)) == 0


def test_sigma_params_validation():
    with pytest.raises(InputError):
        SigmaParams(3, 6, 1, 1)
    with pytest.raises(InputError):
        SigmaParams(5, 2, 5, 1)
    with pytest.raises(InputError):
        SigmaParams(5, 2, 1, 0)
    with pytest.raises(InputError):
        SigmaParams(4, 3, 1, 1)


def test_upper_bound_examples():
    assert upper_bound(3, [100], 0, 1) == 55
    assert upper_bound(3, [100], 0, 2) == 82
    assert upper_bound(3, [100], 0, 5) == 99
    for d in (1, 3, 5, 7, 9, 11, 13, 15):
        for n in range(1, 6):
            assert upper_bound(2, [d], 0, n) == (d - 1) // 2 - d // 2 ** (n + 1)


def test_lower_bound_examples():
    assert lower_bound_closed(3, [100], 1) == 44
    assert lower_bound_j(3, [100], 1, 1) == 44 and lower_bound_j(3, [100], 1, 2) == 44
    assert lower_bound_closed(3, [100], 2) == 59
    assert all(lower_bound_j(p, [d], n, 0) == 0 for p, d, n in [(3, 100, 1), (7, 4, 3), (5, 13, 2)])
    assert lower_bound_combined(3, [100], 5, 99) == 67
    assert lower_bound_combined(3, [100], 10, 99) == 72
    assert lower_bound_combined(7, [4], 1, 9) == lower_bound_closed(7, [4], 1)


def test_cor_p2_examples():
    assert cor_p2_value([3, 3], 1) == 2
    assert all(cor_p2_value([3], n) == 1 for n in range(1, 8))
    assert cor_p2_value([7], 1) == 2 and cor_p2_value([7], 2) == 3


def test_d100_table():
    t = bounds_table(3, [100], n_max=10)
    assert t.column("L_combined") == [44, 59, 64, 66, 67, 68, 69, 70, 71, 72]
    assert t.column("U_capped") == [55, 82, 93, 98, 99, 99, 99, 99, 99, 99]
    assert t.column("U_closed") == t.column("U_capped")
    assert t.g_minus_s == 99


def test_p7_d4_rows():
    t = bounds_table(7, [4], n_max=3)
    assert t.column("L_combined") == [6, 7, 8]
    assert t.column("U_capped") == [9, 9, 9]


def test_sandwich_violation_raises():
    with pytest.raises(BoundViolation):
        bounds_table(7, [4], n_max=2, attach_exact=(5, 8))
    t = bounds_table(7, [4], n_max=3, attach_exact=(6, 8, 9))
    assert t.column("a_exact") == [6, 8, 9]


def test_bounds_table_validation():
    with pytest.raises(InputError):
        bounds_table(7, [7], n_max=2)
    with pytest.raises(InputError):
        bounds_table(3, [2], a_X_profile=(0,), n_max=3)


data_strategy = st.sampled_from((2, 3, 5, 7)).flatmap(
    lambda p: st.tuples(
        st.just(p),
        st.lists(st.integers(1, 40).filter(lambda d: d % p), min_size=1, max_size=3),
    )
)


@given(data_strategy)
def test_table_invariants(case):
    p, ds = case
    t = bounds_table(p, ds, n_max=8)
    L = t.column("L_combined")
    assert all(x <= y for x, y in zip(L, L[1:]))
    for row in t.rows:
        assert row.L_closed <= row.L_combined <= row.U_capped <= t.g_minus_s


@given(data_strategy)
def test_upper_bound_converges(case):
    p, ds = case
    gms = g_minus_s(p, ds)
    values = [upper_bound(p, ds, 0, n) for n in range(1, 31)]
    first = next(k for k, v in enumerate(values) if v == gms)
    assert all(v == gms for v in values[first:])


@given(st.lists(st.integers(0, 20).map(lambda k: 2 * k + 1), min_size=1, max_size=3), st.integers(1, 8))
def test_p2_bounds_coincide(ds, n):
    gms = g_minus_s(2, ds)
    assert cor_p2_value(ds, n) == lower_bound_combined(2, ds, n, gms) == min(upper_bound(2, ds, 0, n), gms)


def test_n1_versus_classical_form():
    diffs = compare_n1_forms((2, 3, 5, 7), 60)
    # the sigma form is never weaker, and strictly sharper somewhere
    assert diffs
    assert all(ub <= bc for _, _, bc, ub in diffs)
    assert all(p != 2 for p, *_ in diffs)


def test_sigma_is_looked_up_at_call_time(monkeypatch):
    monkeypatch.setattr(bounds, "sigma_p", lambda params: 0)
    assert upper_bound(3, [100], 0, 1) != 55
