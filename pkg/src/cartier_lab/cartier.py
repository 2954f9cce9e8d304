"""The Cartier operator on P^1 and on Artin-Schreier covers, and kernel profiles.

Over the prime field the p^-1-semilinear Cartier operator is honestly linear
(the p-th root of an element of F_p is itself), so the matrix of V_Y^n is the
plain n-th power of the matrix of V_Y.  Extension fields would need twisted
products M * sigma^-1(M) * ... and are not supported.
"""

from dataclasses import dataclass
from itertools import combinations_with_replacement
from math import comb

import numpy as np

from . import kernels
from .errors import ImageOutsideSpan, InternalAssertion
from .exactalg import RationalFunction, SplitFraction, p_power_decompose
from .regdiff import YDifferential, regular_basis, split_coords_to_vector


@dataclass(frozen=True)
class XDifferential:
    """h(x) dx on the projective line."""

    h: RationalFunction

    @property
    def p(self):
        return self.h.p

    def __add__(self, other):
        return XDifferential(self.h + other.h)

    def __sub__(self, other):
        return XDifferential(self.h - other.h)

    def is_zero(self):
        return self.h.is_zero()

    def __str__(self):
        return f"({self.h}) dx"


def _as_xdiff(omega):
    return omega if isinstance(omega, XDifferential) else XDifferential(omega)


def cartier_X(omega):
    """V(h dx) = h_{p-1} dx where h = sum_i h_i^p x^i.

    On a local coordinate this is sum a_i t^(i-1) dt -> sum a_(pj) t^(j-1) dt.
    """
    omega = _as_xdiff(omega)
    return XDifferential(p_power_decompose(omega.h)[-1])


def cartier_X_power(omega, n):
    omega = _as_xdiff(omega)
    for _ in range(n):
        omega = cartier_X(omega)
    return omega


def binom_mod(l, m, p):
    return comb(l, m) % p if 0 <= m <= l else 0


def w_op(l, m, f, omega):
    """W_{l,m}(omega) = V(binom(l, m) (-f)^(l-m) omega)."""
    omega = _as_xdiff(omega)
    p = omega.p
    if not 0 <= m <= l <= p - 1:
        raise ValueError("need 0 <= m <= l <= p-1")
    c = binom_mod(l, m, p)
    if c == 0 or omega.is_zero():
        return XDifferential(RationalFunction.zero(p))
    return cartier_X(XDifferential((-f) ** (l - m) * omega.h * c))


def _cover_f(cover_or_f):
    return cover_or_f if isinstance(cover_or_f, RationalFunction) else cover_or_f.f


def cartier_Y(cover, omega):
    """V_Y(sum_i omega_i y^i) = sum_j (sum_{i >= j} W_{i,j}(omega_i)) y^j."""
    f = _cover_f(cover)
    p = omega.p
    out = []
    for j in range(p):
        acc = RationalFunction.zero(p)
        for i in range(j, p):
            if not omega.components[i].is_zero():
                acc = acc + w_op(i, j, f, omega.components[i]).h
        out.append(acc)
    return YDifferential(p, out)


def cartier_Y_power(cover, omega, n):
    for _ in range(n):
        omega = cartier_Y(cover, omega)
    return omega


def _w_chain(f, chain, omega_h):
    """W_{j1,j}(W_{j2,j1}(...W_{i,j_{n-1}}(omega)...)) for chain = (j, j1, ..., i)."""
    current = XDifferential(omega_h)
    for k in range(len(chain) - 1, 0, -1):
        current = w_op(chain[k], chain[k - 1], f, current)
        if current.is_zero():
            break
    return current.h


def cartier_Y_nfold(cover, omega, n):
    """V_Y^n by the closed n-fold expansion over chains j <= j_1 <= ... <= j_n <= p-1."""
    f = _cover_f(cover)
    p = omega.p
    out = []
    for j in range(p):
        acc = RationalFunction.zero(p)
        for mids in combinations_with_replacement(range(j, p), n):
            chain = (j,) + mids
            src = omega.components[chain[-1]]
            if not src.is_zero():
                acc = acc + _w_chain(f, chain, src)
        out.append(acc)
    return YDifferential(p, out)


def verify_kernel_relations(cover, omega, n):
    """Check V_Y^n(omega) = 0 through the component identities.

    V^n(omega_{p-1}) = 0, and for j < p-1
    V^n(omega_j) = -sum_{i > j} sum_{j <= j_1 <= ... <= j_{n-1} <= i} W_{j_1,j}(...W_{i,j_{n-1}}(omega_i)...).
    """
    f = _cover_f(cover)
    p = omega.p
    comps = omega.components
    if not cartier_X_power(comps[p - 1], n).is_zero():
        return False
    for j in range(p - 1):
        lhs = cartier_X_power(comps[j], n).h
        rhs = RationalFunction.zero(p)
        for i in range(j + 1, p):
            if comps[i].is_zero():
                continue
            for mids in combinations_with_replacement(range(j, i + 1), n - 1):
                rhs = rhs + _w_chain(f, (j,) + mids + (i,), comps[i])
        if lhs != -rhs:
            return False
    return True


# -- matrix of V_Y on a regular basis ------------------------------------------


class _SplitEngine:
    """V_Y on components held as SplitFractions, with (-f)^k precomputed."""

    def __init__(self, cover):
        p = cover.p
        self.p = p
        neg_f = -cover.split_f()
        self.neg_f_powers = [SplitFraction(p, np.ones(1, dtype=np.int64))]
        for _ in range(1, p):
            self.neg_f_powers.append(self.neg_f_powers[-1] * neg_f)
        self.binom = [[binom_mod(l, m, p) for m in range(p)] for l in range(p)]

    def apply(self, comps):
        p = self.p
        out = [SplitFraction.zero(p) for _ in range(p)]
        for i, omega_i in enumerate(comps):
            if omega_i.is_zero():
                continue
            for j in range(i + 1):
                c = self.binom[i][j]
                if c == 0:
                    continue
                term = (self.neg_f_powers[i - j] * omega_i).cartier()
                if not term.is_zero():
                    out[j] = out[j] + term * c
        return out


@dataclass(frozen=True)
class CartierMatrix:
    """Matrix of V_Y on ``basis``; column k holds the coordinates of V_Y(basis[k])."""

    entries: np.ndarray
    basis: object

    @property
    def p(self):
        return self.basis.cover.p

    @property
    def size(self):
        return self.entries.shape[0]


def image_vector(basis, comps):
    """Atom-coordinate vector of a differential given by SplitFraction components."""
    vec = np.zeros(len(basis.atoms), dtype=np.int64)
    for b, comp in enumerate(comps):
        if comp.is_zero():
            continue
        poly, parts = comp.decompose()
        contrib, missing = split_coords_to_vector(poly, parts, b, basis.index, len(basis.atoms))
        if missing:
            raise ImageOutsideSpan(f"image uses atoms outside the candidate space: {missing[:3]}")
        for k, c in contrib.items():
            vec[k] = c
    return vec


def build_matrix(basis):
    engine = _SplitEngine(basis.cover)
    g = len(basis)
    entries = np.zeros((g, g), dtype=np.int64)
    for k in range(g):
        image = engine.apply(basis.split_element(k))
        coeffs = basis.solve(image_vector(basis, image))
        if coeffs is None:
            raise ImageOutsideSpan(f"V_Y(basis[{k}]) is not in the span of the regular basis")
        entries[:, k] = coeffs
    return CartierMatrix(entries, basis)


@dataclass(frozen=True)
class KernelProfile:
    """a[n-1] = dim ker V^n for n = 1..len(a)."""

    a: tuple
    stabilized_value: int
    stabilized_at: int


def kernel_profile(matrix, n_max):
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    m = matrix.entries if isinstance(matrix, CartierMatrix) else np.asarray(matrix)
    p = matrix.p if isinstance(matrix, CartierMatrix) else None
    if p is None:
        raise TypeError("kernel_profile needs a CartierMatrix (or use profile_from_array)")
    return profile_from_array(m, p, n_max)


def profile_from_array(m, p, n_max):
    g = m.shape[0]
    if g == 0:
        return KernelProfile(tuple([0] * n_max), 0, 1)
    ranks = kernels.power_ranks(m, p, max(n_max, g))
    a = [g - r for r in ranks]
    stable = a[g - 1]
    at = next(n for n in range(1, len(a) + 1) if a[n - 1] == stable)
    if any(x > y for x, y in zip(a, a[1:])):
        raise InternalAssertion("kernel dimensions of powers must be nondecreasing")
    return KernelProfile(tuple(a[:n_max]), stable, at)


def cover_profile(cover, n_max=None):
    """Regular basis, Cartier matrix and kernel profile of a cover in one go.

    The stable kernel dimension is checked against g - s.
    """
    basis = regular_basis(cover)
    matrix = build_matrix(basis)
    n_max = n_max or max(cover.genus, 1)
    profile = kernel_profile(matrix, n_max)
    if profile.stabilized_value != cover.g_minus_s:
        raise InternalAssertion(
            f"stable kernel dimension {profile.stabilized_value} != g - s = {cover.g_minus_s} for {cover}"
        )
    return basis, matrix, profile
