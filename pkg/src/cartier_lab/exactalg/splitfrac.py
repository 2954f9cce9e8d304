"""Rational functions whose denominator is a known product of linear factors.

This is the working representation of the Cartier engine.  Keeping the
denominator factored as prod (x - c)^k avoids polynomial gcds entirely:
cancellation is a synthetic division per pole, and the p-th root needed by the
Cartier operator reduces to rounding each pole order up to a multiple of p.
"""

import numpy as np

from . import dense
from .polynomial import Polynomial
from .rational import RationalFunction, laurent_polar, split_denominator


class SplitFraction:
    """num(x) / prod_c (x - c)^k_c over F_p, with ``poles`` = {c: k_c}."""

    __slots__ = ("p", "num", "poles")

    def __init__(self, p, num, poles=None):
        self.p = p
        self.num = num
        self.poles = {c: k for c, k in (poles or {}).items() if k > 0}

    @classmethod
    def zero(cls, p):
        return cls(p, dense.EMPTY)

    @classmethod
    def monomial(cls, p, center, k, c=1):
        """c * (x - center)^k; a negative k gives a pole."""
        c %= p
        if c == 0:
            return cls.zero(p)
        if k >= 0:
            if center == 0:
                return cls(p, dense.shift(np.array([c], np.int64), k))
            return cls(p, dense.scale(dense.linear_power(center, k, p), c, p))
        return cls(p, np.array([c], np.int64), {center % p: -k})

    @classmethod
    def from_rational(cls, h):
        p = h.p
        poles = dict(split_denominator(h.den)) if not h.den.is_constant() else {}
        return cls(p, h.num.array(), poles)

    def to_rational(self):
        den = np.ones(1, dtype=np.int64)
        for c, k in self.poles.items():
            den = dense.mul(den, dense.linear_power(c, k, self.p), self.p)
        return RationalFunction(Polynomial._from_array(self.p, self.num), Polynomial._from_array(self.p, den))

    def is_zero(self):
        return self.num.size == 0

    def reduced(self):
        """Cancel common (x - c) factors between numerator and denominator."""
        if not self.poles or self.num.size == 0:
            return SplitFraction(self.p, self.num) if self.num.size == 0 else self
        num = self.num
        poles = {}
        for c, k in self.poles.items():
            num, m = dense.root_multiplicity(num, c, self.p, limit=k)
            if k - m:
                poles[c] = k - m
        return SplitFraction(self.p, num, poles)

    def _lift(self, target):
        """Numerator over the denominator prod (x - c)^target[c]."""
        num = self.num
        for c, k in target.items():
            extra = k - self.poles.get(c, 0)
            if extra:
                num = dense.mul(num, dense.linear_power(c, extra, self.p), self.p) if c else dense.shift(num, extra)
        return num

    def __add__(self, other):
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        target = dict(self.poles)
        for c, k in other.poles.items():
            target[c] = max(target.get(c, 0), k)
        num = dense.add(self._lift(target), other._lift(target), self.p)
        return SplitFraction(self.p, num, target).reduced()

    def __neg__(self):
        return SplitFraction(self.p, dense.scale(self.num, -1, self.p), self.poles)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return SplitFraction(self.p, dense.scale(self.num, other, self.p), self.poles)
        if self.is_zero() or other.is_zero():
            return SplitFraction.zero(self.p)
        poles = dict(self.poles)
        for c, k in other.poles.items():
            poles[c] = poles.get(c, 0) + k
        return SplitFraction(self.p, dense.mul(self.num, other.num, self.p), poles).reduced()

    __rmul__ = __mul__

    def power(self, k):
        result = SplitFraction(self.p, np.ones(1, dtype=np.int64))
        for _ in range(k):
            result = result * self
        return result

    def cartier(self):
        """h_{p-1} where self = sum_i h_i^p x^i, i.e. V(self dx) = h_{p-1} dx."""
        p = self.p
        if self.is_zero():
            return self
        target = {c: -(-k // p) * p for c, k in self.poles.items()}
        comp = dense.frobenius_split(self._lift(target), p)[p - 1]
        return SplitFraction(p, comp, {c: k // p for c, k in target.items()}).reduced()

    def decompose(self):
        """Polynomial part (array) and {center: [_, c_1, ..., c_k]} polar parts."""
        p = self.p
        den = np.ones(1, dtype=np.int64)
        for c, k in self.poles.items():
            den = dense.mul(den, dense.linear_power(c, k, p), p)
        poly, rem = dense.divmod_(self.num, den, p)
        parts = {}
        for c, k in sorted(self.poles.items()):
            cof, _ = dense.root_multiplicity(den, c, p, limit=k)
            parts[c] = laurent_polar(rem, cof, c, k, p)
        return poly, parts

    def __eq__(self, other):
        if not isinstance(other, SplitFraction):
            return NotImplemented
        a, b = self.reduced(), other.reduced()
        return a.p == b.p and a.poles == b.poles and np.array_equal(a.num, b.num)

    def __repr__(self):
        return f"SplitFraction({self.to_rational()})"
