from dataclasses import dataclass, field

import numpy as np

from ..errors import NonSplitDenominator
from . import dense
from .field import FieldElem, check_prime
from .polynomial import Polynomial, poly_gcd


class RationalFunction:
    """Element of F_p(x) in lowest terms with a monic denominator."""

    __slots__ = ("p", "num", "den", "_hash")

    def __init__(self, num, den=None):
        if isinstance(num, int):
            raise TypeError("use RationalFunction.constant(p, c) for integers")
        p = num.p
        if den is None:
            den = Polynomial.constant(p, 1)
        if den.p != p:
            raise ValueError("numerator and denominator over different fields")
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            num, den = num, Polynomial.constant(p, 1)
        elif not den.is_constant():
            g = poly_gcd(num, den)
            if not g.is_constant():
                num, den = num // g, den // g
        lead = den.leading()
        if lead != 1:
            inv = pow(lead, -1, p)
            num, den = num * inv, den * inv
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFunction is immutable")

    # -- construction ---------------------------------------------------------

    @classmethod
    def constant(cls, p, c):
        return cls(Polynomial.constant(check_prime(p), int(c)))

    @classmethod
    def zero(cls, p):
        return cls.constant(p, 0)

    @classmethod
    def x(cls, p):
        return cls(Polynomial.x(check_prime(p)))

    @classmethod
    def monomial(cls, p, k, c=1):
        """c * x^k for any integer k."""
        check_prime(p)
        if k >= 0:
            return cls(Polynomial.monomial(p, k, c))
        return cls(Polynomial.constant(p, c), Polynomial.monomial(p, -k))

    @classmethod
    def linear_power(cls, p, center, k, c=1):
        """c * (x - center)^k for any integer k."""
        lin = Polynomial(check_prime(p), [-int(center), 1])
        if k >= 0:
            return cls(lin**k * int(c))
        return cls(Polynomial.constant(p, c), lin ** (-k))

    # -- queries --------------------------------------------------------------

    def is_zero(self):
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def is_polynomial(self):
        return self.den.is_constant()

    def is_constant(self):
        return self.den.is_constant() and self.num.is_constant()

    def order_at(self, c):
        """Valuation at the finite point x = c (None for the zero function)."""
        if self.is_zero():
            return None
        _, m_num = dense.root_multiplicity(self.num.array(), int(c), self.p)
        _, m_den = dense.root_multiplicity(self.den.array(), int(c), self.p)
        return m_num - m_den

    def order_at_infinity(self):
        if self.is_zero():
            return None
        return self.den.degree - self.num.degree

    # -- arithmetic -----------------------------------------------------------

    def _other(self, other):
        if isinstance(other, RationalFunction):
            if other.p != self.p:
                raise ValueError("rational functions over different fields")
            return other
        if isinstance(other, Polynomial):
            return RationalFunction(other)
        if isinstance(other, (int, FieldElem)):
            return RationalFunction.constant(self.p, int(other))
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return RationalFunction(self.num + o.num, self.den)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of the zero function")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        return RationalFunction(self.num**k, self.den**k)

    def derivative(self):
        a, b = self.num, self.den
        return RationalFunction(a.derivative() * b - a * b.derivative(), b * b)

    def frobenius(self):
        """self^p, computed as self(x^p)."""
        return RationalFunction(self.num.compose_frobenius(), self.den.compose_frobenius())

    def substitute(self, other):
        """self(other) for another rational function ``other``."""
        num = _horner(self.num, other)
        den = _horner(self.den, other)
        return num / den

    # -- comparison / display -------------------------------------------------

    def __eq__(self, other):
        o = self._other(other) if not isinstance(other, RationalFunction) else other
        if o is None:
            return NotImplemented
        return self.p == o.p and self.num == o.num and self.den == o.den

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.p, self.num.coeffs, self.den.coeffs))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self):
        return f"RationalFunction({self.num!r}, {self.den!r})"

    def __str__(self):
        if self.is_polynomial():
            return str(self.num)
        return f"({self.num}) / ({self.den})"


def _horner(poly, value):
    acc = RationalFunction.zero(poly.p)
    for c in reversed(poly.coeffs):
        acc = acc * value + c
    return acc


@dataclass(frozen=True)
class PolarPart:
    """sum_k coeffs[k] * (x - center)^(-k) for k >= 1."""

    p: int
    center: int
    coeffs: dict = field(default_factory=dict)

    def __post_init__(self):
        cleaned = {int(k): int(c) % self.p for k, c in self.coeffs.items() if int(c) % self.p}
        if any(k < 1 for k in cleaned):
            raise ValueError("polar part exponents must be >= 1")
        object.__setattr__(self, "coeffs", cleaned)
        object.__setattr__(self, "center", int(self.center) % self.p)

    @property
    def center_elem(self):
        return FieldElem(self.center, self.p)

    @property
    def pole_order(self):
        return max(self.coeffs) if self.coeffs else 0

    def to_rational(self):
        total = RationalFunction.zero(self.p)
        for k, c in self.coeffs.items():
            total = total + RationalFunction.linear_power(self.p, self.center, -k, c)
        return total

    def __hash__(self):
        return hash((self.p, self.center, tuple(sorted(self.coeffs.items()))))


def split_denominator(den):
    """Factor a monic polynomial into linear factors over F_p.

    Returns a list of (root, multiplicity) in ascending root order.
    Raises NonSplitDenominator when an irreducible factor of degree >= 2 remains.
    """
    p = den.p
    a = den.array()
    factors = []
    for c in range(p):
        if a.size <= 1:
            break
        a, m = dense.root_multiplicity(a, c, p)
        if m:
            factors.append((c, m))
    if a.size > 1:
        rest = Polynomial._from_array(p, dense.monic(a, p))
        factor, degree = _lowest_degree_part(rest)
        raise NonSplitDenominator(factor, degree)
    return factors


def _lowest_degree_part(f):
    """Product of the irreducible factors of lowest degree d of a root-free f."""
    p = f.p
    xpow = Polynomial.x(p)
    d = 0
    while True:
        d += 1
        xpow = _powmod(xpow, p, f)
        g = poly_gcd(xpow - Polynomial.x(p), f)
        if not g.is_constant():
            return g, d


def _powmod(base, e, mod):
    result = Polynomial.constant(base.p, 1)
    base = base % mod
    while e:
        if e & 1:
            result = (result * base) % mod
        e >>= 1
        if e:
            base = (base * base) % mod
    return result


def laurent_polar(num_arr, den_cofactor_arr, center, order, p):
    """Polar coefficients at ``center`` of num / ((x-center)^order * cofactor).

    Returns a list c[1..order] (index 0 unused) with num/den ~ sum c[k] t^-k.
    """
    shifted_num = dense.taylor_shift(num_arr, center, p)[:order]
    inv = dense.series_inverse(dense.taylor_shift(den_cofactor_arr, center, p), order, p)
    prod = np.convolve(shifted_num, inv)[:order] % p if shifted_num.size else np.zeros(0, np.int64)
    out = [0] * (order + 1)
    for j, c in enumerate(prod):
        out[order - j] = int(c)
    return out


def partial_fractions(h):
    """Split h into its polynomial part and one polar part per pole.

    Poles must be F_p-rational.  Parts are listed in ascending center order.
    """
    p = h.p
    poly_part, rem = divmod(h.num, h.den)
    if h.den.is_constant():
        return poly_part, []
    roots = split_denominator(h.den)
    den_arr = h.den.array()
    rem_arr = rem.array()
    parts = []
    for c, m in roots:
        cof, _ = dense.root_multiplicity(den_arr, c, p, limit=m)
        coeffs = laurent_polar(rem_arr, cof, c, m, p)
        parts.append(PolarPart(p, c, {k: coeffs[k] for k in range(1, m + 1)}))
    return poly_part, parts


def from_partial_fractions(poly_part, parts):
    total = RationalFunction(poly_part)
    for part in parts:
        total = total + part.to_rational()
    return total


def p_power_decompose(h):
    """Components h_0..h_{p-1} with h = sum_i h_i^p x^i.

    Uses h = a b^(p-1) / b^p and b^p = b(x^p) over the prime field.
    """
    p = h.p
    a = h.num.array()
    b = h.den.array()
    top = dense.mul(a, dense.power(b, p - 1, p), p)
    den = h.den
    return [
        RationalFunction(Polynomial._from_array(p, comp), den)
        for comp in dense.frobenius_split(top, p)
    ]
