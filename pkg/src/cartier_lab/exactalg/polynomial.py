import math

import numpy as np

from . import dense
from .field import FieldElem, check_prime

#: Degree of the zero polynomial.
NEG_INF = -math.inf


class Polynomial:
    """Immutable polynomial over F_p in one variable.

    Coefficients are stored densely, lowest degree first, without trailing
    zeros, so two equal polynomials have equal ``coeffs`` tuples.
    """

    __slots__ = ("p", "coeffs", "_hash")

    def __init__(self, p, coeffs=()):
        check_prime(p)
        arr = dense.from_seq([int(c) for c in coeffs], p) if len(coeffs) else dense.EMPTY
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "coeffs", tuple(int(c) for c in arr))
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # -- construction ---------------------------------------------------------

    @classmethod
    def _from_array(cls, p, arr):
        obj = cls.__new__(cls)
        object.__setattr__(obj, "p", p)
        object.__setattr__(obj, "coeffs", tuple(int(c) for c in arr))
        object.__setattr__(obj, "_hash", None)
        return obj

    @classmethod
    def zero(cls, p):
        return cls(p)

    @classmethod
    def constant(cls, p, c):
        return cls(p, [int(c)])

    @classmethod
    def x(cls, p):
        return cls(p, [0, 1])

    @classmethod
    def monomial(cls, p, k, c=1):
        return cls(p, [0] * k + [int(c)])

    @classmethod
    def from_dict(cls, p, terms):
        """Build from an exponent -> coefficient mapping."""
        if not terms:
            return cls(p)
        top = max(terms)
        coeffs = [0] * (top + 1)
        for k, c in terms.items():
            if k < 0:
                raise ValueError("negative exponent in a polynomial")
            coeffs[k] = (coeffs[k] + int(c)) % p
        return cls(p, coeffs)

    def array(self):
        return np.array(self.coeffs, dtype=np.int64)

    # -- queries --------------------------------------------------------------

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self):
        return not self.coeffs

    def is_constant(self):
        return len(self.coeffs) <= 1

    def __bool__(self):
        return bool(self.coeffs)

    def coeff(self, k):
        c = self.coeffs[k] if 0 <= k < len(self.coeffs) else 0
        return FieldElem(c, self.p)

    def leading(self):
        return self.coeffs[-1] if self.coeffs else 0

    def terms(self):
        """Nonzero terms as an exponent -> int mapping."""
        return {k: c for k, c in enumerate(self.coeffs) if c}

    def __call__(self, c):
        return FieldElem(dense.evaluate(self.array(), int(c), self.p), self.p)

    def roots(self):
        """Distinct roots in F_p, ascending."""
        a = self.array()
        return [c for c in range(self.p) if dense.evaluate(a, c, self.p) == 0]

    # -- arithmetic -----------------------------------------------------------

    def _other(self, other):
        if isinstance(other, Polynomial):
            if other.p != self.p:
                raise ValueError("polynomials over different fields")
            return other
        if isinstance(other, (int, FieldElem)):
            return Polynomial.constant(self.p, int(other))
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return Polynomial._from_array(self.p, dense.add(self.array(), o.array(), self.p))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return Polynomial._from_array(self.p, dense.sub(self.array(), o.array(), self.p))

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return Polynomial._from_array(self.p, dense.scale(self.array(), -1, self.p))

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return Polynomial._from_array(self.p, dense.mul(self.array(), o.array(), self.p))

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power of a polynomial; use RationalFunction")
        return Polynomial._from_array(self.p, dense.power(self.array(), k, self.p))

    def __divmod__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        q, r = dense.divmod_(self.array(), o.array(), self.p)
        return Polynomial._from_array(self.p, q), Polynomial._from_array(self.p, r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self):
        return Polynomial._from_array(self.p, dense.monic(self.array(), self.p))

    def derivative(self):
        p = self.p
        return Polynomial(p, [(k * c) % p for k, c in enumerate(self.coeffs)][1:])

    def compose_frobenius(self):
        """self(x^p), which equals self^p over the prime field."""
        return Polynomial._from_array(self.p, dense.frobenius_compose(self.array(), self.p))

    def taylor_shift(self, c):
        """Coefficients of self(t + c) as a polynomial in t."""
        return Polynomial._from_array(self.p, dense.taylor_shift(self.array(), int(c), self.p))

    # -- comparison / display -------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.p == other.p and self.coeffs == other.coeffs
        if isinstance(other, (int, FieldElem)):
            return self.coeffs == Polynomial.constant(self.p, int(other)).coeffs
        return NotImplemented

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.p, self.coeffs))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self):
        return f"Polynomial({self.p}, {list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            if k == 0:
                parts.append(str(c))
            else:
                mono = "x" if k == 1 else f"x^{k}"
                parts.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(parts)


def poly_gcd(a, b):
    """Monic gcd of two polynomials (gcd(0, 0) = 0)."""
    return Polynomial._from_array(a.p, dense.gcd(a.array(), b.array(), a.p))
