import numpy as np

from ..errors import PrecisionExhausted
from . import dense
from .field import FieldElem, check_prime


class TruncatedSeries:
    """Laurent series sum c_e u^e known modulo u^absprec.

    ``coeffs[i]`` is the coefficient of ``u^(valuation + i)``; the first entry
    is nonzero unless the series is zero to the stated precision, in which
    case ``coeffs`` is empty and ``valuation == absprec``.  Results of
    arithmetic carry the largest absolute precision the operands justify.
    """

    __slots__ = ("p", "var", "valuation", "coeffs", "absprec")

    def __init__(self, p, coeffs, start, absprec, var="u"):
        check_prime(p)
        arr = np.asarray(coeffs, dtype=np.int64) % p if len(coeffs) else dense.EMPTY
        keep = max(0, min(arr.size, absprec - start))
        arr = arr[:keep]
        nz = np.flatnonzero(arr)
        if nz.size == 0:
            start, arr = absprec, dense.EMPTY
        else:
            arr = dense.trim(arr[nz[0] :])
            start += int(nz[0])
        self.p = p
        self.var = var
        self.valuation = start
        self.coeffs = tuple(int(c) for c in arr)
        self.absprec = absprec

    # -- construction ---------------------------------------------------------

    @classmethod
    def constant(cls, p, c, absprec, var="u"):
        return cls(p, [int(c)], 0, absprec, var)

    @classmethod
    def zero(cls, p, absprec, var="u"):
        return cls(p, [], absprec, absprec, var)

    @classmethod
    def from_polynomial_in_var(cls, poly_arr, p, absprec, var="u"):
        return cls(p, poly_arr, 0, absprec, var)

    @classmethod
    def at_infinity(cls, h, absprec, var="u"):
        """Expansion of the rational function h(x) in u = 1/x."""
        p = h.p
        if h.is_zero():
            return cls.zero(p, absprec, var)
        # h(1/u) = u^(dn - dm) * rev(num)(u) / rev(den)(u)
        dm, dn = h.num.degree, h.den.degree
        shift = dn - dm
        rev_num = np.array(h.num.coeffs[::-1], dtype=np.int64)
        rev_den = np.array(h.den.coeffs[::-1], dtype=np.int64)
        rel = absprec - shift
        if rel <= 0:
            return cls.zero(p, absprec, var)
        inv = dense.series_inverse(rev_den, rel, p)
        prod = np.convolve(rev_num, inv)[:rel] % p
        return cls(p, prod, shift, absprec, var)

    # -- queries --------------------------------------------------------------

    @property
    def precision(self):
        return self.absprec - self.valuation

    def is_zero(self):
        return not self.coeffs

    def coefficient(self, e):
        if e >= self.absprec:
            raise PrecisionExhausted(f"coefficient of {self.var}^{e} is beyond O({self.var}^{self.absprec})")
        i = e - self.valuation
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    # -- arithmetic -----------------------------------------------------------

    def _check(self, other):
        if other.p != self.p:
            raise ValueError("series over different fields")

    def __add__(self, other):
        if isinstance(other, (int, FieldElem)):
            other = TruncatedSeries.constant(self.p, int(other), self.absprec, self.var)
        self._check(other)
        absprec = min(self.absprec, other.absprec)
        start = min(self.valuation, other.valuation, absprec)
        n = absprec - start
        out = np.zeros(n, dtype=np.int64)
        for s in (self, other):
            off = s.valuation - start
            c = np.array(s.coeffs[: max(0, n - off)], dtype=np.int64)
            out[off : off + c.size] += c
        return TruncatedSeries(self.p, out % self.p, start, absprec, self.var)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(self.p, [-c for c in self.coeffs], self.valuation, self.absprec, self.var)

    def __sub__(self, other):
        if isinstance(other, (int, FieldElem)):
            return self + (-int(other))
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, FieldElem)):
            return TruncatedSeries(
                self.p, [c * int(other) for c in self.coeffs], self.valuation, self.absprec, self.var
            )
        self._check(other)
        absprec = min(self.valuation + other.absprec, other.valuation + self.absprec)
        start = self.valuation + other.valuation
        if not self.coeffs or not other.coeffs:
            return TruncatedSeries.zero(self.p, absprec, self.var)
        prod = np.convolve(np.array(self.coeffs, np.int64), np.array(other.coeffs, np.int64)) % self.p
        return TruncatedSeries(self.p, prod, start, absprec, self.var)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        if k == 0:
            return TruncatedSeries.constant(self.p, 1, self.precision, self.var)
        result = None
        base = self
        while k:
            if k & 1:
                result = base if result is None else result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def frobenius(self):
        """self^p; exact in characteristic p, so precision scales by p."""
        p = self.p
        start = self.valuation * p
        out = np.zeros(max(0, (len(self.coeffs) - 1) * p + 1), dtype=np.int64)
        out[::p] = self.coeffs
        return TruncatedSeries(p, out, start, self.absprec * p, self.var)

    def inverse(self):
        if not self.coeffs:
            raise PrecisionExhausted("cannot invert a series that is zero to its precision")
        rel = self.precision
        inv = dense.series_inverse(np.array(self.coeffs, np.int64), rel, self.p)
        return TruncatedSeries(self.p, inv, -self.valuation, rel - self.valuation, self.var)

    def truncate(self, absprec):
        if absprec > self.absprec:
            raise PrecisionExhausted(f"cannot raise precision from {self.absprec} to {absprec}")
        return TruncatedSeries(self.p, self.coeffs, self.valuation, absprec, self.var)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (self.p, self.valuation, self.coeffs, self.absprec) == (
            other.p,
            other.valuation,
            other.coeffs,
            other.absprec,
        )

    def __repr__(self):
        terms = [f"{c}*{self.var}^{self.valuation + i}" for i, c in enumerate(self.coeffs) if c]
        body = " + ".join(terms) if terms else "0"
        return f"{body} + O({self.var}^{self.absprec})"


def solve_artin_schreier_series(f_series, zeta, precision):
    """Root y = zeta + O(u) of y^p - y = f, correct modulo u^precision.

    Fixed-point step y <- y + (y^p - y - f); the residual r becomes r^p, so
    its valuation is multiplied by p at every step.
    """
    p = f_series.p
    z = int(zeta) % p
    if (pow(z, p, p) - z) % p:
        raise ValueError("zeta must satisfy zeta^p = zeta")
    if f_series.valuation < 1:
        raise ValueError("f must vanish at the place (valuation >= 1)")
    if f_series.absprec < precision:
        raise PrecisionExhausted(
            f"f is only known modulo {f_series.var}^{f_series.absprec}, "
            f"cannot solve to {f_series.var}^{precision}"
        )
    f = f_series.truncate(precision)
    y = TruncatedSeries.constant(p, z, precision, f_series.var)
    while True:
        residual = y.frobenius() - y - f
        if residual.valuation >= precision:
            return y
        y = y + residual
