from functools import lru_cache

from ..errors import InputError


@lru_cache(maxsize=None)
def is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    k = 3
    while k * k <= n:
        if n % k == 0:
            return False
        k += 2
    return True


def check_prime(p):
    if not isinstance(p, int) or not is_prime(p):
        raise InputError(f"characteristic must be a prime, got {p!r}")
    return p


class FieldElem:
    """An element of the prime field F_p."""

    __slots__ = ("residue", "modulus")

    def __init__(self, residue, modulus):
        check_prime(modulus)
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "residue", int(residue) % modulus)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElem is immutable")

    def _coerce(self, other):
        if isinstance(other, FieldElem):
            if other.modulus != self.modulus:
                raise ValueError("field elements of different characteristic")
            return other.residue
        if isinstance(other, int):
            return other % self.modulus
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElem(self.residue + o, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElem(self.residue - o, self.modulus)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElem(o - self.residue, self.modulus)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElem(self.residue * o, self.modulus)

    __rmul__ = __mul__

    def __neg__(self):
        return FieldElem(-self.residue, self.modulus)

    def inverse(self):
        if self.residue == 0:
            raise ZeroDivisionError("0 has no inverse in F_p")
        return FieldElem(pow(self.residue, -1, self.modulus), self.modulus)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * FieldElem(o, self.modulus).inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElem(o, self.modulus) * self.inverse()

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        return FieldElem(pow(self.residue, k, self.modulus), self.modulus)

    def __eq__(self, other):
        if isinstance(other, FieldElem):
            return self.modulus == other.modulus and self.residue == other.residue
        if isinstance(other, int):
            return self.residue == other % self.modulus
        return NotImplemented

    def __hash__(self):
        return hash((self.residue, self.modulus))

    def __bool__(self):
        return self.residue != 0

    def __int__(self):
        return self.residue

    __index__ = __int__

    def __repr__(self):
        return f"FieldElem({self.residue}, {self.modulus})"

    def __str__(self):
        return str(self.residue)
