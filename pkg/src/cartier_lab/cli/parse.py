"""Curve-equation language for the right-hand side f of y^p - y = f.

Grammar (whitespace ignored)::

    expr  := ['+'|'-'] term (('+'|'-') term)*
    term  := INT ['*'] power | INT | power
    power := base ['^' SIGNED_INT]
    base  := var | '(' var ('+'|'-') INT ')'
    var   := 'x' | 't'

Integer literals are reduced mod p.  ``(x-c)^-k`` writes a pole at x = c.
"""

import json
from dataclasses import dataclass

from ..errors import InputError, ParseError
from ..exactalg import PolarPart, Polynomial, RationalFunction, check_prime, partial_fractions

VARS = ("x", "t")


class _Parser:
    def __init__(self, src, p):
        self.src = src
        self.p = p
        self.pos = 0

    def _skip(self):
        while self.pos < len(self.src) and self.src[self.pos].isspace():
            self.pos += 1

    def _peek(self):
        self._skip()
        return self.src[self.pos] if self.pos < len(self.src) else ""

    def _fail(self, message, expected):
        raise ParseError(message, self.pos, expected)

    def _expect(self, ch):
        if self._peek() != ch:
            self._fail(f"unexpected {self._peek() or 'end of input'!r}", [ch])
        self.pos += 1

    def _int(self):
        self._skip()
        start = self.pos
        while self.pos < len(self.src) and self.src[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self._fail(f"unexpected {self._peek() or 'end of input'!r}", ["INT"])
        return int(self.src[start : self.pos])

    def _signed_int(self):
        sign = 1
        if self._peek() in "+-" and self._peek():
            sign = -1 if self._peek() == "-" else 1
            self.pos += 1
        return sign * self._int()

    def parse(self):
        p = self.p
        sign = 1
        if self._peek() in ("+", "-") and self._peek():
            sign = -1 if self._peek() == "-" else 1
            self.pos += 1
        total = self._term() * sign
        while True:
            ch = self._peek()
            if ch == "":
                return total
            if ch not in "+-":
                self._fail(f"unexpected {ch!r}", ["+", "-", "end of input"])
            self.pos += 1
            term = self._term()
            total = total + term if ch == "+" else total - term
        return total  # pragma: no cover

    def _term(self):
        ch = self._peek()
        if ch.isdigit():
            coeff = self._int()
            nxt = self._peek()
            if nxt == "*":
                self.pos += 1
                return self._power() * coeff
            if nxt in VARS or nxt == "(":
                return self._power() * coeff
            return RationalFunction.constant(self.p, coeff)
        if ch in VARS or ch == "(":
            return self._power()
        self._fail(f"unexpected {ch or 'end of input'!r}", ["INT", "x", "t", "("])

    def _power(self):
        ch = self._peek()
        center = 0
        if ch in VARS:
            self.pos += 1
        elif ch == "(":
            self.pos += 1
            if self._peek() not in VARS or not self._peek():
                self._fail(f"unexpected {self._peek() or 'end of input'!r}", list(VARS))
            self.pos += 1
            op = self._peek()
            if op not in ("+", "-") or not op:
                self._fail(f"unexpected {op or 'end of input'!r}", ["+", "-"])
            self.pos += 1
            c = self._int()
            center = -c if op == "+" else c
            self._expect(")")
        else:
            self._fail(f"unexpected {ch or 'end of input'!r}", ["x", "t", "("])
        exponent = 1
        if self._peek() == "^":
            self.pos += 1
            exponent = self._signed_int()
        return RationalFunction.linear_power(self.p, center % self.p, exponent)


def parse_f(src, p):
    """Parse a curve right-hand side into a canonical RationalFunction over F_p."""
    check_prime(p)
    if not isinstance(src, str):
        raise InputError("curve expression must be a string")
    return _Parser(src, p).parse()


def _term_str(c, base):
    if base == "":
        return str(c)
    return base if c == 1 else f"{c}*{base}"


def print_f(h):
    """Canonical string for h (partial-fraction form) that parse_f reads back."""
    poly, parts = partial_fractions(h)
    terms = []
    for k in range(len(poly.coeffs) - 1, -1, -1):
        c = poly.coeffs[k]
        if c:
            base = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            terms.append(_term_str(c, base))
    for part in parts:
        for k in sorted(part.coeffs, reverse=True):
            base = f"x^-{k}" if part.center == 0 else f"(x-{part.center})^-{k}"
            terms.append(_term_str(part.coeffs[k], base))
    return " + ".join(terms) if terms else "0"


@dataclass(frozen=True)
class CurveSpec:
    """p plus either an expression string or structured polar/polynomial data."""

    p: int
    f_source: object

    def function(self):
        if isinstance(self.f_source, str):
            return parse_f(self.f_source, self.p)
        return structured_to_function(self.p, self.f_source)

    def label(self):
        return self.f_source if isinstance(self.f_source, str) else print_f(self.function())

    @classmethod
    def from_json_line(cls, line):
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise InputError(f"bad curve JSON: {exc}") from None
        if not isinstance(obj, dict) or "p" not in obj:
            raise InputError('curve JSON needs a "p" field')
        if "f" in obj:
            return cls(int(obj["p"]), str(obj["f"]))
        data = {k: obj[k] for k in ("polar_parts", "polynomial_part") if k in obj}
        if not data:
            raise InputError('curve JSON needs "f" or "polar_parts"/"polynomial_part"')
        return cls(int(obj["p"]), data)


def structured_to_function(p, data):
    """{"polynomial_part": {k: c}, "polar_parts": {center: {k: c}}} -> RationalFunction."""
    check_prime(p)
    try:
        poly = Polynomial.from_dict(p, {int(k): int(c) for k, c in data.get("polynomial_part", {}).items()})
        total = RationalFunction(poly)
        for center, coeffs in data.get("polar_parts", {}).items():
            part = PolarPart(p, int(center), {int(k): int(c) for k, c in coeffs.items()})
            total = total + part.to_rational()
    except (TypeError, ValueError, AttributeError) as exc:
        raise InputError(f"bad structured curve data: {exc}") from None
    return total
