"""Artin-Schreier covers y^p - y = f of the projective line over F_p."""

from dataclasses import dataclass
from math import gcd

from .errors import FieldExtensionRequired, InputError, MixedShape, ReducibleCover
from .exactalg import (
    PolarPart,
    Polynomial,
    RationalFunction,
    SplitFraction,
    check_prime,
    partial_fractions,
)


@dataclass(frozen=True)
class BranchPoint:
    """A branch point with its ramification break d.

    ``center`` is an element of F_p, or None for the point at infinity.
    ``polar`` is the polar part of f there (a PolarPart for finite points,
    the polynomial part of f for infinity).
    """

    center: object
    d: int
    polar: object

    @property
    def at_infinity(self):
        return self.center is None

    def __str__(self):
        where = "inf" if self.center is None else str(self.center)
        return f"{where}:{self.d}"


@dataclass(frozen=True)
class RamificationDatum:
    """Multiset of ramification breaks, each coprime to p."""

    p: int
    d_list: tuple

    def __post_init__(self):
        check_prime(self.p)
        ds = tuple(int(d) for d in self.d_list)
        for d in ds:
            if d < 1 or gcd(d, self.p) != 1:
                raise InputError(f"ramification break {d} must be positive and coprime to p={self.p}")
        object.__setattr__(self, "d_list", ds)


def as_datum(p, data):
    if isinstance(data, RamificationDatum):
        if data.p != p:
            raise InputError("ramification datum has a different characteristic")
        return data
    return RamificationDatum(p, tuple(data))


@dataclass(frozen=True)
class ASCover:
    p: int
    f: RationalFunction
    witness: RationalFunction
    branch_points: tuple
    genus: int
    p_rank: int

    @property
    def infinity_branched(self):
        return len(self.branch_points) == 1 and self.branch_points[0].at_infinity

    @property
    def datum(self):
        return RamificationDatum(self.p, tuple(b.d for b in self.branch_points))

    @property
    def g_minus_s(self):
        return self.genus - self.p_rank

    def split_f(self):
        return SplitFraction.from_rational(self.f)

    def __str__(self):
        return f"y^{self.p} - y = {self.f}"


def _reduce_terms(terms, p):
    """Remove every term of order divisible by p from {order: coeff}.

    Returns the witness terms: for each removed c*T^(pk) the witness gains c*T^k.
    Orders are processed from the top so that the new term c*T^k is itself
    revisited.  Order 0 (a constant) is never touched.
    """
    witness = {}
    order = max(terms) if terms else 0
    while order > 0:
        c = terms.get(order, 0) % p
        if c and order % p == 0:
            low = order // p
            del terms[order]
            terms[low] = (terms.get(low, 0) + c) % p
            witness[low] = (witness.get(low, 0) + c) % p
        order -= 1
    return {k: c for k, c in terms.items() if c}, {k: c for k, c in witness.items() if c}


def as_reduce(p, f):
    """Artin-Schreier reduction: returns (f_reduced, g) with f - f_reduced = g^p - g.

    Every pole order of the result, including the degree of its polynomial
    part, is coprime to p.  Over F_p, c^(1/p) = c, so c*T^(pk) is replaced by
    c*T^k with T = x or T = 1/(x - center).
    """
    check_prime(p)
    if f.p != p:
        raise InputError("f is defined over a different field")
    poly, parts = partial_fractions(f)
    poly_terms, poly_wit = _reduce_terms(poly.terms(), p)
    new_parts = []
    witness = RationalFunction(Polynomial.from_dict(p, poly_wit))
    for part in parts:
        terms, wit = _reduce_terms(dict(part.coeffs), p)
        if terms:
            new_parts.append(PolarPart(p, part.center, terms))
        if wit:
            witness = witness + PolarPart(p, part.center, wit).to_rational()
    reduced = RationalFunction(Polynomial.from_dict(p, poly_terms))
    for part in new_parts:
        reduced = reduced + part.to_rational()
    if reduced.is_constant():
        raise ReducibleCover(
            f"f reduces to the constant {reduced}; y^{p} - y = f does not define a curve"
        )
    return reduced, witness


def build_cover(p, f):
    check_prime(p)
    if isinstance(f, Polynomial):
        f = RationalFunction(f)
    reduced, witness = as_reduce(p, f)
    poly, parts = partial_fractions(reduced)
    if parts and poly.degree >= 1:
        raise MixedShape(
            "f has finite poles and a nonconstant polynomial part; move a branch point "
            "with a Moebius transformation first"
        )
    if poly.coeffs and poly.coeffs[0]:
        raise FieldExtensionRequired(
            f"constant term {poly.coeffs[0]} of f is not of the form c^p - c in F_{p}; "
            "the points above an unramified place would not be F_p-rational"
        )
    if parts:
        branch = tuple(BranchPoint(part.center, part.pole_order, part) for part in parts)
    else:
        branch = (BranchPoint(None, int(poly.degree), poly),)
    total = sum(b.d + 1 for b in branch)
    genus = (p - 1) * (total - 2) // 2
    p_rank = (p - 1) * (len(branch) - 1)
    return ASCover(p, reduced, witness, branch, genus, p_rank)


def g_minus_s(p, data, g_X=0, s_X=0):
    """Stable kernel dimension g_Y - s_Y from Riemann-Hurwitz and Deuring-Shafarevich."""
    data = as_datum(p, data)
    if g_X < 0 or s_X < 0 or s_X > g_X:
        raise InputError("need 0 <= s_X <= g_X")
    return p * (g_X - s_X) + sum((p - 1) * (d - 1) // 2 for d in data.d_list)


def moebius_substitute(f, a, b, c, d):
    """f((a x + b) / (c x + d))."""
    p = f.p
    if (a * d - b * c) % p == 0:
        raise InputError("Moebius transformation is singular")
    x = RationalFunction.x(p)
    return f.substitute((x * a + b) / (x * c + d))


def move_point(f, source, target):
    """Move the point ``source`` (element of F_p, or None for infinity) to ``target``.

    ``target`` is 0 or None (infinity).
    """
    p = f.p
    if target not in (0, None):
        raise InputError("target must be 0 or infinity")
    if source == target:
        return f
    if target is None:
        # x -> source + 1/x sends x = source to infinity
        return moebius_substitute(f, int(source) % p, 1, 1, 0)
    if source is None:
        return moebius_substitute(f, 0, 1, 1, 0)
    return moebius_substitute(f, 1, int(source) % p, 0, 1)
