"""Certified bases of regular differentials on Artin-Schreier covers of P^1.

A differential on Y is written sum_b omega_b(x) y^b dx.  Coordinates are taken
over monomial atoms (x - c)^(-a) y^b dx (finite branch points) or x^a y^b dx
(branch point at infinity).  Regularity at a branch point is diagonal in these
atoms; regularity above an unbranched infinity is imposed on linear
combinations through exact series expansions at each of the p points there.
"""

from dataclasses import dataclass, field
from functools import total_ordering

import numpy as np

from . import kernels
from .errors import BasisDeficient, InternalAssertion, NonSplitDenominator, PrecisionExhausted
from .exactalg import (
    RationalFunction,
    SplitFraction,
    TruncatedSeries,
    partial_fractions,
    solve_artin_schreier_series,
    split_denominator,
)

POLE = "pole"
POLY = "poly"


@total_ordering
@dataclass(frozen=True)
class DifferentialAtom:
    """(x - center)^(-a) y^b dx for kind "pole", x^a y^b dx for kind "poly"."""

    kind: str
    center: int
    a: int
    b: int

    @classmethod
    def pole(cls, center, a, b):
        if a < 1:
            raise ValueError("pole atoms need a >= 1")
        return cls(POLE, int(center), int(a), int(b))

    @classmethod
    def poly(cls, a, b):
        if a < 0:
            raise ValueError("polynomial atoms need a >= 0")
        return cls(POLY, -1, int(a), int(b))

    def _key(self):
        return (0 if self.kind == POLE else 1, self.center, self.a, self.b)

    def __lt__(self, other):
        return self._key() < other._key()

    def function(self, p):
        """The x-part as a rational function."""
        if self.kind == POLE:
            return RationalFunction.linear_power(p, self.center, -self.a)
        return RationalFunction.monomial(p, self.a)

    def split(self, p):
        if self.kind == POLE:
            return SplitFraction.monomial(p, self.center, -self.a)
        return SplitFraction.monomial(p, 0, self.a)

    def __str__(self):
        if self.kind == POLE:
            base = f"x^-{self.a}" if self.center == 0 else f"(x-{self.center})^-{self.a}"
        else:
            base = "1" if self.a == 0 else ("x" if self.a == 1 else f"x^{self.a}")
        ypart = "" if self.b == 0 else (" y" if self.b == 1 else f" y^{self.b}")
        return f"{base}{ypart} dx"


class YDifferential:
    """omega = sum_b components[b] * y^b dx with components in F_p(x)."""

    __slots__ = ("p", "components")

    def __init__(self, p, components):
        comps = list(components)
        if len(comps) > p:
            raise ValueError("at most p components (y-degrees 0..p-1)")
        comps += [RationalFunction.zero(p)] * (p - len(comps))
        self.p = p
        self.components = tuple(comps)

    @classmethod
    def zero(cls, p):
        return cls(p, [])

    @classmethod
    def from_coords(cls, p, coords):
        comps = [RationalFunction.zero(p) for _ in range(p)]
        for atom, c in coords.items():
            c = int(c) % p
            if c:
                comps[atom.b] = comps[atom.b] + atom.function(p) * c
        return cls(p, comps)

    @classmethod
    def from_split(cls, p, comps):
        return cls(p, [c.to_rational() for c in comps])

    def split_components(self):
        return [SplitFraction.from_rational(c) for c in self.components]

    def coords(self):
        """Atom coordinates via partial fractions (poles must be F_p-rational)."""
        out = {}
        for b, comp in enumerate(self.components):
            if comp.is_zero():
                continue
            poly, parts = partial_fractions(comp)
            for a, c in poly.terms().items():
                out[DifferentialAtom.poly(a, b)] = c
            for part in parts:
                for a, c in part.coeffs.items():
                    out[DifferentialAtom.pole(part.center, a, b)] = c
        return dict(sorted(out.items()))

    def is_zero(self):
        return all(c.is_zero() for c in self.components)

    def __add__(self, other):
        return YDifferential(self.p, [a + b for a, b in zip(self.components, other.components)])

    def __sub__(self, other):
        return YDifferential(self.p, [a - b for a, b in zip(self.components, other.components)])

    def __neg__(self):
        return YDifferential(self.p, [-a for a in self.components])

    def __mul__(self, c):
        return YDifferential(self.p, [a * int(c) for a in self.components])

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, YDifferential):
            return NotImplemented
        return self.p == other.p and self.components == other.components

    def __hash__(self):
        return hash((self.p, self.components))

    def __repr__(self):
        terms = []
        for b, comp in enumerate(self.components):
            if comp.is_zero():
                continue
            y = "" if b == 0 else (" y" if b == 1 else f" y^{b}")
            terms.append(f"[{comp}]{y} dx")
        return "YDifferential(" + (" + ".join(terms) if terms else "0") + ")"


def split_coords_to_vector(poly, parts, b, index, n_atoms):
    """Accumulate one component's atom coordinates into a vector.

    Returns (vector contributions as dict, list of atoms missing from index).
    """
    vec = {}
    missing = []
    for a, c in enumerate(poly):
        if c:
            atom = DifferentialAtom.poly(a, b)
            if atom in index:
                vec[index[atom]] = int(c)
            else:
                missing.append(atom)
    for center, coeffs in parts.items():
        for a in range(1, len(coeffs)):
            c = coeffs[a]
            if c:
                atom = DifferentialAtom.pole(center, a, b)
                if atom in index:
                    vec[index[atom]] = int(c)
                else:
                    missing.append(atom)
    return vec, missing


# -- valuations ----------------------------------------------------------------


def atom_valuation(cover, atom, place):
    """Valuation of ``atom`` at the unique point of Y above the branch point ``place``."""
    p = cover.p
    d = place.d
    if place.at_infinity:
        vx = atom.a * p if atom.kind == POLE else -atom.a * p
        return vx - d * atom.b + (p - 1) * (d + 1) - 2 * p
    if atom.kind == POLE:
        vx = -atom.a * p if atom.center == place.center else 0
    else:
        vx = atom.a * p if place.center == 0 else 0
    return vx - d * atom.b + (p - 1) * (d + 1)


def candidate_atoms(cover):
    """All atoms with nonnegative valuation at every branch point, in atom order.

    The condition above an unbranched infinity is not imposed here.
    """
    p = cover.p
    out = []
    if cover.infinity_branched:
        place = cover.branch_points[0]
        for b in range(p):
            a = 0
            while True:
                atom = DifferentialAtom.poly(a, b)
                if atom_valuation(cover, atom, place) < 0:
                    break
                out.append(atom)
                a += 1
    else:
        for place in cover.branch_points:
            for b in range(p):
                a = 1
                while True:
                    atom = DifferentialAtom.pole(place.center, a, b)
                    if atom_valuation(cover, atom, place) < 0:
                        break
                    if all(atom_valuation(cover, atom, q) >= 0 for q in cover.branch_points):
                        out.append(atom)
                    a += 1
    return sorted(out)


# -- regularity above an unbranched infinity -----------------------------------


def infinity_precision(cover, atoms):
    """Absolute u-precision for the x-part series at infinity.

    Max pole order of an atom's x-part at infinity, plus 2 for dx = -u^-2 du,
    plus a margin of p.
    """
    pole = max([a.a for a in atoms if a.kind == POLY] or [0])
    return pole + 2 + cover.p


def y_series_at_infinity(cover, precision):
    """The p expansions y = zeta + O(u), zeta in F_p, above an unbranched infinity."""
    f_series = TruncatedSeries.at_infinity(cover.f, precision)
    return [solve_artin_schreier_series(f_series, zeta, precision) for zeta in range(cover.p)]


def _infinity_constraints(cover, atoms):
    p = cover.p
    prec = infinity_precision(cover, atoms)
    rows = []
    for y in y_series_at_infinity(cover, prec):
        ypow = [TruncatedSeries.constant(p, 1, prec)]
        for _ in range(1, p):
            ypow.append(ypow[-1] * y)
        # x-part * y^b must vanish to order >= 2 in u so that (...)(-u^-2 du) is regular
        cols = []
        for atom in atoms:
            s = TruncatedSeries.at_infinity(atom.function(p), prec) * ypow[atom.b]
            if s.absprec < 2:
                raise PrecisionExhausted(f"series for {atom} only known to O(u^{s.absprec})")
            cols.append(s)
        low = min([0] + [s.valuation for s in cols])
        for e in range(low, 2):
            rows.append([s.coefficient(e) for s in cols])
    return np.array(rows, dtype=np.int64).reshape(len(rows), len(atoms))


@dataclass
class RegularBasis:
    cover: object
    atoms: tuple
    vectors: np.ndarray
    free_columns: tuple
    index: dict = field(repr=False, default_factory=dict)

    def __post_init__(self):
        if not self.index:
            self.index = {a: i for i, a in enumerate(self.atoms)}

    def __len__(self):
        return self.vectors.shape[0]

    def element(self, k):
        return YDifferential.from_coords(self.cover.p, self.coords_of(k))

    def elements(self):
        return [self.element(k) for k in range(len(self))]

    def coords_of(self, k):
        return {self.atoms[i]: int(c) for i, c in enumerate(self.vectors[k]) if c}

    def split_element(self, k):
        """Components of basis element k as SplitFractions (fast path)."""
        p = self.cover.p
        comps = [SplitFraction.zero(p) for _ in range(p)]
        for i, c in enumerate(self.vectors[k]):
            if c:
                atom = self.atoms[i]
                comps[atom.b] = comps[atom.b] + atom.split(p) * int(c)
        return comps

    def solve(self, vec):
        """Basis coordinates of an atom-coordinate vector; None if not in the span."""
        p = self.cover.p
        vec = np.asarray(vec, dtype=np.int64) % p
        coeffs = vec[list(self.free_columns)]
        if not np.array_equal((coeffs @ self.vectors) % p, vec):
            return None
        return coeffs

    def vector_of(self, omega):
        """Atom-coordinate vector of a YDifferential (error if it uses other atoms)."""
        vec = np.zeros(len(self.atoms), dtype=np.int64)
        for atom, c in omega.coords().items():
            if atom not in self.index:
                raise InternalAssertion(f"{atom} is not a candidate atom")
            vec[self.index[atom]] = c
        return vec


def regular_basis(cover):
    """Basis of H^0(Y, Omega^1) of length exactly genus(Y)."""
    p = cover.p
    atoms = tuple(candidate_atoms(cover))
    for place in cover.branch_points:
        local = [a for a in atoms if (a.kind == POLY) == place.at_infinity and (place.at_infinity or a.center == place.center)]
        vals = [atom_valuation(cover, a, place) for a in local]
        if len(set(vals)) != len(vals):
            raise InternalAssertion(f"atoms at {place} do not have distinct valuations")
    if cover.infinity_branched or not atoms:
        vectors = np.eye(len(atoms), dtype=np.int64)
        free = tuple(range(len(atoms)))
    else:
        constraints = _infinity_constraints(cover, atoms)
        vectors, free = kernels.kernel_basis(constraints, p)
    if vectors.shape[0] != cover.genus:
        raise BasisDeficient(
            f"found {vectors.shape[0]} regular differentials for a genus {cover.genus} curve ({cover})"
        )
    return RegularBasis(cover, atoms, vectors, free)


# -- independent regularity checker -------------------------------------------


def _component_poles_ok(cover, comp):
    if comp.is_zero() or comp.den.is_constant():
        return True
    try:
        roots = split_denominator(comp.den)
    except NonSplitDenominator:
        return False
    if cover.infinity_branched:
        return False
    centers = {b.center for b in cover.branch_points}
    return all(c in centers for c, _ in roots)


def verify_regular(cover, omega):
    """True iff omega has no poles on Y.

    Points above a branch point: the summands omega_b y^b dx have valuations
    in distinct classes mod p there, so the valuation of omega is the minimum
    of the exact valuations of its summands.  Points above an unbranched
    infinity: exact series expansion of the whole combination at each point.
    Everywhere else y is integral and the Vandermonde matrix of the p local
    branches y + k is invertible, so each omega_b dx must be regular on P^1.
    """
    p = cover.p
    comps = omega.components
    if all(c.is_zero() for c in comps):
        return True
    if not all(_component_poles_ok(cover, c) for c in comps):
        return False
    for place in cover.branch_points:
        d = place.d
        vals = []
        for b, comp in enumerate(comps):
            if comp.is_zero():
                continue
            if place.at_infinity:
                v = p * comp.order_at_infinity() - d * b + (p - 1) * (d + 1) - 2 * p
            else:
                v = p * comp.order_at(place.center) - d * b + (p - 1) * (d + 1)
            vals.append(v)
        if min(vals) < 0:
            return False
    if cover.infinity_branched:
        return True
    lows = [c.order_at_infinity() for c in comps if not c.is_zero()]
    prec = 2 - min(0, min(lows)) + p
    for y in y_series_at_infinity(cover, prec):
        total = TruncatedSeries.zero(p, prec)
        ypow = TruncatedSeries.constant(p, 1, prec)
        for b, comp in enumerate(comps):
            if b:
                ypow = ypow * y
            if comp.is_zero():
                continue
            total = total + TruncatedSeries.at_infinity(comp, prec) * ypow
        if total.absprec < 2:
            raise PrecisionExhausted("series at infinity too short to decide regularity")
        if total.valuation < 2:
            return False
    return True
