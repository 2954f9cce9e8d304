import numpy as np
import pytest

from cartier_lab import kernels
from cartier_lab.ascurve import build_cover
from cartier_lab.cli.parse import parse_f
from cartier_lab.errors import BasisDeficient
from cartier_lab.regdiff import (
    DifferentialAtom,
    YDifferential,
    atom_valuation,
    candidate_atoms,
    regular_basis,
    verify_regular,
)


def cover(src, p):
    return build_cover(p, parse_f(src, p))


def test_atom_valuation_examples():
    c = cover("x^-4", 7)
    place = c.branch_points[0]
    assert atom_valuation(c, DifferentialAtom.pole(0, 2, 4), place) == 0
    c2 = cover("x^-3", 2)
    assert atom_valuation(c2, DifferentialAtom.pole(0, 2, 0), c2.branch_points[0]) == 0
    for p, src, d in [(7, "x^-4", 4), (5, "x^-3 + (x-1)^-2", 3)]:
        c = cover(src, p)
        assert atom_valuation(c, DifferentialAtom.poly(0, 0), c.branch_points[0]) == (p - 1) * (d + 1)


def test_candidate_atoms_p7():
    atoms = candidate_atoms(cover("x^-4", 7))
    expected = sorted(DifferentialAtom.pole(0, a, b) for a in range(1, 6) for b in range(7) if 7 * a + 4 * b <= 30)
    assert atoms == expected
    assert len(atoms) == 15


def test_candidate_atoms_small_cases():
    assert candidate_atoms(cover("x^3", 2)) == [DifferentialAtom.poly(0, 0)]
    atoms = candidate_atoms(cover("x^-3 + (x-1)^-3", 2))
    assert atoms == sorted(DifferentialAtom.pole(c, a, 0) for c in (0, 1) for a in (1, 2))


def test_regular_basis_p7_is_monomial():
    basis = regular_basis(cover("x^-4", 7))
    assert len(basis) == 9
    expected = {DifferentialAtom.pole(0, a, b) for a in range(2, 6) for b in range(7) if 7 * a + 4 * b <= 30}
    got = set()
    for k in range(len(basis)):
        coords = basis.coords_of(k)
        assert len(coords) == 1 and set(coords.values()) == {1}
        got |= set(coords)
    assert got == expected


def test_regular_basis_genus_one_and_two_points():
    b = regular_basis(cover("x^3", 2))
    assert len(b) == 1 and b.coords_of(0) == {DifferentialAtom.poly(0, 0): 1}
    c = cover("x^-3 + (x-1)^-3", 2)
    basis = regular_basis(c)
    assert len(basis) == 3
    span_targets = [
        {DifferentialAtom.pole(0, 2, 0): 1},
        {DifferentialAtom.pole(1, 2, 0): 1},
        {DifferentialAtom.pole(0, 1, 0): 1, DifferentialAtom.pole(1, 1, 0): 1},
    ]
    for coords in span_targets:
        omega = YDifferential.from_coords(2, coords)
        assert verify_regular(c, omega)
        assert basis.solve(basis.vector_of(omega)) is not None
    assert kernels.rank(basis.vectors, 2) == 3


def test_verify_regular_examples():
    c = cover("x^-3 + (x-1)^-3", 2)
    assert not verify_regular(c, YDifferential.from_coords(2, {DifferentialAtom.pole(0, 1, 0): 1}))
    assert verify_regular(c, YDifferential.zero(2))
    # pole at a point that is not a branch point
    assert not verify_regular(c, YDifferential(2, [parse_f("(x-1)^-1", 2)]))
    c7 = cover("x^-4", 7)
    assert not verify_regular(c7, YDifferential.from_coords(7, {DifferentialAtom.pole(0, 1, 0): 1}))


def test_basis_deficient_is_raised(monkeypatch):
    import cartier_lab.regdiff as rd

    c = cover("x^-4 + x^-1 + (x-2)^-3", 5)
    real = rd.candidate_atoms
    monkeypatch.setattr(rd, "candidate_atoms", lambda cv: real(cv)[:-2])
    with pytest.raises(BasisDeficient):
        regular_basis(c)


def test_corpus_basis_properties(small_corpus):
    for cv, basis, _, _ in small_corpus:
        assert len(basis) == cv.genus
        assert kernels.rank(basis.vectors, cv.p) == cv.genus
        for omega in basis.elements():
            assert verify_regular(cv, omega)


def test_verify_regular_matches_span(small_corpus, rng):
    checked = 0
    for cv, basis, _, _ in small_corpus[:25]:
        p = cv.p
        n = len(basis.atoms)
        for _ in range(8):
            if rng.random() < 0.5:
                vec = (rng.integers(0, p, size=len(basis)) @ basis.vectors) % p
            else:
                vec = rng.integers(0, p, size=n)
            omega = YDifferential.from_coords(p, {basis.atoms[i]: int(c) for i, c in enumerate(vec) if c})
            assert verify_regular(cv, omega) == (basis.solve(vec) is not None)
            checked += 1
    assert checked >= 100


def _divisor_degree(cv, atom):
    """Total valuation of a monomial atom on a one-point cover (closed form)."""
    p = cv.p
    place = cv.branch_points[0]
    d = place.d
    v = atom_valuation(cv, atom, place)
    if place.at_infinity:
        # zeros of x at the p points over 0, and of y at the one with y = 0
        return v + p * atom.a + d * atom.b
    return v + p * (atom.a - 2) + d * atom.b


@pytest.mark.parametrize("p, src", [(7, "x^-4"), (5, "x^-6"), (3, "x^-10"), (3, "x^100"), (5, "x^7"), (2, "x^9")])
def test_divisor_degree_of_monomial_basis(p, src):
    cv = cover(src, p)
    basis = regular_basis(cv)
    for k in range(len(basis)):
        coords = basis.coords_of(k)
        if len(coords) == 1:
            (atom,) = coords
            assert _divisor_degree(cv, atom) == 2 * cv.genus - 2


def test_coords_round_trip(small_corpus):
    for cv, basis, _, _ in small_corpus[:20]:
        for k in range(len(basis)):
            omega = basis.element(k)
            assert np.array_equal(basis.vector_of(omega), basis.vectors[k] % cv.p)
