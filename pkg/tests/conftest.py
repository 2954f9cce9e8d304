import numpy as np
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from cartier_lab.exactalg import PolarPart, Polynomial, RationalFunction

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

PRIMES = (2, 3, 5, 7, 11)
primes = st.sampled_from(PRIMES)


@st.composite
def polynomials(draw, p, max_degree=8):
    coeffs = draw(st.lists(st.integers(0, p - 1), max_size=max_degree + 1))
    return Polynomial(p, coeffs)


@st.composite
def split_rationals(draw, p, max_order=4, max_degree=5):
    """Polynomial part plus random polar parts at F_p-rational centers."""
    total = RationalFunction(draw(polynomials(p, max_degree)))
    centers = draw(st.sets(st.integers(0, p - 1), max_size=min(p, 3)))
    for c in sorted(centers):
        order = draw(st.integers(1, max_order))
        coeffs = {k: draw(st.integers(0, p - 1)) for k in range(1, order + 1)}
        total = total + PolarPart(p, c, coeffs).to_rational()
    return total


@st.composite
def prime_and_rational(draw, max_order=4, max_degree=5):
    p = draw(primes)
    return p, draw(split_rationals(p, max_order, max_degree))


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


@pytest.fixture(scope="session")
def small_corpus():
    """60 random reduced covers with their bases, matrices and profiles."""
    from cartier_lab.ascurve import build_cover
    from cartier_lab.cartier import cover_profile
    from cartier_lab.corpus import random_corpus

    out = []
    for p, f in random_corpus(99, 60, total_max=16):
        cover = build_cover(p, f)
        if cover.genus == 0:
            continue
        basis, matrix, profile = cover_profile(cover)
        out.append((cover, basis, matrix, profile))
    return out


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
