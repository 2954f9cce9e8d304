"""Random reduced Artin-Schreier covers for sweeps and property suites."""

from math import gcd

import numpy as np

from .exactalg import PolarPart, Polynomial, RationalFunction


def _coprime_breaks(rng, p, k, total_max):
    """k breaks coprime to p with sum <= total_max (None if impossible)."""
    choices = [d for d in range(1, total_max + 1) if gcd(d, p) == 1]
    for _ in range(100):
        ds = [int(rng.choice(choices)) for _ in range(k)]
        if sum(ds) <= total_max:
            return ds
    return None


def _reduced_terms(rng, p, d, low):
    """Random coefficients for orders low..d with nonzero leading term, none at multiples of p."""
    terms = {d: int(rng.integers(1, p))}
    for k in range(low, d):
        if k % p:
            c = int(rng.integers(0, p))
            if c:
                terms[k] = c
    return terms


def random_f(rng, p, total_max=24, max_points=3, polynomial_share=0.25):
    """A random AS-reduced f over F_p: either a polynomial or finite poles only."""
    if rng.random() < polynomial_share:
        (d,) = _coprime_breaks(rng, p, 1, total_max)
        return RationalFunction(Polynomial.from_dict(p, _reduced_terms(rng, p, d, 1)))
    k = int(rng.integers(1, min(max_points, p) + 1))
    ds = _coprime_breaks(rng, p, k, total_max)
    while ds is None:
        k -= 1
        ds = _coprime_breaks(rng, p, k, total_max)
    centers = sorted(int(c) for c in rng.choice(p, size=k, replace=False))
    f = RationalFunction.zero(p)
    for c, d in zip(centers, ds):
        f = f + PolarPart(p, c, _reduced_terms(rng, p, d, 1)).to_rational()
    return f


def random_corpus(seed, count, primes=(2, 3, 5, 7), total_max=24):
    """Deterministic list of (p, f) pairs."""
    rng = np.random.default_rng(seed)
    out = []
    for k in range(count):
        p = primes[k % len(primes)]
        out.append((p, random_f(rng, p, total_max)))
    return out
