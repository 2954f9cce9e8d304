"""Published reference values, checked end to end by ``cartier-lab verify-paper``."""

import time
from dataclasses import dataclass

from .. import ascurve, bounds, cartier
from .parse import parse_f


def _profile(p, src, n_max=None):
    cover = ascurve.build_cover(p, parse_f(src, p))
    _, _, prof = cartier.cover_profile(cover, n_max)
    return cover, prof.a


def p7_pair():
    c1, a1 = _profile(7, "x^-4", 3)
    c2, a2 = _profile(7, "x^-4 + x^-3", 3)
    expected = {"genus": [9, 9], "a(x^-4)": (9, 9, 9), "a(x^-4 + x^-3)": (6, 8, 9)}
    got = {"genus": [c1.genus, c2.genus], "a(x^-4)": a1, "a(x^-4 + x^-3)": a2}
    return expected, got


def p5_pair():
    c1, a1 = _profile(5, "x^-6", 2)
    _, a2 = _profile(5, "x^-6 + x^-4", 2)
    expected = {"genus": 10, "a1(x^-6)": 10, "a2(x^-6 + x^-4)": 8}
    return expected, {"genus": c1.genus, "a1(x^-6)": a1[0], "a2(x^-6 + x^-4)": a2[1]}


def p3_rank2():
    c, a = _profile(3, "x^-10 + x^-8", 2)
    return {"genus": 9, "a2": 7}, {"genus": c.genus, "a2": a[1]}


D100_L = (44, 59, 64, 66, 67, 68, 69, 70, 71, 72)
D100_U = (55, 82, 93, 98, 99, 99, 99, 99, 99, 99)


def d100_bounds():
    table = bounds.bounds_table(3, [100], n_max=10)
    expected = {"L": D100_L, "U": D100_U}
    return expected, {"L": tuple(table.column("L_combined")), "U": tuple(table.column("U_capped"))}


def x100_exact():
    _, a = _profile(3, "x^100", 10)
    return {"a": D100_U}, {"a": tuple(a)}


def p7_family():
    """a^2 = 9 exactly when c3^2 + 2 c2 = 0, else 8."""
    mismatches = []
    nines = 0
    for c3 in range(7):
        for c2 in range(7):
            for c1 in range(7):
                _, a = _profile(7, f"x^-4 + {c3}*x^-3 + {c2}*x^-2 + {c1}*x^-1", 2)
                want = 9 if (c3 * c3 + 2 * c2) % 7 == 0 else 8
                nines += a[1] == 9
                if a[1] != want:
                    mismatches.append((c3, c2, c1, a[1]))
    return {"curves with a2 = 9": 49, "mismatches": []}, {"curves with a2 = 9": nines, "mismatches": mismatches}


P2_CASES = ("x^3", "x^5 + x^3", "x^-3 + (x-1)^-3", "x^-7 + x^-1 + (x-1)^-5", "x^11 + x", "x^-15 + (x-1)^-9")


def p2_closed():
    expected, got = {}, {}
    for src in P2_CASES:
        cover, a = _profile(2, src)
        data = cover.datum.d_list
        expected[src] = tuple(bounds.cor_p2_value(data, n) for n in range(1, cover.genus + 1))
        got[src] = a
    return expected, got


@dataclass(frozen=True)
class Fixture:
    name: str
    description: str
    run: object


FIXTURES = (
    Fixture("p7-pair", "p=7: x^-4 and x^-4 + x^-3, genus 9, profiles (9,9,9) and (6,8,9)", p7_pair),
    Fixture("p5-pair", "p=5: x^-6 has g = a1 = 10; x^-6 + x^-4 has a2 = 8", p5_pair),
    Fixture("p3-rank2", "p=3: x^-10 + x^-8 has g = 9, a2 = 7", p3_rank2),
    Fixture("d100-bounds", "p=3, d=100: L and U for n = 1..10", d100_bounds),
    Fixture("x100-exact", "p=3: y^3 - y = x^100 realizes every upper bound, n <= 10", x100_exact),
    Fixture("p7-family", "p=7: a2 over x^-4 + c3 x^-3 + c2 x^-2 + c1 x^-1", p7_family),
    Fixture("p2-closed", "p=2: exact a^n equals sum (d-1)/2 - floor(d/2^(n+1))", p2_closed),
)

NAMES = tuple(f.name for f in FIXTURES)


def run_fixtures(names=None):
    """Yield (fixture, passed, expected, got, seconds)."""
    selected = [f for f in FIXTURES if names is None or f.name in names]
    for fx in selected:
        t0 = time.perf_counter()
        expected, got = fx.run()
        yield fx, expected == got, expected, got, time.perf_counter() - t0
