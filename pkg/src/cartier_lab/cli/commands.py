"""Subcommand implementations.  Each returns data; printing happens in main."""

import itertools
import json
import os
import re
import string
import time
from concurrent.futures import ProcessPoolExecutor
from math import gcd

import numpy as np

from .. import __version__, ascurve, bounds, cartier
from ..errors import BoundViolation, CartierLabError, InputError
from ..exactalg import PolarPart, Polynomial, RationalFunction, check_prime
from .parse import CurveSpec, print_f
from .report import ReportRecord, csv_text, md_table

ENGINE = f"cartier-lab {__version__}"

SWEEP_HEADER = ["index", "p", "f", "genus", "s", "g_minus_s", "a_profile", "L", "U", "sandwich_ok", "error"]


def default_jobs():
    raw = os.environ.get("CARTIER_LAB_JOBS", "1")
    try:
        jobs = int(raw)
    except ValueError:
        raise InputError(f"CARTIER_LAB_JOBS must be an integer, got {raw!r}") from None
    return max(jobs, 1)


def _exact_profile(cover, n_max):
    if cover.genus == 0:
        return (0,) * n_max
    _, _, profile = cartier.cover_profile(cover, n_max)
    return profile.a


def cmd_invariants(spec, n_max=None):
    """Genus, p-rank, a-profile and bounds for one curve."""
    timings = {}
    t0 = time.perf_counter()
    f = spec.function()
    cover = ascurve.build_cover(spec.p, f)
    timings["cover"] = time.perf_counter() - t0
    n_max = n_max or max(cover.genus, 1)
    t1 = time.perf_counter()
    a = _exact_profile(cover, n_max)
    timings["profile"] = time.perf_counter() - t1
    t2 = time.perf_counter()
    table = bounds.bounds_table(spec.p, cover.datum, n_max=n_max)
    timings["bounds"] = time.perf_counter() - t2
    rows = []
    sandwich = True
    for row, a_n in zip(table.rows, a):
        sandwich = sandwich and row.L_combined <= a_n <= row.U_capped
        rows.append({"n": row.n, "L": row.L_combined, "U": row.U_capped, "a": a_n})
    timings["total"] = time.perf_counter() - t0
    return ReportRecord(
        engine=ENGINE,
        p=spec.p,
        f=spec.label(),
        f_reduced=print_f(cover.f),
        genus=cover.genus,
        p_rank=cover.p_rank,
        g_minus_s=cover.g_minus_s,
        ramification=list(cover.datum.d_list),
        a_profile=list(a),
        bounds=rows,
        checks={"sandwich": sandwich, "stable_equals_g_minus_s": True},
        timings=timings,
    )


def cmd_bounds(p, d_list, n_max=10, g_X=0, s_X=0, a_X_profile=None):
    check_prime(p)
    if a_X_profile is None:
        a_X_profile = (0,) * n_max
    return bounds.bounds_table(p, d_list, a_X_profile=a_X_profile, n_max=n_max, g_X=g_X, s_X=s_X)


def cmd_normalize(p, src, source=None, target=None):
    """AS-reduce f, optionally after moving ``source`` to ``target`` by a Moebius map."""
    f = CurveSpec(p, src).function()
    if source is not None or target is not None:
        f = ascurve.move_point(f, source, target)
    reduced, witness = ascurve.as_reduce(p, f)
    return {"p": p, "f": print_f(f), "f_reduced": print_f(reduced), "witness": print_f(witness)}


# -- sweeps ---------------------------------------------------------------------


def parse_int_list(text):
    """'3,5,7' or '1-15' or a mix ('1-5,9'); an inverted range is empty."""
    out = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        m = re.fullmatch(r"(\d+)\s*-\s*(\d+)", chunk)
        try:
            out.extend(range(int(m.group(1)), int(m.group(2)) + 1) if m else [int(chunk)])
        except ValueError:
            raise InputError(f"bad integer list {text!r}") from None
    return out


def family_curves(p, template):
    """Instantiate ``template`` for every assignment of F_p values to its {name} fields."""
    names = []
    for _, name, _, _ in string.Formatter().parse(template):
        if name is not None:
            if not name.isidentifier():
                raise InputError(f"bad placeholder {{{name}}} in family template")
            if name not in names:
                names.append(name)
    return [template.format(**dict(zip(names, values))) for values in itertools.product(range(p), repeat=len(names))]


def single_pole_curves(p, d_values, count, seed, at_infinity=False):
    """``count`` random reduced curves per admissible d, with one branch point (0 or infinity)."""
    rng = np.random.default_rng(seed)
    out = []
    for d in d_values:
        if d < 1 or gcd(d, p) != 1:
            continue
        for _ in range(count):
            terms = {d: int(rng.integers(1, p))}
            for k in range(1, d):
                c = int(rng.integers(0, p))
                if c and k % p:
                    terms[k] = c
            if at_infinity:
                f = RationalFunction(Polynomial.from_dict(p, terms))
            else:
                f = PolarPart(p, 0, terms).to_rational()
            out.append(print_f(f))
    return out


def _sweep_row(task):
    index, p, src, n_max = task
    try:
        spec = CurveSpec(p, src)
        cover = ascurve.build_cover(p, spec.function())
        n = n_max or max(cover.genus, 1)
        a = _exact_profile(cover, n)
        table = bounds.bounds_table(p, cover.datum, n_max=n)
        L = table.column("L_combined")
        U = table.column("U_capped")
        ok = all(lo <= x <= hi for lo, x, hi in zip(L, a, U))
        return [index, p, spec.label(), cover.genus, cover.p_rank, cover.g_minus_s,
                " ".join(map(str, a)), " ".join(map(str, L)), " ".join(map(str, U)), ok, ""]
    except CartierLabError as exc:
        return [index, p, src, "", "", "", "", "", "", "", f"{type(exc).__name__}: {exc}"]


def work_estimate(tasks):
    """Rough cost in units of one genus-10 cover (matrix work grows like g^3)."""
    total = 0.0
    for _, p, src, _ in tasks:
        try:
            g = ascurve.build_cover(p, CurveSpec(p, src).function()).genus
        except CartierLabError:
            g = 0
        total += (g / 10) ** 3
    return total


def cmd_sweep(p_list, sources, n_max=None, jobs=1, log=None):
    """Rows for every (p, src); the output order follows the input order, whatever ``jobs`` is."""
    tasks = [(k, p, src, n_max) for k, (p, src) in enumerate(zip(p_list, sources))]
    if log is not None and tasks:
        log.write(f"sweep: {len(tasks)} curves, estimated work {work_estimate(tasks):.1f} units, jobs={jobs}\n")
    if jobs <= 1 or len(tasks) < 2:
        return [_sweep_row(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_sweep_row, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))


def render_sweep(rows, fmt):
    if fmt == "csv":
        return csv_text(SWEEP_HEADER, rows)
    if fmt == "md":
        return md_table(SWEEP_HEADER, rows)
    return "".join(json.dumps(dict(zip(SWEEP_HEADER, row))) + "\n" for row in rows)


def read_curve_lines(stream):
    specs = []
    for line in stream:
        if line.strip():
            specs.append(CurveSpec.from_json_line(line))
    return specs


def check_sandwich(records):
    bad = [r for r in records if not r["checks"]["sandwich"]]
    if bad:
        raise BoundViolation(f"exact profile outside the bounds for {bad[0]['f']} (p={bad[0]['p']})")

