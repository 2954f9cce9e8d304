"""Report records and the json / csv / md renderers."""

import csv
import io
import json
from dataclasses import dataclass, field
from importlib import resources

SCHEMA_VERSION = 1


def load_schema():
    return json.loads(resources.files(__package__).joinpath("report.schema.json").read_text())


@dataclass
class ReportRecord:
    """Result of ``invariants`` for one curve.  ``to_dict`` fixes the field order."""

    engine: str
    p: int
    f: str
    f_reduced: str
    genus: int
    p_rank: int
    g_minus_s: int
    ramification: list
    a_profile: list
    bounds: list
    checks: dict
    timings: dict = field(default_factory=dict)

    def to_dict(self):
        return {
            "schema": SCHEMA_VERSION,
            "engine": self.engine,
            "p": self.p,
            "f": self.f,
            "f_reduced": self.f_reduced,
            "genus": self.genus,
            "p_rank": self.p_rank,
            "g_minus_s": self.g_minus_s,
            "ramification": list(self.ramification),
            "a_profile": list(self.a_profile),
            "bounds": [dict(row) for row in self.bounds],
            "checks": dict(self.checks),
            "timings": {k: round(v, 6) for k, v in self.timings.items()},
        }

    def to_json(self):
        return json.dumps(self.to_dict())


def csv_text(header, rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def md_table(header, rows):
    lines = ["| " + " | ".join(header) + " |", "|" + "|".join("---" for _ in header) + "|"]
    lines += ["| " + " | ".join(str(c) for c in row) + " |" for row in rows]
    return "\n".join(lines) + "\n"


def _bounds_rows(record):
    return [[b["n"], b["L"], "" if b.get("a") is None else b["a"], b["U"]] for b in record["bounds"]]


def render_records(records, fmt):
    """Render a list of report dicts."""
    if fmt == "json":
        return "".join(json.dumps(r) + "\n" for r in records)
    if fmt == "csv":
        header = ["p", "f", "genus", "p_rank", "g_minus_s", "n", "L", "a", "U", "sandwich"]
        rows = [
            [r["p"], r["f"], r["genus"], r["p_rank"], r["g_minus_s"], *row, r["checks"]["sandwich"]]
            for r in records
            for row in _bounds_rows(r)
        ]
        return csv_text(header, rows)
    blocks = []
    for r in records:
        blocks.append(
            f"### y^{r['p']} - y = {r['f_reduced']}\n\n"
            f"genus {r['genus']}, p-rank {r['p_rank']}, g - s = {r['g_minus_s']}, "
            f"ramification {r['ramification']}\n\n" + md_table(["n", "L", "a", "U"], _bounds_rows(r))
        )
    return "\n".join(blocks)


def render_bounds_table(table, fmt):
    """Render a BoundsTable; the md layout puts n across the top as a row of columns."""
    ns = table.column("n")
    L = table.column("L_combined")
    U = table.column("U_capped")
    a = table.column("a_exact")
    if fmt == "json":
        obj = {
            "schema": SCHEMA_VERSION,
            "p": table.p,
            "d": list(table.d_list),
            "g_minus_s": table.g_minus_s,
            "bounds": [
                {"n": r.n, "L": r.L_combined, "U": r.U_capped, "L_closed": r.L_closed, "U_closed": r.U_closed}
                for r in table.rows
            ],
        }
        return json.dumps(obj) + "\n"
    if fmt == "csv":
        rows = [[r.n, r.L_combined, r.U_capped, r.L_closed, r.U_closed] for r in table.rows]
        return csv_text(["n", "L", "U", "L_closed", "U_closed"], rows)
    header = ["n"] + [str(n) for n in ns]
    rows = [["L"] + L, ["U"] + U]
    if any(x is not None for x in a):
        rows.insert(1, ["a"] + ["" if x is None else x for x in a])
    return md_table(header, rows)
