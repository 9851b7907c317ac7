"""Count-table ingestion, smoothing, and the JSON/CSV report format."""
import csv
import io
import json
import os
from dataclasses import dataclass, field
from importlib import resources

import numpy as np

from . import __version__
from .core import SUM_TOL, as_table, closure, geometric_margins
from .decomposition import (four_part, independent_part, interaction_part,
                            local_odds_ratios)
from .errors import EmptyInput, MalformedCsv, NonPositiveEntry, ZeroCellRejected
from .measures import KINDS, contribution_array, measure_report, simplicial_deviance

SCHEMA_VERSION = 1

TOLERANCES = {
    "probability_sum": SUM_TOL,
    "reconstruction": 1e-10,
    "orthogonality": 1e-9,
    "identity_E2_Q2_M2": 1e-10,
    "degenerate_measure": 1e-14,
}

PART_ORDER = ("ind", "int", "sym", "skew", "syind", "skind",
              "syint", "skint", "QS", "GMH")


@dataclass(frozen=True)
class CountTable:
    """Nonnegative integer frequencies with optional row/column labels."""

    counts: np.ndarray
    row_labels: tuple = None
    col_labels: tuple = None

    def __post_init__(self):
        counts = np.asarray(self.counts)
        if counts.ndim != 2 or counts.shape[0] < 2 or counts.shape[1] < 2:
            raise MalformedCsv(
                f"count table must have at least 2 rows and 2 columns, got {counts.shape}")
        if not np.issubdtype(counts.dtype, np.integer):
            raise MalformedCsv("counts must be integers")
        if np.any(counts < 0):
            raise MalformedCsv("counts must be nonnegative")
        if counts.sum() < 1:
            raise EmptyInput("total count must be at least 1")
        counts = counts.astype(np.int64)
        counts.flags.writeable = False
        object.__setattr__(self, "counts", counts)

    @property
    def shape(self):
        return self.counts.shape

    @property
    def total(self):
        return int(self.counts.sum())


@dataclass(frozen=True)
class SmoothingPolicy:
    """How zero cells are handled before closure.

    ``reject`` refuses any zero count; ``pseudocount`` adds a constant to
    every cell.
    """

    mode: str = "reject"
    pseudocount: float = 0.5

    def __post_init__(self):
        if self.mode not in ("reject", "pseudocount"):
            raise ValueError(f"unknown smoothing mode {self.mode!r}")
        if not (np.isfinite(self.pseudocount) and self.pseudocount > 0):
            raise ValueError("pseudocount must be a positive number")

    @classmethod
    def parse(cls, text):
        """Parse ``reject``, ``pseudocount`` or ``pseudocount=<alpha>``."""
        mode, sep, value = text.partition("=")
        if mode == "reject" and not sep:
            return cls("reject")
        if mode == "pseudocount":
            if not sep:
                return cls("pseudocount")
            try:
                return cls("pseudocount", float(value))
            except ValueError as exc:
                raise ValueError(f"invalid pseudocount {value!r}") from exc
        raise ValueError(f"invalid smoothing policy {text!r}")

    def describe(self):
        return {"mode": self.mode,
                "pseudocount": self.pseudocount if self.mode == "pseudocount" else None}


def _is_int(cell):
    try:
        int(cell.strip())
    except ValueError:
        return False
    return True


def parse_counts_csv(source):
    """Read a count table from a CSV path or text stream.

    A header row is assumed when any cell of the first row after its first
    field is not an integer, and a label column when any cell of the first
    data column is not.

    Raises
    ------
    EmptyInput
        No data rows.
    MalformedCsv
        Ragged rows or non-integer data cells; the message names the line.
    """
    if isinstance(source, (str, os.PathLike)):
        with open(source, newline="", encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = source.read()
    rows = [(n, r) for n, r in enumerate(csv.reader(io.StringIO(text)), start=1)
            if any(c.strip() for c in r)]
    if not rows:
        raise EmptyInput("input contains no rows")

    header = None
    # the first field alone may be a row label, so it cannot signal a header
    if not all(_is_int(c) for c in rows[0][1][1:]):
        header = [c.strip() for c in rows[0][1]]
        rows = rows[1:]
    if not rows:
        raise EmptyInput("input contains a header but no data rows")

    labelled = not all(_is_int(r[0]) for _, r in rows)
    width = len(rows[0][1])
    row_labels = []
    data = []
    for lineno, r in rows:
        if len(r) != width:
            raise MalformedCsv(
                f"line {lineno}: expected {width} fields, found {len(r)}")
        cells = r[1:] if labelled else r
        if labelled:
            row_labels.append(r[0].strip())
        values = []
        for cell in cells:
            if not _is_int(cell):
                raise MalformedCsv(f"line {lineno}: non-integer cell {cell!r}")
            v = int(cell.strip())
            if v < 0:
                raise MalformedCsv(f"line {lineno}: negative count {v}")
            values.append(v)
        data.append(values)

    ncols = width - 1 if labelled else width
    col_labels = None
    if header is not None:
        if len(header) == ncols + 1:
            header = header[1:]
        if len(header) != ncols:
            raise MalformedCsv(
                f"line {rows[0][0] - 1}: header has {len(header)} fields for {ncols} columns")
        col_labels = tuple(header)
    return CountTable(np.array(data, dtype=np.int64),
                      tuple(row_labels) if labelled else None, col_labels)


def to_probability(counts, policy=SmoothingPolicy()):
    """Closure of the (optionally smoothed) counts."""
    raw = counts.counts.astype(float)
    if policy.mode == "reject":
        if np.any(raw == 0):
            i, j = np.argwhere(raw == 0)[0]
            raise ZeroCellRejected(
                f"zero count in cell ({i + 1}, {j + 1}); rerun with "
                "--smoothing pseudocount[=alpha] to add a constant to every cell")
        return closure(raw)
    return closure(raw + policy.pseudocount)


def stuart_vision():
    """Unaided distance vision of 7477 women (Stuart, 1953) as a CountTable."""
    text = resources.files(__package__).joinpath("data/stuart_vision.csv").read_text("utf-8")
    return parse_counts_csv(io.StringIO(text))


# -- report document -------------------------------------------------------

def _margins(T):
    r, c = geometric_margins(T)
    return {"rows": r.tolist(), "cols": c.tolist()}


def build_report(counts, policy=SmoothingPolicy(), input_path=None):
    """Assemble the full report document as plain JSON-ready data."""
    P = to_probability(counts, policy)
    I, J = P.shape
    square = I == J
    doc = {
        "meta": {
            "schema_version": SCHEMA_VERSION,
            "tool_version": __version__,
            "input": str(input_path) if input_path is not None else None,
            "dims": [I, J],
            "total_count": counts.total,
            "smoothing": policy.describe(),
            "row_labels": list(counts.row_labels) if counts.row_labels else None,
            "col_labels": list(counts.col_labels) if counts.col_labels else None,
            "square": square,
            "tolerances": dict(TOLERANCES),
        },
        "proportions": P.tolist(),
    }
    if square:
        bundle = four_part(P)
        tables = bundle.parts()
        report = measure_report(P, bundle)
        measures = report.as_dict()
        arrays = {}
        for kind in KINDS:
            arr = contribution_array(P, kind, bundle)
            arrays[kind] = {"percent": arr.percent.tolist(),
                            "degenerate": arr.degenerate}
        odds = {"input": local_odds_ratios(P).tolist(),
                "QS": local_odds_ratios(tables["QS"]).tolist()}
    else:
        tables = {"ind": independent_part(P), "int": interaction_part(P)}
        measures = {"deviance": simplicial_deviance(P)}
        arrays = {}
        odds = {"input": local_odds_ratios(P).tolist()}
    doc["tables"] = {k: tables[k].tolist() for k in PART_ORDER if k in tables}
    doc["margins"] = {"proportions": _margins(P)}
    doc["margins"].update({k: _margins(tables[k]) for k in doc["tables"]})
    doc["measures"] = measures
    doc["arrays"] = arrays
    doc["odds_ratios"] = odds
    return doc


def dumps_report(doc):
    """Canonical serialisation: sorted keys, shortest round-trip float repr."""
    return json.dumps(doc, sort_keys=True, indent=2, allow_nan=False) + "\n"


def validate_report(doc):
    """Re-check the probability-table invariants of every embedded table."""
    for key in ("meta", "proportions", "tables", "margins", "measures",
                "arrays", "odds_ratios"):
        if key not in doc:
            raise ValueError(f"report is missing the {key!r} section")
    tables = {"proportions": doc["proportions"], **doc["tables"]}
    for name, values in tables.items():
        arr = np.asarray(values, dtype=float)
        if np.any(~np.isfinite(arr)) or np.any(arr <= 0):
            raise NonPositiveEntry(f"table {name!r} has non-positive entries")
        if abs(arr.sum() - 1.0) > 1e-9:
            raise ValueError(f"table {name!r} does not sum to 1")
        as_table(arr)
    return doc


def loads_report(text):
    return validate_report(json.loads(text))


def format_table_csv(values, row_labels=None, col_labels=None, fmt="{:.6g}"):
    """Render a 2-D array as CSV text with the input's label layout."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if col_labels:
        writer.writerow(([""] if row_labels else []) + list(col_labels))
    for i, row in enumerate(np.asarray(values, dtype=float)):
        cells = [fmt.format(v) for v in row]
        writer.writerow(([row_labels[i]] if row_labels else []) + cells)
    return buf.getvalue()


def emit_tables(doc, directory, percent_decimals=2):
    """Write every derived table and contribution array as its own CSV file.

    Returns the list of written paths.
    """
    os.makedirs(directory, exist_ok=True)
    rl = doc["meta"]["row_labels"]
    cl = doc["meta"]["col_labels"]
    written = []

    def write(name, text):
        path = os.path.join(directory, name)
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        written.append(path)

    write("proportions.csv", format_table_csv(doc["proportions"], rl, cl))
    for name, values in doc["tables"].items():
        write(f"{name}.csv", format_table_csv(values, rl, cl))
    for kind, arr in doc["arrays"].items():
        fmt = "{:.%df}" % percent_decimals
        write(f"{kind}_array.csv", format_table_csv(arr["percent"], rl, cl, fmt))
    return written
