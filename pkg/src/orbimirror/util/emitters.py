#!/usr/bin/env python
##############################################################################
#
# orbimirror        Weighted projective spaces and their mirrors
#                   (c) 2026 The orbimirror developers.
#                   All rights reserved.
#
# File coded by:    orbimirror developers
#
# See AUTHORS.txt for a list of people who contributed.
# See LICENSE.txt for license information.
#
##############################################################################

"""Text output of tables and reports.

JSON is the lossless format.  Every document has the top-level keys
"weights", "mu", "kind" and "rows", and every rational is a "p/q"
string.  Markdown and CSV are views of the same rows.
"""

__all__ = ["FORMATS", "emit", "canonical", "emitJSON", "emitMarkdown",
           "emitCSV"]

import csv
import io
import json
from collections import OrderedDict
from fractions import Fraction

from orbimirror.exceptions import InputError
from orbimirror.util.rationals import rationalToString

FORMATS = ("json", "md", "csv")


def canonical(value):
    """Convert a cell value to plain JSON-compatible data.

    Fractions become "p/q" text.  Plain ints, used for indices and
    exponents, booleans and None are kept.  Sequences become lists and
    mappings OrderedDicts.
    """
    if value is None or isinstance(value, (bool, int, str)):
        return value
    if isinstance(value, Fraction):
        return rationalToString(value)
    if isinstance(value, dict):
        return OrderedDict((str(k), canonical(v)) for k, v in value.items())
    if isinstance(value, (list, tuple)):
        return [canonical(v) for v in value]
    if hasattr(value, "label"):
        return value.label()
    return rationalToString(value)


def _integerList(values):
    return [int(x) for x in values]


def emitJSON(kind, weights, rows):
    doc = OrderedDict()
    doc["weights"] = _integerList(weights)
    doc["mu"] = sum(doc["weights"])
    doc["kind"] = kind
    doc["rows"] = [canonical(r) for r in rows]
    return json.dumps(doc, indent=2, sort_keys=False) + "\n"


def _columns(rows):
    cols = []
    for r in rows:
        for k in r:
            if k not in cols:
                cols.append(k)
    return cols


def _cellText(value):
    v = canonical(value)
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, list):
        return " ".join(_cellText(x) for x in v)
    if isinstance(v, dict):
        return " ".join("%s=%s" % (k, _cellText(x)) for k, x in v.items())
    return str(v)


def emitMarkdown(kind, weights, rows):
    """Markdown view with a heading and one pipe table."""
    w = ",".join(str(x) for x in weights)
    lines = ["## %s for w = (%s)" % (kind, w), ""]
    cols = _columns(rows)
    if not cols:
        lines.append("(empty)")
        return "\n".join(lines) + "\n"
    lines.append("| " + " | ".join(cols) + " |")
    lines.append("|" + "|".join("---" for _ in cols) + "|")
    for r in rows:
        cells = [_cellText(r.get(c)).replace("|", "\\|") for c in cols]
        lines.append("| " + " | ".join(cells) + " |")
    return "\n".join(lines) + "\n"


def emitCSV(kind, weights, rows):
    cols = _columns(rows)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if cols:
        writer.writerow(cols)
    for r in rows:
        writer.writerow([_cellText(r.get(c)) for c in cols])
    return buf.getvalue()


def emit(kind, weights, rows, fmt="json"):
    """Render rows in one of FORMATS.

    kind    --  name of the table or report.
    weights --  the weight vector.
    rows    --  list of mappings, all cells exact.
    fmt     --  "json", "md" or "csv".

    Returns the text.
    Raises InputError for an unknown format.
    """
    if fmt == "json":
        return emitJSON(kind, weights, rows)
    if fmt == "md":
        return emitMarkdown(kind, weights, rows)
    if fmt == "csv":
        return emitCSV(kind, weights, rows)
    raise InputError("unknown format %r, use one of %s" % (
        fmt, ", ".join(FORMATS)))

# End of file
