"""Multiplication tables of the products over the canonical blade basis."""
from __future__ import annotations

import csv
import io
import json
from fractions import Fraction

from .errors import UnsupportedInput, UsageError
from .expr import evaluate
from .forms import Form, Signature, format_coeff, render_blade
from .products import ProductKind

TABLE_MAX_N = 8
TEXT_MAX_N = 4


def table_entries(sig: Signature, kind: ProductKind):
    """Yield (left blade, right blade, result Form or None where the product is undefined)."""
    if sig.n > TABLE_MAX_N:
        raise UsageError(f"full tables are limited to n <= {TABLE_MAX_N}, got n = {sig.n}")
    blades = sig.blades()
    for a in blades:
        fa = Form.from_mask(sig, a)
        for b in blades:
            try:
                result = kind.apply(fa, Form.from_mask(sig, b))
            except UnsupportedInput:
                result = None
            yield a, b, result


def table_document(sig: Signature, kind: ProductKind) -> dict:
    n = sig.n
    entries = []
    for a, b, result in table_entries(sig, kind):
        entry = {"left": render_blade(a, n), "right": render_blade(b, n)}
        if result is None:
            entry["result"] = None
            entry["error"] = "undefined: grade(left) > grade(right)"
        else:
            entry["result"] = [{"blade": render_blade(m, n), "coeff": format_coeff(c)} for m, c in result]
        entries.append(entry)
    return {
        "signature": {"p": sig.p, "q": sig.q},
        "product": str(kind),
        "basis": [render_blade(m, n) for m in sig.blades()],
        "entries": entries,
    }


def emit_table(sig: Signature, kind: ProductKind, fmt: str = "json") -> str:
    if fmt == "json":
        return json.dumps(table_document(sig, kind), indent=1)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["left", "right", "result"])
        for a, b, result in table_entries(sig, kind):
            cell = "undefined" if result is None else result.term_list()
            writer.writerow([render_blade(a, sig.n), render_blade(b, sig.n), cell])
        return buf.getvalue()
    if fmt == "text":
        return _text_grid(sig, kind)
    raise UsageError(f"unknown table format {fmt!r}; expected json, csv or text")


def _text_grid(sig: Signature, kind: ProductKind) -> str:
    if sig.n > TEXT_MAX_N:
        raise UsageError(f"text grids are limited to n <= {TEXT_MAX_N}, got n = {sig.n}")
    basis = sig.blades()
    names = [render_blade(m, sig.n) for m in basis]
    cells = {}
    for a, b, result in table_entries(sig, kind):
        cells[a, b] = "n/a" if result is None else str(result)
    width = max(len(c) for c in list(cells.values()) + names)
    head = f"{kind} {sig}"
    first = max(len(head), width)
    lines = [" ".join([head.ljust(first)] + [nm.rjust(width) for nm in names])]
    for a, nm in zip(basis, names):
        lines.append(" ".join([nm.ljust(first)] + [cells[a, b].rjust(width) for b in basis]))
    return "\n".join(lines) + "\n"


def validate_table(doc: dict) -> list:
    """Recompute every entry of a JSON table document; return the mismatching entries."""
    sig = Signature(doc["signature"]["p"], doc["signature"]["q"])
    kind = ProductKind.parse(doc["product"])
    expected_count = (1 << sig.n) ** 2
    bad = []
    if len(doc["entries"]) != expected_count:
        bad.append({"error": f"{len(doc['entries'])} entries, expected {expected_count}"})
    for entry in doc["entries"]:
        a = evaluate(entry["left"], sig)
        b = evaluate(entry["right"], sig)
        try:
            want = kind.apply(a, b)
        except UnsupportedInput:
            want = None
        if entry["result"] is None:
            got = None
        else:
            got = Form.zero(sig)
            for term in entry["result"]:
                got = got + Fraction(term["coeff"]) * evaluate(term["blade"], sig)
        if got != want:
            bad.append(entry)
    return bad
