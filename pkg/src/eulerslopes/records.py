"""Line-oriented structured output: ``key=value`` records and CSV tables.

Values are written as exact text (fractions as ``n/d``) and quoted with
shell rules when they contain spaces or quotes, so ``parse_record`` recovers
the same mapping.
"""

from __future__ import annotations

import csv
import io
import shlex

from .errors import ParseError


def format_record(fields: dict) -> str:
    parts = []
    for key, value in fields.items():
        key = str(key)
        if not key or "=" in key or any(c.isspace() for c in key):
            raise ValueError(f"bad record key {key!r}")
        parts.append(f"{key}={shlex.quote(str(value))}")
    return " ".join(parts)


def parse_record(line: str) -> dict:
    try:
        tokens = shlex.split(line)
    except ValueError as exc:
        raise ParseError(f"malformed record: {exc}") from None
    out = {}
    for tok in tokens:
        key, sep, value = tok.partition("=")
        if not sep or not key:
            raise ParseError(f"record token {tok!r} is not key=value")
        if key in out:
            raise ParseError(f"duplicate key {key!r} in record")
        out[key] = value
    return out


def format_csv(rows: list) -> str:
    """CSV table whose header is the union of keys in first-seen order."""
    header = []
    for row in rows:
        for key in row:
            if key not in header:
                header.append(key)
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=header, lineterminator="\n", restval="")
    w.writeheader()
    for row in rows:
        w.writerow({k: str(v) for k, v in row.items()})
    return buf.getvalue()


def parse_csv(text: str) -> list:
    return [dict(r) for r in csv.DictReader(io.StringIO(text))]
