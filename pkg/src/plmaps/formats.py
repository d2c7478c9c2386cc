"""Wire formats: JSON map documents, CSV point tables, SVG polylines.

A map document is a JSON object with key "breakpoints" holding an ordered
list of [x, y] pairs, each coordinate a rational string "p/q" or an integer
string "p".  Unimodal documents add an optional "v".  Parsing is strict:
non-canonical or invalid maps are rejected with a field diagnostic.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .core import PLMap, format_rational, parse_rational
from .errors import FormatError, ValidationError
from .unimodal import UnimodalMap

__all__ = [
    "plmap_to_dict",
    "plmap_to_json",
    "parse_plmap",
    "parse_unimodal",
    "points_to_csv",
    "points_to_svg",
    "sample_points",
]


def plmap_to_dict(m: PLMap) -> dict:
    doc: dict = {
        "breakpoints": [[format_rational(x), format_rational(y)] for x, y in m.points]
    }
    if isinstance(m, UnimodalMap):
        doc["v"] = format_rational(m.v)
    return doc


def plmap_to_json(m: PLMap) -> str:
    return json.dumps(plmap_to_dict(m), indent=2) + "\n"


def _coordinate(raw: object, where: str) -> Fraction:
    if isinstance(raw, bool) or not isinstance(raw, (str, int)):
        raise FormatError(f"{where}: expected a rational string, got {raw!r}")
    try:
        return parse_rational(str(raw), where)
    except ValidationError as exc:
        raise FormatError(str(exc)) from None


def _document(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise FormatError("top level: expected an object")
    return doc


def _breakpoints(doc: dict) -> list[tuple[Fraction, Fraction]]:
    raw = doc.get("breakpoints")
    if not isinstance(raw, list):
        raise FormatError('breakpoints: missing or not a list')
    pairs = []
    for i, entry in enumerate(raw):
        if not isinstance(entry, list) or len(entry) != 2:
            raise FormatError(f"breakpoints[{i}]: expected an [x, y] pair")
        pairs.append(
            (
                _coordinate(entry[0], f"breakpoints[{i}][0]"),
                _coordinate(entry[1], f"breakpoints[{i}][1]"),
            )
        )
    return pairs


def parse_plmap(text: str) -> PLMap:
    """Parse and validate a map document; rejects non-canonical input."""
    pairs = _breakpoints(_document(text))
    try:
        return PLMap(tuple(pairs))
    except ValidationError as exc:
        raise FormatError(f"breakpoints: {exc}") from None


def parse_unimodal(text: str) -> UnimodalMap:
    """Parse a unimodal map document; "v" is inferred as the peak if absent."""
    doc = _document(text)
    pairs = _breakpoints(doc)
    v = _coordinate(doc["v"], "v") if "v" in doc else None
    try:
        return UnimodalMap.from_plmap(PLMap(tuple(pairs)), v)
    except ValidationError as exc:
        raise FormatError(f"breakpoints: {exc}") from None


def sample_points(m: PLMap, samples: int) -> list[tuple[Fraction, Fraction]]:
    """Breakpoints merged with ``samples`` uniformly spaced exact samples."""
    if samples < 2:
        raise ValidationError(f"need at least 2 samples, got {samples}")
    xs = {Fraction(i, samples - 1) for i in range(samples)}
    xs.update(m.xs)
    return [(x, m(x)) for x in sorted(xs)]


def points_to_csv(m: PLMap, samples: int) -> str:
    rows = ["x,y,x_float,y_float"]
    for x, y in sample_points(m, samples):
        rows.append(f"{format_rational(x)},{format_rational(y)},{float(x)!r},{float(y)!r}")
    return "\n".join(rows) + "\n"


def points_to_svg(m: PLMap, samples: int) -> str:
    """Graph of the map as a single polyline in a unit viewBox.

    Point coordinates are the graph's own; the transform flips the y axis
    so the rendered picture has y growing upward.
    """
    pts = " ".join(f"{float(x)!r},{float(y)!r}" for x, y in sample_points(m, samples))
    return (
        '<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 1 1">\n'
        '  <polyline fill="none" stroke="black" stroke-width="0.005" '
        f'transform="translate(0,1) scale(1,-1)" points="{pts}"/>\n'
        "</svg>\n"
    )
