"""Number-line plots of the slope sets: SVG, ASCII, CSV and PNG output.

Three point classes are drawn: filled black dots for members, open circles
for limit points ``m/n`` that are not themselves members, and green dots for
members that also belong to the row's highlight set.

Built-in figures use the window ``[-4, 4]`` and the caps below.  A row of a
union ``M(g)`` shows the integers plus levels ``n <= max_level``; every row
shows only slopes with ``|q| <= max_denominator``.

* figure 1: ``M(1)``, ``|q| <= 60``, levels ``<= 8``, green ``L1``
* figure 2: ``M(2)``, ``|q| <= 60``, levels ``<= 12``, green ``L(2)``
* figure 3: ``M(2,1)`` and ``M(2,2)`` at ``|q| <= 30``, ``M(2,4)`` at
  ``|q| <= 60``, ``M(2)`` at ``|q| <= 60`` with levels ``<= 12``; no green
* figure 4: ``Z``, then ``M(1,1)``, ``M(1,2)``, ``M(1,4)`` at ``|q| <= 30``,
  ``30`` and ``60``, then ``M(1)`` at ``|q| <= 60`` with levels ``<= 8``;
  green ``L1``
* figure 5: the rows of figure 3 with ``L(2)`` in green
"""

from __future__ import annotations

import csv
import enum
import io
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional
from xml.sax.saxutils import escape

from .errors import DomainError
from .sets import EnumerationWindow, SlopeSetDescriptor, contains, enumerate_set
from .slopes import RationalInterval, format_fraction, slope_from_value


class PointClass(enum.Enum):
    MEMBER = "member-filled"
    LIMIT = "limit-open"
    GREEN = "highlighted-green"


@dataclass(frozen=True)
class PlotPoint:
    value: Fraction
    cls: PointClass


@dataclass(frozen=True)
class PlotRow:
    label: str
    points: tuple
    set_descriptor: Optional[SlopeSetDescriptor] = None
    highlight: Optional[SlopeSetDescriptor] = None

    def __post_init__(self):
        for pt in self.points:
            if pt.cls is PointClass.GREEN:
                if self.highlight is None:
                    raise DomainError(f"row {self.label!r}: green point without a highlight set")
                if not contains(self.highlight, slope_from_value(pt.value)):
                    raise DomainError(f"row {self.label!r}: green point {pt.value} "
                                      f"outside {self.highlight}")


@dataclass(frozen=True)
class PlotSpec:
    rows: tuple
    window: RationalInterval
    title: str = ""

    def __post_init__(self):
        if not self.window.is_bounded or self.window.lo == self.window.hi:
            raise DomainError("plot windows must be bounded with positive length")
        for row in self.rows:
            for pt in row.points:
                if pt.value not in self.window:
                    raise DomainError(f"point {pt.value} outside the plot window")


@dataclass(frozen=True)
class RowRecipe:
    """How a built-in row is computed."""

    set_descriptor: SlopeSetDescriptor
    max_denominator: int
    max_level: Optional[int] = None
    highlight: Optional[SlopeSetDescriptor] = None

    def window(self, interval: RationalInterval) -> EnumerationWindow:
        return EnumerationWindow(interval, self.max_denominator, self.max_level)


FIGURE_WINDOW = RationalInterval.closed(-4, 4)

_M = SlopeSetDescriptor.M
_L = SlopeSetDescriptor.L

FIGURES = {
    1: ("M(1) with L1 in green", (RowRecipe(_M(1), 60, 8, _L(1)),)),
    2: ("M(2) with L(2) in green", (RowRecipe(_M(2), 60, 12, _L(2)),)),
    3: ("M(2) by level", (
        RowRecipe(_M(2, 1), 30), RowRecipe(_M(2, 2), 30), RowRecipe(_M(2, 4), 60),
        RowRecipe(_M(2), 60, 12))),
    4: ("M(1) by level with L1 in green", (
        RowRecipe(SlopeSetDescriptor.integers(), 1, None, _L(1)),
        RowRecipe(_M(1, 1), 30, None, _L(1)), RowRecipe(_M(1, 2), 30, None, _L(1)),
        RowRecipe(_M(1, 4), 60, None, _L(1)), RowRecipe(_M(1), 60, 8, _L(1)))),
    5: ("M(2) by level with L(2) in green", (
        RowRecipe(_M(2, 1), 30, None, _L(2)), RowRecipe(_M(2, 2), 30, None, _L(2)),
        RowRecipe(_M(2, 4), 60, None, _L(2)), RowRecipe(_M(2), 60, 12, _L(2)))),
}


def _limit_points(r: RowRecipe, window: RationalInterval) -> list:
    d = r.set_descriptor
    if d.kind in ("Mgn", "Mxn"):
        levels = [d.n]
    elif d.kind in ("Mg", "Mx"):
        levels = range(1, (r.max_level or 1) + 1)
    else:
        return []
    pts = {Fraction(m, n) for n in levels for m in d.centers}
    return sorted(v for v in pts
                  if v in window and not contains(d, slope_from_value(v)))


def build_row(r: RowRecipe, window: RationalInterval) -> PlotRow:
    points = []
    for s in enumerate_set(r.set_descriptor, r.window(window)):
        green = r.highlight is not None and contains(r.highlight, s)
        points.append(PlotPoint(s.value, PointClass.GREEN if green else PointClass.MEMBER))
    points += [PlotPoint(v, PointClass.LIMIT) for v in _limit_points(r, window)]
    points.sort(key=lambda pt: (pt.value, pt.cls.value))
    return PlotRow(str(r.set_descriptor), tuple(points), r.set_descriptor, r.highlight)


def figure_spec(figure_id: int) -> PlotSpec:
    if figure_id not in FIGURES:
        raise DomainError(f"unknown figure id {figure_id}; choose from 1-5")
    title, recipes = FIGURES[figure_id]
    rows = tuple(build_row(r, FIGURE_WINDOW) for r in recipes)
    return PlotSpec(rows, FIGURE_WINDOW, f"Figure {figure_id}: {title}")


# --- SVG -------------------------------------------------------------------

_WIDTH = 960
_LEFT = 110
_RIGHT = 30
_ROW_H = 60
_TOP = 50
_STYLE = {
    PointClass.MEMBER: ('r="2.0"', 'fill="black"'),
    PointClass.LIMIT: ('r="3.0"', 'fill="white" stroke="black" stroke-width="1"'),
    PointClass.GREEN: ('r="2.5"', 'fill="green"'),
}
# draw order within a row: members, then green, then open circles on top
_ORDER = {PointClass.MEMBER: 0, PointClass.GREEN: 1, PointClass.LIMIT: 2}


def _xcoord(v: Fraction, window: RationalInterval) -> Fraction:
    span = window.hi - window.lo
    return _LEFT + (v - window.lo) / span * (_WIDTH - _LEFT - _RIGHT)


def _num(v: Fraction) -> str:
    # exact rational -> fixed 3-decimal string, rounding half to even
    r = round(Fraction(v) * 1000)
    sign = "-" if r < 0 else ""
    r = abs(r)
    return f"{sign}{r // 1000}.{r % 1000:03d}"


def render_svg(spec: PlotSpec) -> str:
    height = _TOP + _ROW_H * max(len(spec.rows), 1) + 20
    out = ['<?xml version="1.0" encoding="UTF-8"?>',
           f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
           f'width="{_WIDTH}" height="{height}" viewBox="0 0 {_WIDTH} {height}">',
           f'<title>{escape(spec.title)}</title>',
           f'<text x="{_LEFT}" y="24" font-family="sans-serif" font-size="14">'
           f'{escape(spec.title)}</text>']
    x0, x1 = _num(_xcoord(spec.window.lo, spec.window)), _num(_xcoord(spec.window.hi, spec.window))
    ticks = range(-(-spec.window.lo.numerator // spec.window.lo.denominator),
                  spec.window.hi.numerator // spec.window.hi.denominator + 1)
    for i, row in enumerate(spec.rows):
        y = _TOP + _ROW_H * i + _ROW_H // 2
        out.append(f'<g class="row" data-label="{escape(row.label)}">')
        out.append(f'<text x="{_LEFT - 10}" y="{y + 4}" text-anchor="end" '
                   f'font-family="sans-serif" font-size="12">{escape(row.label)}</text>')
        out.append(f'<line x1="{x0}" y1="{y}" x2="{x1}" y2="{y}" stroke="gray" '
                   f'stroke-width="0.5"/>')
        for t in ticks:
            xt = _num(_xcoord(Fraction(t), spec.window))
            out.append(f'<line x1="{xt}" y1="{y - 4}" x2="{xt}" y2="{y + 4}" stroke="gray" '
                       f'stroke-width="0.5"/>')
            out.append(f'<text x="{xt}" y="{y + 18}" text-anchor="middle" '
                       f'font-family="sans-serif" font-size="10">{t}</text>')
        for pt in sorted(row.points, key=lambda p: (_ORDER[p.cls], p.value)):
            radius, paint = _STYLE[pt.cls]
            out.append(f'<circle class="{pt.cls.value}" cx="{_num(_xcoord(pt.value, spec.window))}" '
                       f'cy="{y}" {radius} {paint} data-value="{format_fraction(pt.value)}"/>')
        out.append('</g>')
    out.append('</svg>')
    return "\n".join(out) + "\n"


# --- ASCII -----------------------------------------------------------------

_GLYPH = {PointClass.MEMBER: "*", PointClass.GREEN: "g", PointClass.LIMIT: "o"}
_PRIORITY = {".": 0, "*": 1, "g": 2, "o": 3}


def render_ascii(spec: PlotSpec, width: int = 81) -> str:
    """One text line per row; a cell shows ``o`` over ``g`` over ``*``."""
    if width < 3:
        raise DomainError("ascii width must be at least 3")
    lo, hi = spec.window.lo, spec.window.hi
    label_w = max([len(r.label) for r in spec.rows] + [0])
    lines = [spec.title] if spec.title else []
    for row in spec.rows:
        cells = ["."] * width
        for pt in row.points:
            col = round((pt.value - lo) / (hi - lo) * (width - 1))
            glyph = _GLYPH[pt.cls]
            if _PRIORITY[glyph] > _PRIORITY[cells[col]]:
                cells[col] = glyph
        lines.append(f"{row.label.rjust(label_w)} |{''.join(cells)}|")
    axis = f"{format_fraction(lo)} .. {format_fraction(hi)}"
    lines.append(f"{' ' * label_w}  {axis}")
    return "\n".join(lines) + "\n"


# --- CSV -------------------------------------------------------------------

def render_csv(spec: PlotSpec) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["row", "label", "value", "class"])
    for i, row in enumerate(spec.rows):
        for pt in row.points:
            w.writerow([i, row.label, format_fraction(pt.value), pt.cls.value])
    return buf.getvalue()


# --- PNG via matplotlib ----------------------------------------------------

def write_png(spec: PlotSpec, path, dpi: int = 100) -> None:
    """Rasterise ``spec`` with matplotlib's Agg canvas.

    Metadata that would vary between runs (software version, timestamps) is
    dropped so repeated renders are byte-identical.
    """
    from matplotlib.backends.backend_agg import FigureCanvasAgg
    from matplotlib.figure import Figure

    nrows = max(len(spec.rows), 1)
    fig = Figure(figsize=(10, 0.8 * nrows + 0.8))
    FigureCanvasAgg(fig)
    ax = fig.add_subplot()
    lo, hi = float(spec.window.lo), float(spec.window.hi)
    styles = {
        PointClass.MEMBER: dict(s=6, c="black", zorder=2),
        PointClass.GREEN: dict(s=10, c="green", zorder=3),
        PointClass.LIMIT: dict(s=22, facecolors="white", edgecolors="black",
                               linewidths=0.8, zorder=4),
    }
    for i, row in enumerate(spec.rows):
        y = nrows - 1 - i
        ax.axhline(y, color="0.7", linewidth=0.5, zorder=1)
        for cls, kw in styles.items():
            xs = [float(pt.value) for pt in row.points if pt.cls is cls]
            if xs:
                ax.scatter(xs, [y] * len(xs), **kw)
    ax.set_xlim(lo - 0.1, hi + 0.1)
    ax.set_ylim(-0.7, nrows - 0.3)
    ax.set_yticks(range(nrows))
    ax.set_yticklabels([r.label for r in reversed(spec.rows)])
    ax.set_xticks(range(int(lo), int(hi) + 1))
    for side in ("top", "right", "left"):
        ax.spines[side].set_visible(False)
    if spec.title:
        ax.set_title(spec.title, fontsize=10)
    fig.tight_layout()
    fig.savefig(path, format="png", dpi=dpi, metadata={"Software": None})


def render_figure(figure, fmt: str = "svg") -> str:
    """Render a built-in figure id (1-5) or a :class:`PlotSpec` as text."""
    spec = figure if isinstance(figure, PlotSpec) else figure_spec(figure)
    if fmt == "svg":
        return render_svg(spec)
    if fmt == "ascii":
        return render_ascii(spec)
    if fmt == "csv":
        return render_csv(spec)
    raise DomainError(f"unknown figure format {fmt!r}")
