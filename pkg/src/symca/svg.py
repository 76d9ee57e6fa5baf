"""Deterministic SVG drawing of the principal plane with modality rectangles."""

from __future__ import annotations

from dataclasses import dataclass
from xml.sax.saxutils import escape, quoteattr

from .errors import SymCAError
from .fileio import ResultSummary, summarize

POINT_SIZE = 3.0


@dataclass(frozen=True)
class PlotSpec:
    axes: tuple[int, int] = (0, 1)
    width: int = 800
    height: int = 640
    margin: int = 60
    row_color: str = "#1f77b4"
    col_color: str = "#d62728"
    opacity: float = 0.25
    font_size: int = 12
    precision: int = 2

    def __post_init__(self):
        a, b = self.axes
        if a == b:
            raise SymCAError(f"plot axes must differ, got ({a}, {b})")
        if min(a, b) < 0:
            raise SymCAError(f"plot axes must be non-negative, got ({a}, {b})")
        if self.width <= 0 or self.height <= 0 or self.margin < 0:
            raise SymCAError("plot dimensions must be positive")
        if 2 * self.margin >= min(self.width, self.height):
            raise SymCAError("plot margin leaves no drawing area")


@dataclass(frozen=True)
class _Frame:
    """Affine map from data space to screen space, same scale on both axes."""

    scale: float
    x0: float
    y0: float

    def x(self, v: float) -> float:
        return self.x0 + self.scale * v

    def y(self, v: float) -> float:
        return self.y0 - self.scale * v


def _frame(s: ResultSummary, spec: PlotSpec) -> _Frame:
    a, b = spec.axes
    xs, ys = [0.0], [0.0]
    for m in s.rows + s.cols:
        xs += [m.rect_lo[a], m.rect_hi[a], m.coords[a]]
        ys += [m.rect_lo[b], m.rect_hi[b], m.coords[b]]
    xmin, xmax, ymin, ymax = min(xs), max(xs), min(ys), max(ys)
    span_x = max(xmax - xmin, 1e-12)
    span_y = max(ymax - ymin, 1e-12)
    inner_w = spec.width - 2 * spec.margin
    inner_h = spec.height - 2 * spec.margin
    scale = min(inner_w / span_x, inner_h / span_y)
    x0 = spec.margin + (inner_w - scale * span_x) / 2 - scale * xmin
    y0 = spec.height - spec.margin - (inner_h - scale * span_y) / 2 + scale * ymin
    return _Frame(scale, x0, y0)


def render_principal_plane_svg(result, spec: PlotSpec | None = None) -> bytes:
    """Render rectangles, center markers and labels on the plane ``spec.axes``.

    Modalities whose rectangle has zero extent in a direction are drawn
    ``POINT_SIZE`` pixels wide in that direction; a fully degenerate one
    gets ``class="point"``.
    """
    spec = spec or PlotSpec()
    s = summarize(result)
    a, b = spec.axes
    if max(a, b) >= s.n_axes:
        raise SymCAError(f"plot axes {spec.axes} not retained (n_axes={s.n_axes})")
    fr = _frame(s, spec)
    d = spec.precision

    def num(v: float) -> str:
        out = f"{v:.{d}f}"
        return "0" + out[2:] if out.startswith("-0") and float(out) == 0 else out

    lines = [
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{spec.width}" height="{spec.height}" '
        f'viewBox="0 0 {spec.width} {spec.height}" '
        f'font-family="sans-serif" font-size="{spec.font_size}">',
        f'<rect x="0" y="0" width="{spec.width}" height="{spec.height}" fill="#ffffff"/>',
    ]
    ox, oy = fr.x(0.0), fr.y(0.0)
    lines.append(
        f'<line class="axis" x1="{num(spec.margin)}" y1="{num(oy)}" '
        f'x2="{num(spec.width - spec.margin)}" y2="{num(oy)}" stroke="#555555" stroke-width="1"/>'
    )
    lines.append(
        f'<line class="axis" x1="{num(ox)}" y1="{num(spec.margin)}" '
        f'x2="{num(ox)}" y2="{num(spec.height - spec.margin)}" stroke="#555555" stroke-width="1"/>'
    )
    share = s.inertia_share
    lines.append(
        f'<text class="caption" x="{num(spec.width - spec.margin)}" y="{num(oy - 6)}" '
        f'text-anchor="end">Axis {a + 1} ({100 * share[a]:.2f}%)</text>'
    )
    lines.append(
        f'<text class="caption" x="{num(ox + 6)}" y="{num(spec.margin - 6)}">'
        f"Axis {b + 1} ({100 * share[b]:.2f}%)</text>"
    )

    for side, items, color in (("row", s.rows, spec.row_color), ("column", s.cols, spec.col_color)):
        for m in items:
            left, right = fr.x(m.rect_lo[a]), fr.x(m.rect_hi[a])
            top, bottom = fr.y(m.rect_hi[b]), fr.y(m.rect_lo[b])
            cx, cy = fr.x(m.coords[a]), fr.y(m.coords[b])
            flat_x = m.rect_hi[a] == m.rect_lo[a]
            flat_y = m.rect_hi[b] == m.rect_lo[b]
            if flat_x:
                left, right = cx - POINT_SIZE / 2, cx + POINT_SIZE / 2
            if flat_y:
                top, bottom = cy - POINT_SIZE / 2, cy + POINT_SIZE / 2
            cls = f"{side} point" if flat_x and flat_y else side
            label = quoteattr(m.label)
            lines.append(
                f'<rect class="{cls}" data-label={label} x="{num(left)}" y="{num(top)}" '
                f'width="{num(right - left)}" height="{num(bottom - top)}" '
                f'fill="{color}" fill-opacity="{spec.opacity}" stroke="{color}" stroke-width="1"/>'
            )
            lines.append(
                f'<circle class="{side} center" data-label={label} cx="{num(cx)}" cy="{num(cy)}" '
                f'r="1.5" fill="{color}"/>'
            )
            lines.append(
                f'<text class="{side} label" x="{num(cx + 4)}" y="{num(cy - 4)}" '
                f'fill="{color}">{escape(m.label)}</text>'
            )
    lines.append("</svg>")
    return ("\n".join(lines) + "\n").encode("utf-8")
