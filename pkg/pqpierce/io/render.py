"""SVG drawing of a family, every region clipped to a rectangular window."""

import logging
from fractions import Fraction
from typing import Sequence, Tuple

import svgwrite

from pqpierce.geometry.kernel import Point
from pqpierce.geometry.region import Family, box, intersect, is_empty, vertices

logger = logging.getLogger(__name__)

DEFAULT_CLIP_BOX: Tuple[Fraction, ...] = (Fraction(-2), Fraction(-3), Fraction(3), Fraction(4))
PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf")


def render_family(
    family: Family,
    clip_box: Sequence[Fraction] = DEFAULT_CLIP_BOX,
    width_px: int = 600,
) -> svgwrite.Drawing:
    """One ``<g>`` per region, titled with its label, holding a polygon,
    a line or a dot depending on the clipped region's dimension."""
    x0, y0, x1, y1 = clip_box
    scale = Fraction(width_px) / (x1 - x0)
    height_px = (y1 - y0) * scale

    def to_px(p: Point) -> Tuple[float, float]:
        # SVG y grows downward.
        return round(float((p.x - x0) * scale), 3), round(float((y1 - p.y) * scale), 3)

    dwg = svgwrite.Drawing(size=(width_px, round(float(height_px), 3)), profile="tiny", debug=False)
    window = box("clip", x0, x1, y0, y1)
    missed = []
    for i, region in enumerate(family):
        color = PALETTE[i % len(PALETTE)]
        group = dwg.g(id=f"region-{i + 1}")
        group.set_desc(title=region.label)
        clipped = intersect(region, window)
        if is_empty(clipped):
            missed.append(region.label)
            dwg.add(group)
            continue
        pts = [to_px(p) for p in vertices(clipped)]
        if len(pts) == 1:
            group.add(dwg.circle(center=pts[0], r=3, fill=color))
        elif len(pts) == 2:
            group.add(dwg.polyline(pts, stroke=color, stroke_width=2, fill="none"))
        else:
            group.add(dwg.polygon(pts, fill=color, fill_opacity=0.25, stroke=color, stroke_width=1))
        dwg.add(group)
    if missed:
        logger.info("%d of %d regions miss the clip box and are drawn as empty groups: %s", len(missed), len(family), " ".join(missed))
    return dwg
