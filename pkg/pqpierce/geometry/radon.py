import logging
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict

from pqpierce.geometry.kernel import Point, point_in_triangle, segment_intersection

logger = logging.getLogger(__name__)

INDICES = (1, 2, 3, 4)


class RadonPartition(BaseModel):
    """Split of four points into two groups with intersecting hulls (1-based indices)."""

    model_config = ConfigDict(frozen=True)

    part_a: Tuple[int, ...]
    part_b: Tuple[int, ...]
    common_point: Point


def canonical_subsets() -> List[Tuple[int, ...]]:
    """Nonempty proper subsets of {1,2,3,4} by size, then lexicographically."""
    return [subset for size in (1, 2, 3) for subset in combinations(INDICES, size)]


def hull_meet(group_a: Sequence[Point], group_b: Sequence[Point]) -> Optional[Point]:
    """A common point of conv(group_a) and conv(group_b) for a 1|3 or 2|2 split."""
    if len(group_a) == 1 and len(group_b) == 3:
        p = group_a[0]
        return p if point_in_triangle(p, *group_b) else None
    if len(group_a) == 3 and len(group_b) == 1:
        return hull_meet(group_b, group_a)
    if len(group_a) == 2 and len(group_b) == 2:
        return segment_intersection((group_a[0], group_a[1]), (group_b[0], group_b[1]))
    raise ValueError(f"unsupported split {len(group_a)}|{len(group_b)}")


def radon_partition(p1: Point, p2: Point, p3: Point, p4: Point) -> RadonPartition:
    points = {1: p1, 2: p2, 3: p3, 4: p4}
    for part_a in canonical_subsets():
        part_b = tuple(i for i in INDICES if i not in part_a)
        meet = hull_meet([points[i] for i in part_a], [points[i] for i in part_b])
        if meet is not None:
            logger.debug("radon split %s|%s at %s", part_a, part_b, meet)
            return RadonPartition(part_a=part_a, part_b=part_b, common_point=meet)
    # Radon's lemma guarantees a split for four planar points.
    raise RuntimeError(f"no Radon partition found for {p1}, {p2}, {p3}, {p4}")
