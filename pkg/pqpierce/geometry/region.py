"""Convex regions as half-plane conjunctions and labeled families of them.

The H-representation is the only stored form; vertices are derived on demand.
Segments and single points are just thin regions bounded by opposing pairs.
"""

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from pqpierce.errors import ErrorCode, PqPierceError
from pqpierce.geometry.kernel import (
    HalfPlane,
    Point,
    PydanticPassthrough,
    feasible,
    hull_vertices,
    left_of,
    line_intersection,
    x_at_least,
    x_at_most,
    y_at_least,
    y_at_most,
)

logger = logging.getLogger(__name__)


def canonical_constraints(constraints: Iterable[HalfPlane]) -> Tuple[HalfPlane, ...]:
    return tuple(sorted(set(constraints)))


@dataclass(frozen=True)
class ConvexRegion(PydanticPassthrough):
    label: str
    constraints: Tuple[HalfPlane, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "constraints", canonical_constraints(self.constraints))

    def contains(self, p: Point) -> bool:
        return all(h.contains(p) for h in self.constraints)

    def __str__(self) -> str:
        return f"{self.label}[{'; '.join(str(h) for h in self.constraints) or 'plane'}]"


def plane(label: str = "plane") -> ConvexRegion:
    return ConvexRegion(label, ())


def box(label: str, x0, x1, y0, y1) -> ConvexRegion:
    """Axis-parallel box [x0, x1] x [y0, y1]; x0 == x1 or y0 == y1 gives a segment."""
    return ConvexRegion(label, (x_at_least(x0), x_at_most(x1), y_at_least(y0), y_at_most(y1)))


def contains(region: ConvexRegion, p: Point) -> bool:
    return region.contains(p)


def intersect(r1: ConvexRegion, r2: ConvexRegion, label: Optional[str] = None) -> ConvexRegion:
    return ConvexRegion(label or f"{r1.label}&{r2.label}", r1.constraints + r2.constraints)


def witness(region: ConvexRegion) -> Optional[Point]:
    return feasible(region.constraints)


def is_empty(region: ConvexRegion) -> bool:
    return feasible(region.constraints) is None


def recession_direction(region: ConvexRegion) -> Optional[Point]:
    """A nonzero direction d with a*d <= 0 for every constraint, or None.

    Any nonzero direction rescales to u = 1, u = -1 or (0, +-1), so four
    exact checks on the homogeneous system decide the cone.
    """
    cone = [HalfPlane(h.a, h.b, 0) for h in region.constraints]
    for u in (1, -1):
        d = feasible(cone + [x_at_most(u), x_at_least(u)])
        if d is not None:
            return d
    for v in (1, -1):
        d = Point(0, v)
        if all(h.value(d) <= 0 for h in cone):
            return d
    return None


def is_bounded(region: ConvexRegion) -> bool:
    return not is_empty(region) and recession_direction(region) is None


def vertices(region: ConvexRegion) -> List[Point]:
    """Extreme points, counterclockwise from the lexicographically smallest."""
    if is_empty(region):
        raise PqPierceError(ErrorCode.EMPTY_REGION, f"region {region.label} is empty")
    if recession_direction(region) is not None:
        raise PqPierceError(ErrorCode.UNBOUNDED_REGION, f"region {region.label} is unbounded")
    found = set()
    for h1, h2 in combinations(region.constraints, 2):
        p = line_intersection(h1, h2)
        if p is not None and region.contains(p):
            found.add(p)
    return hull_vertices(list(found))


def convex_hull(points: Sequence[Point], label: str = "hull") -> ConvexRegion:
    """H-representation of conv(points); lower-dimensional hulls stay valid."""
    if not points:
        raise PqPierceError(ErrorCode.INVALID_INPUT, "convex hull of no points")
    hull = hull_vertices(points)
    if len(hull) == 1:
        (p,) = hull
        return box(label, p.x, p.x, p.y, p.y)
    if len(hull) == 2:
        p, q = hull
        dx, dy = q.x - p.x, q.y - p.y
        side = left_of(p, q)
        caps = (HalfPlane(dx, dy, dx * q.x + dy * q.y), HalfPlane(-dx, -dy, -(dx * p.x + dy * p.y)))
        return ConvexRegion(label, (side, side.opposite()) + caps)
    edges = zip(hull, hull[1:] + hull[:1])
    return ConvexRegion(label, tuple(left_of(p, q) for p, q in edges))


@dataclass(frozen=True)
class Family(PydanticPassthrough):
    name: str
    regions: Tuple[ConvexRegion, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "regions", tuple(self.regions))
        seen = set()
        for r in self.regions:
            if r.label in seen:
                raise PqPierceError(ErrorCode.DUPLICATE_LABEL, f"label {r.label!r} appears twice in {self.name}", label=r.label)
            seen.add(r.label)

    def __len__(self) -> int:
        return len(self.regions)

    def __iter__(self) -> Iterator[ConvexRegion]:
        return iter(self.regions)

    def __getitem__(self, index: int) -> ConvexRegion:
        return self.regions[index]

    @property
    def labels(self) -> List[str]:
        return [r.label for r in self.regions]

    def index_of(self, label: str) -> int:
        for i, r in enumerate(self.regions):
            if r.label == label:
                return i
        raise PqPierceError(ErrorCode.INVALID_INPUT, f"no region labelled {label!r} in {self.name}", label=label)

    def get(self, label: str) -> ConvexRegion:
        return self.regions[self.index_of(label)]

    def prefix(self, n: int) -> "Family":
        return Family(f"{self.name}[:{n}]", self.regions[:n])

    def extended(self, extra: Iterable[ConvexRegion], name: Optional[str] = None) -> "Family":
        return Family(name or self.name, self.regions + tuple(extra))
