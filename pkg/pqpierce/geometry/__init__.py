from pqpierce.geometry.kernel import (
    HalfPlane,
    Point,
    feasible,
    segment_intersection,
    to_rational,
)
from pqpierce.geometry.radon import RadonPartition, radon_partition
from pqpierce.geometry.region import (
    ConvexRegion,
    Family,
    contains,
    convex_hull,
    intersect,
    is_bounded,
    is_empty,
    vertices,
)

__all__ = [
    "ConvexRegion",
    "Family",
    "HalfPlane",
    "Point",
    "RadonPartition",
    "contains",
    "convex_hull",
    "feasible",
    "intersect",
    "is_bounded",
    "is_empty",
    "radon_partition",
    "segment_intersection",
    "to_rational",
    "vertices",
]
