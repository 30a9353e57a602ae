"""Exact planar kernel: rationals, points, closed half-planes, feasibility.

Every quantity is a ``fractions.Fraction``; floats are refused at the door so
no rounding path exists anywhere downstream.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from pydantic_core import core_schema

from pqpierce.errors import ErrorCode, PqPierceError

logger = logging.getLogger(__name__)

Rational = Fraction
RationalLike = Union[int, str, Fraction]


def to_rational(value: RationalLike) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a reduced Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or isinstance(value, float):
        raise PqPierceError(ErrorCode.INVALID_INPUT, f"refusing inexact value {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as e:
            raise PqPierceError(ErrorCode.INVALID_INPUT, f"not a rational: {value!r}") from e
    raise PqPierceError(ErrorCode.INVALID_INPUT, f"not a rational: {value!r}")


def format_rational(value: Fraction) -> str:
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


class PydanticPassthrough:
    """Lets pydantic models hold kernel values without re-validating them."""

    @classmethod
    def __get_pydantic_core_schema__(cls, source_type, handler):
        return core_schema.is_instance_schema(
            cls,
            serialization=core_schema.plain_serializer_function_ser_schema(str),
        )


@dataclass(frozen=True, order=True)
class Point(PydanticPassthrough):
    x: Fraction
    y: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "x", to_rational(self.x))
        object.__setattr__(self, "y", to_rational(self.y))

    def __add__(self, other: "Point") -> "Point":
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Point") -> "Point":
        return Point(self.x - other.x, self.y - other.y)

    def scale(self, k: Fraction) -> "Point":
        return Point(self.x * k, self.y * k)

    def __str__(self) -> str:
        return f"({format_rational(self.x)}, {format_rational(self.y)})"


Segment = Tuple[Point, Point]


def cross(o: Point, a: Point, b: Point) -> Fraction:
    """z-component of (a - o) x (b - o); positive for a left turn."""
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)


def orientation(o: Point, a: Point, b: Point) -> int:
    value = cross(o, a, b)
    return (value > 0) - (value < 0)


@dataclass(frozen=True, order=True)
class HalfPlane(PydanticPassthrough):
    """Closed half-plane ``a*x + b*y <= c``.

    Stored as the primitive integer triple obtained by a positive rescaling,
    so two descriptions of the same set compare equal field by field.
    """

    a: Fraction
    b: Fraction
    c: Fraction

    def __post_init__(self) -> None:
        a, b, c = to_rational(self.a), to_rational(self.b), to_rational(self.c)
        if a == 0 and b == 0:
            raise PqPierceError(ErrorCode.INVALID_INPUT, "half-plane normal must be nonzero")
        den = math.lcm(a.denominator, b.denominator, c.denominator)
        ia, ib, ic = int(a * den), int(b * den), int(c * den)
        g = math.gcd(ia, ib, ic)
        object.__setattr__(self, "a", Fraction(ia // g))
        object.__setattr__(self, "b", Fraction(ib // g))
        object.__setattr__(self, "c", Fraction(ic // g))

    def value(self, p: Point) -> Fraction:
        return self.a * p.x + self.b * p.y

    def contains(self, p: Point) -> bool:
        return self.value(p) <= self.c

    def on_boundary(self, p: Point) -> bool:
        return self.value(p) == self.c

    def boundary_key(self) -> Tuple[Fraction, Fraction, Fraction]:
        """Identity of the boundary line, independent of which side is kept."""
        if self.a < 0 or (self.a == 0 and self.b < 0):
            return (-self.a, -self.b, -self.c)
        return (self.a, self.b, self.c)

    def opposite(self) -> "HalfPlane":
        """The closed half-plane on the other side of the same line."""
        return HalfPlane(-self.a, -self.b, -self.c)

    def __str__(self) -> str:
        return f"{format_rational(self.a)}*x + {format_rational(self.b)}*y <= {format_rational(self.c)}"


def x_at_most(v: RationalLike) -> HalfPlane:
    return HalfPlane(1, 0, to_rational(v))


def x_at_least(v: RationalLike) -> HalfPlane:
    return HalfPlane(-1, 0, -to_rational(v))


def y_at_most(v: RationalLike) -> HalfPlane:
    return HalfPlane(0, 1, to_rational(v))


def y_at_least(v: RationalLike) -> HalfPlane:
    return HalfPlane(0, -1, -to_rational(v))


def left_of(p: Point, q: Point) -> HalfPlane:
    """Closed half-plane on the left of the directed line p -> q."""
    if p == q:
        raise PqPierceError(ErrorCode.INVALID_INPUT, f"degenerate direction at {p}")
    dx, dy = q.x - p.x, q.y - p.y
    return HalfPlane(dy, -dx, dy * p.x - dx * p.y)


def line_intersection(h1: HalfPlane, h2: HalfPlane) -> Optional[Point]:
    """Crossing point of the two boundary lines, None when parallel."""
    det = h1.a * h2.b - h2.a * h1.b
    if det == 0:
        return None
    return Point((h1.c * h2.b - h2.c * h1.b) / det, (h1.a * h2.c - h2.a * h1.c) / det)


def _pick(lo: Optional[Fraction], hi: Optional[Fraction]) -> Fraction:
    if lo is not None and hi is not None:
        return (lo + hi) / 2
    if lo is not None:
        return lo + 1
    if hi is not None:
        return hi - 1
    return Fraction(0)


def feasible(constraints: Iterable[HalfPlane]) -> Optional[Point]:
    """Witness point of the intersection, or None when it is empty.

    Fourier-Motzkin: y is eliminated by pairing every upper bound on y with
    every lower bound, then the x-interval is read off. Back-substitution
    takes the midpoint of a finite interval, ``lo + 1`` / ``hi - 1`` on a
    half-line and 0 on the whole line, so the witness depends only on the
    input list.
    """
    constraints = list(constraints)
    uppers = [h for h in constraints if h.b > 0]
    lowers = [h for h in constraints if h.b < 0]
    x_rows: List[Tuple[Fraction, Fraction]] = [(h.a, h.c) for h in constraints if h.b == 0]
    for up in uppers:
        for low in lowers:
            x_rows.append((up.b * low.a - low.b * up.a, up.b * low.c - low.b * up.c))

    lo_x: Optional[Fraction] = None
    hi_x: Optional[Fraction] = None
    for alpha, beta in x_rows:
        if alpha == 0:
            if beta < 0:
                return None
            continue
        bound = beta / alpha
        if alpha > 0:
            hi_x = bound if hi_x is None else min(hi_x, bound)
        else:
            lo_x = bound if lo_x is None else max(lo_x, bound)
    if lo_x is not None and hi_x is not None and lo_x > hi_x:
        return None
    x = _pick(lo_x, hi_x)

    lo_y = max(((h.c - h.a * x) / h.b for h in lowers), default=None)
    hi_y = min(((h.c - h.a * x) / h.b for h in uppers), default=None)
    return Point(x, _pick(lo_y, hi_y))


def _on_segment(p: Point, a: Point, b: Point) -> bool:
    if cross(a, b, p) != 0:
        return False
    lo, hi = (a, b) if a <= b else (b, a)
    return lo <= p <= hi


def segment_intersection(s1: Segment, s2: Segment) -> Optional[Point]:
    """A common point of two closed segments, or None.

    A proper crossing yields the crossing; a collinear overlap yields the
    lexicographically smallest point of the overlap. Point-segments are allowed.
    """
    p1, p2 = s1
    q1, q2 = s2
    if p1 == p2 and q1 == q2:
        return p1 if p1 == q1 else None
    if p1 == p2:
        return p1 if _on_segment(p1, q1, q2) else None
    if q1 == q2:
        return q1 if _on_segment(q1, p1, p2) else None

    r = p2 - p1
    s = q2 - q1
    qp = q1 - p1
    denom = r.x * s.y - r.y * s.x
    if denom == 0:
        if r.x * qp.y - r.y * qp.x != 0:
            return None
        # Collinear: lexicographic order is monotone along the common line.
        lo = max(min(p1, p2), min(q1, q2))
        hi = min(max(p1, p2), max(q1, q2))
        return lo if lo <= hi else None
    t = (qp.x * s.y - qp.y * s.x) / denom
    u = (qp.x * r.y - qp.y * r.x) / denom
    if 0 <= t <= 1 and 0 <= u <= 1:
        return p1 + r.scale(t)
    return None


def point_in_triangle(p: Point, a: Point, b: Point, c: Point) -> bool:
    """Membership of p in conv{a, b, c}; degenerate triangles included."""
    area = cross(a, b, c)
    if area == 0:
        return any(segment_intersection(edge, (p, p)) is not None for edge in ((a, b), (b, c), (a, c)))
    signs = (cross(a, b, p), cross(b, c, p), cross(c, a, p))
    if area > 0:
        return all(v >= 0 for v in signs)
    return all(v <= 0 for v in signs)


def hull_vertices(points: Sequence[Point]) -> List[Point]:
    """Extreme points, counterclockwise from the lexicographically smallest.

    Andrew's monotone chain; collinear boundary points are dropped, so a
    collinear input collapses to its two ends and a single point to itself.
    """
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts

    lower: List[Point] = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: List[Point] = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    if len(hull) == 2 and hull[0] == hull[1]:
        return hull[:1]
    return hull
