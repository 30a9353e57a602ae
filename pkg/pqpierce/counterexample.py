"""The (4,3)-family with two compact members and no finite transversal.

F1 = [-1,1] x {0}, F2 = [0,2] x {0}, and for n >= 3 the wedge F_n of points
on or left of the vertical line through p_n = (t_n, 0) and on or above the
line through p_n of slope s_n. Every finite prefix has the (4,3)-property;
every point of the plane escapes all F_n from some index on.
"""

import logging
import math
from enum import Enum
from fractions import Fraction
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

import yaml
from pydantic import BaseModel, ConfigDict, model_validator

from pqpierce.errors import ErrorCode, PqPierceError
from pqpierce.geometry.kernel import HalfPlane, Point, x_at_most
from pqpierce.geometry.region import ConvexRegion, Family, box
from pqpierce.models import EscapeTrace, QuadrupleWitness, RationalField, UnpierceabilityCertificate

logger = logging.getLogger(__name__)

FIRST_TAIL_INDEX = 3


class SequenceKind(str, Enum):
    PAPER_DEFAULT = "PAPER_DEFAULT"
    TABLE = "TABLE"


class SequenceConfig(BaseModel):
    """Choice of t_n (increasing in (0,1)) and s_n (decreasing, negative) for n >= 3.

    PAPER_DEFAULT is t_n = 1 - 1/n, s_n = -n. TABLE lists t_3..t_N and s_3..s_N.
    """

    model_config = ConfigDict(frozen=True)

    kind: SequenceKind = SequenceKind.PAPER_DEFAULT
    t: Tuple[RationalField, ...] = ()
    s: Tuple[RationalField, ...] = ()

    @model_validator(mode="after")
    def _check_table(self) -> "SequenceConfig":
        if self.kind is SequenceKind.PAPER_DEFAULT:
            if self.t or self.s:
                raise PqPierceError(ErrorCode.BAD_SEQUENCE, "PAPER_DEFAULT takes no table")
            return self
        if not self.t or len(self.t) != len(self.s):
            raise PqPierceError(ErrorCode.BAD_SEQUENCE, f"table needs equal nonempty t and s, got {len(self.t)} and {len(self.s)}")
        if not all(0 < v < 1 for v in self.t):
            raise PqPierceError(ErrorCode.BAD_SEQUENCE, "every t_n must lie strictly between 0 and 1")
        if any(a >= b for a, b in zip(self.t, self.t[1:])):
            raise PqPierceError(ErrorCode.BAD_SEQUENCE, "t must be strictly increasing")
        if not all(v < 0 for v in self.s):
            raise PqPierceError(ErrorCode.BAD_SEQUENCE, "every s_n must be negative")
        if any(a <= b for a, b in zip(self.s, self.s[1:])):
            raise PqPierceError(ErrorCode.BAD_SEQUENCE, "s must be strictly decreasing")
        return self

    @classmethod
    def table(cls, t: Sequence, s: Sequence) -> "SequenceConfig":
        return cls(kind=SequenceKind.TABLE, t=tuple(t), s=tuple(s))

    @property
    def last_index(self) -> Optional[int]:
        """Largest index the config defines; None for the infinite default."""
        if self.kind is SequenceKind.PAPER_DEFAULT:
            return None
        return FIRST_TAIL_INDEX + len(self.t) - 1

    def _check_index(self, n: int) -> None:
        if n < FIRST_TAIL_INDEX:
            raise PqPierceError(ErrorCode.BAD_PARAMS, f"wedge index must be >= 3, got {n}")
        last = self.last_index
        if last is not None and n > last:
            raise PqPierceError(ErrorCode.BAD_SEQUENCE, f"table covers indices 3..{last}, asked for {n}")

    def t_n(self, n: int) -> Fraction:
        self._check_index(n)
        if self.kind is SequenceKind.PAPER_DEFAULT:
            return 1 - Fraction(1, n)
        return self.t[n - FIRST_TAIL_INDEX]

    def s_n(self, n: int) -> Fraction:
        self._check_index(n)
        if self.kind is SequenceKind.PAPER_DEFAULT:
            return Fraction(-n)
        return self.s[n - FIRST_TAIL_INDEX]


PAPER_DEFAULT = SequenceConfig()


def load_sequence_table(path: Path) -> SequenceConfig:
    """Read ``t: [...]`` and ``s: [...]`` (rationals as strings) from a YAML file."""
    data = yaml.safe_load(Path(path).read_text(encoding="utf-8")) or {}
    if not isinstance(data, dict) or "t" not in data or "s" not in data:
        raise PqPierceError(ErrorCode.BAD_SEQUENCE, f"{path}: expected keys 't' and 's'")
    return SequenceConfig.table(data["t"], data["s"])


def wedge(n: int, cfg: SequenceConfig = PAPER_DEFAULT) -> ConvexRegion:
    """F_n = {x <= t_n} and {y >= s_n (x - t_n)}, for n >= 3."""
    t, s = cfg.t_n(n), cfg.s_n(n)
    return ConvexRegion(f"F{n}", (x_at_most(t), HalfPlane(s, -1, s * t)))


def member_region(index: int, cfg: SequenceConfig = PAPER_DEFAULT) -> ConvexRegion:
    if index == 1:
        return box("F1", -1, 1, 0, 0)
    if index == 2:
        return box("F2", 0, 2, 0, 0)
    return wedge(index, cfg)


def generate(n: int, cfg: SequenceConfig = PAPER_DEFAULT) -> Family:
    if n < FIRST_TAIL_INDEX:
        raise PqPierceError(ErrorCode.BAD_PARAMS, f"need N >= 3, got {n}")
    regions = [member_region(i, cfg) for i in range(1, n + 1)]
    logger.info("generated %d regions (%s)", n, cfg.kind.value)
    return Family(f"counterexample-{n}", regions)


def y_threshold(n: int, cfg: SequenceConfig = PAPER_DEFAULT) -> Fraction:
    """Smallest y_n with {(0, y) : y >= y_n} inside F_n."""
    return -cfg.s_n(n) * cfg.t_n(n)


def in_wedge(p: Point, n: int, cfg: SequenceConfig = PAPER_DEFAULT) -> bool:
    t, s = cfg.t_n(n), cfg.s_n(n)
    return p.x <= t and p.y >= s * (p.x - t)


def _first_index_right_of(x, cfg: SequenceConfig) -> Optional[int]:
    """Smallest n >= 3 with t_n > x, None if no such index exists."""
    if cfg.kind is SequenceKind.PAPER_DEFAULT:
        if x >= 1:
            return None
        # 1 - 1/n > x  <=>  n > 1 / (1 - x)
        return max(FIRST_TAIL_INDEX, math.floor(1 / (1 - x)) + 1)
    for n in range(FIRST_TAIL_INDEX, cfg.last_index + 1):
        if cfg.t_n(n) > x:
            return n
    return None


def _first_index_steeper_than(slope, cfg: SequenceConfig) -> Optional[int]:
    """Smallest m0 >= 3 with s_n < slope for all n >= m0."""
    if cfg.kind is SequenceKind.PAPER_DEFAULT:
        # -n < slope  <=>  n > -slope
        return max(FIRST_TAIL_INDEX, math.floor(-slope) + 1)
    for n in range(FIRST_TAIL_INDEX, cfg.last_index + 1):
        if cfg.s_n(n) < slope:
            return n
    return None


def escape_index(p: Point, cfg: SequenceConfig = PAPER_DEFAULT, window: int = 20) -> EscapeTrace:
    """Smallest M >= 3 with p outside F_n for every n >= M.

    Follows the finiteness argument: below the x-axis nothing contains p, on
    it only the wedge whose apex is p does; above it, an index n0 with
    t_{n0} > p_x fixes the slope s of the line from p to p_{n0}, and once
    s_n < s (from m0 on) p lies below every later boundary line. The bound
    max(n0, m0) is then walked down to the exact minimum.
    """
    if window < 1:
        raise PqPierceError(ErrorCode.BAD_PARAMS, f"window must be >= 1, got {window}")
    last = cfg.last_index
    if last is not None and in_wedge(p, last, cfg):
        raise PqPierceError(
            ErrorCode.NO_ESCAPE_PROOF,
            f"{p} still lies in F{last}, the last set the table defines",
            point=str(p),
            last_index=last,
        )

    n0 = slope = m0 = None
    if p.y < 0:
        bound = FIRST_TAIL_INDEX
    elif p.y == 0:
        apex = _first_index_right_of(p.x, cfg)
        # F_n meets the x-axis only in p_n, so p sits in at most one wedge.
        bound = FIRST_TAIL_INDEX if apex is None else apex + 1
    else:
        n0 = _first_index_right_of(p.x, cfg)
        if n0 is None:
            bound = FIRST_TAIL_INDEX if last is None else last + 1
        else:
            slope = -p.y / (cfg.t_n(n0) - p.x)
            m0 = _first_index_steeper_than(slope, cfg)
            bound = max(n0, m0) if m0 is not None else last + 1

    if last is not None:
        bound = min(bound, last + 1)
    n = bound - 1
    while n >= FIRST_TAIL_INDEX and not in_wedge(p, n, cfg):
        n -= 1
    escape = n + 1

    through = escape + window if last is None else min(escape + window, last)
    for k in range(escape, through + 1):
        if in_wedge(p, k, cfg):
            raise RuntimeError(f"escape certificate broken: {p} lies in F{k}")
    logger.debug("escape of %s: n0=%s m0=%s bound=%s index=%s", p, n0, m0, bound, escape)
    return EscapeTrace(
        point=p,
        n0=n0,
        slope_s=slope,
        m0=m0,
        proof_bound=max(n0, m0) if n0 is not None and m0 is not None else None,
        escape_index=escape,
        certified_through=through,
    )


def unpierceability_certificate(
    points: Sequence[Point], cfg: SequenceConfig = PAPER_DEFAULT, window: int = 20
) -> UnpierceabilityCertificate:
    """An index n* whose F_{n*} avoids every given point: no finite set pierces the family."""
    if not points:
        raise PqPierceError(ErrorCode.INVALID_INPUT, "certificate needs at least one point")
    traces = [escape_index(p, cfg, window) for p in points]
    n_star = max(t.escape_index for t in traces)
    region = wedge(n_star, cfg)
    hit = [str(p) for p in points if region.contains(p)]
    if hit:
        raise RuntimeError(f"F{n_star} still contains {hit}")
    return UnpierceabilityCertificate(n_star=n_star, traces=traces)


def extend_with_compacta(family: Family, k: int) -> Family:
    """Append K_i = [0,1] x [-1/i, 1/i], i = 1..k; each contains [0,1] x {0}."""
    if k < 1:
        raise PqPierceError(ErrorCode.BAD_PARAMS, f"k must be >= 1, got {k}")
    extra = []
    for i in range(1, k + 1):
        h = Fraction(1, i)
        extra.append(box(f"K{i}", 0, 1, -h, h))
    return family.extended(extra, name=f"{family.name}+{k}K")


def quadruple_witness(indices: Sequence[int], cfg: SequenceConfig = PAPER_DEFAULT) -> QuadrupleWitness:
    """Intersecting triple inside F_{i1..i4}, built the way the (4,3) argument does."""
    quad = tuple(sorted(indices))
    if len(quad) != 4 or len(set(quad)) != 4 or quad[0] < 1:
        raise PqPierceError(ErrorCode.BAD_PARAMS, f"need four distinct indices >= 1, got {list(indices)}")
    i1, i2, i3, i4 = quad
    if i1 == 1 and i2 == 2:
        triple = (1, 2, i3)
        point = Point(cfg.t_n(i3), 0)
    else:
        triple = (i2, i3, i4)
        point = Point(0, max(y_threshold(n, cfg) for n in triple))
    missed = [i for i in triple if not member_region(i, cfg).contains(point)]
    if missed:
        raise RuntimeError(f"witness {point} misses F{missed}")
    return QuadrupleWitness(quadruple=quad, triple=triple, witness=point)


def containing_indices(p: Point, upto: int, cfg: SequenceConfig = PAPER_DEFAULT) -> List[int]:
    """Indices n <= upto with p in F_n."""
    return [i for i in range(1, upto + 1) if member_region(i, cfg).contains(p)]


def lines_in_general_position(k: int) -> Family:
    """Tangent lines y = 2i x - i^2 of a parabola, i = 1..k.

    Every two lines meet and no three share a point, so the family has the
    (p,2)-property for all p while its piercing number is ceil(k/2).
    """
    if k < 1:
        raise PqPierceError(ErrorCode.BAD_PARAMS, f"k must be >= 1, got {k}")
    regions = []
    for i in range(1, k + 1):
        line = HalfPlane(2 * i, -1, i * i)
        regions.append(ConvexRegion(f"L{i}", (line, line.opposite())))
    return Family(f"tangent-lines-{k}", regions)
