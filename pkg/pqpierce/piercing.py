"""Exact piercing number of a finite family of polyhedral regions.

Candidates are the vertices of the arrangement of all boundary lines plus an
enclosing box; every nonempty cell intersection then contains a candidate, so
the problem becomes an exact set cover over candidate membership patterns.
Among optimal covers the one reported is the first in candidate order.
"""

import logging
import math
from itertools import combinations
from typing import Dict, Iterable, List, Optional

from pqpierce.errors import ErrorCode, PqPierceError
from pqpierce.geometry.kernel import (
    HalfPlane,
    Point,
    line_intersection,
    x_at_least,
    x_at_most,
    y_at_least,
    y_at_most,
)
from pqpierce.geometry.region import Family, is_empty
from pqpierce.models import CandidateSet, PiercingResult, TransversalCheck
from pqpierce.pq_property import common_point

logger = logging.getLogger(__name__)


def _require_nonempty(family: Family) -> None:
    for region in family:
        if is_empty(region):
            raise PqPierceError(ErrorCode.EMPTY_REGION, f"region {region.label} is empty and cannot be pierced", label=region.label)


def _distinct_lines(family: Family) -> List[HalfPlane]:
    lines: Dict[tuple, HalfPlane] = {}
    for region in family:
        for h in region.constraints:
            lines.setdefault(h.boundary_key(), h)
    return [lines[key] for key in sorted(lines)]


def _box_half_width(lines: List[HalfPlane]):
    extent = 0
    for h1, h2 in combinations(lines, 2):
        p = line_intersection(h1, h2)
        if p is not None:
            extent = max(extent, abs(p.x), abs(p.y))
    for h in lines:
        if h.a != 0:
            extent = max(extent, abs(h.c / h.a))
        if h.b != 0:
            extent = max(extent, abs(h.c / h.b))
    return 1 + 2 * extent


def candidate_points(family: Family) -> CandidateSet:
    _require_nonempty(family)
    lines = _distinct_lines(family)
    m = _box_half_width(lines)
    keys = {h.boundary_key() for h in lines}
    for h in (x_at_most(m), x_at_least(-m), y_at_most(m), y_at_least(-m)):
        if h.boundary_key() not in keys:
            lines.append(h)

    found = set()
    for h1, h2 in combinations(lines, 2):
        p = line_intersection(h1, h2)
        if p is not None:
            found.add(p)

    points, patterns = [], []
    for p in sorted(found):
        mask = 0
        for i, region in enumerate(family):
            if region.contains(p):
                mask |= 1 << i
        if mask:
            points.append(p)
            patterns.append(mask)
    logger.debug("%d lines, %d candidates, box half-width %s", len(lines), len(points), m)
    return CandidateSet(points=points, patterns=patterns, box_half_width=m)


def _maximal_patterns(patterns: List[int]) -> List[int]:
    """Candidate positions carrying each maximal pattern once, in candidate order."""
    first: Dict[int, int] = {}
    for i, mask in enumerate(patterns):
        first.setdefault(mask, i)
    masks = list(first)
    kept = [mask for mask in masks if not any(other != mask and mask | other == other for other in masks)]
    return sorted(first[mask] for mask in kept)


def _greedy_cover(universe: int, choices: List[int], patterns: List[int]) -> List[int]:
    covered, chosen = 0, []
    while covered != universe:
        best = max(choices, key=lambda i: ((patterns[i] & ~covered).bit_count(), -i))
        if patterns[best] & ~covered == 0:
            break
        chosen.append(best)
        covered |= patterns[best]
    return chosen


def _can_cover(target: int, masks: Iterable[int], k: int) -> bool:
    """Whether at most k of the masks cover every bit of target."""
    if target == 0:
        return True
    if k == 0:
        return False
    useful = {mask & target for mask in masks} - {0}
    kept = [mask for mask in useful if not any(other != mask and mask | other == other for other in useful)]
    reach = max((mask.bit_count() for mask in kept), default=0)
    if reach == 0 or math.ceil(target.bit_count() / reach) > k:
        return False
    bits = [e for e in range(target.bit_length()) if target >> e & 1]
    element = min(bits, key=lambda e: (sum(1 for mask in kept if mask >> e & 1), e))
    return any(_can_cover(target & ~mask, kept, k - 1) for mask in kept if mask >> element & 1)


def _first_cover(universe: int, patterns: List[int], size: int) -> Optional[List[int]]:
    """Lexicographically smallest ``size``-subset of candidate positions that covers.

    Slot by slot, take the lowest position that still leaves a cover among
    later positions. A position adding nothing new is never part of a minimum cover.
    """
    chosen: List[int] = []
    covered, start = 0, 0
    for left in range(size, 0, -1):
        for i in range(start, len(patterns)):
            if patterns[i] & ~covered and _can_cover(universe & ~(covered | patterns[i]), patterns[i + 1 :], left - 1):
                break
        else:
            return None
        chosen.append(i)
        covered |= patterns[i]
        start = i + 1
    return chosen if covered == universe else None


def piercing_number(family: Family, max_size: Optional[int] = None) -> PiercingResult:
    n = len(family)
    if n == 0:
        return PiercingResult(tau=0, transversal=[], optimal=True, method="empty")
    _require_nonempty(family)
    if max_size is not None and max_size < 1:
        raise PqPierceError(ErrorCode.BUDGET_EXCEEDED, f"no transversal of size <= {max_size}", lower_bound=1)

    # Helly: in the plane, every triple meeting forces a common point.
    if n < 3 or all(common_point(t) is not None for t in combinations(family.regions, 3)):
        w = common_point(family.regions)
        if w is not None:
            return PiercingResult(tau=1, transversal=[w], optimal=True, explored_nodes=0, method="helly")

    cands = candidate_points(family)
    patterns = cands.patterns
    universe = (1 << n) - 1
    choices = _maximal_patterns(patterns)
    union = 0
    for i in choices:
        union |= patterns[i]
    if union != universe:
        raise RuntimeError("candidate set misses a region; arrangement is incomplete")

    covering = {e: [i for i in choices if patterns[i] >> e & 1] for e in range(n)}
    greedy = _greedy_cover(universe, choices, patterns)
    best: Optional[List[int]] = None
    best_size = n + 1 if max_size is None else max_size + 1
    if len(greedy) < best_size:
        best, best_size = sorted(greedy), len(greedy)
    nodes = 0

    def search(covered: int, chosen: List[int]) -> None:
        nonlocal best, best_size, nodes
        nodes += 1
        if covered == universe:
            if len(chosen) < best_size:
                best, best_size = sorted(chosen), len(chosen)
            return
        if len(chosen) + 1 >= best_size:
            return
        remaining = (universe & ~covered).bit_count()
        reach = max((patterns[i] & ~covered).bit_count() for i in choices)
        if reach == 0 or len(chosen) + math.ceil(remaining / reach) >= best_size:
            return
        uncovered = [e for e in range(n) if not covered >> e & 1]
        element = min(uncovered, key=lambda e: (len(covering[e]), e))
        for i in covering[element]:
            chosen.append(i)
            search(covered | patterns[i], chosen)
            chosen.pop()

    search(0, [])
    if best is None:
        raise PqPierceError(
            ErrorCode.BUDGET_EXCEEDED,
            f"no transversal of size <= {max_size}",
            lower_bound=max_size + 1,
            explored_nodes=nodes,
        )
    logger.info("tau=%d after %d nodes (greedy gave %d)", len(best), nodes, len(greedy))
    # Report the lexicographically first optimal cover by candidate position.
    best = _first_cover(universe, patterns, len(best))
    if best is None:
        raise RuntimeError("optimal cover vanished in the canonical pass")
    return PiercingResult(
        tau=len(best),
        transversal=[cands.points[i] for i in best],
        optimal=True,
        explored_nodes=nodes,
        method="branch-and-bound",
    )


def verify_transversal(family: Family, points: Iterable[Point]) -> TransversalCheck:
    points = list(points)
    missed = [r.label for r in family if not any(r.contains(p) for p in points)]
    return TransversalCheck(ok=not missed, missed=missed)
