"""Exhaustive (p,q)-property checks for finite families."""

import logging
from itertools import chain, combinations
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

from tqdm import tqdm

from pqpierce.errors import ErrorCode, PqPierceError
from pqpierce.geometry.kernel import Point, feasible
from pqpierce.geometry.region import ConvexRegion, Family
from pqpierce.models import IntersectingTriple, PqReport

logger = logging.getLogger(__name__)


def common_point(regions: Sequence[ConvexRegion]) -> Optional[Point]:
    """Deterministic witness of the common intersection, or None."""
    return feasible(chain.from_iterable(r.constraints for r in regions))


def has_pq_property(family: Family, p: int, q: int, progress: bool = False) -> PqReport:
    n = len(family)
    if not (2 <= q <= p <= n):
        raise PqPierceError(ErrorCode.BAD_PARAMS, f"need 2 <= q <= p <= |family|, got p={p}, q={q}, |family|={n}", p=p, q=q)

    memo: Dict[Tuple[int, ...], Optional[Point]] = {}

    def check(subset: Tuple[int, ...]) -> Optional[Point]:
        if subset not in memo:
            memo[subset] = common_point([family[i] for i in subset])
        return memo[subset]

    violation = None
    scan = tqdm(combinations(range(n), p), total=comb(n, p), desc=f"({p},{q}) scan", disable=not progress)
    for p_subset in scan:
        if any(check(q_subset) is not None for q_subset in combinations(p_subset, q)):
            continue
        # Fill in every q-subset so the certificate is complete.
        for q_subset in combinations(p_subset, q):
            check(q_subset)
        violation = [family[i].label for i in p_subset]
        logger.info("(%d,%d) fails on %s", p, q, violation)
        break

    table = {tuple(family[i].label for i in key): memo[key] for key in sorted(memo)}
    return PqReport(holds=violation is None, p=p, q=q, violation=violation, witness_table=table)


def intersecting_triples(family: Family) -> List[IntersectingTriple]:
    found = []
    for triple in combinations(family.regions, 3):
        w = common_point(triple)
        if w is not None:
            found.append(IntersectingTriple(labels=tuple(r.label for r in triple), witness=w))
    return found
