"""Clipping pipeline for families holding two disjoint compacta A and B.

Every member is cut down to F0 = conv(A u B). The two facts that make the cut
safe (each member still meets F0, and so does each intersecting triple) are
checked directly, and the second one is rebuilt constructively from pair
witnesses and a Radon split when the triple's own witness lies outside F0.
"""

import logging
from typing import List, Optional

from pqpierce.errors import ErrorCode, PqPierceError
from pqpierce.geometry.kernel import Point, segment_intersection
from pqpierce.geometry.radon import radon_partition
from pqpierce.geometry.region import ConvexRegion, Family, convex_hull, intersect, is_bounded, is_empty, vertices
from pqpierce.models import Obs1Check, Obs2Check, Theorem2Report
from pqpierce.piercing import piercing_number, verify_transversal
from pqpierce.pq_property import common_point, has_pq_property, intersecting_triples

logger = logging.getLogger(__name__)

F0_LABEL = "F0"


def build_f0(a: ConvexRegion, b: ConvexRegion) -> ConvexRegion:
    for region in (a, b):
        if is_empty(region):
            raise PqPierceError(ErrorCode.EMPTY_REGION, f"region {region.label} is empty", label=region.label)
        if not is_bounded(region):
            raise PqPierceError(ErrorCode.NOT_COMPACT, f"region {region.label} is unbounded", label=region.label)
    meet = common_point([a, b])
    if meet is not None:
        raise PqPierceError(ErrorCode.NOT_DISJOINT, f"{a.label} and {b.label} share the point {meet}", point=str(meet))
    return convex_hull(vertices(a) + vertices(b), label=F0_LABEL)


def check_obs1(
    family: Family,
    f0: ConvexRegion,
    a_label: Optional[str] = None,
    b_label: Optional[str] = None,
) -> Obs1Check:
    """Every member must meet f0; otherwise name the member and a failing quadruple."""
    for region in family:
        if common_point([region, f0]) is not None:
            continue
        logger.info("%s misses %s", region.label, f0.label)
        quadruple = None
        if a_label is not None and b_label is not None:
            taken = {a_label, b_label, region.label}
            fourth = next((r.label for r in family if r.label not in taken), None)
            if fourth is not None:
                quadruple = (a_label, b_label, region.label, fourth)
        return Obs1Check(ok=False, offending=region.label, quadruple=quadruple)
    return Obs1Check(ok=True)


def find_pair_witness(a: ConvexRegion, b: ConvexRegion, fi: ConvexRegion, fj: ConvexRegion) -> Point:
    for compact in (a, b):
        p = common_point([compact, fi, fj])
        if p is not None:
            return p
    raise PqPierceError(
        ErrorCode.NO_WITNESS,
        f"neither {a.label} nor {b.label} meets {fi.label} & {fj.label}",
        quadruple=[a.label, b.label, fi.label, fj.label],
    )


def obs2_witness(
    a: ConvexRegion,
    b: ConvexRegion,
    f0: ConvexRegion,
    f1: ConvexRegion,
    f2: ConvexRegion,
    f3: ConvexRegion,
    q: Point,
) -> Point:
    """A point of f0 & f1 & f2 & f3 built from q and the three pair witnesses.

    Each p_jk lies in A or B, hence in f0. Radon's split of {q, p12, p13, p23}
    puts a point of f0 inside all three members; the relabelling is resolved by
    trying every candidate in a fixed order and keeping the first that checks.
    """
    triple = (f1, f2, f3)
    if not all(r.contains(q) for r in triple):
        raise PqPierceError(ErrorCode.INVALID_INPUT, f"{q} is not in {f1.label} & {f2.label} & {f3.label}")
    if f0.contains(q):
        raise PqPierceError(ErrorCode.INVALID_INPUT, f"{q} already lies in {f0.label}")

    p12 = find_pair_witness(a, b, f1, f2)
    p13 = find_pair_witness(a, b, f1, f3)
    p23 = find_pair_witness(a, b, f2, f3)
    split = radon_partition(q, p12, p13, p23)

    candidates: List[Optional[Point]] = [split.common_point, p12, p13, p23]
    for p_jk, (p_il, p_im) in ((p12, (p13, p23)), (p13, (p12, p23)), (p23, (p12, p13))):
        candidates.append(segment_intersection((q, p_jk), (p_il, p_im)))

    for p in candidates:
        if p is not None and all(r.contains(p) for r in (f0,) + triple):
            logger.debug("triple %s/%s/%s meets %s at %s", f1.label, f2.label, f3.label, f0.label, p)
            return p
    raise PqPierceError(
        ErrorCode.NO_WITNESS,
        f"no verified point of {f0.label} & {f1.label} & {f2.label} & {f3.label}",
        triple=[f1.label, f2.label, f3.label],
    )


def check_obs2(family: Family, a: ConvexRegion, b: ConvexRegion, f0: ConvexRegion) -> Obs2Check:
    witnesses, constructed = {}, []
    for item in intersecting_triples(family):
        regions = tuple(family.get(label) for label in item.labels)
        q = item.witness
        if f0.contains(q):
            witnesses[item.labels] = q
            continue
        try:
            witnesses[item.labels] = obs2_witness(a, b, f0, *regions, q)
        except PqPierceError as e:
            if e.code is not ErrorCode.NO_WITNESS:
                raise
            logger.warning("triple %s: %s", item.labels, e.message)
            return Obs2Check(ok=False, witnesses=witnesses, constructed=constructed, offending=item.labels)
        constructed.append(item.labels)
    return Obs2Check(ok=True, witnesses=witnesses, constructed=constructed)


def _check_four_three(family: Family) -> Optional[List[str]]:
    if len(family) < 4:
        return None
    return has_pq_property(family, 4, 3).violation


def run_theorem2(family: Family, a_label: str, b_label: str, bound: int = 13) -> Theorem2Report:
    if bound < 1:
        raise PqPierceError(ErrorCode.BAD_PARAMS, f"bound must be >= 1, got {bound}", bound=bound)
    if a_label == b_label:
        raise PqPierceError(ErrorCode.INVALID_INPUT, f"A and B must differ, both are {a_label!r}")
    a, b = family.get(a_label), family.get(b_label)

    try:
        f0 = build_f0(a, b)
    except PqPierceError as e:
        raise PqPierceError(ErrorCode.HYPOTHESIS_VIOLATED, str(e), check=e.code.value, **e.details) from e

    violation = _check_four_three(family)
    if violation is not None:
        raise PqPierceError(
            ErrorCode.HYPOTHESIS_VIOLATED,
            f"(4,3) fails on {', '.join(violation)}",
            check="pq",
            quadruple=violation,
        )

    report = dict(a_label=a_label, b_label=b_label, f0=f0, bound=bound)
    obs1 = check_obs1(family, f0, a_label, b_label)
    if not obs1.ok:
        return Theorem2Report(**report, obs1=obs1, halted_at="obs1")
    obs2 = check_obs2(family, a, b, f0)
    if not obs2.ok:
        return Theorem2Report(**report, obs1=obs1, obs2=obs2, halted_at="obs2")

    clipped = Family(f"{family.name}&{F0_LABEL}", tuple(intersect(r, f0, label=r.label) for r in family))
    clipped_bounded = all(is_bounded(r) for r in clipped)
    report.update(obs1=obs1, obs2=obs2, clipped_family=clipped, clipped_bounded=clipped_bounded)
    if not clipped_bounded:
        return Theorem2Report(**report, halted_at="clip")
    clipped_pq_holds = _check_four_three(clipped) is None
    report.update(clipped_pq_holds=clipped_pq_holds)
    if not clipped_pq_holds:
        return Theorem2Report(**report, halted_at="clipped-pq")

    result = piercing_number(clipped)
    pierces_both = all(verify_transversal(f, result.transversal).ok for f in (clipped, family))
    logger.info("tau(F')=%d, bound %d, pierces original: %s", result.tau, bound, pierces_both)
    return Theorem2Report(**report, piercing=result, bound_satisfied=pierces_both and result.tau <= bound)

