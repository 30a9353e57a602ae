"""Plain ``key: value`` renderings of the report models.

Output is byte-deterministic: fixed key order, exact rationals, no timestamps.
"""

from fractions import Fraction
from typing import Any, Iterable, List, Tuple

from pqpierce.geometry.kernel import Point, format_rational
from pqpierce.geometry.radon import RadonPartition
from pqpierce.models import (
    EscapeTrace,
    PiercingResult,
    PqReport,
    QuadrupleWitness,
    Theorem2Report,
    UnpierceabilityCertificate,
)


def _value(v: Any) -> str:
    if v is None:
        return "none"
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, Fraction):
        return format_rational(v)
    if isinstance(v, (list, tuple)):
        return " ".join(_value(x) for x in v)
    return str(v)


def render(pairs: Iterable[Tuple[str, Any]]) -> str:
    return "\n".join(f"{key}: {_value(v)}" for key, v in pairs) + "\n"


def _points(key: str, points: Iterable[Point]) -> List[Tuple[str, Any]]:
    return [(key, p) for p in points]


def format_pq(report: PqReport) -> str:
    pairs: List[Tuple[str, Any]] = [("holds", report.holds), ("p", report.p), ("q", report.q)]
    if report.violation is not None:
        pairs.append(("violation", report.violation))
        for labels, w in report.witness_table.items():
            if all(label in report.violation for label in labels):
                pairs.append((f"subset {' '.join(labels)}", w))
    pairs.append(("checkedSubsets", len(report.witness_table)))
    return render(pairs)


def format_piercing(result: PiercingResult) -> str:
    pairs = [
        ("tau", result.tau),
        ("optimal", result.optimal),
        ("method", result.method),
        ("exploredNodes", result.explored_nodes),
    ]
    return render(pairs + _points("point", result.transversal))


def format_escape(trace: EscapeTrace) -> str:
    return render(
        [
            ("point", trace.point),
            ("n0", trace.n0),
            ("slope", trace.slope_s),
            ("m0", trace.m0),
            ("proofBound", trace.proof_bound),
            ("escapeIndex", trace.escape_index),
            ("certifiedThrough", trace.certified_through),
        ]
    )


def format_certificate(cert: UnpierceabilityCertificate) -> str:
    pairs: List[Tuple[str, Any]] = [("nStar", cert.n_star), ("points", len(cert.traces))]
    pairs += [(f"escapeIndex {t.point}", t.escape_index) for t in cert.traces]
    return render(pairs)


def format_radon(partition: RadonPartition) -> str:
    return render(
        [
            ("partA", partition.part_a),
            ("partB", partition.part_b),
            ("commonPoint", partition.common_point),
        ]
    )


def format_quadruple(witness: QuadrupleWitness) -> str:
    return render(
        [
            ("quadruple", witness.quadruple),
            ("triple", witness.triple),
            ("witness", witness.witness),
        ]
    )


def format_theorem2(report: Theorem2Report) -> str:
    pairs: List[Tuple[str, Any]] = [
        ("a", report.a_label),
        ("b", report.b_label),
        ("f0", str(report.f0)),
        ("obs1Ok", report.obs1_ok),
    ]
    if not report.obs1.ok:
        pairs.append(("obs1Offending", report.obs1.offending))
        pairs.append(("obs1Quadruple", report.obs1.quadruple))
    if report.obs2 is not None:
        pairs.append(("obs2Ok", report.obs2_ok))
        pairs.append(("obs2Constructed", len(report.obs2.constructed)))
        if not report.obs2.ok:
            pairs.append(("obs2Offending", report.obs2.offending))
    if report.clipped_bounded is not None:
        pairs.append(("clippedBounded", report.clipped_bounded))
    if report.clipped_pq_holds is not None:
        pairs.append(("clippedPqHolds", report.clipped_pq_holds))
    if report.piercing is not None:
        pairs.append(("tau", report.piercing.tau))
        pairs += _points("point", report.piercing.transversal)
    pairs.append(("bound", report.bound))
    pairs.append(("boundSatisfied", report.bound_satisfied))
    if report.halted_at is not None:
        pairs.append(("haltedAt", report.halted_at))
    return render(pairs)
