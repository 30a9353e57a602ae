from fractions import Fraction

import pytest

from pqpierce.counterexample import generate, lines_in_general_position
from pqpierce.errors import ErrorCode, PqPierceError
from pqpierce.geometry.kernel import Point
from pqpierce.geometry.region import Family, box, plane
from pqpierce.pq_property import common_point, has_pq_property, intersecting_triples
from tests.factories import random_box_family, random_halfplane_family, two_compacta_family


def test_prefix_of_twelve_has_four_three():
    report = has_pq_property(generate(12), 4, 3)
    assert report.holds
    assert report.violation is None
    assert len(report.witness_table) <= 220


@pytest.mark.parametrize("p,q", [(4, 1), (3, 4), (13, 3)])
def test_bad_params(p, q):
    with pytest.raises(PqPierceError) as exc:
        has_pq_property(generate(12), p, q)
    assert exc.value.code is ErrorCode.BAD_PARAMS


def test_violation_records_every_empty_q_subset():
    fam = Family(
        "three-apart",
        (box("A", 0, 1, 0, 1), box("B", 3, 4, 0, 1), box("C", 6, 7, 0, 1), plane("P")),
    )
    report = has_pq_property(fam, 4, 3)
    assert not report.holds
    assert report.violation == ["A", "B", "C", "P"]
    for triple in [("A", "B", "C"), ("A", "B", "P"), ("A", "C", "P"), ("B", "C", "P")]:
        assert triple in report.witness_table
        assert report.witness_table[triple] is None


def test_verdict_ignores_member_order():
    fam = generate(7)
    reversed_fam = Family("rev", tuple(reversed(fam.regions)))
    assert has_pq_property(fam, 4, 3).holds == has_pq_property(reversed_fam, 4, 3).holds


def test_intersecting_triples_of_first_four():
    triples = intersecting_triples(generate(4))
    assert [t.labels for t in triples] == [("F1", "F2", "F3"), ("F1", "F2", "F4")]
    assert triples[0].witness == Point(Fraction(2, 3), 0)
    assert triples[1].witness == Point(Fraction(3, 4), 0)


def test_common_point_of_prefix_three():
    assert common_point(generate(3).regions) == Point(Fraction(2, 3), 0)
    assert common_point(generate(4).regions) is None


def test_lines_in_general_position_pass_pairs_but_not_triples():
    fam = lines_in_general_position(5)
    assert has_pq_property(fam, 5, 2).holds
    assert not has_pq_property(fam, 3, 3).holds


def test_pq_passes_up_to_larger_p(rng):
    families = [random_box_family(rng, 6) for _ in range(4)]
    families += [two_compacta_family(rng, 4), random_halfplane_family(rng, 6), generate(8)]
    for fam in families:
        n = len(fam)
        for q in (2, 3):
            for p in range(q, n):
                if has_pq_property(fam, p, q).holds:
                    assert has_pq_property(fam, p + 1, q).holds, (fam.name, p, q)
