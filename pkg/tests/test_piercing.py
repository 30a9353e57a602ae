from fractions import Fraction

import pytest

from pqpierce.counterexample import generate, lines_in_general_position
from pqpierce.errors import ErrorCode, PqPierceError
from pqpierce.geometry.kernel import Point, x_at_least, x_at_most, y_at_least, y_at_most
from pqpierce.geometry.region import ConvexRegion, Family, box, plane
from pqpierce.piercing import candidate_points, piercing_number, verify_transversal
from tests.factories import (
    brute_force_tau,
    first_covering_combination,
    grid_patterns,
    helly_family,
    maximal,
    random_box_family,
    random_halfplane_family,
    random_point,
)


def _three_squares():
    return Family("squares", (box("A", 0, 1, 0, 1), box("B", 2, 3, 0, 1), box("C", 4, 5, 0, 1)))


def test_crossing_strips_candidates():
    fam = Family(
        "strips",
        (
            ConvexRegion("V", (x_at_least(0), x_at_most(1))),
            ConvexRegion("H", (y_at_least(0), y_at_most(1))),
        ),
    )
    cands = candidate_points(fam)
    for p in (Point(0, 0), Point(1, 0), Point(0, 1), Point(1, 1)):
        assert p in cands.points
    assert cands.box_half_width == 3
    assert Point(0, 3) in cands.points
    assert cands.points == sorted(cands.points)
    assert all(mask for mask in cands.patterns)


def test_no_lines_gives_unit_box():
    cands = candidate_points(Family("p", (plane("P"),)))
    assert cands.box_half_width == 1
    assert cands.points == [Point(-1, -1), Point(-1, 1), Point(1, -1), Point(1, 1)]


def test_candidates_reject_empty_regions():
    fam = Family("e", (ConvexRegion("E", (x_at_most(0), x_at_least(1))),))
    with pytest.raises(PqPierceError) as exc:
        candidate_points(fam)
    assert exc.value.code is ErrorCode.EMPTY_REGION
    with pytest.raises(PqPierceError):
        piercing_number(fam)


def test_empty_family():
    result = piercing_number(Family("none", ()))
    assert (result.tau, result.transversal, result.method) == (0, [], "empty")


def test_three_disjoint_squares():
    result = piercing_number(_three_squares())
    assert result.tau == 3
    assert result.method == "branch-and-bound"
    assert verify_transversal(_three_squares(), result.transversal).ok


def test_budget_exceeded_reports_lower_bound():
    with pytest.raises(PqPierceError) as exc:
        piercing_number(_three_squares(), max_size=2)
    assert exc.value.code is ErrorCode.BUDGET_EXCEEDED
    assert exc.value.details["lower_bound"] == 3
    assert piercing_number(_three_squares(), max_size=3).tau == 3


def test_prefix_three_is_pierced_by_one_point():
    result = piercing_number(generate(3))
    assert result.tau == 1
    assert result.method == "helly"
    assert result.transversal == [Point(Fraction(2, 3), 0)]


@pytest.mark.parametrize("n", range(4, 13))
def test_longer_prefixes_need_two_points(n):
    fam = generate(n)
    result = piercing_number(fam)
    assert result.tau == 2
    assert result.optimal
    assert verify_transversal(fam, result.transversal).ok
    if n <= 8:
        cands = candidate_points(fam)
        assert brute_force_tau(maximal(cands.patterns), n) == 2


def test_tau_grows_along_prefixes():
    taus = [piercing_number(generate(n)).tau for n in range(3, 10)]
    assert taus == sorted(taus)


def test_verify_transversal_reports_missed_labels():
    check = verify_transversal(_three_squares(), [Point(0, 0), Point(2, 1)])
    assert not check.ok
    assert check.missed == ["C"]


def test_helly_suite(rng):
    for _ in range(50):
        fam = helly_family(rng, rng.randint(5, 8))
        result = piercing_number(fam)
        assert result.tau == 1
        assert verify_transversal(fam, result.transversal).ok


def test_lines_in_general_position_need_half_as_many_points():
    for k in (3, 4, 5):
        assert piercing_number(lines_in_general_position(k)).tau == (k + 1) // 2


def test_solver_matches_grid_brute_force(rng):
    for _ in range(30):
        fam = random_box_family(rng, rng.randint(1, 8))
        result = piercing_number(fam)
        assert verify_transversal(fam, result.transversal).ok
        assert result.tau == brute_force_tau(maximal(grid_patterns(fam)), len(fam))


def test_solver_is_deterministic(rng):
    fam = random_box_family(rng, 7)
    assert piercing_number(fam) == piercing_number(fam)


def test_prefix_four_reports_first_optimal_cover():
    result = piercing_number(generate(4))
    assert result.method == "branch-and-bound"
    assert result.transversal == [Point(-15, 47), Point(Fraction(3, 4), 0)]


@pytest.mark.parametrize("n", range(4, 8))
def test_prefix_transversal_is_first_cover_in_candidate_order(n):
    fam = generate(n)
    cands = candidate_points(fam)
    result = piercing_number(fam)
    combo = first_covering_combination(cands.patterns, n, result.tau)
    assert result.transversal == [cands.points[i] for i in combo]


def test_every_point_pattern_is_dominated_by_a_candidate(rng):
    for _ in range(60):
        fam = random_halfplane_family(rng, rng.randint(1, 4))
        cands = candidate_points(fam)
        for _ in range(200):
            p = random_point(rng, 8)
            mask = sum(1 << i for i, r in enumerate(fam) if r.contains(p))
            if mask:
                assert any(mask | c == c for c in cands.patterns), (fam, p)


def test_solver_matches_exhaustive_cover_on_slanted_families(rng):
    for _ in range(30):
        k = rng.randint(2, 5)
        fam = random_halfplane_family(rng, k)
        cands = candidate_points(fam)
        result = piercing_number(fam)
        assert verify_transversal(fam, result.transversal).ok
        assert result.tau == brute_force_tau(maximal(cands.patterns), k)
        if result.method == "branch-and-bound" and result.tau <= 2:
            combo = first_covering_combination(cands.patterns, k, result.tau)
            assert result.transversal == [cands.points[i] for i in combo]


def test_budget_result_is_still_canonical():
    fam = generate(5)
    bounded, free = piercing_number(fam, max_size=2), piercing_number(fam)
    assert (bounded.tau, bounded.transversal) == (free.tau, free.transversal)
