from fractions import Fraction

import pytest

from pqpierce.counterexample import generate
from pqpierce.errors import ErrorCode, PqPierceError
from pqpierce.geometry.kernel import Point, x_at_most
from pqpierce.geometry.region import box
from pqpierce.io.family_file import parse_family, parse_points, read_family, serialize_family, write_family

DEMO = "family demo\nregion F1\nhalfplane 1 0 1\nhalfplane -1 0 1\nhalfplane 0 1 0\nhalfplane 0 -1 0\nend\n"


def test_parse_demo():
    fam = parse_family(DEMO)
    assert fam.name == "demo"
    assert fam.regions == (box("F1", -1, 1, 0, 0),)


def test_serialize_is_canonical():
    assert serialize_family(parse_family(DEMO)) == (
        "family demo\nregion F1\nhalfplane -1 0 1\nhalfplane 0 -1 0\nhalfplane 0 1 0\nhalfplane 1 0 1\nend\n"
    )


def test_round_trip_of_generated_family():
    text = serialize_family(generate(6))
    assert serialize_family(parse_family(text)) == text
    assert parse_family(text) == generate(6)


def test_rational_coefficients():
    fam = parse_family("family r\nregion X\nhalfplane 1 0 2/3\nend\n")
    assert fam[0].constraints == (x_at_most(Fraction(2, 3)),)
    assert "halfplane 3 0 2" in serialize_family(fam)


def test_comments_blanks_and_whole_plane():
    fam = parse_family("# header\n\nfamily p\n  region P\n  end\n")
    assert fam[0].constraints == ()
    assert fam[0].contains(Point(123, -7))


@pytest.mark.parametrize(
    "text,line",
    [
        ("family z\nregion X\nhalfplane 0 0 1\nend\n", 3),
        ("family z\nregion X\nhalfplane 1 0\nend\n", 3),
        ("family z\nregion X\nhalfplane 1 0 0.5\nend\n", 3),
        ("family z\nregion X\nhalfplane 1 0 1/0\nend\n", 3),
        ("family z\nregion X\nhalfplane 1 0 1\n", 3),
        ("fam z\n", 1),
        ("family z\n", 1),
        ("family z\nhalfplane 1 0 1\n", 2),
        ("", 1),
    ],
)
def test_parse_errors_carry_the_line(text, line):
    with pytest.raises(PqPierceError) as exc:
        parse_family(text)
    assert exc.value.code is ErrorCode.PARSE_ERROR
    assert exc.value.details["line"] == line


def test_duplicate_labels():
    with pytest.raises(PqPierceError) as exc:
        parse_family("family d\nregion A\nend\nregion A\nend\n")
    assert exc.value.code is ErrorCode.DUPLICATE_LABEL
    assert exc.value.details["line"] == 4


def test_points_file():
    assert parse_points("0 5\n# c\n\n-1/2 3\n") == [Point(0, 5), Point(Fraction(-1, 2), 3)]
    with pytest.raises(PqPierceError) as exc:
        parse_points("1 2 3\n")
    assert exc.value.code is ErrorCode.PARSE_ERROR


def test_read_write(tmp_path):
    path = tmp_path / "fam.txt"
    write_family(path, generate(4))
    assert read_family(path) == generate(4)
