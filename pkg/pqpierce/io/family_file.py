"""Line-oriented text format for families and point lists.

    family NAME
    region LABEL
    halfplane A B C        # A*x + B*y <= C, each an integer or p/q
    end

Blank lines and ``#`` comments are skipped. Serialization writes the
normalized integer triples, so it is the canonical form of any parsed text.
"""

import logging
import re
from pathlib import Path
from typing import Iterator, List, Tuple

from pqpierce.errors import ErrorCode, PqPierceError
from pqpierce.geometry.kernel import HalfPlane, Point, format_rational, to_rational
from pqpierce.geometry.region import ConvexRegion, Family

logger = logging.getLogger(__name__)

RAT = re.compile(r"^-?\d+(?:/\d+)?$")


def _parse_error(lineno: int, message: str) -> PqPierceError:
    return PqPierceError(ErrorCode.PARSE_ERROR, f"line {lineno}: {message}", line=lineno)


def _lines(text: str) -> Iterator[Tuple[int, List[str]]]:
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if stripped and not stripped.startswith("#"):
            yield lineno, stripped.split()


def _rational(token: str, lineno: int):
    if not RAT.match(token):
        raise _parse_error(lineno, f"not a rational: {token!r}")
    try:
        return to_rational(token)
    except PqPierceError as e:
        raise _parse_error(lineno, e.message) from e


def parse_family(text: str) -> Family:
    lines = list(_lines(text))
    if not lines:
        raise _parse_error(1, "empty family file")
    lineno, tokens = lines[0]
    if len(tokens) != 2 or tokens[0] != "family":
        raise _parse_error(lineno, "expected 'family NAME'")
    name = tokens[1]

    regions: List[ConvexRegion] = []
    seen = set()
    label = None
    constraints: List[HalfPlane] = []
    for lineno, tokens in lines[1:]:
        keyword = tokens[0]
        if label is None:
            if keyword != "region" or len(tokens) != 2:
                raise _parse_error(lineno, "expected 'region LABEL'")
            label = tokens[1]
            if label in seen:
                raise PqPierceError(ErrorCode.DUPLICATE_LABEL, f"line {lineno}: label {label!r} already used", label=label, line=lineno)
            seen.add(label)
            constraints = []
        elif keyword == "halfplane":
            if len(tokens) != 4:
                raise _parse_error(lineno, "expected 'halfplane A B C'")
            a, b, c = (_rational(t, lineno) for t in tokens[1:])
            if a == 0 and b == 0:
                raise _parse_error(lineno, "halfplane with zero normal")
            constraints.append(HalfPlane(a, b, c))
        elif keyword == "end" and len(tokens) == 1:
            regions.append(ConvexRegion(label, tuple(constraints)))
            label = None
        else:
            raise _parse_error(lineno, f"unexpected {' '.join(tokens)!r} inside region {label}")
    if label is not None:
        raise _parse_error(lines[-1][0], f"region {label} is missing 'end'")
    if not regions:
        raise _parse_error(lineno, "family has no regions")
    logger.debug("parsed family %s with %d regions", name, len(regions))
    return Family(name, tuple(regions))


def serialize_family(family: Family) -> str:
    out = [f"family {family.name}"]
    for region in family:
        out.append(f"region {region.label}")
        for h in region.constraints:
            out.append(f"halfplane {format_rational(h.a)} {format_rational(h.b)} {format_rational(h.c)}")
        out.append("end")
    return "\n".join(out) + "\n"


def parse_points(text: str) -> List[Point]:
    points = []
    for lineno, tokens in _lines(text):
        if len(tokens) != 2:
            raise _parse_error(lineno, "expected 'X Y'")
        points.append(Point(*(_rational(t, lineno) for t in tokens)))
    return points


def read_family(path: Path) -> Family:
    return parse_family(Path(path).read_text(encoding="utf-8"))


def write_family(path: Path, family: Family) -> None:
    Path(path).write_text(serialize_family(family), encoding="utf-8")
    logger.info("wrote %s (%d regions) to %s", family.name, len(family), path)
