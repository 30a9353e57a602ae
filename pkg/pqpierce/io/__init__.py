from pqpierce.io.family_file import parse_family, parse_points, read_family, serialize_family, write_family
from pqpierce.io.render import render_family

__all__ = ["parse_family", "parse_points", "read_family", "render_family", "serialize_family", "write_family"]
