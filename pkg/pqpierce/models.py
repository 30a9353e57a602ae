from fractions import Fraction
from typing import Annotated, Dict, List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, PlainSerializer, PlainValidator

from pqpierce.geometry.kernel import Point, format_rational, to_rational
from pqpierce.geometry.region import ConvexRegion, Family

# Exact rational in pydantic models: accepts int / Fraction / "p/q", dumps as "p/q".
RationalField = Annotated[
    Fraction,
    PlainValidator(to_rational),
    PlainSerializer(format_rational, return_type=str),
]


class Report(BaseModel):
    model_config = ConfigDict(frozen=True)


# --- (p,q)-property ---

class PqReport(Report):
    holds: bool
    p: int
    q: int
    violation: Optional[List[str]] = None
    witness_table: Dict[Tuple[str, ...], Optional[Point]] = Field(default_factory=dict)


class IntersectingTriple(Report):
    labels: Tuple[str, str, str]
    witness: Point


# --- counterexample ---

class EscapeTrace(Report):
    point: Point
    n0: Optional[int] = None
    slope_s: Optional[RationalField] = None
    m0: Optional[int] = None
    proof_bound: Optional[int] = None
    escape_index: int = Field(ge=3)
    certified_through: int


class UnpierceabilityCertificate(Report):
    n_star: int
    traces: List[EscapeTrace]


class QuadrupleWitness(Report):
    quadruple: Tuple[int, int, int, int]
    triple: Tuple[int, int, int]
    witness: Point


# --- piercing ---

class CandidateSet(Report):
    points: List[Point]
    patterns: List[int]
    box_half_width: RationalField


class PiercingResult(Report):
    tau: int = Field(ge=0)
    transversal: List[Point]
    optimal: bool
    explored_nodes: int = 0
    method: Literal["empty", "helly", "branch-and-bound"]


class TransversalCheck(Report):
    ok: bool
    missed: List[str] = Field(default_factory=list)


# --- clipping pipeline ---

class Obs1Check(Report):
    ok: bool
    offending: Optional[str] = None
    quadruple: Optional[Tuple[str, str, str, str]] = None


class Obs2Check(Report):
    ok: bool
    witnesses: Dict[Tuple[str, str, str], Point] = Field(default_factory=dict)
    constructed: List[Tuple[str, str, str]] = Field(default_factory=list)
    offending: Optional[Tuple[str, str, str]] = None


class Theorem2Report(Report):
    a_label: str
    b_label: str
    f0: ConvexRegion
    obs1: Obs1Check
    obs2: Optional[Obs2Check] = None
    clipped_family: Optional[Family] = None
    clipped_bounded: Optional[bool] = None
    clipped_pq_holds: Optional[bool] = None
    piercing: Optional[PiercingResult] = None
    bound: int
    bound_satisfied: bool = False
    halted_at: Optional[str] = None

    @property
    def obs1_ok(self) -> bool:
        return self.obs1.ok

    @property
    def obs2_ok(self) -> bool:
        return self.obs2 is not None and self.obs2.ok
