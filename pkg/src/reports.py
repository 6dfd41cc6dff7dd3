"""Report documents emitted by the command-line interface"""

from typing import List, Optional

from pydantic import BaseModel, Field

from src.engine.cover import CoverResult, CoverStatus, Verdict
from src.order.downsets import DownSet, downset_empty, downset_from_ideals
from src.syntax.literals import parse_ideal, parse_type
from src.syntax.printer import format_ideal, format_type


class DownSetDocument(BaseModel):
    """A downset as its type literal and one ideal literal per part"""

    type: str = Field(..., description="Type literal, e.g. 'fin{a,b}*'")
    parts: List[str] = Field(default_factory=list, description="Ideal literals in antichain order")

    @classmethod
    def from_downset(cls, downset: DownSet) -> "DownSetDocument":
        return cls(type=format_type(downset.ty), parts=[format_ideal(p) for p in downset.parts])

    def to_downset(self) -> DownSet:
        """Read the document back; parts keep their order"""
        ty = parse_type(self.type)
        if not self.parts:
            return downset_empty(ty)
        return downset_from_ideals(ty, [parse_ideal(ty, part) for part in self.parts])


class CoverStatsDocument(BaseModel):
    rounds: int
    accelerations: int
    composites_explored: int
    adds: int
    non_converged: int


class CoverReport(BaseModel):
    """Response of the cover command"""

    status: CoverStatus
    cover: DownSetDocument
    stats: CoverStatsDocument

    @classmethod
    def from_result(cls, result: CoverResult) -> "CoverReport":
        return cls(
            status=result.status,
            cover=DownSetDocument.from_downset(result.cover),
            stats=CoverStatsDocument(**vars(result.stats)),
        )


class VerdictReport(BaseModel):
    """Response of the coverable command"""

    method: str
    verdict: Verdict
    forward: Optional[Verdict] = None
    backward: Optional[Verdict] = None
    consistent: bool = True


class LeqReport(BaseModel):
    type: str
    lhs: str
    rhs: str
    result: bool


class MemberReport(BaseModel):
    type: str
    value: str
    sre: str
    result: bool
