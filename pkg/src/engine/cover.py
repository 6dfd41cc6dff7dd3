"""Generalized Karp-Miller cover procedure and forward coverability"""

from dataclasses import dataclass, field
from enum import Enum
from itertools import product as composites_of
from typing import Callable, Iterator, Optional, Tuple

from pydantic import BaseModel, Field

from src.config import Config
from src.engine.acceleration import accelerate
from src.engine.model import Model, apply_composite
from src.engine.post import post_hat
from src.order.downsets import (
    DownSet,
    downset_add,
    downset_covers_ideal,
    downset_from_ideals,
    downset_leq,
    downset_member,
)
from src.order.ideals import principal
from src.order.types import Value, value_conforms
from src.order.values import value_leq
from src.utils.langfuse_manager import RunTracer
from src.utils.logger import setup_logger

logger = setup_logger("cover")


class CoverStatus(str, Enum):
    """Outcome of the cover procedure"""

    COMPLETE = "complete"
    BUDGET = "budget"


class Verdict(str, Enum):
    """Outcome of a coverability question"""

    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


class Budget(BaseModel):
    """Limits of one cover run; every field must be at least 1"""

    max_rounds: int = Field(default=Config.DEFAULT_MAX_ROUNDS, ge=1)
    max_composite_len: int = Field(default=Config.DEFAULT_MAX_COMPOSITE_LEN, ge=1)
    max_adds: int = Field(default=Config.DEFAULT_MAX_ADDS, ge=1)


@dataclass
class CoverStats:
    """Deterministic counters of one cover run"""

    rounds: int = 0
    accelerations: int = 0
    composites_explored: int = 0
    adds: int = 0
    non_converged: int = 0


@dataclass(frozen=True)
class CoverResult:
    cover: DownSet
    status: CoverStatus
    stats: CoverStats = field(default_factory=CoverStats)


class CoverProcedure:
    """
    Set-based cover computation

    Starting from the principal ideal of ``x0``, each round first checks
    whether the successors of the current antichain are already included in
    it. If not, every composite of length up to ``min(round,
    max_composite_len)`` is paired, in lexicographic order, with every part of
    the antichain; the acceleration of each defined pair is added unless it is
    already covered. Every added ideal is the limit of reachable ideals, so
    each part stays inside the cover at all times.
    """

    def __init__(self, model: Model, x0: Value, budget: Optional[Budget] = None):
        """
        Initialize the procedure

        Args:
            model: Model to explore
            x0: Initial state
            budget: Limits of the run; defaults from Config
        """
        value_conforms(model.state_type, x0)
        self.model = model
        self.x0 = x0
        self.budget = budget or Budget()
        self.stats = CoverStats()
        self.antichain = downset_from_ideals(model.state_type, [principal(model.state_type, x0)])
        self.stopped = False

    def _composites(self, round_number: int) -> Iterator[Tuple[int, ...]]:
        longest = min(round_number, self.budget.max_composite_len)
        count = len(self.model.transitions)
        for length in range(1, longest + 1):
            yield from composites_of(range(count), repeat=length)

    def _is_closed(self) -> bool:
        return downset_leq(post_hat(self.model, self.antichain), self.antichain)

    def run(self, stop_when: Optional[Callable[[DownSet], bool]] = None) -> CoverResult:
        """
        Run until the antichain is closed under successors or a budget is hit

        Args:
            stop_when: Optional predicate checked after every addition; the run
                stops early (``self.stopped``) when it holds

        Returns:
            CoverResult with the antichain, status and statistics
        """
        with RunTracer(
            "cover",
            metadata={
                "model": self.model.kind,
                "transitions": len(self.model.transitions),
                "budget": self.budget.model_dump(),
            },
        ) as tracer:
            status = self._explore(stop_when)
            tracer.metadata["status"] = status.value
            tracer.metadata["stats"] = vars(self.stats).copy()
            tracer.metadata["parts"] = len(self.antichain)

        logger.info(
            f"Cover finished with status {status.value} after {self.stats.rounds} rounds, "
            f"{self.stats.adds} additions, {len(self.antichain)} parts"
        )
        return CoverResult(self.antichain, status, self.stats)

    def _explore(self, stop_when: Optional[Callable[[DownSet], bool]]) -> CoverStatus:
        if stop_when is not None and stop_when(self.antichain):
            self.stopped = True
            return CoverStatus.BUDGET

        for round_number in range(1, self.budget.max_rounds + 1):
            self.stats.rounds = round_number
            if self._is_closed():
                return CoverStatus.COMPLETE
            logger.debug(f"Round {round_number}: {len(self.antichain)} parts")

            for composite in self._composites(round_number):
                self.stats.composites_explored += 1
                for part in self.antichain.parts:
                    if apply_composite(self.model, composite, part) is None:
                        continue
                    acceleration = accelerate(self.model, composite, part)
                    if downset_covers_ideal(self.antichain, acceleration.ideal):
                        continue

                    self.antichain = downset_add(self.antichain, acceleration.ideal)
                    self.stats.adds += 1
                    if acceleration.widened:
                        self.stats.accelerations += 1
                    if not acceleration.converged:
                        self.stats.non_converged += 1

                    if stop_when is not None and stop_when(self.antichain):
                        self.stopped = True
                        return CoverStatus.BUDGET
                    if self.stats.adds >= self.budget.max_adds:
                        logger.info(f"Addition budget of {self.budget.max_adds} exhausted")
                        return CoverStatus.COMPLETE if self._is_closed() else CoverStatus.BUDGET

        return CoverStatus.COMPLETE if self._is_closed() else CoverStatus.BUDGET


def cover(model: Model, x0: Value, budget: Optional[Budget] = None) -> CoverResult:
    """
    Compute a finite antichain whose downward closure is the cover of ``x0``

    Args:
        model: Model to explore
        x0: Initial state
        budget: Limits of the run

    Returns:
        CoverResult; status COMPLETE means the antichain is exactly the cover
    """
    return CoverProcedure(model, x0, budget).run()


def forward_verdict(result: CoverResult, target: Value) -> Verdict:
    """
    Read a coverability verdict off a cover result

    Parts of the antichain always under-approximate the cover, so membership
    is a definite yes; absence is a definite no only for a complete cover.
    """
    if downset_member(target, result.cover):
        return Verdict.YES
    if result.status is CoverStatus.COMPLETE:
        return Verdict.NO
    return Verdict.UNKNOWN


def coverable_forward(
    model: Model, x0: Value, target: Value, budget: Optional[Budget] = None
) -> Verdict:
    """
    Decide whether a state above ``target`` is reachable from ``x0``

    Args:
        model: Model to explore
        x0: Initial state
        target: State to cover
        budget: Limits of the underlying cover run

    Returns:
        YES, NO, or UNKNOWN when the budget ran out first
    """
    value_conforms(model.state_type, target)
    if value_leq(model.state_type, target, x0):
        return Verdict.YES

    procedure = CoverProcedure(model, x0, budget)
    result = procedure.run(stop_when=lambda antichain: downset_member(target, antichain))
    if procedure.stopped:
        return Verdict.YES
    return forward_verdict(result, target)
