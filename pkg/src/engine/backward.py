"""Backward coverability for Petri nets through finite bases of upward-closed sets"""

from dataclasses import dataclass
from typing import Iterable, List, Optional, Tuple

import numpy as np

from src.config import Config
from src.errors import DimensionError
from src.models.petri import PetriNet, marking_vector
from src.order.types import Value
from src.utils.logger import setup_logger

logger = setup_logger("backward")


@dataclass(frozen=True)
class UpBasis:
    """Pairwise incomparable markings; denotes every marking above one of them"""

    places: int
    vectors: Tuple[Tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.vectors)

    def covers(self, tokens: np.ndarray) -> bool:
        return any(np.all(tokens >= np.array(v, dtype=np.int64)) for v in self.vectors)


def minimal_vectors(vectors: Iterable[Iterable[int]]) -> List[Tuple[int, ...]]:
    """Minimal elements under the pointwise order, first occurrence order, no duplicates"""
    kept: List[np.ndarray] = []
    for vector in vectors:
        candidate = np.asarray(tuple(vector), dtype=np.int64)
        if any(np.all(k <= candidate) for k in kept):
            continue
        kept = [k for k in kept if not np.all(candidate <= k)]
        kept.append(candidate)
    return [tuple(int(x) for x in k) for k in kept]


def up_basis(places: int, vectors: Iterable[Iterable[int]]) -> UpBasis:
    """
    Build a basis from arbitrary markings

    Raises:
        DimensionError: If a vector does not have ``places`` entries
    """
    reduced = minimal_vectors(vectors)
    for v in reduced:
        if len(v) != places:
            raise DimensionError(f"basis vector {v} does not have {places} entries")
    return UpBasis(places, tuple(reduced))


def pre_basis(net: PetriNet, target: UpBasis) -> UpBasis:
    """
    One backward step: the basis of ``target`` together with its predecessors

    For each transition and basis vector ``v`` the least marking that fires
    into the cone of ``v`` is ``pre + max(0, v - post)``.

    Raises:
        DimensionError: If ``target`` is over another number of places
    """
    if target.places != net.places:
        raise DimensionError(f"basis over {target.places} places, net has {net.places}")
    candidates = list(target.vectors)
    for transition in net.transitions:
        pre = np.array(transition.pre, dtype=np.int64)
        post = np.array(transition.post, dtype=np.int64)
        for v in target.vectors:
            candidates.append(pre + np.maximum(0, np.array(v, dtype=np.int64) - post))
    return up_basis(net.places, candidates)


def pre_star(net: PetriNet, target: UpBasis, max_iterations: Optional[int] = None) -> UpBasis:
    """
    Basis of every marking that can reach the cone of ``target``

    The sequence of upward-closed sets grows until it stabilises, which is
    detected when a step leaves the basis unchanged.

    Raises:
        RuntimeError: If the safety cap on iterations is exceeded
    """
    cap = Config.BACKWARD_MAX_ITERATIONS if max_iterations is None else max_iterations
    current = target
    for iteration in range(1, cap + 1):
        following = pre_basis(net, current)
        if set(following.vectors) == set(current.vectors):
            logger.debug(f"Backward fixpoint after {iteration} steps with {len(current)} vectors")
            return current
        current = following
    raise RuntimeError(f"backward fixpoint not reached within {cap} steps")


def coverable_backward(net: PetriNet, x0: Value, target: Value) -> bool:
    """
    Decide whether a marking above ``target`` is reachable from ``x0``

    Args:
        net: Petri net
        x0: Initial marking
        target: Marking to cover

    Returns:
        True iff ``x0`` lies in the upward closure of the predecessor fixpoint

    Raises:
        DimensionError: If a marking has the wrong number of places
    """
    start = marking_vector(net, x0)
    goal = marking_vector(net, target)
    basis = pre_star(net, up_basis(net.places, [goal]))
    return basis.covers(start)
