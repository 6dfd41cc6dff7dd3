"""Bounded concrete reachability"""

from typing import Callable, List, Optional, Set

from src.engine.model import Model
from src.order.types import Value, value_conforms


def explore_bounded(
    model: Model,
    x0: Value,
    depth: int,
    keep: Optional[Callable[[Value], bool]] = None,
) -> Set[Value]:
    """
    States reachable from ``x0`` in at most ``depth`` concrete steps

    Args:
        model: Model providing the concrete steps
        x0: Initial state
        depth: Maximal number of steps
        keep: Optional filter; states failing it are neither recorded nor expanded

    Returns:
        Set of reached states, ``x0`` included
    """
    value_conforms(model.state_type, x0)
    reached: Set[Value] = {x0}
    frontier: List[Value] = [x0]
    for _ in range(depth):
        following: List[Value] = []
        for state in frontier:
            for transition in model.transitions:
                successor = transition.concrete_step(state)
                if successor is None or successor in reached:
                    continue
                if keep is not None and not keep(successor):
                    continue
                reached.add(successor)
                following.append(successor)
        if not following:
            break
        frontier = following
    return reached
