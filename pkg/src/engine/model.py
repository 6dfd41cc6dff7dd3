"""WSTS models and lifted transition plumbing"""

from dataclasses import dataclass
from typing import Callable, Optional, Sequence, Tuple

from src.errors import ConformanceError, ModelIntegrityError
from src.order.ideals import Ideal, _canonical, ideal_conforms
from src.order.types import TypeExpr, Value

ConcreteStep = Callable[[Value], Optional[Value]]
LiftedStep = Callable[[Ideal], Optional[Ideal]]
# widen(g, a, g(a)) returns the limit of the iterates of g from a, or None
Widening = Callable[[Sequence[int], Ideal, Ideal], Optional[Ideal]]


@dataclass(frozen=True)
class TransitionSpec:
    """One partial monotonic transition and its extension to ideals"""

    name: str
    concrete_step: ConcreteStep
    lifted_step: LiftedStep


@dataclass(frozen=True)
class Model:
    """
    A well-structured transition system over ``state_type``

    Attributes:
        kind: Short model family name ("petri", "flcs", ...)
        state_type: Type of the states
        transitions: Transitions in declaration order
        widen: Optional acceleration hook for strictly increasing loops
        source: The frontend object the model was built from
    """

    kind: str
    state_type: TypeExpr
    transitions: Tuple[TransitionSpec, ...]
    widen: Optional[Widening] = None
    source: object = None

    def transition_names(self) -> Tuple[str, ...]:
        return tuple(t.name for t in self.transitions)


def lift_checked(model: Model, index: int, ideal: Ideal) -> Optional[Ideal]:
    """
    Apply one lifted transition and canonicalise the result

    Raises:
        ModelIntegrityError: If the transition returns a non-conforming ideal
    """
    transition = model.transitions[index]
    result = transition.lifted_step(ideal)
    if result is None:
        return None
    try:
        ideal_conforms(model.state_type, result)
    except ConformanceError as e:
        raise ModelIntegrityError(
            f"transition {transition.name} produced a non-conforming ideal: {e}"
        ) from e
    return _canonical(model.state_type, result)


def apply_composite(model: Model, composite: Sequence[int], ideal: Ideal) -> Optional[Ideal]:
    """
    Run a sequence of lifted transitions; undefined as soon as one step is

    Args:
        model: Model providing the transitions
        composite: Transition indices, applied left to right
        ideal: Starting ideal

    Returns:
        The resulting ideal, or None outside the composite's domain
    """
    current: Optional[Ideal] = ideal
    for index in composite:
        current = lift_checked(model, index, current)
        if current is None:
            return None
    return current
