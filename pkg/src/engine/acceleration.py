"""Acceleration of strictly increasing loops"""

from dataclasses import dataclass
from typing import Optional, Sequence

from src.config import Config
from src.engine.model import Model, apply_composite
from src.errors import UndefinedCompositeError
from src.order.ideals import Ideal, _canonical, _leq, ideal_conforms
from src.utils.logger import setup_logger

logger = setup_logger("acceleration")


@dataclass(frozen=True)
class Acceleration:
    """
    Outcome of accelerating a composite from one ideal

    Attributes:
        ideal: The accelerated ideal
        widened: Whether a limit was taken (the loop was strictly increasing)
        converged: False when the fallback iteration ran out of budget; the
            ideal is then the last iterate, still a reachable under-approximation
    """

    ideal: Ideal
    widened: bool = False
    converged: bool = True


def accelerate(
    model: Model,
    composite: Sequence[int],
    ideal: Ideal,
    iterations: Optional[int] = None,
) -> Acceleration:
    """
    Compute the limit of iterating ``composite`` from ``ideal``

    If ``g(a)`` is not strictly above ``a`` the result is ``g(a)``. Otherwise
    the model's widening gives the least upper bound of the iterates; when
    the model has none that applies, ``g`` is iterated until it stabilises
    or the iteration budget runs out.

    Running out of iterations is not an error: the last iterate comes back
    with ``converged=False`` and the cover procedure only counts it in
    ``CoverStats.non_converged``. It does not turn a run into ``budget``,
    because every iterate is reachable and a run whose parts are closed under
    ``post_hat`` is exact whatever the flags of its accelerations.

    Args:
        model: Model providing the transitions and the widening hook
        composite: Transition indices applied left to right
        ideal: Starting ideal, inside the composite's domain
        iterations: Fallback iteration budget, ``Config.ACCELERATION_ITERATIONS``
            by default

    Returns:
        Acceleration carrying the resulting ideal and its flags

    Raises:
        UndefinedCompositeError: If ``ideal`` is outside the composite's domain
    """
    ty = model.state_type
    ideal_conforms(ty, ideal)
    start = _canonical(ty, ideal)
    image = apply_composite(model, composite, start)
    if image is None:
        raise UndefinedCompositeError(
            f"composite {list(composite)} is undefined on the given ideal"
        )

    if not (_leq(ty, start, image) and not _leq(ty, image, start)):
        return Acceleration(image)

    if model.widen is not None:
        widened = model.widen(composite, start, image)
        if widened is not None:
            ideal_conforms(ty, widened)
            return Acceleration(_canonical(ty, widened), widened=True)

    budget = Config.ACCELERATION_ITERATIONS if iterations is None else iterations
    current = image
    for _ in range(budget):
        following = apply_composite(model, composite, current)
        if following is None or _leq(ty, following, current):
            return Acceleration(current, widened=True)
        current = following

    logger.info(f"Acceleration of composite {list(composite)} did not converge in {budget} steps")
    return Acceleration(current, widened=True, converged=False)
