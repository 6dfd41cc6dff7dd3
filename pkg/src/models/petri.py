"""Petri nets: markings, firing and the lifted firing on omega-markings"""

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np

from src.engine.model import Model, TransitionSpec
from src.errors import DimensionError
from src.order.ideals import OMEGA, Ideal, NatI, ProdI, ideal_conforms
from src.order.types import Nat, NatV, Prod, TupleV, Value, value_conforms
from src.utils.logger import setup_logger

logger = setup_logger("petri")


@dataclass(frozen=True)
class PetriTransition:
    """Transition consuming ``pre`` and producing ``post``"""

    name: str
    pre: Tuple[int, ...]
    post: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "pre", tuple(int(x) for x in self.pre))
        object.__setattr__(self, "post", tuple(int(x) for x in self.post))

    @classmethod
    def from_delta(cls, name: str, delta: Sequence[int]) -> "PetriTransition":
        """Transition adding the effect vector ``delta``, enabled while the result stays natural"""
        effect = np.asarray(delta, dtype=np.int64)
        return cls(name, tuple(np.maximum(0, -effect)), tuple(np.maximum(0, effect)))


@dataclass(frozen=True)
class PetriNet:
    places: int
    transitions: Tuple[PetriTransition, ...]

    def __post_init__(self):
        object.__setattr__(self, "transitions", tuple(self.transitions))
        if self.places < 1:
            raise DimensionError("a Petri net needs at least one place")
        for t in self.transitions:
            if len(t.pre) != self.places or len(t.post) != self.places:
                raise DimensionError(
                    f"transition {t.name} has vectors of length "
                    f"{len(t.pre)}/{len(t.post)}, expected {self.places}"
                )
            if min(t.pre + t.post, default=0) < 0:
                raise DimensionError(f"transition {t.name} has a negative entry")

    @property
    def state_type(self) -> Prod:
        return Prod(tuple(Nat() for _ in range(self.places)))


def marking(counts: Sequence[int]) -> TupleV:
    """Marking value from a sequence of token counts"""
    return TupleV(tuple(NatV(int(n)) for n in counts))


def marking_vector(net: PetriNet, m: Value) -> np.ndarray:
    """Token counts of a marking as a numpy vector"""
    if not isinstance(m, TupleV) or len(m.items) != net.places:
        raise DimensionError(f"expected a marking over {net.places} places")
    value_conforms(net.state_type, m)
    return np.array([item.n for item in m.items], dtype=np.int64)


def petri_step(net: PetriNet, m: Value, transition: PetriTransition) -> Optional[TupleV]:
    """
    Fire ``transition`` from marking ``m``

    Returns:
        ``m - pre + post``, or None when ``m`` does not cover ``pre``

    Raises:
        DimensionError: If the marking has the wrong number of places
    """
    tokens = marking_vector(net, m)
    pre = np.array(transition.pre, dtype=np.int64)
    if np.any(tokens < pre):
        return None
    return marking(tokens - pre + np.array(transition.post, dtype=np.int64))


def petri_lift(net: PetriNet, transition: PetriTransition, ideal: Ideal) -> Optional[ProdI]:
    """
    Fire ``transition`` on an omega-marking

    Omega coordinates always enable the transition and stay omega; finite
    coordinates follow ``petri_step``.

    Raises:
        DimensionError: If the ideal is not a marking ideal of ``net``
    """
    if not isinstance(ideal, ProdI) or len(ideal.items) != net.places:
        raise DimensionError(f"expected an omega-marking over {net.places} places")
    ideal_conforms(net.state_type, ideal)

    items = []
    for bound, needed, produced in zip(ideal.items, transition.pre, transition.post):
        if bound.is_omega:
            items.append(NatI(OMEGA))
        elif bound.bound < needed:
            return None
        else:
            items.append(NatI(bound.bound - needed + produced))
    return ProdI(tuple(items))


def petri_widen(start: Ideal, image: Ideal) -> ProdI:
    """Set every coordinate that strictly increased from ``start`` to ``image`` to omega"""
    items = []
    for before, after in zip(start.items, image.items):
        grew = not after.is_omega and not before.is_omega and after.bound > before.bound
        grew = grew or (after.is_omega and not before.is_omega)
        items.append(NatI(OMEGA) if grew else after)
    return ProdI(tuple(items))


def petri_model(net: PetriNet) -> Model:
    """Wrap a net as an engine model with omega widening"""

    def spec(transition: PetriTransition) -> TransitionSpec:
        return TransitionSpec(
            name=transition.name,
            concrete_step=lambda m: petri_step(net, m, transition),
            lifted_step=lambda ideal: petri_lift(net, transition, ideal),
        )

    logger.debug(f"Petri model with {net.places} places, {len(net.transitions)} transitions")
    return Model(
        kind="petri",
        state_type=net.state_type,
        transitions=tuple(spec(t) for t in net.transitions),
        widen=lambda composite, start, image: petri_widen(start, image),
        source=net,
    )
