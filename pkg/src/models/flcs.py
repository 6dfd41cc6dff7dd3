"""Functional lossy channel systems: one channel, send and first-occurrence receive"""

from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Sequence, Tuple

from src.engine.model import Model, TransitionSpec
from src.errors import ConformanceError
from src.order.ideals import FinI, Ideal, Single, StarA, WordI, _canonical, ideal_conforms
from src.order.types import Fin, FinV, Star, Value, WordV, value_conforms
from src.utils.logger import setup_logger

logger = setup_logger("flcs")


class ChannelOp(str, Enum):
    SEND = "send"
    RECV = "recv"


@dataclass(frozen=True)
class FlcsTransition:
    name: str
    op: ChannelOp
    letter: str


@dataclass(frozen=True)
class Flcs:
    """A single channel over ``alphabet`` with no control state"""

    alphabet: Tuple[str, ...]
    transitions: Tuple[FlcsTransition, ...]

    def __post_init__(self):
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        object.__setattr__(self, "transitions", tuple(self.transitions))
        for t in self.transitions:
            if t.letter not in self.alphabet:
                raise ConformanceError(f"transition {t.name} uses letter {t.letter!r} outside the alphabet")

    @property
    def state_type(self) -> Star:
        return Star(Fin.discrete(self.alphabet))


def channel(letters: Sequence[str]) -> WordV:
    """Channel contents from a sequence of letters"""
    return WordV(tuple(FinV(a) for a in letters))


def flcs_step(system: Flcs, w: Value, transition: FlcsTransition) -> Optional[WordV]:
    """
    Apply one channel operation to concrete contents

    Sending appends the letter. Receiving loses everything up to and
    including the first occurrence of the letter, and is undefined when the
    letter is absent.
    """
    value_conforms(system.state_type, w)
    if transition.op is ChannelOp.SEND:
        return WordV(w.items + (FinV(transition.letter),))
    for position, item in enumerate(w.items):
        if item.symbol == transition.letter:
            return WordV(w.items[position + 1 :])
    return None


def _star_letters(atom: StarA) -> List[str]:
    return [member.symbol for member in atom.members]


def flcs_lift(system: Flcs, transition: FlcsTransition, ideal: Ideal) -> Optional[WordI]:
    """
    Apply one channel operation to a word product

    A receive walks the atoms from the left: a single of another letter is
    lost, a star without the letter is lost, a single of the letter is
    consumed, and a star containing the letter absorbs the receive.

    Returns:
        Canonical product, or None when no atom can provide the letter
    """
    ty = system.state_type
    ideal_conforms(ty, ideal)
    letter = transition.letter
    if transition.op is ChannelOp.SEND:
        return _canonical(ty, WordI(ideal.atoms + (Single(FinI(letter)),)))

    for k, atom in enumerate(ideal.atoms):
        if isinstance(atom, Single):
            if atom.ideal.symbol == letter:
                return _canonical(ty, WordI(ideal.atoms[k + 1 :]))
        elif letter in _star_letters(atom):
            return _canonical(ty, WordI(ideal.atoms[k:]))
    return None


def flcs_widen(system: Flcs, composite: Sequence[int], start: Ideal) -> Optional[WordI]:
    """
    Limit of a loop whose net effect is appending letters

    Applies when every receive of the loop is absorbed by a leading star of
    ``start`` and the loop sends at least once; the limit is ``start``
    followed by the star of the sent letters. Returns None otherwise.
    """
    atoms = start.atoms
    leading = _star_letters(atoms[0]) if atoms and isinstance(atoms[0], StarA) else []
    sent: List[str] = []
    for index in composite:
        transition = system.transitions[index]
        if transition.op is ChannelOp.SEND:
            if transition.letter not in sent:
                sent.append(transition.letter)
        elif transition.letter not in leading:
            return None
    if not sent:
        return None
    return _canonical(system.state_type, WordI(atoms + (StarA(tuple(FinI(a) for a in sent)),)))


def flcs_model(system: Flcs) -> Model:
    """Wrap a channel system as an engine model with append widening"""

    def spec(transition: FlcsTransition) -> TransitionSpec:
        return TransitionSpec(
            name=transition.name,
            concrete_step=lambda w: flcs_step(system, w, transition),
            lifted_step=lambda ideal: flcs_lift(system, transition, ideal),
        )

    logger.debug(f"FLCS model over {list(system.alphabet)} with {len(system.transitions)} transitions")
    return Model(
        kind="flcs",
        state_type=system.state_type,
        transitions=tuple(spec(t) for t in system.transitions),
        widen=lambda composite, start, image: flcs_widen(system, composite, start),
        source=system,
    )
