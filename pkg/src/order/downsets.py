"""Downward-closed sets as finite antichains of ideals"""

from dataclasses import dataclass
from typing import Iterable, Tuple

from src.errors import TypeMismatchError
from src.order.ideals import (
    Ideal,
    _canonical,
    _leq,
    _member,
    _principal,
    full_ideals,
    ideal_conforms,
    maximal_ideals,
)
from src.order.types import TypeExpr, Value, value_conforms
from src.order.values import _leq as _value_leq


@dataclass(frozen=True)
class DownSet:
    """
    Union of the denotations of ``parts``

    Parts are canonical, conform to ``ty`` and form an inclusion antichain.
    Build instances through the functions of this module, which maintain
    these invariants; the empty tuple denotes the empty set.
    """

    ty: TypeExpr
    parts: Tuple[Ideal, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    @property
    def is_empty(self) -> bool:
        return not self.parts


def downset_empty(ty: TypeExpr) -> DownSet:
    return DownSet(ty, ())


def downset_from_ideals(ty: TypeExpr, ideals: Iterable[Ideal]) -> DownSet:
    """
    Canonical antichain denoting the union of arbitrary ideals

    Args:
        ty: Type of the ideals
        ideals: Ideals, canonical or not

    Returns:
        DownSet of the maximal canonical ideals
    """
    canonical = []
    for ideal in ideals:
        ideal_conforms(ty, ideal)
        canonical.append(_canonical(ty, ideal))
    return DownSet(ty, tuple(maximal_ideals(ty, canonical)))


def downset_from_values(ty: TypeExpr, values: Iterable[Value]) -> DownSet:
    """
    Downward closure of a finite set of values

    Args:
        ty: Type of the values
        values: Finite set of values

    Returns:
        Antichain of principal ideals of the maximal values
    """
    maxima = []
    for value in values:
        value_conforms(ty, value)
        if any(_value_leq(ty, value, kept) for kept in maxima):
            continue
        maxima = [kept for kept in maxima if not _value_leq(ty, kept, value)]
        maxima.append(value)
    return DownSet(ty, tuple(_principal(ty, v) for v in maxima))


def _same_type(d1: DownSet, d2: DownSet) -> None:
    if d1.ty != d2.ty:
        raise TypeMismatchError("downsets are declared over different types")


def downset_union(d1: DownSet, d2: DownSet) -> DownSet:
    """Canonical antichain denoting the union of two downsets"""
    _same_type(d1, d2)
    return DownSet(d1.ty, tuple(maximal_ideals(d1.ty, list(d1.parts) + list(d2.parts))))


def downset_add(d: DownSet, ideal: Ideal) -> DownSet:
    """Add one ideal, canonicalising it and restoring the antichain"""
    ideal_conforms(d.ty, ideal)
    return DownSet(d.ty, tuple(maximal_ideals(d.ty, list(d.parts) + [_canonical(d.ty, ideal)])))


def downset_covers_ideal(d: DownSet, ideal: Ideal) -> bool:
    """Whether an ideal is included in some part of the downset"""
    return any(_leq(d.ty, ideal, part) for part in d.parts)


def downset_leq(d1: DownSet, d2: DownSet) -> bool:
    """
    Denotational inclusion: every part of ``d1`` lies in some part of ``d2``

    Raises:
        TypeMismatchError: If the downsets have different types
    """
    _same_type(d1, d2)
    return all(downset_covers_ideal(d2, part) for part in d1.parts)


def downset_equiv(d1: DownSet, d2: DownSet) -> bool:
    return downset_leq(d1, d2) and downset_leq(d2, d1)


def downset_member(value: Value, d: DownSet) -> bool:
    """Whether a value lies in some part of the downset"""
    value_conforms(d.ty, value)
    return any(_member(d.ty, value, part) for part in d.parts)


def downset_full(ty: TypeExpr) -> DownSet:
    """Antichain denoting every value of ``ty``"""
    return DownSet(ty, tuple(full_ideals(ty)))
