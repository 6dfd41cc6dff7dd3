"""Ideals of every data type and their inclusion

An ideal is a directed downward-closed set. For each constructor:

* ``NatI(n)`` is ``{0..n}``; ``NatI(OMEGA)`` is all of the naturals;
* ``FinI(q)`` is the set of symbols below ``q``;
* ``ProdI`` and ``SumI`` work componentwise;
* ``WordI`` is a word product, a sequence of atoms ``C?`` (``Single``) and
  ``A*`` (``StarA``);
* ``MSetI`` is ``A@ <C1? ... Cn?>``: any number of elements from the star
  members plus at most one element under each single.

Equality of ideals is always mutual inclusion, never syntactic equality.
"""

from dataclasses import dataclass
from itertools import product as cartesian
from typing import List, Optional, Sequence, Tuple, Union

from src.errors import ConformanceError, TypeMismatchError
from src.order.types import (
    Fin,
    MSet,
    Nat,
    Prod,
    Star,
    Sum,
    TypeExpr,
    Value,
    value_conforms,
)
from src.order.values import enumerate_values
from src.utils.matching import has_left_perfect_matching

OMEGA = None


@dataclass(frozen=True)
class NatI:
    bound: Optional[int]

    @property
    def is_omega(self) -> bool:
        return self.bound is OMEGA


@dataclass(frozen=True)
class FinI:
    symbol: str


@dataclass(frozen=True)
class ProdI:
    items: Tuple["Ideal", ...]

    def __post_init__(self):
        object.__setattr__(self, "items", tuple(self.items))


@dataclass(frozen=True)
class SumI:
    index: int
    ideal: "Ideal"


@dataclass(frozen=True)
class Single:
    """Atom ``C?``: at most one letter from ``C``"""

    ideal: "Ideal"


@dataclass(frozen=True)
class StarA:
    """Atom ``A*``: any word over the union of the members"""

    members: Tuple["Ideal", ...]

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(self.members))


Atom = Union[Single, StarA]


@dataclass(frozen=True)
class WordI:
    atoms: Tuple[Atom, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "atoms", tuple(self.atoms))


@dataclass(frozen=True)
class MSetI:
    star: Tuple["Ideal", ...] = ()
    singles: Tuple["Ideal", ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "star", tuple(self.star))
        object.__setattr__(self, "singles", tuple(self.singles))


Ideal = Union[NatI, FinI, ProdI, SumI, WordI, MSetI]


# ---------------------------------------------------------------------------
# Conformance
# ---------------------------------------------------------------------------


def ideal_conforms(ty: TypeExpr, ideal: Ideal, path: Tuple[str, ...] = ()) -> None:
    """
    Check that an ideal has the shape of a type

    Raises:
        ConformanceError: With the path of the first mismatch
    """
    if isinstance(ty, Nat):
        if not isinstance(ideal, NatI) or not (
            ideal.is_omega or (isinstance(ideal.bound, int) and ideal.bound >= 0)
        ):
            raise ConformanceError("expected a natural ideal", path)
    elif isinstance(ty, Fin):
        if not isinstance(ideal, FinI) or ideal.symbol not in ty.carrier:
            raise ConformanceError(f"expected a symbol of {{{', '.join(ty.carrier)}}}", path)
    elif isinstance(ty, Prod):
        if not isinstance(ideal, ProdI) or len(ideal.items) != len(ty.components):
            raise ConformanceError(f"expected a {len(ty.components)}-tuple ideal", path)
        for i, (component, item) in enumerate(zip(ty.components, ideal.items)):
            ideal_conforms(component, item, path + (f"[{i}]",))
    elif isinstance(ty, Sum):
        if not isinstance(ideal, SumI) or not 0 <= ideal.index < len(ty.branches):
            raise ConformanceError(f"expected a tag below {len(ty.branches)}", path)
        ideal_conforms(ty.branches[ideal.index], ideal.ideal, path + (f"#{ideal.index}",))
    elif isinstance(ty, Star):
        if not isinstance(ideal, WordI):
            raise ConformanceError("expected a word product", path)
        for i, atom in enumerate(ideal.atoms):
            where = path + (f"word[{i}]",)
            if isinstance(atom, Single):
                ideal_conforms(ty.inner, atom.ideal, where)
            elif isinstance(atom, StarA):
                if not atom.members:
                    raise ConformanceError("empty star atom", where)
                for member in atom.members:
                    ideal_conforms(ty.inner, member, where)
            else:
                raise ConformanceError("expected an atom", where)
    elif isinstance(ty, MSet):
        if not isinstance(ideal, MSetI):
            raise ConformanceError("expected a multiset product", path)
        for member in ideal.star:
            ideal_conforms(ty.inner, member, path + ("star",))
        for i, single in enumerate(ideal.singles):
            ideal_conforms(ty.inner, single, path + (f"single[{i}]",))
    else:
        raise ConformanceError(f"unknown type node {type(ty).__name__}", path)


# ---------------------------------------------------------------------------
# Principal ideals
# ---------------------------------------------------------------------------


def principal(ty: TypeExpr, value: Value) -> Ideal:
    """
    Canonical ideal denoting the downward closure of one value

    Args:
        ty: Type of the value
        value: The value

    Returns:
        Ideal whose denotation is ``{u | u <= value}``
    """
    value_conforms(ty, value)
    return _principal(ty, value)


def _principal(ty: TypeExpr, value: Value) -> Ideal:
    if isinstance(ty, Nat):
        return NatI(value.n)
    if isinstance(ty, Fin):
        return FinI(value.symbol)
    if isinstance(ty, Prod):
        return ProdI(tuple(_principal(t, v) for t, v in zip(ty.components, value.items)))
    if isinstance(ty, Sum):
        return SumI(value.index, _principal(ty.branches[value.index], value.value))
    if isinstance(ty, Star):
        return WordI(tuple(Single(_principal(ty.inner, v)) for v in value.items))
    return MSetI((), tuple(_principal(ty.inner, v) for v in value.items))


# ---------------------------------------------------------------------------
# Inclusion
# ---------------------------------------------------------------------------


def ideal_leq(ty: TypeExpr, left: Ideal, right: Ideal) -> bool:
    """
    Decide inclusion of the denotation of ``left`` in that of ``right``

    Args:
        ty: Type both ideals are declared against
        left: Included candidate
        right: Including candidate

    Returns:
        True iff every value of ``left`` belongs to ``right``

    Raises:
        ConformanceError: If an ideal does not conform to ``ty``
    """
    ideal_conforms(ty, left)
    ideal_conforms(ty, right)
    return _leq(ty, left, right)


def ideal_equiv(ty: TypeExpr, left: Ideal, right: Ideal) -> bool:
    """Mutual inclusion"""
    return ideal_leq(ty, left, right) and ideal_leq(ty, right, left)


def _leq(ty: TypeExpr, left: Ideal, right: Ideal) -> bool:
    if isinstance(ty, Nat):
        if right.is_omega:
            return True
        return not left.is_omega and left.bound <= right.bound
    if isinstance(ty, Fin):
        return ty.le(left.symbol, right.symbol)
    if isinstance(ty, Prod):
        return all(_leq(t, a, b) for t, a, b in zip(ty.components, left.items, right.items))
    if isinstance(ty, Sum):
        return left.index == right.index and _leq(
            ty.branches[left.index], left.ideal, right.ideal
        )
    if isinstance(ty, Star):
        return _word_leq(ty.inner, left.atoms, right.atoms)
    if isinstance(ty, MSet):
        return _mset_leq(ty.inner, left, right)
    raise TypeMismatchError(f"unknown type node {type(ty).__name__}")


def _atom_leq(inner: TypeExpr, e: Atom, f: Atom) -> bool:
    if isinstance(e, Single):
        if isinstance(f, Single):
            return _leq(inner, e.ideal, f.ideal)
        return any(_leq(inner, e.ideal, c) for c in f.members)
    if isinstance(f, Single):
        return False
    return all(any(_leq(inner, c, d) for d in f.members) for c in e.members)


def _word_leq(inner: TypeExpr, left: Sequence[Atom], right: Sequence[Atom]) -> bool:
    """
    Product inclusion by dynamic programming over suffix pairs.

    ``table[i][j]`` answers ``left[i:] <= right[j:]``. The empty product is
    below everything; a non-empty product is never below the empty one.
    """
    n, m = len(left), len(right)
    table = [[False] * (m + 1) for _ in range(n + 1)]
    for j in range(m + 1):
        table[n][j] = True
    for i in range(n - 1, -1, -1):
        for j in range(m - 1, -1, -1):
            e, f = left[i], right[j]
            if not _atom_leq(inner, e, f):
                table[i][j] = table[i][j + 1]
            elif isinstance(f, StarA):
                table[i][j] = table[i + 1][j]
            else:
                table[i][j] = table[i + 1][j + 1]
    return table[0][0]


def _mset_leq(inner: TypeExpr, left: MSetI, right: MSetI) -> bool:
    for c in left.star:
        if not any(_leq(inner, c, d) for d in right.star):
            return False
    loose = [c for c in left.singles if not any(_leq(inner, c, d) for d in right.star)]
    return has_left_perfect_matching(
        len(loose),
        len(right.singles),
        lambda i, j: _leq(inner, loose[i], right.singles[j]),
    )


# ---------------------------------------------------------------------------
# Membership
# ---------------------------------------------------------------------------


def ideal_member(ty: TypeExpr, value: Value, ideal: Ideal) -> bool:
    """
    Decide whether a value lies in the denotation of an ideal

    Raises:
        ConformanceError: If the value or the ideal does not conform to ``ty``
    """
    value_conforms(ty, value)
    ideal_conforms(ty, ideal)
    return _member(ty, value, ideal)


def _member(ty: TypeExpr, value: Value, ideal: Ideal) -> bool:
    if isinstance(ty, Nat):
        return ideal.is_omega or value.n <= ideal.bound
    if isinstance(ty, Fin):
        return ty.le(value.symbol, ideal.symbol)
    if isinstance(ty, Prod):
        return all(_member(t, v, i) for t, v, i in zip(ty.components, value.items, ideal.items))
    if isinstance(ty, Sum):
        return value.index == ideal.index and _member(
            ty.branches[value.index], value.value, ideal.ideal
        )
    if isinstance(ty, Star):
        return _word_member(ty.inner, value.items, ideal.atoms)
    if isinstance(ty, MSet):
        loose = [v for v in value.items if not any(_member(ty.inner, v, c) for c in ideal.star)]
        return has_left_perfect_matching(
            len(loose),
            len(ideal.singles),
            lambda i, j: _member(ty.inner, loose[i], ideal.singles[j]),
        )
    raise TypeMismatchError(f"unknown type node {type(ty).__name__}")


def _word_member(inner: TypeExpr, letters: Sequence[Value], atoms: Sequence[Atom]) -> bool:
    """``table[p][k]``: ``letters[p:]`` is generated by ``atoms[k:]``"""
    n, m = len(letters), len(atoms)
    table = [[False] * (m + 1) for _ in range(n + 1)]
    for k in range(m + 1):
        table[n][k] = True
    for p in range(n - 1, -1, -1):
        for k in range(m - 1, -1, -1):
            atom = atoms[k]
            if isinstance(atom, Single):
                fits = _member(inner, letters[p], atom.ideal)
                table[p][k] = table[p][k + 1] or (fits and table[p + 1][k + 1])
            else:
                fits = any(_member(inner, letters[p], c) for c in atom.members)
                table[p][k] = table[p][k + 1] or (fits and table[p + 1][k])
    return table[0][0]


# ---------------------------------------------------------------------------
# Canonical form
# ---------------------------------------------------------------------------


def ideal_canonicalize(ty: TypeExpr, ideal: Ideal) -> Ideal:
    """
    Rewrite an ideal into canonical form without changing its denotation

    Star sets become antichains, atoms absorbed by an adjacent star are
    dropped, and multiset singles absorbed by the star are dropped. The
    result is idempotent under this function.
    """
    ideal_conforms(ty, ideal)
    return _canonical(ty, ideal)


def _canonical(ty: TypeExpr, ideal: Ideal) -> Ideal:
    if isinstance(ty, (Nat, Fin)):
        return ideal
    if isinstance(ty, Prod):
        return ProdI(tuple(_canonical(t, i) for t, i in zip(ty.components, ideal.items)))
    if isinstance(ty, Sum):
        return SumI(ideal.index, _canonical(ty.branches[ideal.index], ideal.ideal))
    if isinstance(ty, Star):
        atoms: List[Atom] = []
        for atom in ideal.atoms:
            if isinstance(atom, Single):
                atoms.append(Single(_canonical(ty.inner, atom.ideal)))
            else:
                members = [_canonical(ty.inner, c) for c in atom.members]
                atoms.append(StarA(tuple(maximal_ideals(ty.inner, members))))
        return WordI(tuple(_absorb_adjacent(ty.inner, atoms)))
    if isinstance(ty, MSet):
        star = maximal_ideals(ty.inner, [_canonical(ty.inner, c) for c in ideal.star])
        singles = [_canonical(ty.inner, c) for c in ideal.singles]
        singles = [c for c in singles if not any(_leq(ty.inner, c, d) for d in star)]
        return MSetI(tuple(star), tuple(singles))
    raise TypeMismatchError(f"unknown type node {type(ty).__name__}")


def _absorb_adjacent(inner: TypeExpr, atoms: List[Atom]) -> List[Atom]:
    """Drop atoms included in a neighbouring star until none is left"""
    changed = True
    while changed:
        changed = False
        for k, atom in enumerate(atoms):
            neighbours = [atoms[x] for x in (k - 1, k + 1) if 0 <= x < len(atoms)]
            if any(isinstance(s, StarA) and _atom_leq(inner, atom, s) for s in neighbours):
                del atoms[k]
                changed = True
                break
    return atoms


def maximal_ideals(ty: TypeExpr, ideals: Sequence[Ideal]) -> List[Ideal]:
    """
    Reduce ideals to an inclusion antichain, keeping the first of
    equivalent ideals
    """
    kept: List[Ideal] = []
    for candidate in ideals:
        if any(_leq(ty, candidate, k) for k in kept):
            continue
        kept = [k for k in kept if not _leq(ty, k, candidate)]
        kept.append(candidate)
    return kept


# ---------------------------------------------------------------------------
# Whole space and bounded denotation
# ---------------------------------------------------------------------------


def full_ideals(ty: TypeExpr) -> List[Ideal]:
    """
    Canonical antichain of ideals covering the whole type

    Args:
        ty: A valid type

    Returns:
        Ideals whose union is every value of ``ty``
    """
    if isinstance(ty, Nat):
        return [NatI(OMEGA)]
    if isinstance(ty, Fin):
        return [FinI(s) for s in ty.maximal()]
    if isinstance(ty, Prod):
        choices = [full_ideals(c) for c in ty.components]
        return [ProdI(items) for items in cartesian(*choices)]
    if isinstance(ty, Sum):
        return [SumI(i, f) for i, branch in enumerate(ty.branches) for f in full_ideals(branch)]
    if isinstance(ty, Star):
        return [WordI((StarA(tuple(full_ideals(ty.inner))),))]
    if isinstance(ty, MSet):
        return [MSetI(tuple(full_ideals(ty.inner)), ())]
    raise TypeMismatchError(f"unknown type node {type(ty).__name__}")


def denote_bounded(ty: TypeExpr, ideal: Ideal, size_bound: int) -> List[Value]:
    """
    Values of size at most ``size_bound`` in the denotation of ``ideal``,
    computed by enumeration and membership
    """
    ideal_conforms(ty, ideal)
    return [v for v in enumerate_values(ty, size_bound) if _member(ty, v, ideal)]

