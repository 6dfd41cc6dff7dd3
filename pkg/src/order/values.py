"""Element-level quasi-ordering and bounded enumeration of values

Size metric used by the enumeration: ``NatV(n)`` costs ``n + 1``, a symbol
costs 1, and every constructor node (tuple, tag, word, multiset) costs 1 plus
the sizes of its children. Every size is at least 1, so each bound yields a
finite set.
"""

from functools import lru_cache
from typing import List, Tuple

from src.errors import ConformanceError
from src.order.types import (
    Fin,
    FinV,
    MSet,
    MSetV,
    Nat,
    NatV,
    Prod,
    Star,
    Sum,
    TagV,
    TupleV,
    TypeExpr,
    Value,
    WordV,
    value_conforms,
)
from src.utils.matching import has_left_perfect_matching


def value_leq(ty: TypeExpr, a: Value, b: Value) -> bool:
    """
    Decide ``a <= b`` in the quasi-ordering of ``ty``

    Args:
        ty: Type of both operands
        a: Left operand
        b: Right operand

    Returns:
        Truth of ``a <= b``

    Raises:
        ConformanceError: If either operand does not conform to ``ty``
    """
    value_conforms(ty, a)
    value_conforms(ty, b)
    return _leq(ty, a, b)


def _leq(ty: TypeExpr, a: Value, b: Value) -> bool:
    if isinstance(ty, Nat):
        return a.n <= b.n
    if isinstance(ty, Fin):
        return ty.le(a.symbol, b.symbol)
    if isinstance(ty, Prod):
        return all(_leq(t, x, y) for t, x, y in zip(ty.components, a.items, b.items))
    if isinstance(ty, Sum):
        return a.index == b.index and _leq(ty.branches[a.index], a.value, b.value)
    if isinstance(ty, Star):
        # Leftmost greedy embedding is optimal: each letter only needs some
        # later position, so matching early never hurts the rest.
        position = 0
        for letter in a.items:
            while position < len(b.items) and not _leq(ty.inner, letter, b.items[position]):
                position += 1
            if position == len(b.items):
                return False
            position += 1
        return True
    if isinstance(ty, MSet):
        return has_left_perfect_matching(
            len(a.items),
            len(b.items),
            lambda i, j: _leq(ty.inner, a.items[i], b.items[j]),
        )
    raise ConformanceError(f"unknown type node {type(ty).__name__}")


def value_size(value: Value) -> int:
    """Size of a value under the enumeration metric"""
    if isinstance(value, NatV):
        return value.n + 1
    if isinstance(value, FinV):
        return 1
    if isinstance(value, TagV):
        return 1 + value_size(value.value)
    return 1 + sum(value_size(v) for v in value.items)


def enumerate_values(ty: TypeExpr, size_bound: int) -> List[Value]:
    """
    List every value of ``ty`` whose size is at most ``size_bound``

    Args:
        ty: Type to enumerate
        size_bound: Inclusive size bound

    Returns:
        Duplicate-free values ordered by size, then by construction order
    """
    result: List[Value] = []
    for size in range(1, size_bound + 1):
        result.extend(_of_size(ty, size))
    return result


@lru_cache(maxsize=None)
def _of_size(ty: TypeExpr, size: int) -> Tuple[Value, ...]:
    if size < 1:
        return ()
    if isinstance(ty, Nat):
        return (NatV(size - 1),)
    if isinstance(ty, Fin):
        return tuple(FinV(s) for s in ty.carrier) if size == 1 else ()
    if isinstance(ty, Prod):
        return tuple(TupleV(items) for items in _sequences(ty.components, size - 1))
    if isinstance(ty, Sum):
        return tuple(
            TagV(i, v) for i, branch in enumerate(ty.branches) for v in _of_size(branch, size - 1)
        )
    if isinstance(ty, Star):
        return tuple(WordV(items) for items in _words(ty.inner, size - 1))
    if isinstance(ty, MSet):
        letters = enumerate_values(ty.inner, size - 1)
        sizes = [value_size(v) for v in letters]
        return tuple(MSetV(bag) for bag in _bags(tuple(letters), tuple(sizes), size - 1, 0))
    raise ConformanceError(f"unknown type node {type(ty).__name__}")


def _sequences(components: Tuple[TypeExpr, ...], total: int) -> List[Tuple[Value, ...]]:
    """Tuples over ``components`` whose sizes add up to ``total``"""
    if not components:
        return [()] if total == 0 else []
    head, rest = components[0], components[1:]
    out: List[Tuple[Value, ...]] = []
    for k in range(1, total - len(rest) + 1):
        heads = _of_size(head, k)
        if not heads:
            continue
        tails = _sequences(rest, total - k)
        out.extend((h,) + t for h in heads for t in tails)
    return out


@lru_cache(maxsize=None)
def _words(inner: TypeExpr, total: int) -> Tuple[Tuple[Value, ...], ...]:
    """Letter sequences whose letter sizes add up to ``total``"""
    if total == 0:
        return ((),)
    out: List[Tuple[Value, ...]] = []
    for k in range(1, total + 1):
        for letter in _of_size(inner, k):
            out.extend((letter,) + tail for tail in _words(inner, total - k))
    return tuple(out)


def _bags(
    letters: Tuple[Value, ...], sizes: Tuple[int, ...], total: int, start: int
) -> List[Tuple[Value, ...]]:
    """Non-decreasing index sequences over ``letters`` with sizes adding up to ``total``"""
    if total == 0:
        return [()]
    out: List[Tuple[Value, ...]] = []
    for i in range(start, len(letters)):
        if sizes[i] <= total:
            out.extend((letters[i],) + tail for tail in _bags(letters, sizes, total - sizes[i], i))
    return out
