"""Data-type grammar and concrete values

Types are built from ``Nat``, ``Fin`` (a finite quasi-ordered alphabet),
finite products, disjoint sums, finite words (``Star``) and finite
multisets (``MSet``). Values mirror the same shapes. Everything here is
immutable and hashable.
"""

from dataclasses import dataclass, field
from itertools import product as cartesian
from typing import FrozenSet, Iterable, List, NamedTuple, Sequence, Tuple, Union

import networkx as nx

from src.errors import ConformanceError


# ---------------------------------------------------------------------------
# Types
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Nat:
    """Natural numbers with their usual ordering"""


@dataclass(frozen=True)
class Fin:
    """Finite alphabet quasi-ordered by an explicit relation table"""

    carrier: Tuple[str, ...]
    leq: FrozenSet[Tuple[str, str]] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "carrier", tuple(self.carrier))
        object.__setattr__(self, "leq", frozenset(self.leq))

    @classmethod
    def from_pairs(cls, carrier: Sequence[str], pairs: Iterable[Tuple[str, str]] = ()) -> "Fin":
        """
        Build an alphabet from ``a <= b`` pairs, adding reflexivity and the
        transitive closure

        Args:
            carrier: Symbols of the alphabet
            pairs: Declared comparabilities

        Returns:
            Alphabet whose relation is the reflexive-transitive closure
        """
        symbols = tuple(carrier)
        graph = nx.DiGraph()
        graph.add_nodes_from(symbols)
        graph.add_edges_from(pairs)
        closure = nx.transitive_closure(graph, reflexive=True)
        return cls(symbols, frozenset(closure.edges()))

    @classmethod
    def discrete(cls, carrier: Sequence[str]) -> "Fin":
        """Alphabet ordered by equality"""
        return cls.from_pairs(carrier)

    def le(self, a: str, b: str) -> bool:
        return (a, b) in self.leq

    def maximal(self) -> List[str]:
        """Symbols with no strictly larger symbol, one per equivalence class"""
        result: List[str] = []
        for a in self.carrier:
            if any(self.le(a, b) and not self.le(b, a) for b in self.carrier):
                continue
            if any(self.le(a, kept) and self.le(kept, a) for kept in result):
                continue
            result.append(a)
        return result


@dataclass(frozen=True)
class Prod:
    components: Tuple["TypeExpr", ...]

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))


@dataclass(frozen=True)
class Sum:
    branches: Tuple["TypeExpr", ...]

    def __post_init__(self):
        object.__setattr__(self, "branches", tuple(self.branches))


@dataclass(frozen=True)
class Star:
    """Finite words ordered by embedding"""

    inner: "TypeExpr"


@dataclass(frozen=True)
class MSet:
    """Finite multisets ordered by injective domination"""

    inner: "TypeExpr"


TypeExpr = Union[Nat, Fin, Prod, Sum, Star, MSet]


class Violation(NamedTuple):
    """One broken type invariant"""

    path: str
    message: str

    def __str__(self) -> str:
        return f"{self.path or '<root>'}: {self.message}"


def validate_type(ty: TypeExpr, path: str = "") -> List[Violation]:
    """
    Check the invariants of a type expression

    Args:
        ty: Type to check
        path: Position of ``ty`` inside the enclosing type

    Returns:
        Violations found; empty when the type is valid
    """
    violations: List[Violation] = []
    if isinstance(ty, Nat):
        return violations
    if isinstance(ty, Fin):
        if not ty.carrier:
            violations.append(Violation(path, "empty carrier"))
        seen = set()
        for symbol in ty.carrier:
            if symbol in seen:
                violations.append(Violation(path, f"duplicate symbol {symbol}"))
            seen.add(symbol)
        for a, b in sorted(ty.leq):
            if a not in seen or b not in seen:
                violations.append(Violation(path, f"pair {a}<={b} outside carrier"))
        for a in ty.carrier:
            if not ty.le(a, a):
                violations.append(Violation(path, f"non-reflexive at {a}"))
        for a, b, c in cartesian(ty.carrier, repeat=3):
            if ty.le(a, b) and ty.le(b, c) and not ty.le(a, c):
                violations.append(Violation(path, f"non-transitive {a},{b},{c}"))
        return violations
    if isinstance(ty, Prod):
        if not ty.components:
            violations.append(Violation(path, "empty product"))
        for i, component in enumerate(ty.components):
            violations.extend(validate_type(component, f"{path}[{i}]"))
        return violations
    if isinstance(ty, Sum):
        if not ty.branches:
            violations.append(Violation(path, "empty sum"))
        for i, branch in enumerate(ty.branches):
            violations.extend(validate_type(branch, f"{path}#{i}"))
        return violations
    if isinstance(ty, Star):
        return validate_type(ty.inner, f"{path}*")
    if isinstance(ty, MSet):
        return validate_type(ty.inner, f"{path}@")
    return [Violation(path, f"unknown type node {type(ty).__name__}")]


def type_depth(ty: TypeExpr) -> int:
    """Number of constructor levels; leaves have depth 0"""
    if isinstance(ty, (Nat, Fin)):
        return 0
    if isinstance(ty, Prod):
        return 1 + max(type_depth(c) for c in ty.components)
    if isinstance(ty, Sum):
        return 1 + max(type_depth(b) for b in ty.branches)
    return 1 + type_depth(ty.inner)


# ---------------------------------------------------------------------------
# Values
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class NatV:
    n: int


@dataclass(frozen=True)
class FinV:
    symbol: str


@dataclass(frozen=True)
class TupleV:
    items: Tuple["Value", ...]

    def __post_init__(self):
        object.__setattr__(self, "items", tuple(self.items))


@dataclass(frozen=True)
class TagV:
    index: int
    value: "Value"


@dataclass(frozen=True)
class WordV:
    items: Tuple["Value", ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "items", tuple(self.items))


@dataclass(frozen=True)
class MSetV:
    """Finite bag; items are kept sorted so equal bags compare equal"""

    items: Tuple["Value", ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "items", tuple(sorted(self.items, key=value_sort_key)))


Value = Union[NatV, FinV, TupleV, TagV, WordV, MSetV]


def value_sort_key(value: "Value") -> tuple:
    """Total order on values of one type, used to normalise bags"""
    if isinstance(value, NatV):
        return (0, value.n)
    if isinstance(value, FinV):
        return (1, value.symbol)
    if isinstance(value, TupleV):
        return (2, tuple(value_sort_key(v) for v in value.items))
    if isinstance(value, TagV):
        return (3, value.index, value_sort_key(value.value))
    if isinstance(value, WordV):
        return (4, len(value.items), tuple(value_sort_key(v) for v in value.items))
    return (5, len(value.items), tuple(value_sort_key(v) for v in value.items))


def value_conforms(ty: TypeExpr, value: Value, path: Tuple[str, ...] = ()) -> None:
    """
    Check that a value has the shape of a type

    Args:
        ty: Declared type
        value: Value to check
        path: Position of ``value`` inside the enclosing value

    Raises:
        ConformanceError: With the path of the first mismatch
    """
    if isinstance(ty, Nat):
        if not isinstance(value, NatV) or isinstance(value.n, bool) or value.n < 0:
            raise ConformanceError("expected a natural number", path)
    elif isinstance(ty, Fin):
        if not isinstance(value, FinV) or value.symbol not in ty.carrier:
            raise ConformanceError(f"expected a symbol of {{{', '.join(ty.carrier)}}}", path)
    elif isinstance(ty, Prod):
        if not isinstance(value, TupleV) or len(value.items) != len(ty.components):
            raise ConformanceError(f"expected a {len(ty.components)}-tuple", path)
        for i, (component, item) in enumerate(zip(ty.components, value.items)):
            value_conforms(component, item, path + (f"[{i}]",))
    elif isinstance(ty, Sum):
        if not isinstance(value, TagV) or not 0 <= value.index < len(ty.branches):
            raise ConformanceError(f"expected a tag below {len(ty.branches)}", path)
        value_conforms(ty.branches[value.index], value.value, path + (f"#{value.index}",))
    elif isinstance(ty, Star):
        if not isinstance(value, WordV):
            raise ConformanceError("expected a word", path)
        for i, item in enumerate(value.items):
            value_conforms(ty.inner, item, path + (f"word[{i}]",))
    elif isinstance(ty, MSet):
        if not isinstance(value, MSetV):
            raise ConformanceError("expected a multiset", path)
        for i, item in enumerate(value.items):
            value_conforms(ty.inner, item, path + (f"bag[{i}]",))
    else:
        raise ConformanceError(f"unknown type node {type(ty).__name__}", path)
