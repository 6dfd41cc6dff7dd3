"""Pretty printers for types, values, ideals and downsets

Every printer is the inverse of the matching reader in
``src.syntax.literals``: reading a printed object gives it back.
"""

from typing import List

from src.order.downsets import DownSet
from src.order.ideals import FinI, Ideal, MSetI, NatI, ProdI, Single, SumI, WordI
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
)

OMEGA_LITERAL = "w"
EPSILON_LITERAL = '""'
EMPTY_SRE_LITERAL = "{}"


def format_type(ty: TypeExpr) -> str:
    if isinstance(ty, Nat):
        return "nat"
    if isinstance(ty, Fin):
        pairs = [
            f"{a}<{b}" for a in ty.carrier for b in ty.carrier if a != b and ty.le(a, b)
        ]
        body = ",".join(ty.carrier)
        if pairs:
            body += " | " + ", ".join(pairs)
        return f"fin{{{body}}}"
    if isinstance(ty, Prod):
        return "(" + " * ".join(format_type(c) for c in ty.components) + ")"
    if isinstance(ty, Sum):
        if len(ty.branches) == 1:
            return f"(+ {format_type(ty.branches[0])})"
        return "(" + " + ".join(format_type(b) for b in ty.branches) + ")"
    if isinstance(ty, Star):
        return f"{format_type(ty.inner)}*"
    return f"{format_type(ty.inner)}@"


def format_value(value: Value, nested_in_word: bool = False) -> str:
    """
    Print a value literal

    Args:
        value: Value to print
        nested_in_word: Whether the value sits inside a quoted word, where
            inner words are written ``<...>``
    """
    if isinstance(value, NatV):
        return str(value.n)
    if isinstance(value, FinV):
        return value.symbol
    if isinstance(value, TupleV):
        return "(" + ", ".join(format_value(v, nested_in_word) for v in value.items) + ")"
    if isinstance(value, TagV):
        return f"#{value.index}:{format_value(value.value, nested_in_word)}"
    if isinstance(value, WordV):
        body = " ".join(format_value(v, True) for v in value.items)
        return f"<{body}>" if nested_in_word else f'"{body}"'
    if isinstance(value, MSetV):
        if not value.items:
            return "[||]"
        return "[| " + ", ".join(format_value(v, nested_in_word) for v in value.items) + " |]"
    raise TypeError(f"not a value: {value!r}")


def format_ideal(ideal: Ideal) -> str:
    """Print an ideal; word and multiset products are printed bare"""
    if isinstance(ideal, WordI):
        if not ideal.atoms:
            return EPSILON_LITERAL
        parts: List[str] = []
        for atom in ideal.atoms:
            if isinstance(atom, Single):
                parts.append(f"{_primary(atom.ideal)}?")
            else:
                parts.append("{" + ",".join(_primary(m) for m in atom.members) + "}*")
        return " ".join(parts)
    if isinstance(ideal, MSetI):
        star = ",".join(_primary(m) for m in ideal.star)
        singles = " ".join(f"{_primary(s)}?" for s in ideal.singles)
        return f"{{{star}}}@ <{singles}>"
    return _primary(ideal)


def _primary(ideal: Ideal) -> str:
    """Print an ideal in a nested position"""
    if isinstance(ideal, NatI):
        return OMEGA_LITERAL if ideal.is_omega else str(ideal.bound)
    if isinstance(ideal, FinI):
        return ideal.symbol
    if isinstance(ideal, ProdI):
        return "(" + ", ".join(_primary(i) for i in ideal.items) + ")"
    if isinstance(ideal, SumI):
        return f"#{ideal.index}:{_primary(ideal.ideal)}"
    return f"[{format_ideal(ideal)}]"


def format_downset(downset: DownSet) -> str:
    """Print a downset as a sum of ideals"""
    if downset.is_empty:
        return EMPTY_SRE_LITERAL
    return " + ".join(format_ideal(part) for part in downset.parts)
