"""Readers for type, value, ideal and SRE literals

Parsing is two-staged: lark builds an untyped tree, then the tree is read
against the expected type, which decides for instance whether ``w`` is the
natural-number limit or a symbol.
"""

from typing import List, Tuple

from lark import Token, Tree
from lark.exceptions import LarkError, UnexpectedInput

from src.errors import ConformanceError, LiteralSyntaxError
from src.order.downsets import DownSet, downset_empty, downset_from_ideals
from src.order.ideals import (
    OMEGA,
    FinI,
    Ideal,
    MSetI,
    NatI,
    ProdI,
    Single,
    StarA,
    SumI,
    WordI,
    ideal_conforms,
)
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
    validate_type,
    value_conforms,
)
from src.syntax.grammar import ideal_parser, type_parser, value_parser
from src.syntax.printer import OMEGA_LITERAL


def _parse(parser, text: str, what: str) -> Tree:
    try:
        return parser.parse(text)
    except UnexpectedInput as e:
        raise LiteralSyntaxError(
            f"malformed {what} literal {text!r}",
            max(getattr(e, "line", 0) or 0, 0),
            max(getattr(e, "column", 0) or 0, 0),
        ) from e
    except LarkError as e:
        raise LiteralSyntaxError(f"malformed {what} literal {text!r}: {e}") from e


def _position(node) -> Tuple[int, int]:
    if isinstance(node, Token):
        return node.line or 0, node.column or 0
    meta = getattr(node, "meta", None)
    if meta is not None and not meta.empty:
        return meta.line, meta.column
    return 0, 0


def _fail(node, message: str) -> LiteralSyntaxError:
    line, column = _position(node)
    return LiteralSyntaxError(message, line, column)


# ---------------------------------------------------------------------------
# Types
# ---------------------------------------------------------------------------


def parse_type(text: str) -> TypeExpr:
    """
    Read a type literal such as ``fin{a,b | a<b}*`` or ``(nat * nat)``

    Raises:
        LiteralSyntaxError: On malformed text or an invalid alphabet
    """
    tree = _parse(type_parser, text, "type")
    ty = _read_type(tree)
    violations = validate_type(ty)
    if violations:
        raise LiteralSyntaxError(
            "invalid type: " + "; ".join(str(v) for v in violations), *_position(tree)
        )
    return ty


def _read_type(node: Tree) -> TypeExpr:
    kind = node.data
    if kind == "nat":
        return Nat()
    if kind == "fin":
        symbols = [str(c) for c in node.children if isinstance(c, Token)]
        pairs = [(str(p.children[0]), str(p.children[1])) for p in node.children if isinstance(p, Tree)]
        for a, b in pairs:
            if a not in symbols or b not in symbols:
                raise _fail(node, f"pair {a}<{b} uses a symbol outside the alphabet")
        return Fin.from_pairs(symbols, pairs)
    if kind == "prod":
        return Prod(tuple(_read_type(c) for c in node.children))
    if kind == "sum":
        return Sum(tuple(_read_type(c) for c in node.children))
    if kind == "star":
        return Star(_read_type(node.children[0]))
    if kind == "mset":
        return MSet(_read_type(node.children[0]))
    raise _fail(node, f"unexpected type node {kind}")


# ---------------------------------------------------------------------------
# Values
# ---------------------------------------------------------------------------


def parse_value(ty: TypeExpr, text: str) -> Value:
    """
    Read a value literal against its type

    Raises:
        LiteralSyntaxError: On malformed text or a shape mismatch
    """
    tree = _parse(value_parser, text, "value")
    value = _read_value(ty, tree)
    try:
        value_conforms(ty, value)
    except ConformanceError as e:
        raise _fail(tree, str(e)) from e
    return value


def _read_value(ty: TypeExpr, node: Tree) -> Value:
    kind = node.data
    children = [c for c in node.children if not (isinstance(c, Token) and c.type == "QUOTE")]
    if isinstance(ty, Nat) and kind == "num":
        return NatV(int(children[0]))
    if isinstance(ty, Fin) and kind == "name":
        symbol = str(children[0])
        if symbol not in ty.carrier:
            raise _fail(node, f"unknown symbol {symbol}")
        return FinV(symbol)
    if isinstance(ty, Prod) and kind == "tuple":
        if len(children) != len(ty.components):
            raise _fail(node, f"expected a {len(ty.components)}-tuple")
        return TupleV(tuple(_read_value(t, c) for t, c in zip(ty.components, children)))
    if isinstance(ty, Sum) and kind == "tag":
        index = int(children[0])
        if not 0 <= index < len(ty.branches):
            raise _fail(node, f"tag {index} out of range")
        return TagV(index, _read_value(ty.branches[index], children[1]))
    if isinstance(ty, Star) and kind == "word":
        return WordV(tuple(_read_value(ty.inner, c) for c in children))
    if isinstance(ty, MSet) and kind == "bag":
        return MSetV(tuple(_read_value(ty.inner, c) for c in children))
    raise _fail(node, f"a {kind} literal does not fit type {type(ty).__name__}")


# ---------------------------------------------------------------------------
# Ideals and SREs
# ---------------------------------------------------------------------------


def parse_ideal(ty: TypeExpr, text: str) -> Ideal:
    """
    Read a single ideal literal against its type

    Raises:
        LiteralSyntaxError: On malformed text, a shape mismatch, or a sum
    """
    terms = _read_terms(ty, _parse(ideal_parser, text, "ideal"))
    if len(terms) != 1:
        raise LiteralSyntaxError(f"expected exactly one ideal in {text!r}")
    return terms[0]


def parse_sre(ty: TypeExpr, text: str) -> List[Ideal]:
    """Read a sum of ideals, keeping the terms as written"""
    return _read_terms(ty, _parse(ideal_parser, text, "SRE"))


def parse_downset(ty: TypeExpr, text: str) -> DownSet:
    """Read a sum of ideals into a canonical downset"""
    terms = parse_sre(ty, text)
    if not terms:
        return downset_empty(ty)
    return downset_from_ideals(ty, terms)


def _read_terms(ty: TypeExpr, tree: Tree) -> List[Ideal]:
    if tree.data == "empty_sre":
        return []
    ideals = []
    for term in tree.children:
        ideal = _read_ideal(ty, term, top=True)
        try:
            ideal_conforms(ty, ideal)
        except ConformanceError as e:
            raise _fail(term, str(e)) from e
        ideals.append(ideal)
    return ideals


def _read_ideal(ty: TypeExpr, node: Tree, top: bool = False) -> Ideal:
    kind = node.data
    children = node.children
    if kind == "group":
        return _read_ideal(ty, children[0], top=True)
    if isinstance(ty, Nat):
        if kind == "num":
            return NatI(int(children[0]))
        if kind == "name" and str(children[0]) == OMEGA_LITERAL:
            return NatI(OMEGA)
    elif isinstance(ty, Fin):
        if kind == "name":
            symbol = str(children[0])
            if symbol not in ty.carrier:
                raise _fail(node, f"unknown symbol {symbol}")
            return FinI(symbol)
    elif isinstance(ty, Prod):
        if kind == "tuple":
            if len(children) != len(ty.components):
                raise _fail(node, f"expected a {len(ty.components)}-tuple")
            return ProdI(tuple(_read_ideal(t, c) for t, c in zip(ty.components, children)))
    elif isinstance(ty, Sum):
        if kind == "tag":
            index = int(children[0])
            if not 0 <= index < len(ty.branches):
                raise _fail(node, f"tag {index} out of range")
            return SumI(index, _read_ideal(ty.branches[index], children[1]))
    elif isinstance(ty, Star):
        if top and kind == "epsilon":
            return WordI(())
        if top and kind == "product":
            atoms = []
            for atom in children:
                if atom.data == "single":
                    atoms.append(Single(_read_ideal(ty.inner, atom.children[0])))
                else:
                    atoms.append(StarA(tuple(_read_ideal(ty.inner, c) for c in atom.children)))
            return WordI(tuple(atoms))
    elif isinstance(ty, MSet):
        if top and kind == "mset":
            star_node, singles_node = children
            return MSetI(
                tuple(_read_ideal(ty.inner, c) for c in star_node.children),
                tuple(_read_ideal(ty.inner, c) for c in singles_node.children),
            )
    raise _fail(node, f"a {kind} literal does not fit type {type(ty).__name__}")
