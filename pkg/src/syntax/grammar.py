"""Lark grammars for type, value and ideal literals"""

from lark import Lark

TYPE_GRAMMAR = r"""
    ?start: typ

    ?typ: atomic
        | typ "*"                          -> star
        | typ "@"                          -> mset

    atomic: "nat"                          -> nat
          | "fin" "{" NAME ("," NAME)* ("|" (pair ("," pair)*)?)? "}" -> fin
          | "(" typ ("*" typ)* ")"         -> prod
          | "(" typ ("+" typ)+ ")"         -> sum
          | "(" "+" typ ")"                -> sum

    pair: NAME "<" NAME

    NAME: /[A-Za-z_][A-Za-z0-9_]*/

    %import common.WS
    %ignore WS
"""

VALUE_GRAMMAR = r"""
    ?start: value

    value: INT                             -> num
         | NAME                            -> name
         | "(" value ("," value)* ")"      -> tuple
         | "#" INT ":" value               -> tag
         | QUOTE value* QUOTE              -> word
         | "<" value* ">"                  -> word
         | "[|" (value ("," value)*)? "|]" -> bag

    QUOTE: "\""
    NAME: /[A-Za-z_][A-Za-z0-9_]*/

    %import common.INT
    %import common.WS
    %ignore WS
"""

IDEAL_GRAMMAR = r"""
    ?start: sre

    sre: "{" "}"                           -> empty_sre
       | term ("+" term)*                  -> sre

    ?term: primary
         | product
         | mset

    product: atom+
           | EPSILON                       -> epsilon

    atom: primary "?"                      -> single
        | "{" primary ("," primary)* "}" "*" -> star

    mset: "{" mset_star "}" "@" "<" mset_singles ">"
    mset_star: (primary ("," primary)*)?
    mset_singles: (primary "?")*

    primary: INT                           -> num
           | NAME                          -> name
           | "(" primary ("," primary)* ")" -> tuple
           | "#" INT ":" primary           -> tag
           | "[" (product | mset) "]"      -> group

    EPSILON: "\"\""
    NAME: /[A-Za-z_][A-Za-z0-9_]*/

    %import common.INT
    %import common.WS
    %ignore WS
"""


def _build(grammar: str) -> Lark:
    # The dynamic lexer only tries terminals the parser expects, so keywords
    # such as ``nat`` stay usable as alphabet symbols.
    return Lark(grammar, parser="earley", lexer="dynamic", propagate_positions=True)


type_parser = _build(TYPE_GRAMMAR)
value_parser = _build(VALUE_GRAMMAR)
ideal_parser = _build(IDEAL_GRAMMAR)
