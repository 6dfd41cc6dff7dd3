"""Reader for line-oriented model files

A file starts with a header line, ``petri places=K`` or
``flcs alphabet={a,b}``, followed by one ``trans`` line per transition::

    petri places=2
    trans t1 pre=(1,0) post=(0,2)
    trans t2 delta=(1,-1)

    flcs alphabet={a,b}
    trans s1 send a
    trans r1 recv a

``#`` starts a comment running to the end of the line.
"""

from pathlib import Path
from typing import List, Set, Tuple, Union

from lark import Lark, Token, Tree
from lark.exceptions import LarkError, UnexpectedInput

from src.engine.model import Model
from src.errors import ModelSemanticError, ModelSyntaxError
from src.models.flcs import ChannelOp, Flcs, FlcsTransition, flcs_model
from src.models.petri import PetriNet, PetriTransition, petri_model
from src.utils.logger import setup_logger

logger = setup_logger("model_file")

MODEL_GRAMMAR = r"""
    start: _NL* header (_NL+ transition)* _NL*

    header: "petri" "places" "=" SIGNED_INT                      -> petri_header
          | "flcs" "alphabet" "=" "{" (NAME ("," NAME)*)? "}"    -> flcs_header

    transition: "trans" NAME "pre" "=" vector "post" "=" vector  -> arcs
              | "trans" NAME "delta" "=" vector                  -> delta
              | "trans" NAME "send" NAME                         -> send
              | "trans" NAME "recv" NAME                         -> recv

    vector: "(" SIGNED_INT ("," SIGNED_INT)* ")"

    NAME: /[A-Za-z_][A-Za-z0-9_]*/
    COMMENT: /#[^\n]*/
    _NL: /(\r?\n)+/

    %import common.SIGNED_INT
    %ignore /[ \t\f]+/
    %ignore COMMENT
"""

# Keywords are only matched where expected, so ``send`` or ``post`` can name a
# transition or a letter.
model_parser = Lark(MODEL_GRAMMAR, parser="earley", lexer="dynamic", propagate_positions=True)

ModelSource = Union[PetriNet, Flcs]


def _semantic(token: Token, message: str) -> ModelSemanticError:
    return ModelSemanticError(message, token.line or 0, token.column or 0)


def _vector(node: Tree) -> Tuple[Tuple[int, ...], Token]:
    return tuple(int(token) for token in node.children), node.children[0]


def _read_petri(header: Tree, transitions: List[Tree]) -> PetriNet:
    places_token = header.children[0]
    places = int(places_token)
    if places < 1:
        raise _semantic(places_token, "a Petri net needs at least one place")

    result: List[PetriTransition] = []
    for node in transitions:
        name = node.children[0]
        if node.data in ("send", "recv"):
            raise _semantic(name, f"channel operation in transition {name} of a Petri net")
        vectors = [_vector(child) for child in node.children[1:]]
        for values, where in vectors:
            if len(values) != places:
                raise _semantic(where, f"transition {name} has {len(values)} entries, expected {places}")
        if node.data == "arcs":
            (pre, where), (post, _) = vectors
            if min(pre + post) < 0:
                raise _semantic(where, f"transition {name} has a negative pre or post entry")
            result.append(PetriTransition(str(name), pre, post))
        else:
            result.append(PetriTransition.from_delta(str(name), vectors[0][0]))
    return PetriNet(places, tuple(result))


def _read_flcs(header: Tree, transitions: List[Tree]) -> Flcs:
    letters: List[str] = []
    for token in header.children:
        if str(token) in letters:
            raise _semantic(token, f"letter {token} declared twice")
        letters.append(str(token))
    if not letters:
        raise ModelSemanticError("the alphabet is empty", header.meta.line, header.meta.column)

    result: List[FlcsTransition] = []
    for node in transitions:
        name = node.children[0]
        if node.data not in ("send", "recv"):
            raise _semantic(name, f"Petri arcs in transition {name} of a channel system")
        letter = node.children[1]
        if str(letter) not in letters:
            raise _semantic(letter, f"transition {name} uses undeclared letter {letter}")
        result.append(FlcsTransition(str(name), ChannelOp(node.data), str(letter)))
    return Flcs(tuple(letters), tuple(result))


def parse_model_source(text: str) -> ModelSource:
    """
    Parse model text into a Petri net or a channel system

    Raises:
        ModelSyntaxError: If the text does not follow the model grammar
        ModelSemanticError: On wrong arity, negative arcs, undeclared or
            duplicate letters, or duplicate transition names
    """
    try:
        tree = model_parser.parse(text)
    except UnexpectedInput as e:
        raise ModelSyntaxError(
            "unexpected input",
            max(getattr(e, "line", 0) or 0, 0),
            max(getattr(e, "column", 0) or 0, 0),
        ) from e
    except LarkError as e:
        raise ModelSyntaxError(str(e)) from e

    header, *transitions = tree.children
    seen: Set[str] = set()
    for node in transitions:
        name = node.children[0]
        if str(name) in seen:
            raise _semantic(name, f"duplicate transition name {name}")
        seen.add(str(name))

    if header.data == "petri_header":
        return _read_petri(header, transitions)
    return _read_flcs(header, transitions)


def parse_model(text: str) -> Model:
    """
    Parse model text into an engine model

    Args:
        text: Model file contents

    Returns:
        Model with concrete and lifted steps and its widening wired in
    """
    source = parse_model_source(text)
    model = petri_model(source) if isinstance(source, PetriNet) else flcs_model(source)
    logger.info(f"Parsed {model.kind} model with transitions {list(model.transition_names())}")
    return model


def load_model(path: Union[str, Path]) -> Model:
    """Read and parse a model file"""
    return parse_model(Path(path).read_text(encoding="utf-8"))
