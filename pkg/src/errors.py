"""Exception hierarchy for Ideal Cover"""

from typing import List, Optional, Sequence


class WqoError(ValueError):
    """Base class for every error raised by the library"""


class ConformanceError(WqoError):
    """A value or ideal does not have the shape of its declared type"""

    def __init__(self, message: str, path: Optional[Sequence[str]] = None):
        self.path: List[str] = list(path or [])
        where = "".join(self.path) or "<root>"
        super().__init__(f"{message} at {where}")


class TypeMismatchError(WqoError):
    """Two operands are declared over different types"""


class DimensionError(WqoError):
    """A Petri vector has the wrong number of places"""


class ModelIntegrityError(WqoError):
    """A lifted transition produced an ideal outside the state type"""


class UndefinedCompositeError(WqoError):
    """A composite of transitions was applied outside its domain"""


class LiteralSyntaxError(WqoError):
    """A type, value or ideal literal could not be parsed"""

    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.line = line
        self.column = column
        super().__init__(f"{message} (line {line}, column {column})")


class ModelFileError(WqoError):
    """Base class for model file errors; carries a position and an error code"""

    code = "model"

    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.line = line
        self.column = column
        super().__init__(f"{self.code} error: {message} (line {line}, column {column})")


class ModelSyntaxError(ModelFileError):
    """The model file does not follow the model grammar"""

    code = "syntax"


class ModelSemanticError(ModelFileError):
    """The model file parses but is inconsistent"""

    code = "semantic"
