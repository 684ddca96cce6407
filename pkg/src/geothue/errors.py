"""Exception taxonomy shared by all modules.

The CLI maps these onto exit codes: resource limits exit 2, everything
else here exits 1.
"""


class GeothueError(Exception):
    """Base class for all library errors."""


class AlphabetError(GeothueError):
    """Unknown or malformed symbol name."""


class FormatError(GeothueError):
    """Malformed input file or word syntax."""

    def __init__(self, message, line=None, column=None):
        if line is not None and column is not None:
            message = f"line {line}, column {column}: {message}"
        elif line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
        self.column = column


class PreconditionError(GeothueError):
    """An operation was called outside its stated preconditions."""


class StructureError(GeothueError):
    """A structure (group table, pregroup, matrix) violates its axioms."""


class ResourceLimitError(GeothueError):
    """A search hit an explicit node or step cap before deciding."""

    def __init__(self, message, cap=None):
        super().__init__(message)
        self.cap = cap
