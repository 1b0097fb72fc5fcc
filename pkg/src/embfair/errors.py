"""Exception types shared across the package."""


class EmbFairError(Exception):
    """Base class for all errors raised by this package."""


class NodeNotFound(EmbFairError, KeyError):
    """A node id or internal index does not exist in the graph."""

    def __str__(self) -> str:  # KeyError quotes its repr; keep messages readable
        return Exception.__str__(self)


class InvalidArgument(EmbFairError, ValueError):
    """An argument is outside its documented range."""


class InvalidData(EmbFairError, ValueError):
    """Input data violates a structural requirement (shape, finiteness, alignment)."""


class DimensionMismatch(InvalidData):
    """Rows of an embedding file disagree on dimensionality."""


class MissingEmbedding(InvalidData):
    """A graph node has no row in the embedding file."""

    def __init__(self, node_id: str):
        super().__init__(f"no embedding row for node {node_id!r}")
        self.node_id = node_id


class ReadError(EmbFairError):
    """A required input file could not be read."""


class ParseError(EmbFairError):
    """A file is syntactically malformed.

    Carries the path and 1-based line number when known.
    """

    def __init__(self, message: str, path: str | None = None, line: int | None = None):
        loc = ""
        if path is not None:
            loc = f"{path}: " if line is None else f"{path}:{line}: "
        super().__init__(loc + message)
        self.path = path
        self.line = line


class ManifestError(EmbFairError):
    """A dataset manifest is invalid or references missing inputs."""
