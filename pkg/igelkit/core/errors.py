class IgelError(Exception):
    """Base class for every error raised by igelkit."""


class GraphFormatError(IgelError, ValueError):
    def __init__(self, message, line=None, source=None):
        super().__init__(message)
        self.message = message
        self.line = line
        self.source = source

    def with_source(self, source):
        """Returns a copy of this error tagged with the file it came from."""
        err = type(self)(self.message, line=self.line, source=source)
        err.__cause__ = self.__cause__
        return err

    def __str__(self):
        prefix = ""
        if self.source:
            prefix = f"{self.source}:"
        if self.line is not None:
            prefix += f"{self.line}:"
        return f"{prefix} {self.message}" if prefix else self.message


class SelfLoopError(GraphFormatError):
    pass


class DirectedInputError(GraphFormatError):
    pass


class VertexRangeError(IgelError, IndexError):
    pass


class InvalidParameterError(IgelError, ValueError):
    pass


class NotInEgoNetworkError(IgelError, ValueError):
    pass


class GenerationError(IgelError, RuntimeError):
    pass


class OracleSizeError(IgelError, ValueError):
    def __init__(self, message, offending=()):
        super().__init__(message)
        self.offending = tuple(offending)
