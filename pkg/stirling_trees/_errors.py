class StirlingTreesError(ValueError):
    """Base class of every error raised by stirling_trees."""


class InvalidObjectError(StirlingTreesError):
    """An object violates the invariants of its class."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class PathDiagramError(StirlingTreesError):
    def __init__(self, message, step=None):
        if step is not None:
            message = f"step {step}: {message}"
        super().__init__(message)
        self.step = step


class SeriesError(StirlingTreesError):
    pass


class AmbiguityError(StirlingTreesError):
    """A word was produced twice while expanding a word-level recursion."""

    def __init__(self, word):
        super().__init__(f"word produced more than once: {word!r}")
        self.word = word


class FormatError(StirlingTreesError):
    def __init__(self, message, line=1, column=1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
