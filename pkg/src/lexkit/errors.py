"""Exception hierarchy shared by all lexkit modules.

Two families matter to callers (and to the CLI exit codes):

* :class:`DataError` -- the input is readable but violates a domain rule
  (unknown tag code, value not expressible in a dialect, ...).
* :class:`FormatError` -- the input could not be read at all (malformed
  line, broken XML, structural violation found while loading).
"""


class LexkitError(Exception):
    """Base class of every error raised by this package."""


class DataError(LexkitError):
    pass


class FormatError(LexkitError):
    pass


class ParseError(FormatError):
    """A line-oriented text file could not be parsed."""

    def __init__(self, line: int, message: str):
        self.line = line
        self.message = message
        super().__init__(f"line {line}: {message}")
