"""Exception hierarchy.

Input problems (bad parameters, malformed files) derive from ``ValueError``;
numerical failures derive from ``ArithmeticError``.  The command line maps
the first family to exit code 2 and the second to exit code 3.
"""


class CroissantError(Exception):
    pass


class InputError(CroissantError, ValueError):
    pass


class ParseError(InputError):
    def __init__(self, message, lineno=None, source=None):
        self.lineno = lineno
        self.source = source
        where = ""
        if source is not None:
            where += f"{source}:"
        if lineno is not None:
            where += f"{lineno}:"
        super().__init__(f"{where} {message}" if where else message)


class NumericError(CroissantError, ArithmeticError):
    pass


class ConvergenceError(NumericError):
    pass


def with_context(err: CroissantError, context: str) -> CroissantError:
    """Return a copy of ``err`` of the same family, prefixed with ``context``."""
    family = NumericError if isinstance(err, ArithmeticError) else InputError
    if isinstance(err, ConvergenceError):
        family = ConvergenceError
    new = family(f"{context}: {err}")
    new.__cause__ = err
    return new
