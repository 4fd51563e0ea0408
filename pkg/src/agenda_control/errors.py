"""Exception hierarchy. Each class maps to one CLI exit code."""


class AgendaControlError(Exception):
    exit_code = 4


class InputError(AgendaControlError, ValueError):
    """Malformed or inconsistent input.

    Parameters
    ----------
    message : str
    code : str
        Stable identifier of the error kind, e.g. ``E_DUPLICATE_CANDIDATE``.
    line : int, optional
        1-based line number when the error comes from a parsed document.
    """

    exit_code = 2

    def __init__(self, message, code="E_INPUT", line=None):
        self.code = code
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(f"{prefix}[{code}] {message}")


class ResourceError(AgendaControlError, RuntimeError):
    """A configured size cap or search budget would be exceeded."""

    exit_code = 3


class InvariantError(AgendaControlError, AssertionError):
    """An internal consistency check failed. Always a bug."""

    exit_code = 4
