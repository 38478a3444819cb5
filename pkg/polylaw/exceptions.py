""" Exception classes raised by polylaw.

Law violations found by the verification suites are never raised; they are
collected in a :class:`polylaw.report.Report`. The classes below signal misuse
of the library or malformed input.
"""


class PolylawError(Exception):
    """ Base class of all errors raised by polylaw. """


class CompositionError(PolylawError, ValueError):
    """ Two morphisms or polymaps cannot be composed (endpoint or cut mismatch, missing entry). """


class BoundExceededError(CompositionError):
    """ A composite would have a domain or codomain longer than the length bound of a table. """


class UsageError(PolylawError, TypeError):
    """ An operation was given an input of the wrong kind. """


class PolyTableError(PolylawError, ValueError):
    """ Base class of errors raised while loading or validating a polycategory table. """


class PolyTableParseError(PolyTableError):
    """ A table file is not well-formed.

    Parameters
    ----------
    message : str
        Description of the problem.

    line, column : int, optional
        1-based position in the file, when known.
    """

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)


class DanglingReferenceError(PolyTableError):
    """ A table entry refers to a polymap or object id that is not declared. """

    def __init__(self, ref, where):
        self.ref = ref
        self.where = where
        super().__init__(f"Unknown id '{ref}' referenced in {where}.")


class PolyTableInvariantError(PolyTableError):
    """ A table entry violates a structural law checked at load time. """

    def __init__(self, law, entry, detail=""):
        self.law = law
        self.entry = entry
        message = f"Entry {entry} violates '{law}'"
        if detail:
            message += f": {detail}"
        super().__init__(message)


class EncodingError(PolylawError, ValueError):
    """ A command-line encoding such as ``"1,1,2@2"`` is malformed. """


class CompositeTypeError(CompositionError):
    """ A table returns a composite whose type differs from the type of the cut.

    Parameters
    ----------
    key : tuple
        The composition entry ``(g, f, i, j)``.

    result : str
        Id of the stored composite.

    expected : tuple
        ``(dom, cod)`` that the cut gives.
    """

    def __init__(self, key, result, expected):
        self.key = tuple(key)
        self.result = result
        self.expected = expected
        super().__init__(f"Composite {result} of entry {self.key} does not have type {expected[0]} -> {expected[1]}.")
