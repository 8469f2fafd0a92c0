"""Exception hierarchy.

Everything raised on purpose by this package derives from MullineuxError.
InputError (and its subclasses) marks bad user input and maps to exit code 2
in the command line tool; InternalError marks a violated internal consistency
guarantee and maps to exit code 3.
"""


class MullineuxError(Exception):
    """Base class for all errors raised by this package."""


class InputError(MullineuxError, ValueError):
    """A user-supplied value violates a documented precondition."""


class NoPathError(InputError):
    """Two multicharges do not lie in the same orbit, so no path exists."""


class NotAdmissibleError(InputError):
    """A multisegment has no preimage at the requested multicharge."""


class MalformedSymbolError(MullineuxError):
    """A two-row symbol does not decode to a pair of partitions.

    This is *not* an InputError: it signals that a symbol-level operation was
    applied outside its domain, which callers such as the membership test
    catch and convert into a negative answer.
    """


class InternalError(MullineuxError):
    """An internal consistency guarantee failed; indicates a bug."""
