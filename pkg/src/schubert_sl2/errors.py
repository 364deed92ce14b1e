"""Exception hierarchy shared by all schubert_sl2 modules."""


class SchubertError(Exception):
    """Base class for all errors raised by this package."""


class NotDivisible(SchubertError):
    """Exact Laurent-polynomial division has no exact quotient.

    On the structure-constant recursion this signals an internal
    inconsistency (the divisions there are always exact), so callers
    should treat it as a bug, not a recoverable condition.
    """


class ZeroInput(SchubertError):
    """An operation that needs a nonzero polynomial got zero."""


class OutOfRange(SchubertError):
    """An index argument lies outside its documented range."""


class BadRange(SchubertError):
    """An index pair violates its documented ordering constraint."""


class TooLarge(SchubertError):
    """A brute-force oracle was asked for an input beyond its cost guard."""


class NonInteger(SchubertError):
    """A value that must be integral came out with a fractional part."""


class CorruptCache(SchubertError):
    """A cache file failed validation; the message names the offender."""


class BadRequest(SchubertError):
    """A CLI/table request is malformed (bad theory, empty range, ...)."""
