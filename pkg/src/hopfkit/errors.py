"""Exception hierarchy shared across the package."""

from __future__ import annotations


class HopfkitError(Exception):
    """Base class for all semantic errors raised by hopfkit."""


class ParseError(HopfkitError):
    """Malformed `.grp` / `.hopf` text or scalar literal.

    Carries an optional 1-based line/column of the offending token.
    """

    def __init__(self, message: str, line: int | None = None, col: int | None = None):
        self.line = line
        self.col = col
        if line is not None:
            where = f"line {line}" + (f", col {col}" if col is not None else "")
            message = f"{where}: {message}"
        super().__init__(message)


class GroupTableError(HopfkitError):
    """A syntactically valid Cayley table that is not a group
    (Latin-square violation, broken associativity, missing identity or inverses)."""


class NotSemisimpleError(HopfkitError):
    """An integral normalization denominator vanished; the message names
    which one (eps(Lambda) = 0 vs lambda(1) = 0)."""


class IntegralSpaceError(HopfkitError):
    """The left-integral space is not 1-dimensional; the input data is corrupt."""


class FieldTooSmallError(HopfkitError):
    """A central splitting polynomial has an irreducible factor that does not
    split over the configured Q(zeta_N); rerun with a larger cyclotomic order."""


class RetriesExhaustedError(HopfkitError):
    """No splitting element with squarefree minimal polynomial of full degree
    was found within the retry budget."""


class InconsistentSystemError(HopfkitError):
    """An exact linear system that must be solvable turned out inconsistent."""
