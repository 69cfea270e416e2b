"""Exception hierarchy.

Every error raised on purpose by the library derives from :class:`ValxError`.
Precondition failures (bad input, unmet hypotheses) map to CLI exit code 3,
broken internal invariants to exit code 4.
"""


class ValxError(Exception):
    """Base class for all library errors."""


class PreconditionError(ValxError):
    """A documented precondition of an operation does not hold."""


class InvariantBreach(ValxError):
    """An internal consistency check failed; this indicates a bug."""


# value groups
class RankMismatch(PreconditionError):
    pass


class NonIntegralGammaDivision(PreconditionError):
    pass


class UnsupportedValue(PreconditionError):
    pass


# fields and towers
class NotTotallyRamified(PreconditionError):
    pass


class InconsistentRootValue(PreconditionError):
    pass


class NonMonic(PreconditionError):
    pass


class NonzeroValue(PreconditionError):
    pass


class NonNegativeValue(PreconditionError):
    pass


class CharZero(PreconditionError):
    pass


class NotPowerOfCharExponent(PreconditionError):
    pass


class LevelMismatch(PreconditionError):
    pass


# polynomials
class NonMonicQ(PreconditionError):
    pass


class NonMonicDivisor(PreconditionError):
    pass


class ZeroPolynomial(PreconditionError):
    pass


class NotARoot(PreconditionError):
    pass


# extension / structure
class Inseparable(PreconditionError):
    pass


class DegreeOne(PreconditionError):
    pass


class IncomparableSpecs(PreconditionError):
    pass


class NotMinimalAsserted(PreconditionError):
    pass


class NotHenselianContext(PreconditionError):
    pass


class BrokenMonotonicity(PreconditionError):
    pass


class NotCoincident(PreconditionError):
    pass


# session files
class ParseError(ValxError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


class UseBeforeDecl(ParseError):
    pass
