"""Exception hierarchy.

Every error carries a stable string identifier and a process exit code so the
command line front end can map failures without inspecting messages.
"""


class LCDError(Exception):
    ident = "Error"
    exit_code = 1


# field construction and special elements
class NotPrime(LCDError, ValueError):
    ident, exit_code = "NotPrime", 10


class NotMonic(LCDError, ValueError):
    ident, exit_code = "NotMonic", 11


class OddDegree(LCDError, ValueError):
    ident, exit_code = "OddDegree", 12


class Reducible(LCDError, ValueError):
    ident, exit_code = "Reducible", 13


class FieldTooLarge(LCDError, ValueError):
    ident, exit_code = "FieldTooLarge", 14


class FieldMismatch(LCDError, ValueError):
    ident, exit_code = "FieldMismatch", 15


class EvenCharacteristic(LCDError, ValueError):
    ident, exit_code = "EvenCharacteristic", 16


class NoSquareRootOfMinusOne(LCDError, ValueError):
    ident, exit_code = "NoSquareRootOfMinusOne", 17


class InvalidAlpha(LCDError, ValueError):
    ident, exit_code = "InvalidAlpha", 18


# linear algebra
class Singular(LCDError, ArithmeticError):
    ident, exit_code = "Singular", 20


class NonSquare(LCDError, ValueError):
    ident, exit_code = "NonSquare", 21


class ShapeMismatch(LCDError, ValueError):
    ident, exit_code = "ShapeMismatch", 22


# codes
class LengthMismatch(LCDError, ValueError):
    ident, exit_code = "LengthMismatch", 30


class MissingAlpha(LCDError, ValueError):
    ident, exit_code = "MissingAlpha", 31


class RankDeficient(LCDError, ValueError):
    ident, exit_code = "RankDeficient", 32


class TooLarge(LCDError, ValueError):
    ident, exit_code = "TooLarge", 33


class TrivialCode(LCDError, ValueError):
    ident, exit_code = "TrivialCode", 34


# criteria and constructions
class NotLCD(LCDError, ValueError):
    ident, exit_code = "NotLCD", 40


class WrongCharacteristic(LCDError, ValueError):
    ident, exit_code = "WrongCharacteristic", 41


class BBlockSingular(LCDError, ValueError):
    ident, exit_code = "BBlockSingular", 42


class OmegaTraceZero(LCDError, ValueError):
    ident, exit_code = "OmegaTraceZero", 43


class NotStandardForm(LCDError, ValueError):
    ident, exit_code = "NotStandardForm", 44


# file / command line
class ParseError(LCDError, ValueError):
    ident, exit_code = "ParseError", 50


class CategoryMismatch(LCDError, ValueError):
    ident, exit_code = "CategoryMismatch", 51
