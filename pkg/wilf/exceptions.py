# exceptions.py
class WilfError(Exception):
    """Base class for every error raised by the wilf package"""
    pass


class InputError(WilfError):
    """Bad input or violated precondition; the CLI exits with code 2"""
    pass


class ParseError(InputError):
    pass


class DuplicateLetter(ParseError):
    pass


class MissingLetter(ParseError):
    pass


class NonPositiveLetter(ParseError):
    pass


class MalformedToken(ParseError):
    pass


class EmptyPattern(InputError):
    pass


class TooSmall(InputError):
    pass


class SizeTooSmall(InputError):
    pass


class SizeMismatch(InputError):
    pass


class LengthMismatch(InputError):
    pass


class OutOfRange(InputError):
    pass


class InvalidPyramid(InputError):
    pass


class NotAPrefix(InputError):
    pass


class InvalidTrapezoid(InputError):
    pass


class RangeViolation(InputError):
    pass


class NotInB(InputError):
    pass


class InvalidMove(InputError):
    pass


class LimitExceeded(InputError):
    pass


class ConfigError(InputError):
    pass


class InvariantViolation(WilfError):
    """An internal check failed; the CLI exits with code 3"""
    pass


class NegativeResult(InvariantViolation):
    pass


class ParityViolation(InvariantViolation):
    pass
