"""Exception hierarchy.

Everything raised on bad *input* derives from :class:`InputError` (the CLI
maps it to exit code 1). :class:`InvariantViolation` signals a bug or a
corrupt corpus and maps to exit code 2.
"""


class VfcritError(Exception):
    pass


class InputError(VfcritError, ValueError):
    pass


class InvariantViolation(VfcritError):
    pass


class VariableCountMismatch(InputError):
    pass


class ParseError(InputError):
    def __init__(self, message, offset):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset
        self.reason = message

    def __reduce__(self):
        return (type(self), (self.reason, self.offset))


class NonUnitError(InputError):
    pass


class PrecisionError(InputError):
    pass


# Weierstrass form

class NotWeierstrass(InputError):
    pass


class NotMonic(NotWeierstrass):
    pass


class NotDistinguished(NotWeierstrass):
    pass


class PreparationError(InputError):
    pass


class OrderUndefined(PreparationError):
    pass


class NotFiniteOrder(PreparationError):
    pass


# Hypotheses of the irreducibility criterion

class HypothesisViolation(InputError):
    pass


class MultiplicityTooLow(HypothesisViolation):
    pass


class ContainsXAxis(HypothesisViolation):
    pass


class NotReduced(HypothesisViolation):
    pass


class WrongArity(InputError):
    pass


class CorpusError(InputError):
    pass
