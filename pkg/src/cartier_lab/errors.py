"""Exception hierarchy shared by all modules."""


class CartierLabError(Exception):
    """Base class for every error raised by cartier_lab."""

    #: CLI exit code used when this error escapes a subcommand.
    exit_code = 3


class InputError(CartierLabError):
    """Invalid user input (bad prime, malformed curve, inconsistent data)."""


class ParseError(InputError):
    def __init__(self, message, offset, expected=()):
        self.offset = offset
        self.expected = tuple(sorted(set(expected)))
        detail = f"{message} at offset {offset}"
        if self.expected:
            detail += f" (expected one of: {', '.join(self.expected)})"
        super().__init__(detail)


class FieldExtensionRequired(InputError):
    """The computation would need constants outside the prime field."""


class NonSplitDenominator(FieldExtensionRequired):
    def __init__(self, factor, degree):
        self.factor = factor
        self.degree = degree
        super().__init__(
            f"denominator has an irreducible factor of degree {degree} over "
            f"F_{factor.p}; non-split part: {factor}"
        )


class ReducibleCover(InputError):
    """f lies in the image of y -> y^p - y; the 'cover' is not a curve."""


class MixedShape(InputError):
    """f has finite poles and a nonconstant polynomial part at the same time."""


class PrecisionExhausted(CartierLabError):
    """Truncated series do not carry enough terms for the requested result."""

    exit_code = 4


class InternalAssertion(CartierLabError):
    """An internal consistency check failed; indicates a bug or a false theorem."""

    exit_code = 4


class BasisDeficient(InternalAssertion):
    pass


class ImageOutsideSpan(InternalAssertion):
    pass


class BoundViolation(InternalAssertion):
    pass
