"""Exception types shared across the package."""


class DivisionByZero(ZeroDivisionError):
    pass


class ZeroDivisor(ArithmeticError):
    """A nonzero element turned out not to be invertible.

    Raised lazily by dynamic evaluation: the defining polynomial of some
    adjoined level was reducible.  ``factor`` holds the common factor found
    (coefficients low to high, raw base values) when available.
    """

    def __init__(self, msg, factor=None):
        super().__init__(msg)
        self.factor = factor


class IncompatibleTowers(TypeError):
    pass


class DegenerateAddition(ArithmeticError):
    pass


class DependentDerivatives(ValueError):
    pass


class SingularMap(ValueError):
    pass


class UnexpectedDimension(RuntimeError):
    pass


class FiberNotPoint(RuntimeError):
    pass


class ParseError(ValueError):
    def __init__(self, msg, pos=None):
        if pos is not None:
            msg = f"{msg} at position {pos}"
        super().__init__(msg)
        self.pos = pos


class UnknownSymbol(ParseError):
    pass
