"""Exception types raised across the package."""


class QuadYBError(Exception):
    """Base class for all package errors."""


class DivisionByZeroFunction(QuadYBError, ZeroDivisionError):
    pass


class SubstitutionDegenerate(QuadYBError):
    pass


class DegenerateQuadruple(QuadYBError, ValueError):
    pass


class SingularPoint(QuadYBError):
    def __init__(self, msg, point=None):
        super().__init__(msg)
        self.point = point


class NotLinearFractional(QuadYBError, ValueError):
    pass


class NotInvolutive(QuadYBError, ValueError):
    pass


class SampleExhaustion(QuadYBError):
    pass


class UnresolvedSingularity(QuadYBError):
    pass


class DegenerateSingularity(QuadYBError):
    pass


class NotAdmissible(QuadYBError, ValueError):
    pass


class UnsupportedType(QuadYBError, ValueError):
    pass


class ParametrizationPole(QuadYBError):
    pass


class PointNotOnConic(QuadYBError, ValueError):
    pass


class DegeneratePencil(QuadYBError, ValueError):
    pass


class NotSubtractionFree(QuadYBError, ValueError):
    pass


class ParseError(QuadYBError, ValueError):
    def __init__(self, msg, pos=None):
        if pos is not None:
            msg = f"{msg} at position {pos}"
        super().__init__(msg)
        self.pos = pos


class UnknownIdentifier(ParseError):
    def __init__(self, name, pos=None):
        super().__init__(f"unknown identifier {name!r}", pos)
        self.name = name
