"""Exception types raised across the package."""


class TaffyError(ValueError):
    """Base class for every error raised by :mod:`taffy`."""


class NotUnimodular(TaffyError):
    pass


class NotAnosov(TaffyError):
    """The map has ``|trace| <= 2``: finite order or parabolic, no exponential stretching."""


class TooFewStrands(TaffyError):
    pass


class TooFewPunctures(TaffyError):
    pass


class IndexOutOfRange(TaffyError):
    pass


class NoRootAboveOne(TaffyError):
    pass


class CoincidentRods(TaffyError):
    pass


class ProjectionDegenerate(TaffyError):
    pass


class UnknownDevice(TaffyError, KeyError):
    def __str__(self):
        return ValueError.__str__(self)
