"""Exception and warning types raised across the package."""


class LPLabError(Exception):
    """Base class for every error raised by lplab."""


class InvalidParameterError(LPLabError, ValueError):
    pass


class InvalidRangeError(LPLabError, ValueError):
    pass


class InvalidIntervalError(InvalidParameterError):
    pass


class GridMismatchError(LPLabError, ValueError):
    pass


class BandLimitError(LPLabError, ValueError):
    """Interval reaches past the Nyquist band of the grid."""


class ResolutionError(LPLabError, ValueError):
    """Interval holds fewer frequency bins than the resolution guard allows."""


class ResolutionWarning(UserWarning):
    pass


class EngineError(LPLabError, ValueError):
    """Requested engine cannot evaluate the given (signal, family) pair."""


class EngineMismatchError(LPLabError, ArithmeticError):
    """FFT and closed-form engines disagree beyond the cross-check tolerance."""


class WindowTooSmallError(LPLabError, ValueError):
    pass


class DomainError(LPLabError, ValueError):
    pass


class OverlapError(LPLabError, ValueError):
    """A custom interval family is not pairwise disjoint."""


class MembershipError(LPLabError, ValueError):
    """A J-sum term does not have vanishing cell moments."""

    def __init__(self, message, index=None, cells=()):
        super().__init__(message)
        self.index = index
        self.cells = tuple(cells)


class ConfigError(LPLabError, ValueError):
    pass
