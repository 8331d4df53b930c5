"""Exception hierarchy for the AWTP-PD simulator."""


class AwtpPdError(Exception):
    """Base class for every error raised by the simulator."""


class ConfigurationError(AwtpPdError, ValueError):
    """Parameters are inconsistent or outside their allowed ranges."""


class ModulusMismatchError(AwtpPdError, ValueError):
    """Two field elements from different prime fields were combined."""


class ZeroDivisionFieldError(AwtpPdError, ZeroDivisionError):
    """Inverse of the zero element was requested."""


class HashInputError(AwtpPdError, ValueError):
    """Hash input violates the family's length or distinctness constraints."""


class ExtractorError(AwtpPdError, ValueError):
    """Extractor parameters or interpolation points are invalid."""


class StrategyViolationError(AwtpPdError, RuntimeError):
    """An adversary strategy stepped outside its read/write sets or budget."""


class ChannelUsageError(AwtpPdError, RuntimeError):
    """A party used a channel it is not allowed to use."""


class MalformedMessageError(AwtpPdError, ValueError):
    """A public-discussion payload has the wrong length or an out-of-range value."""


class InsufficientEntropyError(AwtpPdError, RuntimeError):
    """Too few components passed verification to extract an l-symbol key."""


class EnumerationBudgetError(AwtpPdError, ValueError):
    """Exhaustive enumeration would exceed the configured budget."""


class RestrictionError(AwtpPdError, ValueError):
    """Transcript does not come from a restricted (S_r = S_w) execution."""


class SymmetryError(AwtpPdError, ValueError):
    """Wires of a wire transcript do not share one per-round alphabet."""


class TranscriptFormatError(AwtpPdError, ValueError):
    """A transcript file could not be parsed."""


class TapeExhaustedError(AwtpPdError, RuntimeError):
    """A fixed random tape ran out of symbols."""
