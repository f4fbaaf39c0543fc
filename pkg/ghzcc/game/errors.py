class GameError(Exception):
    """Base class for errors raised by the game library"""

    pass


class ValidationError(GameError, ValueError):
    """Malformed input: non-bit values, wrong lengths, bad parameters"""

    pass


class DomainError(GameError, ValueError):
    """Input outside the function's domain, e.g. a broken promise"""

    pass


class LimitError(GameError):
    """Requested size exceeds a configured cap"""

    pass


class EmptyEnsembleError(GameError):
    """A restriction left no instance to evaluate"""

    pass
