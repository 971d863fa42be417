class HallSkewError(Exception):
    """Base class for all errors raised by this package."""


class DegreeMismatch(HallSkewError, ValueError):
    pass


class BoundExceeded(HallSkewError):
    """A configured size bound (index, element count, darts, ...) would be exceeded."""


class NotASubgroup(HallSkewError, ValueError):
    pass


class HypothesisError(HallSkewError, ValueError):
    """Parameters fall outside the standing hypothesis (d prime, gcd(d, q-1) = 1, ...)."""


class NotAFactorization(HallSkewError):
    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


class NotCoreFree(HallSkewError):
    pass
