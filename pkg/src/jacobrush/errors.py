"""Exception types shared across the package."""


class InternalConsistencyError(RuntimeError):
    """A structural guarantee of the construction was violated."""


class CapExceededError(ValueError):
    """An enumeration was requested over more edges than the configured cap."""

    def __init__(self, eps: int, cap: int):
        super().__init__(
            f"census over {eps} edges exceeds the cap of {cap} "
            f"(2^{eps} orientations)"
        )
        self.eps = eps
        self.cap = cap
