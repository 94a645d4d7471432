"""Exception types shared across the package."""


class ValidationError(ValueError):
    """An input or precondition contract was violated by the caller."""


class UnsupportedImageError(ValidationError):
    """The file is readable but not an 8-bit grayscale image we handle."""


class FillInvariantError(RuntimeError):
    """Internal scan state broke an invariant that should always hold.

    Raised by the backward scan when it runs off a row or lands on a
    pixel that is neither an exterior nor an interior label. Seeing this
    means the working image was corrupted, not that the input was bad.
    """


class GenerationError(RuntimeError):
    """A generated case failed its own structural verification."""
