class ScaleExceededError(RuntimeError):
    """Raised when an input is too large for an exact brute-force path."""
