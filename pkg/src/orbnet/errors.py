"""Exception types shared across the package."""


class UsageError(ValueError):
    """Invalid argument or option combination supplied by the caller."""


class UnsupportedArityError(UsageError):
    """Operation defined only for a specific number of generators."""


class CheckpointError(RuntimeError):
    """A search checkpoint file is corrupt or inconsistent with the request."""
