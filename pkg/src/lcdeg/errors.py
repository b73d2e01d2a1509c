"""Exception types shared across the toolkit."""


class InputError(ValueError):
    """Raised for malformed or out-of-contract arguments."""


class CapExceeded(InputError):
    """Raised when an exponential search would exceed its configured size cap."""


class VerificationFailure(AssertionError):
    """A proven identity or bound failed to hold on a concrete instance."""
