"""Exception types shared across the package."""


class ValidationError(ValueError):
    """Invalid user input; the message names the offending field."""


class InternalError(RuntimeError):
    """An internal consistency check failed (not a user error).

    Raised when a closed-form result disagrees with a post-hoc check it
    should satisfy by construction, e.g. an optimizer returning an
    infeasible point or a brute-force cross-check disagreeing beyond
    tolerance.
    """
