"""Exception types shared across the package."""


class GraphentError(Exception):
    """Base class for all library errors."""


class ValidationError(GraphentError, ValueError):
    """Malformed input or a violated operation precondition."""


class ResourceCapError(GraphentError, RuntimeError):
    """Requested simulation exceeds the configured qubit cap."""


class ConsistencyError(GraphentError, RuntimeError):
    """Internal invariant violated (norm drift, nonreal expectation); indicates a bug."""
