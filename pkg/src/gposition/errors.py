"""Exception types shared across the package."""


class GraphError(ValueError):
    """Malformed graph input: bad labels, self-loops, missing edges, bad encodings."""


class CapExceeded(RuntimeError):
    """An exact routine was asked to run beyond its hard size cap."""


class ParameterError(ValueError):
    """A family parameter lies outside the generator's domain."""
