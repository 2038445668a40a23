"""Exception types shared across the package."""


class ParseError(ValueError):
    """An element token or serialized document failed to parse."""


class SchemaError(ValueError):
    """A serialized rectangle set violates the JSON schema."""


class ShapeError(ValueError):
    """The input's dimensions do not fit the requested operation."""


class CoverError(ValueError):
    """An operation required an exact cover and the input lacks one."""


class CapacityError(ValueError):
    """A size cap was exceeded (line length, group order, ...)."""


class PlanCollisionError(ValueError):
    """The closed-form diagonal index formula produced duplicate entries."""


class BudgetExceededError(RuntimeError):
    """The search node budget ran out before the space was covered."""
