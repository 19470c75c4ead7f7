class ContextMismatchError(ValueError):
    """
    Raises when elements of two different cyclotomic fields are combined
    """
    pass


class FieldOrderError(ValueError):
    """
    Raises when the field order does not contain the requested roots of unity or exceeds the configured cap
    """
    pass


class CycloZeroDivisionError(ZeroDivisionError):
    """
    Raises on inversion of the zero element
    """
    pass
