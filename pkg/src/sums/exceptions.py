class FamilyError(ValueError):
    """
    Raises when a sum family tag is unknown or its parameters have the wrong shape
    """
    pass


class DecompositionError(ArithmeticError):
    """
    Raises when an exact sum value does not lie in Q + Q*sqrt(k)
    """
    pass
