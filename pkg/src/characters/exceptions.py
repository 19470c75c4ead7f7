class ModulusError(ValueError):
    """
    Raises when a modulus admits no real primitive character in scope
    """
    pass


class CharacterParityError(ValueError):
    """
    Raises when an operation needs an odd character and gets an even one (or vice versa)
    """
    pass
