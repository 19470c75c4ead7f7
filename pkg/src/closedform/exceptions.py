class HypothesisError(ValueError):
    """
    Raises when parameters violate the hypotheses of the closed-form evaluation
    """
    pass
