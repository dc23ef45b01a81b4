"""Exception types shared across the package."""


class ContractError(ValueError):
    """An operation was called with inputs outside its contract."""


class HypothesisViolation(ContractError):
    """A return set does not satisfy the window lemma hypothesis (0 must be a member)."""
