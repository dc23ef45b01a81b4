"""Almost periodic points and minimality for semiflows, checked with exact arithmetic.

Submodules:

* :mod:`semiflows.zplus` window conditions on subsets of the non-negative integers
* :mod:`semiflows.finite` finite transformation monoids
* :mod:`semiflows.spaces` rational points, neighbourhoods and metrics
* :mod:`semiflows.families` the scaling, affine circle and disk twist semigroups
* :mod:`semiflows.engine` return sets, cover certificates, minimality
* :mod:`semiflows.claims` the claim registry and its verdicts
"""
from .errors import ContractError, HypothesisViolation

__version__ = "0.1.0"

__all__ = ["ContractError", "HypothesisViolation", "__version__"]
