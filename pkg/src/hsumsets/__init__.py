"""Exact h-fold sumsets of finite integer sets.

Library layout:

- ``core``      exact set arithmetic: normal forms, reflection, Minkowski
                addition, the h-fold kernel and its sequential cross-check
- ``bounds``    direct lower bounds, the chain span cutoff that makes
                exhaustive classification finite, and structural predicates
- ``families``  closed-form size/structure predictions for punctured
                interval families ([0, n] minus up to three holes)
- ``classify``  exhaustive enumeration of normal-form sets, inverse
                classification of |hA| bands, claim verification and the
                unattained-value scanner
- ``cli``       the ``hsumsets`` command line front end
"""

from .core import (
    IntSet,
    NormalForm,
    RunSet,
    canonical,
    cardinality,
    hfold,
    hfold_sequential,
    intset,
    minkowski_add,
    normalize,
    reflect,
)

__version__ = "0.1.0"

__all__ = [
    "IntSet",
    "NormalForm",
    "RunSet",
    "canonical",
    "cardinality",
    "hfold",
    "hfold_sequential",
    "intset",
    "minkowski_add",
    "normalize",
    "reflect",
    "__version__",
]
