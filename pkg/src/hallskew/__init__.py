"""Hall factorizations, skew-morphisms and vertex-rotary Cayley maps of finite groups."""

from hallskew.errors import (
    BoundExceeded,
    DegreeMismatch,
    HypothesisError,
    NotAFactorization,
    NotASubgroup,
    NotCoreFree,
)
from hallskew.perm import Permutation
from hallskew.groups import PermGroup

__all__ = [
    "BoundExceeded",
    "DegreeMismatch",
    "HypothesisError",
    "NotAFactorization",
    "NotASubgroup",
    "NotCoreFree",
    "Permutation",
    "PermGroup",
]

__version__ = "0.1.0"
