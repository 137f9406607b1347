"""twofib: exact re-derivation and certification of the classification of
P1-bundles over Picard-number-one manifolds that carry a second smooth
fibration of relative dimension one.

Everything is exact rational/integer arithmetic; every identity, filter and
table the engine emits is either derived in-process or tied to a named,
cited background fact.
"""

__version__ = "0.1.0"

from .algebra import BACKEND as STURM_BACKEND

__all__ = ["STURM_BACKEND", "__version__"]
