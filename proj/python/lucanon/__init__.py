"""Canonical forms and local-unitary equivalence for multipartite pure states.

The heavy lifting lives in the compiled ``_core`` extension; this package
re-exports its public surface.
"""

from ._core import (
    StateTensor,
    __version__,
    brute_force_lu_distance,
    decide_lu,
    haar_random_unitary,
    hosvd,
    load_state,
    norm,
    normalize,
    perturb,
    random_state,
    save_state,
    spectra,
    state,
    verify_witness,
)

__all__ = [
    "StateTensor",
    "__version__",
    "brute_force_lu_distance",
    "decide_lu",
    "haar_random_unitary",
    "hosvd",
    "load_state",
    "norm",
    "normalize",
    "perturb",
    "random_state",
    "save_state",
    "spectra",
    "state",
    "verify_witness",
]
