"""Hot kernels, compiled with numba unless ``EDGEBETTI_NO_NUMBA=1``.

Both backends share one contract; ``BACKEND`` names the active one.
"""

from __future__ import annotations

import os

from . import _np

USE_NUMBA = os.environ.get("EDGEBETTI_NO_NUMBA", "0").lower() not in ("1", "true", "yes")

if USE_NUMBA:
    try:
        from . import _jit as _impl
    except ImportError:  # numba missing
        USE_NUMBA = False
        _impl = _np
else:
    _impl = _np

BACKEND = "numba" if USE_NUMBA else "numpy"

bipartite_candidates = _impl.bipartite_candidates
independent_sets = _impl.independent_sets
homology_ranks = _impl.homology_ranks
betti_counts = _impl.betti_counts
canonical_perm = _impl.canonical_perm
canonical_batch = _impl.canonical_batch
tree_code = _impl.tree_code
prufer_decode = _impl.prufer_decode
tree_class_reps = _impl.tree_class_reps
is_chordal_masks = _impl.is_chordal_masks
cochordal_table = _impl.cochordal_table

__all__ = [
    "BACKEND",
    "USE_NUMBA",
    "betti_counts",
    "bipartite_candidates",
    "canonical_batch",
    "canonical_perm",
    "cochordal_table",
    "homology_ranks",
    "independent_sets",
    "is_chordal_masks",
    "prufer_decode",
    "tree_class_reps",
    "tree_code",
]
