"""Exact computations with quiver representations.

Given a connected representation-infinite quiver without oriented cycles,
:func:`qforge.pipeline.forge` builds an explicit representation whose orbit
closure is neither unibranch nor Cohen-Macaulay, together with a certificate
of every hypothesis that can be checked by exact linear algebra.
"""

from .exactla import RatMatrix, cokernel_reps, kernel_basis, rank, solve
from .quiver import (
    Quiver,
    QuiverClass,
    QuiverError,
    SubquiverWitness,
    classify,
    euler_form,
    find_euclidean_subquiver,
    isotropic_root,
    symmetrized_matrix,
)
from .rep import Representation, RngSpec, ext_dim, hom_basis, hom_dim
from .exceptional import ExceptionalPair, build_pair, verify_pair
from .embed import embed_data, embed_rep, kronecker_type, zwara_rep
from .pipeline import ForgeResult, RefusalError, forge, orbit_stats

__version__ = "0.1.0"
