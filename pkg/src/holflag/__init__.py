"""Exact root-system computations for automorphism groups of flag domains."""

__version__ = "0.1.0"

from .classify import HolResult, classify_hol, classify_product
from .homcheck import ChainCertificate, find_killing_chain, sweep, sweep_exceptions
from .parabolic import Parabolic, parabolic_from_nodes, parabolic_from_vector
from .realform import (
    RealForm,
    compact_roots,
    lookup_real_form,
    measurability_status,
    pplus_roots,
)
from .repthy import (
    EnlargementPair,
    enlargement_pair,
    hermitian_dim,
    s_dimension,
    vanishing_condition,
    verify_branching,
    verify_enlargement,
)
from .rootsys import (
    RootSystem,
    SimpleType,
    build_root_system,
    dominant_root,
    pair,
    weight_multiplicity,
    weyl_dim,
    weyl_orbit,
)
