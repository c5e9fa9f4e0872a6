"""Exact computation with finite quantaloids and quantaloid-enriched categories."""
from .closure import (QClosureSpace, canonical_closure, classify_endo, closure_space, continuous_map, eta_unit,
                      fixed_points, identity_space, is_continuous, triangle_functors, universal_extension)
from .errors import BoundaryMismatch, CapExceeded, NotContinuous, PreconditionError, QlabError, StructuralError
from .isbell import (ConceptLattice, ConceptPair, certify, concept_lattice, dense_pair_reconstruction,
                     isbell_closure, phi_down, phi_up)
from .kan import (GirardDistributorContext, kan_closure, kan_lattice, phi_lowstar, phi_star,
                  pointwise_kan_extension, why_kan_check)
from .presheaf import (CO, CONTRA, CoPresheaf, Presheaf, PresheafCategory, PA, PdA, enumerate_presheaves,
                       is_complete, yoneda)
from .qcat import QCategory, QFunctor, enumerate_functors, validate_category, validate_functor
from .qdist import (Infomorphism, QDistributor, cograph, compose_dist, graph, identity_dist, make_distributor,
                    validate_distributor)
from .quantaloid import (DualizingFamily, HomLattice, QArrow, Quantaloid, boolean, builtin_quantaloid,
                         lukasiewicz, rel_like, validate_quantaloid)
from .report import Report, Violation
from .workspace import Workspace, load_workspace, parse_workspace

__all__ = [
    "boolean", "BoundaryMismatch", "builtin_quantaloid", "canonical_closure", "CapExceeded", "certify",
    "classify_endo", "closure_space", "CO", "cograph", "compose_dist", "concept_lattice", "ConceptLattice",
    "ConceptPair", "continuous_map", "CONTRA", "CoPresheaf", "dense_pair_reconstruction", "DualizingFamily",
    "enumerate_functors", "enumerate_presheaves", "eta_unit", "fixed_points", "GirardDistributorContext",
    "graph", "HomLattice", "identity_dist", "identity_space", "Infomorphism", "is_complete", "is_continuous",
    "isbell_closure", "kan_closure", "kan_lattice", "load_workspace", "lukasiewicz", "make_distributor",
    "NotContinuous", "PA", "parse_workspace", "PdA", "phi_down", "phi_lowstar", "phi_star", "phi_up",
    "pointwise_kan_extension", "PreconditionError", "Presheaf", "PresheafCategory", "QArrow", "QCategory",
    "QClosureSpace", "QDistributor", "QFunctor", "QlabError", "Quantaloid", "rel_like", "Report",
    "StructuralError", "triangle_functors", "universal_extension", "validate_category",
    "validate_distributor", "validate_functor", "validate_quantaloid", "Violation", "why_kan_check",
    "Workspace", "yoneda",
]
