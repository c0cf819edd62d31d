"""Higher minors of simplicial complexes and the embeddability obstructions
they preserve: the Smith class of the deleted join over GF(2) and the Van
Kampen obstruction of the deleted product over the integers."""

from .complex import SimplicialComplex, f_h_g, from_facets, join, missing_faces
from .deleted_join import deleted_join, smith_class, smith_pullback_check
from .deleted_product import deleted_product, vk_pullback_check, vk_vanishes
from .minors import (ContractionStep, DeleteFacet, DeleteVertex, MinorCertificate,
                     admissible_via_link_eq, contract, find_minor, is_admissible,
                     link_condition, verify_certificate)
from .spheres import h_identity_check, strongly_edge_decomposable

__version__ = "0.1.0"

__all__ = [
    "SimplicialComplex", "from_facets", "join", "missing_faces", "f_h_g",
    "ContractionStep", "DeleteVertex", "DeleteFacet", "MinorCertificate",
    "is_admissible", "admissible_via_link_eq", "contract", "link_condition",
    "find_minor", "verify_certificate", "deleted_join", "smith_class",
    "smith_pullback_check", "deleted_product", "vk_vanishes", "vk_pullback_check",
    "h_identity_check", "strongly_edge_decomposable",
]
