from app.services.labeling.labeling import EdgeLabeling
from app.services.labeling.lemmas import (
    chi_la2_feasible,
    complement,
    delete_extreme_edge,
    two_color_admissible,
    two_coloring_certificate,
)
from app.services.labeling.matrix import LabelingMatrix, from_matrix, to_matrix
from app.services.labeling.verifier import verify

__all__ = [
    "EdgeLabeling",
    "LabelingMatrix",
    "chi_la2_feasible",
    "complement",
    "delete_extreme_edge",
    "from_matrix",
    "to_matrix",
    "two_color_admissible",
    "two_coloring_certificate",
    "verify",
]
