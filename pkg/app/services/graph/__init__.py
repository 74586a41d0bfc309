from app.services.graph.analysis import (
    bipartition,
    chromatic_number,
    connected_components,
    euler_tour,
    is_connected,
    odd_closed_walk,
)
from app.services.graph.families import generate
from app.services.graph.graph import EulerTour, Graph
from app.services.graph.products import cartesian_product, disjoint_copies, join, lex_product

__all__ = [
    "EulerTour",
    "Graph",
    "bipartition",
    "cartesian_product",
    "chromatic_number",
    "connected_components",
    "disjoint_copies",
    "euler_tour",
    "generate",
    "is_connected",
    "join",
    "lex_product",
    "odd_closed_walk",
]
