"""Spectral complexity of simple undirected graphs.

The complexity of a graph on ``n`` nodes is the product of the Euclidean
distances between its Laplacian spectrum and the spectra of the null and
complete graphs on the same nodes.  Together with the link density it places
every graph inside a croissant-shaped region of the plane.
"""

from croissant.errors import (
    ConvergenceError,
    CroissantError,
    InputError,
    NumericError,
    ParseError,
)
from croissant.graph import (
    Graph,
    complement,
    complete_graph,
    degrees,
    edge_count,
    link_density,
    new_graph,
    null_graph,
)
from croissant.spectral import (
    Spectrum,
    complement_spectrum,
    complexity,
    eig_symmetric,
    laplacian,
    spectral_distance,
    spectrum,
)
from croissant.generators import (
    ModelParams,
    barabasi_albert,
    circulant,
    erdos_renyi,
    generate,
    multi_star,
    watts_strogatz,
)
from croissant.region import (
    BoundaryPolyline,
    PlanePoint,
    locate,
    lower_boundary,
    normalization_constant,
    upper_boundary,
)

__version__ = "0.1.0"

__all__ = [
    "BoundaryPolyline",
    "ConvergenceError",
    "CroissantError",
    "Graph",
    "InputError",
    "ModelParams",
    "NumericError",
    "ParseError",
    "PlanePoint",
    "Spectrum",
    "barabasi_albert",
    "circulant",
    "complement",
    "complement_spectrum",
    "complete_graph",
    "complexity",
    "degrees",
    "edge_count",
    "eig_symmetric",
    "erdos_renyi",
    "generate",
    "laplacian",
    "link_density",
    "locate",
    "lower_boundary",
    "multi_star",
    "new_graph",
    "normalization_constant",
    "null_graph",
    "spectral_distance",
    "spectrum",
    "upper_boundary",
    "watts_strogatz",
]
