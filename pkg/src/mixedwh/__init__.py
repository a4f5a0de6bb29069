"""Mixed polynomials, their radial Newton polyhedra, weighted homogeneity and
non-degeneracy of face functions."""

from .gaussian import GaussianRational
from .homogeneity import (
    classify,
    face_type,
    is_polar_wh,
    is_radially_wh,
    solve_polar_weights,
    solve_radial_weights,
)
from .mixedpoly import (
    MixedPolynomial,
    MixedTerm,
    evaluate,
    is_convenient,
    load,
    parse,
    restrict,
    wirtinger_dz,
    wirtinger_dzbar,
)
from .polyhedron import (
    Face,
    WeightVector,
    compact_faces_2d,
    face_function,
    face_of,
    newton_polyhedron,
    support,
)

__version__ = "0.1.0"
