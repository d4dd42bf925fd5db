"""hypmetrica: hyperbolic-type metrics on planar domains and a
coefficient/radius/norm toolkit for normalized analytic functions."""

__version__ = "0.1.0"

from .geometry import (  # noqa: F401
    BoundarySampling,
    Disk,
    DomainSpec,
    HalfPlane,
    PathPolyline,
    Point,
    dist_to_boundary,
    invert,
    sample_boundary,
    smallest_enclosing_disk,
    tangent_ball_radii,
)
