"""Convex-body square inscription toolkit.

Thin wrapper around the compiled extension; everything of substance lives
in ``squarepeg._core``.
"""

from ._core import (  # noqa: F401
    ArcTooWideError,
    ConvexBody,
    NoSolutionFoundError,
    NotObtuseError,
    SquarepegError,
    classify_point,
    direction_arc,
    f_delta,
    find_trivial_square,
    inscribe_via_table,
    is_obtuse,
    make_disk,
    make_ellipse,
    make_polygon,
    make_regular_ngon,
    oracle_inscribed_squares,
    s_star,
    solve_table_tabletop,
    trivial_square_at,
    verify_inscribed,
)

__all__ = [
    "ArcTooWideError",
    "ConvexBody",
    "NoSolutionFoundError",
    "NotObtuseError",
    "SquarepegError",
    "classify_point",
    "direction_arc",
    "f_delta",
    "find_trivial_square",
    "inscribe_via_table",
    "is_obtuse",
    "make_disk",
    "make_ellipse",
    "make_polygon",
    "make_regular_ngon",
    "oracle_inscribed_squares",
    "s_star",
    "solve_table_tabletop",
    "trivial_square_at",
    "verify_inscribed",
]
