"""Knot invariants of planar tree-pair representations."""
from ._knottab import (  # noqa: F401
    InvalidPD,
    ParseError,
    UsageError,
    bracket_oracle,
    canonical,
    census_classes,
    compare,
    conway_fox,
    girth,
    invariants,
    pd_code,
)
