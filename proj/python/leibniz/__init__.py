"""Exact computations for finite-dimensional Leibniz algebras."""

from ._core import (  # noqa: F401
    Algebra,
    LeibnizError,
    build,
    builtin_fixtures,
    c11,
    catalog_keys,
    cij,
    cli,
    cohomology_dims,
    degeneration_report,
    derivation_dim,
    derived_dims,
    from_json,
    from_name,
    is_leibniz,
    is_nilpotent,
    is_solvable,
    leibniz_defects,
    lower_central_dims,
    orbit_dim,
    representative_is_cocycle,
)

__all__ = [name for name in dir() if not name.startswith("_")]
