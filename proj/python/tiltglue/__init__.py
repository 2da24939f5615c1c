"""Tilting modules glued along recollements of module categories."""

from ._tiltglue import (
    Algebra,
    Error,
    Module,
    Universe,
    decompose,
    dualize,
    ext_dim,
    ext_dim_sigma,
    functor_images,
    injective_dimension,
    is_isomorphic,
    load_universe,
    parse_algebra,
    parse_module,
    projective_dimension,
    reproduce,
    verify_cotilting,
    verify_tilting,
)

__all__ = [
    "Algebra",
    "Error",
    "Module",
    "Universe",
    "decompose",
    "dualize",
    "ext_dim",
    "ext_dim_sigma",
    "functor_images",
    "injective_dimension",
    "is_isomorphic",
    "load_universe",
    "parse_algebra",
    "parse_module",
    "projective_dimension",
    "reproduce",
    "verify_cotilting",
    "verify_tilting",
]
