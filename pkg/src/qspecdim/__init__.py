"""Spectral dimension of quantized compact simple Lie groups and irreducible flag manifolds."""
from .casimir import CasimirSpec, chi
from .flag import build_flag, parse_space
from .qforms import QContext, qdim
from .rootdata import RootSystem, Weight, build_root_system
from .spectral import (
    estimate_abscissa,
    flag_series,
    group_series,
    product_series,
    spectral_dim_flag,
    spectral_dim_group,
    spectral_dim_product,
    zeta_truncated,
)
from .weights import weight_system

__all__ = [
    "CasimirSpec",
    "QContext",
    "RootSystem",
    "Weight",
    "build_flag",
    "build_root_system",
    "chi",
    "estimate_abscissa",
    "flag_series",
    "group_series",
    "parse_space",
    "product_series",
    "qdim",
    "spectral_dim_flag",
    "spectral_dim_group",
    "spectral_dim_product",
    "weight_system",
    "zeta_truncated",
]
