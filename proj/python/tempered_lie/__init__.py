"""Exact root-datum, Cartan-class, flag-orbit and tempered-series calculator."""

from ._core import (
    DomainError,
    bbw,
    cartans,
    catalog,
    character,
    check,
    groups,
    open_orbits,
    orbit_report,
    realize,
)

__all__ = [
    "DomainError",
    "bbw",
    "cartans",
    "catalog",
    "character",
    "check",
    "groups",
    "open_orbits",
    "orbit_report",
    "realize",
]
