"""Exact orbit-growth profiles of hereditarily cellular structures.

Quick tour::

    >>> from cellprofile import parse, profile, classify
    >>> profile(parse("mset_inf(set)"), 8).values.coeffs
    (1, 1, 2, 3, 5, 7, 11, 15, 22)
    >>> classify(parse("mset_inf(set)"), 256).regime
    'stretched_exponential'
"""
from .cellcalc.bounds import check_bounds
from .cellcalc.classify import RegimeReport, classify
from .cellcalc.parser import parse
from .cellcalc.profile import Profile, depth, leaf_profile, profile
from .oracle.agreement import agreement_check
from .oracle.structures import FiniteStructure
from .oracle.truncation import truncate
from .series import Series
from .witness import WitnessCount, check_factorial_floor, count_coded_graphs

__all__ = [
    "FiniteStructure",
    "Profile",
    "RegimeReport",
    "Series",
    "WitnessCount",
    "agreement_check",
    "check_bounds",
    "check_factorial_floor",
    "classify",
    "count_coded_graphs",
    "depth",
    "leaf_profile",
    "parse",
    "profile",
    "truncate",
]
