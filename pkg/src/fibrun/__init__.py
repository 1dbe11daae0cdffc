"""Fibonacci-run and Lucas-run graphs: subcube census, distance cube
polynomials and their generating functions."""
from .census import (
    Census,
    Subcube,
    cube_polynomial,
    dcw_polynomial,
    distance_cube_polynomial,
    enumerate_oracle,
    enumerate_topvertex,
    updeg_polynomial,
    weight_polynomial,
)
from .genfunc import CATALOG, catalog_expand, letter_series, monoid_gf, tail_adjust
from .graphs import Family, FamilyGraph, build
from .polyring import MPoly, RationalGF, expand, parse, series_inverse
from .identities import Report, verify
from .words import Alphabet, classify, factorize, phi, phi_inverse

__version__ = "0.1.0"
