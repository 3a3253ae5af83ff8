"""Bi-orders on fundamental groups of punctured torus bundles.

The fibre group is the free group F(a, b); a monodromy is given as a word in
the Dehn twists x and y.  `orders` builds the standard and nonstandard
positive cones, and `verify` holds the seeded property suites.
"""
from .cover import CellSum, NotInCommutatorSubgroup, p2, p2_oracle, winding_total
from .magnus import MagnusCapExceeded, depth, expand, leading_part
from .monodromy import BundleElement, Monodromy
from .orders import (BiOrder, ConfigError, OrderConfig, Ordering, Sign, compare, make_order,
                     sign_bundle, sign_nonstandard, sign_standard)
from .quadfield import EigenData, MonodromyError, QuadNum, eigen_data
from .words import Word, WordSyntaxError, commutator, parse_word

__all__ = [
    "CellSum", "NotInCommutatorSubgroup", "p2", "p2_oracle", "winding_total",
    "MagnusCapExceeded", "depth", "expand", "leading_part",
    "BundleElement", "Monodromy",
    "BiOrder", "ConfigError", "OrderConfig", "Ordering", "Sign", "compare", "make_order",
    "sign_bundle", "sign_nonstandard", "sign_standard",
    "EigenData", "MonodromyError", "QuadNum", "eigen_data",
    "Word", "WordSyntaxError", "commutator", "parse_word",
]
