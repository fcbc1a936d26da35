"""Consecutive patterns in linear and circular permutations.

Counting (:mod:`~circpat.permcore`), exhaustive enumeration
(:mod:`~circpat.enumeration`), exact truncated series
(:mod:`~circpat.series`), pattern generating functions
(:mod:`~circpat.gfengine`) and identity checks (:mod:`~circpat.verify`).
"""
from .errors import (CircpatError, DomainError, InvalidPatternError,
                     PatternNotSupportedError, ResourceLimitError, SingularDivisionError,
                     TheoremNotApplicableError, UnsupportedDivisionError)
from .permcore import (CircularClass, OccurrenceCount, format_word, is_nonoverlapping,
                       lr_factorize, occurrences_circular, occurrences_linear, parse_word,
                       phi, phi_inverse, standardize, symmetry_orbit)
from .series import UPoly, ZSeries
from .enumeration import (DistributionTable, avoidance_sequence, circular_distribution,
                          linear_distribution)
from .gfengine import PatternGF, pattern_gf

__version__ = "0.1.0"
