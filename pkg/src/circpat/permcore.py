"""Words, consecutive patterns, occurrence counting and the factorization bijection.

A *word* is a tuple of distinct positive integers.  Patterns and permutations
are words whose entry set is ``{1, ..., n}`` ("standard" words).  Circular
permutations are stored through :class:`CircularClass`, whose canonical
representative is the rotation beginning with the smallest entry.

All indices returned by this module are 0-based.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

from .errors import InvalidPatternError

Word = tuple  # tuple[int, ...]


# -- notation ---------------------------------------------------------------

def parse_word(text: str) -> Word:
    """Parse ``"132"`` or ``"1,12,5,3"`` into a word.

    Digit strings are read one entry per character; anything containing a
    comma is split on commas.  The empty string is the empty word.
    """
    text = text.strip()
    if not text:
        return ()
    try:
        if "," in text:
            entries = tuple(int(part) for part in text.split(","))
        else:
            entries = tuple(int(ch) for ch in text)
    except ValueError:
        raise InvalidPatternError(f"cannot parse word {text!r}") from None
    check_word(entries)
    return entries


def format_word(w: Sequence[int]) -> str:
    if all(x <= 9 for x in w):
        return "".join(str(x) for x in w)
    return ",".join(str(x) for x in w)


def check_word(w: Sequence[int]) -> None:
    if any((not isinstance(x, int)) or x < 1 for x in w):
        raise InvalidPatternError(f"entries must be positive integers: {tuple(w)}")
    if len(set(w)) != len(w):
        raise InvalidPatternError(f"entries must be distinct: {tuple(w)}")


def is_standard(w: Sequence[int]) -> bool:
    return sorted(w) == list(range(1, len(w) + 1))


def check_pattern(sigma: Sequence[int]) -> Word:
    sigma = tuple(sigma)
    if not sigma or not is_standard(sigma):
        raise InvalidPatternError(
            f"pattern must be a nonempty standard permutation: {sigma}")
    return sigma


def standardize(w: Sequence[int]) -> Word:
    """Replace each entry by its rank, e.g. ``(2, 5, 3) -> (1, 3, 2)``."""
    ranks = {x: r for r, x in enumerate(sorted(w), start=1)}
    return tuple(ranks[x] for x in w)


# -- symmetries -------------------------------------------------------------

def reverse(w: Sequence[int]) -> Word:
    return tuple(reversed(w))


def complement(w: Sequence[int]) -> Word:
    """Complement with respect to the entry set: smallest <-> largest."""
    values = sorted(w)
    flip = dict(zip(values, reversed(values)))
    return tuple(flip[x] for x in w)


def symmetry_orbit(sigma: Sequence[int]) -> frozenset:
    """The set ``{sigma, sigma^r, sigma^c, sigma^rc}``."""
    sigma = tuple(sigma)
    r = reverse(sigma)
    return frozenset({sigma, r, complement(sigma), complement(r)})


# -- occurrences ------------------------------------------------------------

class OccurrenceCount(NamedTuple):
    count: int
    positions: tuple  # start indices of matching windows
    windows: tuple    # the matching windows themselves


def _matcher(sigma: Word):
    # positions of sigma listed by increasing value: a window matches iff its
    # entries increase along this position sequence
    order = sorted(range(len(sigma)), key=sigma.__getitem__)
    steps = tuple(zip(order, order[1:]))

    def matches(window: Sequence[int]) -> bool:
        for a, b in steps:
            if window[a] > window[b]:
                return False
        return True

    return matches


def occurrences_linear(sigma: Sequence[int], w: Sequence[int]) -> OccurrenceCount:
    """Occurrences of the consecutive pattern ``sigma`` in the linear word ``w``."""
    sigma = check_pattern(sigma)
    w = tuple(w)
    m = len(sigma)
    matches = _matcher(sigma)
    positions = []
    windows = []
    for i in range(len(w) - m + 1):
        window = w[i:i + m]
        if matches(window):
            positions.append(i)
            windows.append(window)
    return OccurrenceCount(len(positions), tuple(positions), tuple(windows))


@dataclass(frozen=True, order=True)
class CircularClass:
    """A word up to rotation, represented by the rotation starting at its minimum."""

    canonical: Word = field()

    def __post_init__(self):
        w = tuple(self.canonical)
        check_word(w)
        if w:
            k = w.index(min(w))
            w = w[k:] + w[:k]
        object.__setattr__(self, "canonical", w)

    @classmethod
    def of(cls, w: Iterable[int]) -> "CircularClass":
        return cls(tuple(w))

    def __len__(self):
        return len(self.canonical)

    @property
    def entries(self) -> frozenset:
        return frozenset(self.canonical)

    def rotations(self) -> list:
        w = self.canonical
        return [w[i:] + w[:i] for i in range(len(w))]

    def __str__(self):
        return f"[{format_word(self.canonical)}]"


def occurrences_circular(sigma: Sequence[int], c) -> OccurrenceCount:
    """Occurrences of ``sigma`` in a circular permutation, windows wrapping around.

    ``c`` may be a :class:`CircularClass` or any representative word.  Start
    positions refer to the canonical representative.  Words shorter than the
    pattern have no occurrences.
    """
    sigma = check_pattern(sigma)
    if not isinstance(c, CircularClass):
        c = CircularClass.of(c)
    w = c.canonical
    n, m = len(w), len(sigma)
    if n < m:
        return OccurrenceCount(0, (), ())
    matches = _matcher(sigma)
    ext = w + w[:m - 1]
    positions = []
    windows = []
    for i in range(n):
        window = ext[i:i + m]
        if matches(window):
            positions.append(i)
            windows.append(window)
    return OccurrenceCount(len(positions), tuple(positions), tuple(windows))


# -- left-right minima and the bijection ------------------------------------

def lr_minima(w: Sequence[int]) -> list:
    """Indices of the left-to-right minima of ``w``."""
    out = []
    best = None
    for i, x in enumerate(w):
        if best is None or x < best:
            best = x
            out.append(i)
    return out


def lr_factorize(w: Sequence[int]) -> list:
    """Cut ``w`` immediately before every left-to-right minimum.

    >>> lr_factorize((2, 5, 3, 1, 4))
    [(2, 5, 3), (1, 4)]
    """
    w = tuple(w)
    cuts = lr_minima(w) + [len(w)]
    return [w[a:b] for a, b in zip(cuts, cuts[1:])]


def phi(pi: Sequence[int]) -> frozenset:
    """Map a permutation to the set of circular classes of its factors."""
    pi = tuple(pi)
    if not is_standard(pi):
        raise InvalidPatternError(f"phi expects a standard permutation: {pi}")
    return frozenset(CircularClass(f) for f in lr_factorize(pi))


def phi_inverse(classes: Iterable[CircularClass]) -> Word:
    """Rotate each class to start at its minimum and concatenate by decreasing minimum."""
    classes = list(classes)
    seen = set()
    for c in classes:
        if seen & c.entries:
            raise InvalidPatternError("circular classes must have disjoint entry sets")
        seen |= c.entries
    # canonical representatives already start at their minimum
    ordered = sorted((c for c in classes if len(c)), key=lambda c: -c.canonical[0])
    return tuple(x for c in ordered for x in c.canonical)


# -- overlap classification -------------------------------------------------

def overlap_shifts(sigma: Sequence[int]) -> list:
    """Shifts ``d`` in ``1..m-2`` at which two occurrences of ``sigma`` can coexist."""
    sigma = check_pattern(sigma)
    m = len(sigma)
    return [d for d in range(1, m - 1)
            if standardize(sigma[d:]) == standardize(sigma[:m - d])]


def is_nonoverlapping(sigma: Sequence[int]) -> bool:
    """True iff no permutation of length ``2m-2`` contains two occurrences.

    Two occurrences inside a word of length ``2m-2`` start at distance
    ``d <= m-2``, which forces the suffix ``sigma[d:]`` and prefix
    ``sigma[:m-d]`` to be order-isomorphic; conversely any such ``d`` can be
    realised by amalgamating the two windows.  So it suffices to test shifts.
    """
    sigma = check_pattern(sigma)
    if len(sigma) < 2:
        raise InvalidPatternError("non-overlap is defined for patterns of length >= 2")
    return not overlap_shifts(sigma)
