"""Exhaustive enumeration of permutations and circular permutations.

This is the ground truth every generating-function identity is checked
against.  Permutations are generated depth first; the window ending at each
newly placed entry is tested as soon as it is complete, so each node of the
search tree costs one window comparison.  Circular permutations are
enumerated through their canonical representatives (entry 1 first), which
gives exactly ``(n-1)!`` objects with no deduplication.

Work splits into prefix blocks that can be farmed out to worker processes;
block results are integer count vectors merged by addition in block order,
so the answer never depends on the number of workers.
"""
from __future__ import annotations

import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import permutations

from .errors import ResourceLimitError
from .permcore import check_pattern, format_word
from .series import UPoly

DEFAULT_MAX_N = 10
# below this size a worker pool costs more than it saves
_PARALLEL_MIN_N = 8

_cache: dict = {}


def clear_cache() -> None:
    _cache.clear()


def _steps(sigma):
    order = sorted(range(len(sigma)), key=sigma.__getitem__)
    return tuple(zip(order, order[1:]))


def _count_block(sigma, n, kind, prefix):
    """Occurrence histogram over all completions of ``prefix``.

    Returns a list ``h`` with ``h[k]`` = number of objects with ``k`` occurrences.
    """
    m = len(sigma)
    steps = _steps(sigma)
    hist = [0] * (n + 2)
    word = list(prefix) + [0] * (n - len(prefix))
    used = [False] * (n + 1)
    for x in prefix:
        used[x] = True

    def window_ok(s):
        for a, b in steps:
            if word[s + a] > word[s + b]:
                return False
        return True

    circular = kind == "circular"

    def finish(occ):
        if circular:
            if n < m:
                occ = 0
            else:
                ext = word + word[:m - 1]
                for s in range(n - m + 1, n):
                    for a, b in steps:
                        if ext[s + a] > ext[s + b]:
                            break
                    else:
                        occ += 1
        hist[occ] += 1

    def rec(i, occ):
        if i == n:
            finish(occ)
            return
        s = i + 1 - m
        for v in range(1, n + 1):
            if used[v]:
                continue
            used[v] = True
            word[i] = v
            if s >= 0 and window_ok(s):
                rec(i + 1, occ + 1)
            else:
                rec(i + 1, occ)
            used[v] = False

    occ0 = sum(1 for s in range(len(prefix) - m + 1) if window_ok(s))
    rec(len(prefix), occ0)
    return hist


def _blocks(n, kind):
    if kind == "circular":
        if n < 2:
            return [(1,)] if n == 1 else [()]
        return [(1, v) for v in range(2, n + 1)]
    if n < 2:
        return [()]
    return list(permutations(range(1, n + 1), 2))


def _histogram(sigma, n, kind, workers, max_n):
    sigma = check_pattern(sigma)
    if n < 0:
        raise ValueError("size must be nonnegative")
    if n > max_n:
        raise ResourceLimitError(f"size {n} exceeds enumeration cap {max_n}")
    key = (sigma, n, kind)
    if key in _cache:
        return _cache[key]
    blocks = _blocks(n, kind)
    if workers > 1 and n >= _PARALLEL_MIN_N:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_count_block, [sigma] * len(blocks), [n] * len(blocks),
                                  [kind] * len(blocks), blocks))
    else:
        parts = [_count_block(sigma, n, kind, b) for b in blocks]
    total = [sum(col) for col in zip(*parts)]
    result = tuple(total)
    _cache[key] = result
    return result


def linear_distribution(sigma, n: int, *, workers: int = 1,
                        max_n: int = DEFAULT_MAX_N) -> UPoly:
    """``sum over pi in S_n of u**o(pi)`` as an integer polynomial in ``u``."""
    return UPoly(_histogram(sigma, n, "linear", workers, max_n))


def circular_distribution(sigma, n: int, *, workers: int = 1,
                          max_n: int = DEFAULT_MAX_N) -> UPoly:
    """``sum over circular [pi] of size n of u**c[pi]``."""
    return UPoly(_histogram(sigma, n, "circular", workers, max_n))


def avoidance_sequence(sigma, n_max: int, *, workers: int = 1,
                       max_n: int = DEFAULT_MAX_N) -> list:
    """Number of circular permutations of each size ``0..n_max`` avoiding ``sigma``."""
    return [int(circular_distribution(sigma, n, workers=workers, max_n=max_n)[0])
            for n in range(n_max + 1)]


def class_count(n: int) -> int:
    """Number of circular classes of size ``n``: ``(n-1)!``, and 1 for the empty one."""
    return 1 if n == 0 else math.factorial(n - 1)


@dataclass(frozen=True)
class DistributionTable:
    pattern: tuple
    kind: str
    rows: dict = field(default_factory=dict)  # n -> UPoly

    @classmethod
    def build(cls, sigma, kind: str, n_max: int, *, workers: int = 1,
              max_n: int = DEFAULT_MAX_N) -> "DistributionTable":
        if kind not in ("linear", "circular"):
            raise ValueError(f"kind must be 'linear' or 'circular', not {kind!r}")
        dist = linear_distribution if kind == "linear" else circular_distribution
        rows = {n: dist(sigma, n, workers=workers, max_n=max_n) for n in range(n_max + 1)}
        return cls(tuple(sigma), kind, rows)

    def to_json_obj(self) -> dict:
        return {
            "pattern": format_word(self.pattern),
            "kind": self.kind,
            "rows": {str(n): p.to_pairs(fraction_form=False)
                     for n, p in sorted(self.rows.items())},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj) -> "DistributionTable":
        from .permcore import parse_word
        rows = {int(n): UPoly.from_pairs(pairs) for n, pairs in obj["rows"].items()}
        return cls(parse_word(obj["pattern"]), obj["kind"], rows)
