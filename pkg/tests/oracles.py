"""Independent reference computations used by the test-suite.

Nothing here imports the code paths under test: occurrence counting goes
through explicit rank standardisation, circular classes are found by
deduplicating all n! permutations, and the ODE closed forms are checked
numerically with scipy.
"""
import math
from fractions import Fraction
from itertools import permutations


def ranks(window):
    srt = sorted(window)
    return tuple(srt.index(x) + 1 for x in window)


def count_linear(sigma, w):
    m = len(sigma)
    return sum(1 for i in range(len(w) - m + 1) if ranks(w[i:i + m]) == tuple(sigma))


def count_circular(sigma, w):
    n, m = len(w), len(sigma)
    if n < m:
        return 0
    doubled = list(w) * 2
    return sum(1 for i in range(n) if ranks(doubled[i:i + m]) == tuple(sigma))


def circular_classes(n):
    seen = set()
    for p in permutations(range(1, n + 1)):
        key = min(p[i:] + p[:i] for i in range(n)) if n else ()
        seen.add(key)
    return sorted(seen)


def linear_histogram(sigma, n):
    hist = {}
    for p in permutations(range(1, n + 1)):
        k = count_linear(sigma, p)
        hist[k] = hist.get(k, 0) + 1
    return [hist.get(k, 0) for k in range(max(hist) + 1)]


def circular_histogram(sigma, n):
    hist = {}
    for c in circular_classes(n):
        k = count_circular(sigma, c)
        hist[k] = hist.get(k, 0) + 1
    return [hist.get(k, 0) for k in range(max(hist) + 1)]


def nonoverlapping_exhaustive(sigma):
    m = len(sigma)
    return not any(count_linear(sigma, p) >= 2
                   for p in permutations(range(1, 2 * m - 1)))


def lr_factors_naive(w):
    """Factor by scanning for prefix minima, written independently of the library."""
    out = []
    for i, x in enumerate(w):
        if all(x < y for y in w[:i]):
            out.append([x])
        else:
            out[-1].append(x)
    return [tuple(f) for f in out]


def poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out
