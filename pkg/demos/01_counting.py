r"""
Counting consecutive patterns
-----------------------------
A consecutive pattern is matched against contiguous windows of a permutation
up to order-isomorphism.  In a circular permutation the windows may wrap
from the end back to the start.
"""
from circpat import (CircularClass, lr_factorize, occurrences_circular, occurrences_linear,
                     phi, phi_inverse, symmetry_orbit)

#%%
# The linear word 25314 contains 132 once (window 253).  Read circularly it
# also contains the wrapped window 142.
w = (2, 5, 3, 1, 4)
print(occurrences_linear((1, 3, 2), w))
print(occurrences_circular((1, 3, 2), w))

#%%
# A circular class is stored through the rotation starting at its minimum,
# so every rotation of 25314 gives the same object and the same count.
c = CircularClass.of(w)
print(c, [occurrences_circular((1, 3, 2), r).count for r in c.rotations()])
print(occurrences_circular((1, 3, 2), (2, 4, 5, 3, 1)).count)  # avoids 132

#%%
# Reversal and complementation move occurrences around without changing
# their number, so all members of an orbit behave alike.
print(sorted(symmetry_orbit((1, 3, 2))))

#%%
# Cutting a permutation before each left-to-right minimum and closing every
# factor into a cycle is a bijection onto sets of circular permutations.
pi = (2, 5, 3, 1, 4)
print(lr_factorize(pi))
classes = phi(pi)
print(sorted(str(k) for k in classes), "->", phi_inverse(classes))

#%%
# For a pattern starting with 1 no occurrence can straddle two factors, so
# the occurrence count is the sum over the cycles.  For 213 this breaks.
for sigma in [(1, 3, 2), (2, 1, 3)]:
    for pi in [(2, 1, 3, 4), (1, 3, 2)]:
        total = sum(occurrences_circular(sigma, k).count for k in phi(pi))
        print(sigma, pi, occurrences_linear(sigma, pi).count, total)
