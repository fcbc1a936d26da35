r"""
From linear to circular generating functions
--------------------------------------------
Enumerating permutations gives the linear EGF ``P(u, z)`` and enumerating
circular permutations gives ``C(u, z)``.  For patterns that start with 1
(up to symmetry) the two are tied by ``C = 1 + log P``.
"""
from circpat.gfengine import C_bruteforce, C_from_P, P_bruteforce
from circpat.enumeration import circular_distribution, linear_distribution
from circpat.series import ln1

#%%
# Rows of the enumeration are polynomials in ``u``: the coefficient of u^k is
# the number of objects with exactly k occurrences.
for n in range(6):
    print(n, linear_distribution((1, 2, 3), n), "|", circular_distribution((1, 2, 3), n))

#%%
# The series keep exact rational coefficients; ``egf_row`` undoes the 1/n!.
N = 8
P = P_bruteforce((1, 3, 2), N)
C = C_bruteforce((1, 3, 2), N)
print(C_from_P((1, 3, 2), P) == C)
print([str(C.egf_row(n)) for n in range(N + 1)])

#%%
# 231 is handled through its orbit member 132.
print(C_from_P((2, 3, 1), P_bruteforce((2, 3, 1), N)) == C_bruteforce((2, 3, 1), N))

#%%
# 2413 has no symmetry starting with 1 and the identity indeed fails there.
P = P_bruteforce((2, 4, 1, 3), N)
C = C_bruteforce((2, 4, 1, 3), N)
got = 1 + ln1(P)
print([n for n in range(N + 1) if got[n] != C[n]][:3])
