r"""
Differential equations as coefficient recurrences
-------------------------------------------------
Every ODE here is solved exactly by extracting coefficients of ``z^n``.
The results are compared with enumeration and with closed forms.
"""
import math

from circpat.gfengine import (C_bruteforce, C_nonoverlapping_closed, D_riccati_123,
                              D_riccati_1234, closed_form_D1234_u0, eval_D123_closed,
                              omega_monotone, pattern_gf)
from circpat.series import eval_numeric, integrate

#%%
# Riccati equation for D = C' of 123.  Integrating gives C, whose rows are
# the circular distributions.
D = D_riccati_123(10)
C = 1 + integrate(D)
print([str(C.egf_row(n)) for n in range(7)])
print(C.truncate(9) == C_bruteforce((1, 2, 3), 9))

#%%
# At u = 0 the constant terms count circular permutations avoiding 123.
print([int(C.subs_u(0).egf_row(n)[0]) for n in range(12)])

#%%
# The tanh closed form, evaluated through complex arithmetic, agrees with
# the truncated series near the origin.
for u0 in (0.0, 0.5, 1.0):
    print(u0, eval_D123_closed(u0, 0.2), eval_numeric(D_riccati_123(25), u0, 0.2))

#%%
# For 1234 at u = 0 the solution is a ratio of trigonometric functions.
print(closed_form_D1234_u0(15) == D_riccati_1234(15).subs_u(0))

#%%
# The monotone ODE for omega = 1/P, and its u = 1 degeneration 1 - z.
print(omega_monotone(4, 6))
print(omega_monotone(4, 6).subs_u(1))

#%%
# Non-overlapping patterns ending in 2 have an integral closed form.
C132 = C_nonoverlapping_closed((1, 3, 2), 12)
print([int(C132.subs_u(0).egf_row(n)[0]) for n in range(13)])
print([math.factorial(n - 1) for n in range(1, 8)], [int(C132.subs_u(1).egf_row(n)[0]) for n in range(1, 8)])

#%%
# ``pattern_gf`` bundles P, omega, C and D from one source.
gf = pattern_gf((1, 3, 4, 2), 8, "ode")
print(gf.provenance)
print(gf.C == pattern_gf((1, 3, 4, 2), 8, "bruteforce").C)
