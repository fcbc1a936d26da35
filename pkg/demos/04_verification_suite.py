r"""
Running the verification suite
------------------------------
Every identity is checked exactly against enumeration where possible.  The
reports serialise to JSON lines, CSV, or an aligned table; the same suite is
available as ``circpat verify``.
"""
from circpat.verify import reports_to_table, run_suite, verify_theorem_main

#%%
reports = run_suite(n_max=7, N=16)
print(reports_to_table(reports))

#%%
# A report that makes no claim still records what the raw comparison found.
print(verify_theorem_main((2, 4, 1, 3), 7).to_json())
