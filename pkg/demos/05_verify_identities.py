"""
Checking every identity
=======================

Each identity is checked separately for each n; a failure keeps the
smallest offending n and both sides.
"""

# %%
from fibrun import identities

for key in identities.IDENTITIES:
    report = identities.verify(key)
    print(f"{key:24s} {'pass' if report.passed else 'FAIL'}  n <= {report.n_max}")

# %%
print(identities.verify("lucas_run_recurrence", 6).to_text())
