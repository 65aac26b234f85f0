"""
How much does a top-1-only objective drop?
==========================================

Cross-entropy against a soft target splits into a term on the teacher's
top-1 token and a remainder R over every other token.  The share of the
loss carried by R shrinks as the teacher becomes confident.
"""

from tiekd import theory

for q1 in (0.05, 0.3, 0.5, 0.7, 0.9, 0.99):
    print(f"teacher top-1 prob {q1:4.2f}   mean |R| / CE = {theory.residual_share(q1):.3f}")

###############################################################################
# The identities themselves hold to rounding error on random distributions
# and on the outputs of small random models.

for r in theory.run_all(samples=1000):
    print(f"{r.name:>24}  max |diff| = {r.max_abs_discrepancy:.1e}  passed={r.passed}")
