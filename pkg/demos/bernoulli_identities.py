"""
Bernoulli number identities
===========================

Bernoulli numbers come from the classical recurrence, and each identity is
checked exactly with rational arithmetic.
"""
from hookzeta.bernoulli import IDENTITIES, bernoulli, check_identity, corollary_recurrence
from hookzeta.checks import frac_str

print("B_0 .. B_12:", ", ".join(frac_str(bernoulli(k)) for k in range(13)))

for name, (_, lowest, parity, statement) in IDENTITIES.items():
    n = lowest + 4
    r = check_identity(name, n)
    print(f"\n{name} at n = {n}: {r.status}\n  {statement}\n  lhs = rhs = {frac_str(r.lhs)}")

# the `corollary` identity yields B_{4n+2} from smaller Bernoulli numbers alone
for n in range(1, 5):
    print(f"B_{4 * n + 2} from the recurrence: {frac_str(corollary_recurrence(n))}")

# at n = 0 that identity does not hold; it is kept as a documented expected failure
r = check_identity("corollary", 0)
print(f"\ncorollary at n = 0: {r.status}, lhs {frac_str(r.lhs)} vs rhs {frac_str(r.rhs)}")
