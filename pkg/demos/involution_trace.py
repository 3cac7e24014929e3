"""
Cancelling rim hooks with a sign-reversing involution
======================================================

Expanding sum_{i=1}^n p_{2n+1-i} p_i by the Murnaghan-Nakayama rule twice
gives a signed set of decorated rim hooks: an inner hook (blank cells,
'.') with a rim hook added on top (colored cells, '#').  The involution
pairs off every element whose outer shape is not a hook with one of
opposite sign, so only hook shapes survive.
"""
from hookzeta.involution import build_S, orbits, reduce_to_schur_sum, trace, verify_involution

n = 3
elements = build_S(n)
pairs = [o for o in orbits(n) if o[0] != o[1]]
print(f"S_{n} has {len(elements)} elements, {len(pairs)} cancelling pairs, "
      f"{len(elements) - 2 * len(pairs)} fixed points\n")

# the first few orbits, drawn side by side
print("\n\n".join(trace(n).split("\n\n")[:6]))

print("\nsurviving hooks:", reduce_to_schur_sum(n).to_text())
result = verify_involution(n)
print("involution checks:", result.status, "-", result.note)
