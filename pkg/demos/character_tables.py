"""
Character tables from the Murnaghan-Nakayama rule
==================================================

Expanding p_mu in Schur functions, one rim hook at a time, gives the
character chi^lambda(mu) as the coefficient of s_lambda.
"""
from math import factorial

from hookzeta.symexpr import p, to_h_basis
from hookzeta.transition import char_table, power_to_schur

print("p(2,1) =", power_to_schur((2, 1)).to_text())
print("p(3)   =", power_to_schur((3,)).to_text())

table = char_table(5)
print("\ncharacter table of S_5 (rows lambda, columns cycle type mu)")
print(table.to_text())

print("\nrows orthonormal under 1/z(mu):", table.is_orthonormal())
dims = table.dimensions()
print("sum of squared dimensions:", sum(d * d for d in dims.values()), "= 5! =", factorial(5))

# the same expansion through Newton's identities in the h basis
print("MN agrees with Newton for p(3,1,1):", to_h_basis(power_to_schur((3, 1, 1))) == to_h_basis(p(3, 1, 1)))
