"""
Schur functions in the complete homogeneous basis
==================================================

Every expression can be rewritten in the h basis, where equality is a
plain comparison of coefficients.
"""
from hookzeta.symexpr import e, equal, h, hook_to_he, p, s, to_h_basis, to_s_basis

# Jacobi-Trudi: s_(2,1) = h_2 h_1 - h_3
print("s(2,1) =", to_h_basis(s(2, 1)).to_text())

# Newton: p_3 written through h
print("p(3)   =", to_h_basis(p(3)).to_text())

# a hook Schur function through h*e products
print("s(2,1,1) via h*e =", hook_to_he(2, 2).to_text())

# the power sum p_4 is the alternating sum of Schur hooks
hooks = s(4) - s(3, 1) + s(2, 1, 1) - s(1, 1, 1, 1)
print("p(4) == s(4) - s(3,1) + s(2,1,1) - s(1,1,1,1):", equal(p(4), hooks))

# going the other way, the Schur expansion of h_1^3 and e_2 h_1
print("h(1,1,1) =", to_s_basis(h(1, 1, 1)).to_text())
print("e(2) h(1) =", to_s_basis(to_h_basis(e(2)) * h(1)).to_text())
