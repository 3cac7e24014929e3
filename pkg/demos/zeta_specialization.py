"""
Specializing at x_j = 1/j^2
===========================

Under this substitution p_n becomes zeta(2n), and e_n, h_n become rational
multiples of pi^{2n}.  Values stay exact and symbolic in pi^2; numpy is
used only to compare against truncated sums.
"""
from hookzeta.numeric import richardson, truncated_generators
from hookzeta.symexpr import p, s
from hookzeta.verify import theorem1_lhs_he, theorem1_rhs
from hookzeta.zeta import derive_bernoulli, spec_e, spec_h, specialize

for n in range(1, 5):
    print(f"zeta({2 * n}) = {specialize(p(n)).to_latex():14} e_{n} -> {spec_e(n).to_latex():14} "
          f"h_{n} -> {spec_h(n).to_latex()}")

value = specialize(s(2, 1))
print("\ns_(2,1) ->", value.to_latex())

# truncated sums converge like 1/N; one Richardson step removes that term
def s21(N):
    g = truncated_generators(N, 3)["h"]
    return g[2] * g[1] - g[3]

N = 10**4
plain = s21(N)
extrapolated = richardson(plain, s21(2 * N))
exact = value.to_float()
print(f"truncated at N = {N}: relative error {abs(plain - exact) / exact:.1e}")
print(f"extrapolated from N and 2N: relative error {abs(extrapolated - exact) / exact:.1e}")

# both sides of the signed hook moment identity specialize to the same value
r = derive_bernoulli(theorem1_lhs_he(2), theorem1_rhs(2))
print("\nhook moment identity at n = 2, specialized:", r.status, "-", r.note)
