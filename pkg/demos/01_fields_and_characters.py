"""
Finite fields, characters and Gauss sums
========================================

Build a few fields, look at their tables, and check the basic identities
satisfied by Gauss sums of characters of order ell.
"""

import numpy as np

from diagfermat import character, eval_char, gauss_sum, jacobi_J, make_field

# GF(11): elements are just 0..10, the generator is the smallest primitive root
F = make_field(11)
print("GF(11) generator:", F.generator)
print("powers of the generator:", F.exp.tolist())

# GF(3^2): elements are encoded as c0 + 3 c1, printed as coefficient lists
K = make_field(3, 2)
print("GF(9) modulus (low to high):", K.modulus)
print("elements:", [K.format(x) for x in range(K.q)])

# characters of order 5 on GF(11); chi_1 sends the generator to exp(2 pi i / 5)
chi1 = character(F, 5, 1)
print("chi_1(2) =", np.round(eval_char(chi1, 2), 6))

# |g(chi)|^2 = q for a nontrivial character
g1 = gauss_sum(chi1)
print("|g(chi_1)|^2 =", round(abs(g1) ** 2, 10))

# g(chi_1) g(chi_2) = J(chi_1, chi_2) g(chi_3)
chi2 = character(F, 5, 2)
lhs = g1 * gauss_sum(chi2)
rhs = jacobi_J([chi1, chi2]) * gauss_sum(chi1 * chi2)
print("g1 g2 - J g3 =", abs(lhs - rhs))
