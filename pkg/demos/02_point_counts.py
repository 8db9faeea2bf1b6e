"""
Counting points on diagonal curves
==================================

Count points on A x^ell + B y^ell = z^ell by brute force and by Gauss sums,
then tabulate a whole field at once.
"""

import numpy as np

from diagfermat import CurveId, a_charsum, class_counts, count_brute, make_field

F = make_field(11)

# the smallest pointless quintic: 9 x^5 + 4 y^5 = z^5 over GF(11)
curve = CurveId(F, 5, 9, 4)
print("brute force:", count_brute(curve))
print("Gauss sums: ", a_charsum(curve))

# the count only depends on the classes of A and B modulo fifth powers,
# so a 5 x 5 table covers all 100 curves
N = class_counts(F, 5)
print("N by coset class of (A, B):")
print(N)

# every count respects |N - q - 1| <= (ell-1)(ell-2) sqrt(q)
a = N - (F.q + 1)
print("max |a| =", np.abs(a).max(), " Weil bound =", 12 * np.sqrt(11))
