"""
Moments of the trace deviation
==============================

Sum a(A, B)^k over all curves of a field and compare with the closed form
for k = 2 and with the general upper bound.
"""

from diagfermat import moment_bound, moment_brute, moment_closed, make_field
from diagfermat.moments import count_char_tuples

F = make_field(29)
ell = 7

# the first moment vanishes identically, and so does its bound
print("k=1:", moment_brute(F, ell, 1).value, moment_bound(F.q, ell, 1))

for k in range(2, 7):
    value = moment_brute(F, ell, k).value
    bound = moment_bound(F.q, ell, k)
    print(f"k={k}: moment={value:>16}  bound={float(bound):>18.1f}  ratio={abs(value) / float(bound):.3f}")

# the second moment is q (q-1)^2 (ell-1)(ell-2) exactly
print("closed form k=2:", moment_closed(F.q, ell, 2).value)

# the bound counts tuples of nontrivial characters with nontrivial product
print("S(m) for ell=7:", [count_char_tuples(ell, m) for m in range(1, 9)])
