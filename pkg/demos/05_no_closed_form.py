"""
Is the third moment a polynomial in sqrt(q) and ell?
====================================================

Interpolate a polynomial through two disjoint sets of (p, ell) pairs.  For the
second moment both fits agree with the known closed form; for the third they
disagree wildly, so no polynomial of that shape exists.
"""

from diagfermat.polyfit import consistency_test, second_moment_coefficients, select_pairs

for k in (2, 3):
    s1 = select_pairs(k)
    s2 = select_pairs(k, exclude=s1)
    verdict = consistency_test(k, s1, s2)
    print(f"k={k}: {len(s1)} pairs per set, verdict {verdict.verdict}, "
          f"max difference {verdict.max_abs_diff:.3g}, threshold {verdict.threshold:.3g}")

print("k=2 expansion coefficients:", [x for x in second_moment_coefficients() if x])
