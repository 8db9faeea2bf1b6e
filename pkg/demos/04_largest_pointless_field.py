"""
The largest field with a pointless curve
========================================

For each ell, scan every prime power q with ell | q - 1 up to the point where
the Weil bound forbids pointless curves, and report the last q that has one.
"""

from diagfermat import hasse_weil_ceiling, q_max

for ell in (5, 7, 11, 13):
    report = q_max(ell)
    nonempty = [r.q for r in report.reports if r.E_size]
    print(f"ell={ell}: ceiling {hasse_weil_ceiling(ell)}, {len(report.checked)} fields scanned, "
          f"Q = {report.q_max}")
    print("   fields with pointless curves:", nonempty)
