"""
How fast do the moments grow?
=============================

Fit |moment_k| ~ q^alpha ell^beta over many small prime fields and compare
each moment with its upper bound.
"""

from diagfermat.cli import SweepConfig, sweep_and_fit

for fit in sweep_and_fit(SweepConfig(p_max=300, ell_max=30, k_max=6)):
    print(f"k={fit.k}: alpha={fit.alpha:.3f} beta={fit.beta:.3f} over {fit.pair_count} pairs, "
          f"max moment/bound {fit.max_bound_ratio:.3f} ({fit.status})")
