"""Point counts, moments and pointless-curve scans for diagonal Fermat curves over finite fields."""

from .charsum import Character, character, eval_char, gauss_sum, jacobi_J, jacobi_J0
from .curve import CountResult, CurveId, a_charsum, class_counts, coset_class, count, count_brute
from .errors import *  # noqa: F401,F403
from .field import FiniteField, arith, field_of_order, make_field
from .moments import (FibreCount, MomentRecord, count_char_tuples, fibre_count, moment_bound,
                      moment_brute, moment_closed)
from .scan import QReport, ScanReport, find_pointless, hasse_weil_ceiling, pointless_pairs, prime_powers, q_max

__version__ = "0.1.0"
