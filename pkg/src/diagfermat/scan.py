"""Census of pointless diagonal curves and the largest q admitting one."""

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field

import numpy as np

from .charsum import check_order
from .curve import class_counts
from .errors import Unsupported
from .field import is_prime, make_field, prime_power


@dataclass
class ScanReport:
    q: int
    ell: int
    p: int
    n: int
    pointless_classes: list
    E_size: int
    witness: tuple = None
    method: str = "charsum"

    @property
    def extension(self):
        return self.n > 1

    def census_bound_holds(self):
        """E_size (q+1)^2 <= q (q-1)^2 (ell-1)(ell-2): each pointless pair has a^2 = (q+1)^2."""
        q, ell = self.q, self.ell
        return self.E_size * (q + 1) ** 2 <= q * (q - 1) ** 2 * (ell - 1) * (ell - 2)

    def to_dict(self):
        return {
            "q": self.q, "p": self.p, "n": self.n, "ell": self.ell,
            "E_size": self.E_size,
            "pointless_classes": [list(c) for c in self.pointless_classes],
            "witness": list(self.witness) if self.witness else None,
            "census_bound_holds": self.census_bound_holds(),
            "method": self.method,
        }


@dataclass
class QReport:
    ell: int
    bound: int
    checked: list = dc_field(default_factory=list)
    q_max: int = None
    reports: list = dc_field(default_factory=list)

    def to_dict(self):
        return {
            "ell": self.ell, "bound": self.bound, "q_max": self.q_max,
            "checked": self.checked,
            "nonempty": [r.q for r in self.reports if r.E_size],
            "reports": [r.to_dict() for r in self.reports],
        }


def _smallest_in_class(field, ell, r):
    xs = np.flatnonzero((field.log % ell == r) & (field.log >= 0))
    return int(xs[0])


def pointless_pairs(field, ell, method="charsum"):
    """All coset-class pairs (class(A), class(B)) whose curve has no points."""
    check_order(field, ell)
    N = class_counts(field, ell, method)
    classes = [(int(i), int(j)) for i, j in zip(*np.nonzero(N == 0))]
    m = (field.q - 1) // ell
    witness = None
    if classes:
        i, j = classes[0]
        witness = (_smallest_in_class(field, ell, i), _smallest_in_class(field, ell, j))
    return ScanReport(field.q, ell, field.p, field.n, classes, len(classes) * m * m, witness, method)


def hasse_weil_ceiling(ell):
    """Largest q with q + 1 <= (ell-1)(ell-2) sqrt(q); beyond it every curve has points."""
    if ell < 3:
        raise Unsupported("conics always have points; there is no ceiling to compute")
    d = (ell - 1) * (ell - 2)
    q = int(((d + math.sqrt(d * d - 4)) / 2) ** 2) + 2
    while (q + 1) ** 2 > d * d * q:
        q -= 1
    return q


def prime_powers(ell, limit):
    """Prime powers q <= limit with q = 1 mod ell, ascending, as (p, n) pairs."""
    if limit < ell + 1:
        raise ValueError(f"no prime power is 1 mod {ell} below {ell + 1}")
    out = []
    for q in range(ell + 1, limit + 1, ell):
        pn = prime_power(q)
        if pn is not None:
            out.append(pn)
    return out


def _scan_one(args):
    p, n, ell, method = args
    return pointless_pairs(make_field(p, n), ell, method)


def q_max(ell, workers=1, method="charsum"):
    """Scan every admissible prime power up to the Hasse-Weil ceiling."""
    if not is_prime(ell):
        raise ValueError(f"{ell} is not prime")
    bound = hasse_weil_ceiling(ell)
    report = QReport(ell, bound)
    if bound < ell + 1:
        return report
    jobs = [(p, n, ell, method) for p, n in prime_powers(ell, bound)]
    report.checked = [p**n for p, n, _, _ in jobs]
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            reports = list(pool.map(_scan_one, jobs, chunksize=4))
    else:
        reports = [_scan_one(job) for job in jobs]
    report.reports = sorted(reports, key=lambda r: r.q)
    nonempty = [r.q for r in report.reports if r.E_size]
    report.q_max = max(nonempty) if nonempty else None
    return report


def find_pointless(field, ell):
    """Search for a pointless curve by fixing a non-ell-th-power B.

    For such B the curve has no points exactly when A lies outside the set
    ``{z^ell - B y^ell}``.  B runs over one representative per nontrivial
    class; returns the first ``(A, B)`` found, or ``None``.
    """
    check_order(field, ell)
    q = field.q
    powers = np.unique(field.pow(np.arange(q), ell))
    for r in range(1, ell):
        B = int(field.exp[r])
        values = field.sub(powers[:, None], field.mul(B, powers)[None, :])
        hit = np.zeros(q, dtype=bool)
        hit[values.ravel()] = True
        hit[0] = True
        missing = np.flatnonzero(~hit)
        if missing.size:
            return int(missing[0]), B
    return None


def sparse_regime_violations(reports, c=0.5, floor=10):
    """(q, ell) pairs with floor <= q <= c ell^2 whose scan found no pointless curve."""
    return [(r.q, r.ell) for r in reports
            if floor <= r.q <= c * r.ell**2 and r.E_size == 0]
