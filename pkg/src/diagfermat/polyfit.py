"""Test whether the k-th moment is a polynomial in sqrt(q) and ell.

A candidate ``f(x, y) = sum c[i, j] x^(i/2) y^j`` with ``i <= k + 4`` and
``j <= 2k - 2`` has ``(k + 5)(2k - 1)`` unknowns.  Interpolating it through two
disjoint sets of primes-and-exponents gives two coefficient vectors; if the
moment really were such a polynomial they would coincide.

Linear algebra runs in mpmath at ``DEFAULT_PREC`` bits.  Unknowns are ordered
with ``i`` varying fastest: ``c[0,0], c[1,0], ..., c[k+4,0], c[0,1], ...``.
"""

from dataclasses import dataclass

import mpmath
import numpy as np

from .errors import CongruenceViolation, SingularMatrix, WrongCount
from .field import is_prime, make_field
from .moments import moments_brute

DEFAULT_PREC = 512
MIN_P = 11
RESIDUAL_TOL = mpmath.mpf("1e-20")


def degree_caps(k):
    return k + 4, 2 * k - 2


def system_size(k):
    xdeg, ydeg = degree_caps(k)
    return (xdeg + 1) * (ydeg + 1)


@dataclass
class InterpolationSystem:
    k: int
    pairs: list
    matrix: mpmath.matrix
    rhs: list
    prec: int = DEFAULT_PREC


@dataclass
class FitVerdict:
    k: int
    coeff_sets: tuple
    max_abs_diff: float
    condition_estimates: tuple
    threshold: float
    verdict: str

    def to_dict(self):
        return {
            "k": self.k,
            "verdict": self.verdict,
            "max_abs_diff": self.max_abs_diff,
            "threshold": self.threshold,
            "condition_estimates": list(self.condition_estimates),
            "coeff_sets": [[mpmath.nstr(c, 25) for c in cs] for cs in self.coeff_sets],
        }


def _row(p, ell, k):
    xdeg, ydeg = degree_caps(k)
    root = mpmath.sqrt(p)
    return [root**i * mpmath.mpf(ell) ** j for j in range(ydeg + 1) for i in range(xdeg + 1)]


def check_pair(p, ell):
    if not (is_prime(p) and is_prime(ell)) or (p - 1) % ell:
        raise CongruenceViolation(f"({p}, {ell}) is not a prime p with prime ell dividing p - 1")


def moment_value(p, ell, k):
    return moments_brute(make_field(p), ell, [k])[k]


def build_system(k, pairs, prec=DEFAULT_PREC):
    pairs = [tuple(pr) for pr in pairs]
    size = system_size(k)
    if len(pairs) != size:
        raise WrongCount(f"k = {k} needs exactly {size} pairs, got {len(pairs)}")
    for p, ell in pairs:
        check_pair(p, ell)
    with mpmath.workprec(prec):
        M = mpmath.matrix([_row(p, ell, k) for p, ell in pairs])
    rhs = [moment_value(p, ell, k) for p, ell in pairs]
    return InterpolationSystem(k, pairs, M, rhs, prec)


def _norm_inf(M):
    return max(sum(abs(M[i, j]) for j in range(M.cols)) for i in range(M.rows))


def solve_coeffs(system):
    """Solve the square system with one step of iterative refinement.

    Returns ``(coefficients, condition_estimate)``, the estimate being the
    infinity-norm condition number.  Raises SingularMatrix when the matrix is
    numerically rank deficient at the working precision.
    """
    with mpmath.workprec(system.prec):
        M = system.matrix
        v = mpmath.matrix([mpmath.mpf(z) for z in system.rhs])
        try:
            Minv = mpmath.inverse(M)
        except ZeroDivisionError as exc:
            raise SingularMatrix("interpolation matrix is singular; choose other pairs") from exc
        cond = _norm_inf(M) * _norm_inf(Minv)
        if cond * mpmath.eps > mpmath.mpf("1e-6"):
            raise SingularMatrix(f"condition estimate {mpmath.nstr(cond, 5)} too large for {system.prec} bits")
        c = Minv * v
        with mpmath.workprec(2 * system.prec):
            r = v - M * c
        c = c + Minv * r
        res = _norm_inf(M * c - v)
        vnorm = max(abs(z) for z in v)
        rel = res / vnorm if vnorm else res
        if rel > RESIDUAL_TOL:
            raise SingularMatrix(f"residual {mpmath.nstr(rel, 5)} above tolerance")
        return [c[i] for i in range(c.rows)], cond


def candidate_pairs(min_p=MIN_P, max_p=10**6):
    """Admissible (p, ell), increasing p then ell."""
    for p in range(min_p, max_p):
        if is_prime(p):
            for ell in range(2, p):
                if (p - 1) % ell == 0 and is_prime(ell):
                    yield p, ell


def select_pairs(k, exclude=(), prec=DEFAULT_PREC, min_p=MIN_P, tol="1e-40"):
    """Greedily take the smallest admissible pairs that keep the rows independent.

    A candidate row is kept when its component orthogonal to the rows already
    chosen is larger than ``tol`` times its own norm.
    """
    size = system_size(k)
    excluded = set(map(tuple, exclude))
    chosen, basis = [], []
    with mpmath.workprec(prec):
        tol = mpmath.mpf(tol)
        for pair in candidate_pairs(min_p):
            if pair in excluded:
                continue
            row = mpmath.matrix(_row(*pair, k))
            norm = mpmath.norm(row)
            res = row
            for b in basis:
                res = res - (res.T * b)[0] * b
            rnorm = mpmath.norm(res)
            if rnorm > tol * norm:
                basis.append(res / rnorm)
                chosen.append(pair)
                if len(chosen) == size:
                    return chosen
    raise SingularMatrix("ran out of candidate pairs")


def consistency_test(k, set1, set2, prec=DEFAULT_PREC):
    """Compare the coefficient vectors interpolated through two disjoint pair sets.

    ``inconsistent`` when they differ by more than ``1e6 * cond * u`` (u the unit
    roundoff), ``consistent`` when they agree to within ``cond * u``, and
    ``ill_conditioned`` in between.
    """
    if set(map(tuple, set1)) & set(map(tuple, set2)):
        raise ValueError("pair sets must be disjoint")
    c1, cond1 = solve_coeffs(build_system(k, set1, prec))
    c2, cond2 = solve_coeffs(build_system(k, set2, prec))
    with mpmath.workprec(prec):
        diff = max(abs(a - b) for a, b in zip(c1, c2))
        theta = mpmath.mpf(10) ** 6 * max(cond1, cond2) * mpmath.eps
        if diff > theta:
            verdict = "inconsistent"
        elif diff < theta / 10**6:
            verdict = "consistent"
        else:
            verdict = "ill_conditioned"
    return FitVerdict(k, (c1, c2), float(diff), (float(cond1), float(cond2)), float(theta), verdict)


def least_squares_fit(k, pairs, prec=DEFAULT_PREC):
    """Overdetermined variant: QR least squares through more pairs than unknowns.

    Returns ``(coefficients, relative_residual)``; a residual far above the
    working precision means no polynomial of the given shape fits the data.
    """
    pairs = [tuple(pr) for pr in pairs]
    for p, ell in pairs:
        check_pair(p, ell)
    with mpmath.workprec(prec):
        M = mpmath.matrix([_row(p, ell, k) for p, ell in pairs])
        v = mpmath.matrix([mpmath.mpf(moment_value(p, ell, k)) for p, ell in pairs])
        x, res = mpmath.qr_solve(M, v)
        vnorm = mpmath.norm(v)
        return [x[i] for i in range(x.rows)], (res / vnorm if vnorm else res)


def second_moment_coefficients():
    """Exact integer coefficients of q (q-1)^2 (ell-1)(ell-2) in the c[i, j] ordering."""
    xdeg, ydeg = degree_caps(2)
    in_q = np.polynomial.polynomial.polymul([0, 1], [1, -2, 1])  # q (q-1)^2
    in_ell = np.polynomial.polynomial.polymul([-1, 1], [-2, 1])  # (ell-1)(ell-2)
    coeffs = np.zeros((ydeg + 1, xdeg + 1), dtype=np.int64)
    for a, ca in enumerate(in_q):
        for b, cb in enumerate(in_ell):
            coeffs[b, 2 * a] = int(ca * cb)  # q^a = x^(2a/2)
    return coeffs.ravel().tolist()
