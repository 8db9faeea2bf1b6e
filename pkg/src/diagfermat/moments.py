"""Moments ``sum_{A,B != 0} a(A, B)^k`` of diagonal curves and related counts.

Moments are taken over affine coefficient pairs with ``C = -1``; fibre counts
sum ``N(A, B, C)^k`` over projective representatives ``[A:B:C]``.  On the
smooth part the representative ``(A, B, 1)`` has the same count as
``(-A, -B, -1)``, so the two pictures agree term by term there.
"""

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .charsum import check_order
from .curve import CurveId, _points, class_counts, count_brute, count_brute_table
from .errors import TooLarge, Unsupported

TUPLE_ENUMERATION_LIMIT = 10**7
SQRT_DENOMINATOR = 10**30


@dataclass(frozen=True)
class MomentRecord:
    q: int
    ell: int
    k: int
    value: int
    method: str


@dataclass(frozen=True)
class FibreCount:
    q: int
    ell: int
    k: int
    smooth_only: bool
    count: int


def _a_classes(field, ell):
    N = class_counts(field, ell)
    return [int(v) - field.q - 1 for v in N.ravel()]


def moment_brute(field, ell, k):
    """Exact k-th moment from the ell^2 class counts, each weighted by ((q-1)/ell)^2."""
    if k < 1:
        raise ValueError("moment order must be positive")
    check_order(field, ell)
    weight = ((field.q - 1) // ell) ** 2
    value = weight * sum(a**k for a in _a_classes(field, ell))
    return MomentRecord(field.q, ell, k, value, "brute")


def moments_brute(field, ell, ks):
    """Several moments sharing one class table; returns ``{k: value}``."""
    check_order(field, ell)
    weight = ((field.q - 1) // ell) ** 2
    a = _a_classes(field, ell)
    return {k: weight * sum(x**k for x in a) for k in ks}


def moment_closed(q, ell, k):
    if k == 1:
        value = 0
    elif k == 2:
        value = q * (q - 1) ** 2 * (ell - 1) * (ell - 2)
    else:
        raise Unsupported("no polynomial closed formula is available beyond k = 2")
    return MomentRecord(q, ell, k, value, "closed")


def _bound_rational_part(q, ell, k):
    # (q-1)^2 (ell-1) (ell-2)^(k-1) ((ell-1)^(k-1) - (-1)^(k-1)) / ell
    return Fraction((q - 1) ** 2 * (ell - 1) * (ell - 2) ** (k - 1)
                    * ((ell - 1) ** (k - 1) - (-1) ** (k - 1)), ell)


def moment_bound(q, ell, k):
    """Upper bound on |k-th moment|, as an exact Fraction.

    Exact for even k; for odd k the factor sqrt(q) is replaced by a rational
    upper approximation with denominator ``SQRT_DENOMINATOR``.
    """
    if k < 1:
        raise ValueError("moment order must be positive")
    rational = _bound_rational_part(q, ell, k)
    if k % 2 == 0:
        return q ** (k // 2) * rational
    d = SQRT_DENOMINATOR
    root = math.isqrt(q * d * d)
    if root * root < q * d * d:
        root += 1
    return q ** (k // 2) * Fraction(root, d) * rational


def within_moment_bound(value, q, ell, k):
    """Exact test of ``|value| <= q^(k/2) * rational``, squaring away the root."""
    rational = _bound_rational_part(q, ell, k)
    if rational < 0:
        return False
    return Fraction(value) ** 2 <= q**k * rational**2


def count_char_tuples(ell, m, method="closed"):
    """Number of m-tuples of nontrivial order-ell characters with nontrivial product.

    Methods: ``closed`` (the alternating geometric sum), ``recurrence``
    (``S(m) = (ell-1) S(m-2) + (ell-2) S(m-1)``, ``S(0) = 0``, ``S(1) = ell-1``),
    ``enumerate`` (walks the tuples one coordinate at a time, merging prefixes
    with the same product) and ``tuples`` (lists every tuple; capped).
    """
    if m < 1:
        raise ValueError("tuple length must be positive")
    if method == "closed":
        return (-1) ** m * (ell - 1) * ((1 - ell) ** m - 1) // ell
    if method == "recurrence":
        prev, cur = 0, ell - 1
        for _ in range(m - 1):
            prev, cur = cur, (ell - 1) * prev + (ell - 2) * cur
        return cur
    if method == "enumerate":
        # by_product[r] = number of prefixes whose product is chi_r
        by_product = [1] + [0] * (ell - 1)
        for _ in range(m):
            nxt = [0] * ell
            for r, c in enumerate(by_product):
                if c:
                    for j in range(1, ell):
                        nxt[(r + j) % ell] += c
            by_product = nxt
        return sum(by_product[1:])
    if method == "tuples":
        if (ell - 1) ** m > TUPLE_ENUMERATION_LIMIT:
            raise TooLarge(f"{(ell - 1) ** m} tuples exceed the enumeration limit")
        return sum(1 for t in itertools.product(range(1, ell), repeat=m) if sum(t) % ell)
    raise ValueError(f"unknown method {method!r}")


def _degenerate_reps(field):
    """Representatives [A:B:C] of P^2 with ABC = 0 (B or A zero on C = 1, then C = 0)."""
    q = field.q
    for A in range(q):
        for B in range(q):
            if A == 0 or B == 0:
                yield A, B, 1
    for A in range(q):
        yield A, 1, 0
    yield 1, 0, 0


def fibre_count(field, ell, k, smooth_only=True):
    """Sum of N(A, B, C)^k over representatives of P^2, by brute-force point counts."""
    check_order(field, ell)
    if k < 1:
        raise ValueError("k must be positive")
    table = count_brute_table(field, ell)
    total = sum(int(v) ** k for v in table[1:, 1:].ravel())
    if not smooth_only:
        for A, B, C in _degenerate_reps(field):
            total += count_brute(CurveId(field, ell, A, B, C)).N ** k
    return FibreCount(field.q, ell, k, smooth_only, total)


def moment_geometric(field, ell, k):
    """k-th moment recovered from smooth fibre counts by binomial inversion."""
    q = field.q
    counts = [(q - 1) ** 2] + [fibre_count(field, ell, j).count for j in range(1, k + 1)]
    value = sum(math.comb(k, j) * (-(q + 1)) ** (k - j) * counts[j] for j in range(k + 1))
    return MomentRecord(q, ell, k, value, "geometric")


def n_moment_from_a_moments(q, k, a_moments):
    """``sum N^k`` over the (q-1)^2 smooth pairs, given ``a_moments[j]`` for 1 <= j <= k."""
    moments = dict(a_moments)
    moments[0] = (q - 1) ** 2
    return sum(math.comb(k, j) * (q + 1) ** (k - j) * moments[j] for j in range(k + 1))


def second_moment_cases(field, ell):
    """Split the pairs of points counted by the smooth k = 2 fibre count by their z-coordinates.

    Returns a dict with ``both_infinite`` (z1 = z2 = 0), ``mixed`` (z1 = 1, z2 = 0;
    the symmetric case has the same size) and ``both_affine`` (z1 = z2 = 1), so that
    ``both_infinite + 2 * mixed + both_affine`` is the smooth fibre count.
    """
    check_order(field, ell)
    q = field.q
    xs, ys, zs = _points(field)
    affine, at_infinity = zs == 1, zs == 0
    n_aff = _partial_table(field, ell, xs[affine], ys[affine], zs[affine])
    n_inf = _partial_table(field, ell, xs[at_infinity], ys[at_infinity], zs[at_infinity])
    both_inf = int((n_inf**2).sum())
    mixed = int((n_aff * n_inf).sum())
    both_aff = int((n_aff**2).sum())
    assert n_aff.shape == (q - 1, q - 1)
    return {"both_infinite": both_inf, "mixed": mixed, "both_affine": both_aff}


def _partial_table(field, ell, xs, ys, zs):
    """Counts of the given points on each curve A x^l + B y^l = z^l, A, B nonzero."""
    q = field.q
    u, v, w = field.pow(xs, ell), field.pow(ys, ell), field.pow(zs, ell)
    out = np.zeros((q - 1, q - 1), dtype=np.int64)
    A = np.arange(1, q)[:, None]
    B = np.arange(1, q)[None, :]
    for ui, vi, wi in zip(u.tolist(), v.tolist(), w.tolist()):
        lhs = field.sub(field.add(field.mul(A, ui), field.mul(B, vi)), wi)
        out += lhs == 0
    return out
