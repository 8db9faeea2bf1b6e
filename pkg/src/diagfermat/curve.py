"""Point counts on diagonal curves ``A x^ell + B y^ell + C z^ell = 0`` in P^2(GF(q)).

Two independent routes:

* brute force, enumerating projective points (the oracle), and
* character sums, ``a(A, B) = sum conj(chi_1)(A) conj(chi_2)(B) g(chi_1) g(chi_2) / g(chi_1 chi_2)``
  over nontrivial ``chi_1, chi_2`` with ``chi_1 chi_2`` nontrivial, for ``C = -1``.

Because ``x -> t x`` rescales A by ``t^ell``, counts only depend on the coset
classes ``dlog(A) mod ell`` and ``dlog(B) mod ell``; :func:`class_counts`
exploits this to tabulate all curves of a field at once.
"""

import functools
from dataclasses import dataclass

import numpy as np

from .charsum import check_order, character_table, gauss_sums, round_integral
from .errors import DegenerateCurve, DivisionByZero
from .field import FiniteField

BRUTE_TABLE_LIMIT = 1024


@dataclass(frozen=True)
class CurveId:
    field: FiniteField
    ell: int
    A: int
    B: int
    C: int = None

    def __post_init__(self):
        if self.C is None:
            object.__setattr__(self, "C", self.field.neg(1))

    @property
    def smooth(self):
        return self.A != 0 and self.B != 0 and self.C != 0


@dataclass(frozen=True)
class CountResult:
    N: int
    a: int
    method: str


def _result(field, N, method):
    return CountResult(N=int(N), a=int(N) - (field.q + 1), method=method)


def _points(field):
    """Canonical representatives of P^2: (x, y, 1), then (x, 1, 0), then (1, 0, 0)."""
    q = field.q
    xs = np.concatenate([np.tile(np.arange(q), q), np.arange(q), [1]])
    ys = np.concatenate([np.repeat(np.arange(q), q), np.ones(q, dtype=np.int64), [0]])
    zs = np.concatenate([np.ones(q * q, dtype=np.int64), np.zeros(q + 1, dtype=np.int64)])
    return xs, ys, zs


def count_brute(curve):
    """Number of projective points, by testing every point of P^2(GF(q))."""
    f, ell = curve.field, curve.ell
    if curve.A == 0 and curve.B == 0 and curve.C == 0:
        raise DegenerateCurve("A = B = C = 0 defines the whole plane")
    xs, ys, zs = _points(f)
    lhs = f.add(f.add(f.mul(curve.A, f.pow(xs, ell)), f.mul(curve.B, f.pow(ys, ell))),
                f.mul(curve.C, f.pow(zs, ell)))
    return _result(f, np.count_nonzero(lhs == 0), "brute")


@functools.lru_cache(maxsize=8)
def count_brute_table(field, ell):
    """N(A, B) with C = -1 for every pair at once, by brute force.

    Returns a ``(q, q)`` integer array indexed by encoded ``A, B``; rows and
    columns for zero coefficients are left at 0; the array is cached and
    read-only.  Each projective point ``[x:y:z]`` and each ``A`` determine the
    unique ``B`` (when ``y != 0``) making the point lie on the curve.
    """
    q = field.q
    if q > BRUTE_TABLE_LIMIT:
        raise ValueError(f"brute-force table limited to q <= {BRUTE_TABLE_LIMIT}")
    xs, ys, zs = _points(field)
    u, v, w = field.pow(xs, ell), field.pow(ys, ell), field.pow(zs, ell)
    table = np.zeros((q, q), dtype=np.int64)
    has_y = v != 0
    u_y, w_y, vinv = u[has_y], w[has_y], field.inv(v[has_y])
    u_0, w_0 = u[~has_y], w[~has_y]
    for A in range(1, q):
        B = field.mul(field.sub(w_y, field.mul(A, u_y)), vinv)
        table[A] += np.bincount(B, minlength=q)
        # points with y = 0 lie on every curve whose A satisfies A x^ell = z^ell
        table[A, 1:] += np.count_nonzero(field.mul(A, u_0) == w_0)
    table[:, 0] = 0
    table.setflags(write=False)
    return table


def coset_class(field, ell, x):
    """``dlog(x) mod ell``: the image of x in GF(q)^x / (GF(q)^x)^ell."""
    check_order(field, ell)
    if np.ndim(x) == 0 and x == 0:
        raise DivisionByZero("zero has no coset class")
    return field.dlog(x) % ell


@functools.lru_cache(maxsize=64)
def _charsum_weights(field, ell):
    """W[j1, j2] = g(chi_j1) g(chi_j2) / g(chi_j1 chi_j2), zero outside the summation range."""
    g = gauss_sums(field, ell)
    j = np.arange(ell)
    j1, j2 = np.meshgrid(j, j, indexing="ij")
    live = (j1 != 0) & (j2 != 0) & ((j1 + j2) % ell != 0)
    W = np.zeros((ell, ell), dtype=complex)
    W[live] = g[j1[live]] * g[j2[live]] / g[(j1[live] + j2[live]) % ell]
    magnitude = np.count_nonzero(live) * np.sqrt(field.q)
    return W, magnitude


def a_charsum(curve):
    """a = N - (q + 1) from Gauss sums; only for C = -1 and A, B nonzero."""
    f, ell = curve.field, curve.ell
    check_order(f, ell)
    if curve.C != f.neg(1):
        raise ValueError("the character-sum count is written for C = -1; rescale the curve first")
    if curve.A == 0 or curve.B == 0:
        raise DegenerateCurve("character-sum count needs A, B nonzero")
    W, magnitude = _charsum_weights(f, ell)
    chars = character_table(f, ell)
    value = np.conj(chars[:, curve.A]) @ W @ np.conj(chars[:, curve.B])
    a = round_integral(value, magnitude)
    return CountResult(N=a + f.q + 1, a=a, method="charsum")


def a_charsum_table(field, ell):
    """a(A, B) from Gauss sums for every pair, as a ``(q, q)`` array (zero row/col unused)."""
    check_order(field, ell)
    W, magnitude = _charsum_weights(field, ell)
    X = np.conj(character_table(field, ell))
    values = X.T @ W @ X
    a = np.rint(values.real).astype(np.int64)
    err = np.abs(values - a)
    err[0, :] = 0
    err[:, 0] = 0
    worst = np.unravel_index(np.argmax(err), err.shape)
    round_integral(values[worst], magnitude)
    a[0, :] = 0
    a[:, 0] = 0
    return a


def _cyclotomic_counts(field, ell):
    """T[i, j] = #{u : dlog(u) = i, dlog(1 - u) = j (mod ell)}, by walking GF(q)."""
    u = np.arange(2, field.q)  # every u outside {0, 1}
    i = field.log[u] % ell
    j = field.log[field.sub(1, u)] % ell
    return np.bincount(i * ell + j, minlength=ell * ell).reshape(ell, ell)


@functools.lru_cache(maxsize=256)
def class_counts(field, ell, method="cyclotomic"):
    """N(g^i, g^j) with C = -1 for every pair of coset classes, as an ell x ell array.

    ``method="cyclotomic"`` counts exactly: points split into those with a
    zero coordinate (determined by whether A, B, -B/A are ell-th powers) and
    affine points with ``x y != 0``, which correspond ell^2-to-one with
    solutions of ``u + v = 1`` with ``u`` in the class of A and ``v`` in the
    class of B.  ``method="charsum"`` evaluates the Gauss-sum formula at the
    class representatives.  The returned array is read-only and cached.
    """
    check_order(field, ell)
    q = field.q
    cls = np.arange(ell)
    if method == "cyclotomic":
        T = _cyclotomic_counts(field, ell)
        i, j = np.meshgrid(cls, cls, indexing="ij")
        minus_one = field.log[field.neg(1)] % ell
        N = ell * ((i == 0).astype(np.int64) + (j == 0) + ((minus_one + j - i) % ell == 0))
        N = N + ell * ell * T
    elif method == "charsum":
        W, magnitude = _charsum_weights(field, ell)
        # conj(chi_j)(g^r) at the class representatives g^r
        X = np.exp(-2j * np.pi * np.outer(cls, cls) / ell)
        values = X.T @ W @ X
        N = np.array([[round_integral(v, magnitude) for v in row] for row in values]) + q + 1
    else:
        raise ValueError(f"unknown method {method!r}")
    N = np.asarray(N, dtype=np.int64)
    N.setflags(write=False)
    return N


def count(curve, method="charsum"):
    """Count points by the requested route; non-default C is rescaled to -1 first."""
    if method == "brute":
        return count_brute(curve)
    f = curve.field
    if not curve.smooth:
        raise DegenerateCurve("the fast paths only handle A, B, C nonzero; use method='brute'")
    minus_c_inv = f.neg(f.inv(curve.C))
    A, B = f.mul(curve.A, minus_c_inv), f.mul(curve.B, minus_c_inv)
    if method == "charsum":
        return a_charsum(CurveId(f, curve.ell, A, B))
    if method == "classes":
        N = class_counts(f, curve.ell)[coset_class(f, curve.ell, A), coset_class(f, curve.ell, B)]
        return _result(f, N, "classes")
    raise ValueError(f"unknown method {method!r}")


def hasse_weil_ok(ell, q, a):
    """|a| <= (ell-1)(ell-2) sqrt(q), decided in exact integer arithmetic."""
    d = (ell - 1) * (ell - 2)
    return a * a <= d * d * q
