"""Multiplicative characters of order dividing ell, Gauss sums and Jacobi sums.

``Character(field, ell, j)`` is the character sending the generator ``g`` to
``exp(2 pi i j / ell)``; ``j = 0`` is the trivial character.  Every character is
extended by ``chi(0) = 0``, the trivial one included.

The additive character is ``psi(x) = exp(2 pi i Tr(x) / p)`` with ``Tr`` the
absolute trace, which reduces to ``exp(2 pi i x / p)`` on prime fields.
"""

import cmath
import functools
import math
from dataclasses import dataclass

import numpy as np

from .errors import FieldMismatch, OrderMismatch, RoundingBudgetExceeded
from .field import FiniteField, is_prime

REL_INT_TOL = 1e-6
ABS_INT_TOL = 1e-9


def check_order(field, ell):
    if not is_prime(ell):
        raise OrderMismatch(f"{ell} is not prime")
    if (field.q - 1) % ell:
        raise OrderMismatch(f"{ell} does not divide q - 1 = {field.q - 1}")


@dataclass(frozen=True)
class Character:
    field: FiniteField
    ell: int
    j: int

    @property
    def is_trivial(self):
        return self.j == 0

    def __mul__(self, other):
        if other.field is not self.field or other.ell != self.ell:
            raise FieldMismatch("characters live on different fields or orders")
        return Character(self.field, self.ell, (self.j + other.j) % self.ell)

    def conj(self):
        return Character(self.field, self.ell, (-self.j) % self.ell)

    def __call__(self, x):
        return eval_char(self, x)


def character(field, ell, j):
    check_order(field, ell)
    if not 0 <= j < ell:
        raise ValueError(f"character index {j} outside [0, {ell - 1}]")
    return Character(field, ell, j)


def all_characters(field, ell):
    check_order(field, ell)
    return [Character(field, ell, j) for j in range(ell)]


def eval_char(chi, x):
    """chi(x), vectorised over numpy arrays of encoded elements."""
    f = chi.field
    if np.ndim(x) == 0:
        if x == 0:
            return 0j
        m = int(f.log[x]) * chi.j % chi.ell
        return cmath.exp(2j * math.pi * m / chi.ell)
    x = np.asarray(x)
    m = (f.log[x] * chi.j) % chi.ell
    return np.where(x == 0, 0, np.exp(2j * np.pi * m / chi.ell))


@functools.lru_cache(maxsize=64)
def character_table(field, ell):
    """Array ``T[j, x] = chi_j(x)`` over every field element."""
    check_order(field, ell)
    x = np.arange(field.q)
    m = np.outer(np.arange(ell), field.log[x]) % ell
    table = np.exp(2j * np.pi * m / ell)
    table[:, 0] = 0
    table.setflags(write=False)
    return table


@functools.lru_cache(maxsize=64)
def additive_character(field):
    """``psi(x)`` for every encoded element x."""
    t = field.trace(np.arange(field.q))
    values = np.exp(2j * np.pi * t / field.p)
    values.setflags(write=False)
    return values


def _fsum_complex(values):
    values = np.asarray(values)
    return complex(math.fsum(values.real), math.fsum(values.imag))


@functools.lru_cache(maxsize=64)
def gauss_sums(field, ell):
    """All ell Gauss sums ``g(chi_j)`` as a complex array indexed by j.

    psi is first summed over each coset of the ell-th powers (the Gaussian
    periods), walking the field in ascending discrete-log order with
    compensated summation; each Gauss sum is then a short combination of
    the periods.
    """
    check_order(field, ell)
    psi_by_log = additive_character(field)[field.exp]
    periods = np.array([_fsum_complex(psi_by_log[r::ell]) for r in range(ell)])
    roots = np.exp(2j * np.pi * np.outer(np.arange(ell), np.arange(ell)) / ell)
    sums = np.array([_fsum_complex(row * periods) for row in roots])
    sums.setflags(write=False)
    return sums


def gauss_sum(chi):
    return complex(gauss_sums(chi.field, chi.ell)[chi.j])


def gauss_sum_direct(chi):
    """Straight summation of chi(a) psi(a) over the field, ascending dlog order."""
    f = chi.field
    terms = eval_char(chi, f.exp) * additive_character(f)[f.exp]
    return _fsum_complex(terms)


def _same_field(chis):
    if len(chis) < 2:
        raise ValueError("Jacobi sums need at least two characters")
    f = chis[0].field
    for c in chis[1:]:
        if c.field is not f:
            raise FieldMismatch("characters live on different fields")
    return f


def _additive_convolution(field, chis):
    """(chi_1 * ... * chi_k)(t) for every t, convolving over the additive group."""
    shape = (field.p,) * field.n
    spectrum = np.ones(shape, dtype=complex)
    x = np.arange(field.q)
    for chi in chis:
        spectrum *= np.fft.fftn(eval_char(chi, x).reshape(shape))
    return np.fft.ifftn(spectrum).reshape(field.q)


def jacobi_J(chis):
    """Sum over alpha_1 + ... + alpha_k = 1 of chi_1(alpha_1) ... chi_k(alpha_k)."""
    f = _same_field(chis)
    return complex(_additive_convolution(f, chis)[1])


def jacobi_J0(chis):
    """Sum over alpha_1 + ... + alpha_k = 0 of chi_1(alpha_1) ... chi_k(alpha_k)."""
    f = _same_field(chis)
    return complex(_additive_convolution(f, chis)[0])


def int_tolerance(magnitude):
    return REL_INT_TOL * magnitude + ABS_INT_TOL


def round_integral(value, magnitude=0.0):
    """Round a quantity known to be an integer, enforcing the rounding budget.

    ``magnitude`` is the scale of the floating computation behind ``value``
    (typically the sum of absolute values of its terms).
    """
    value = complex(value)
    nearest = round(value.real)
    err = abs(value - nearest)
    budget = int_tolerance(max(magnitude, abs(value)))
    if err > budget:
        raise RoundingBudgetExceeded(f"{value} is {err:.3g} from an integer (budget {budget:.3g})")
    return int(nearest)
