"""Finite fields GF(p^n) with eager exponential/logarithm tables.

Elements are plain integers in ``range(q)``.  The integer ``x`` stands for the
polynomial ``c_0 + c_1 t + ... + c_{n-1} t^{n-1}`` (reduced modulo the field's
irreducible modulus) where ``x = c_0 + c_1 p + ... + c_{n-1} p^{n-1}``.  For
``n == 1`` this is just the residue itself.

Every arithmetic method accepts either Python integers or numpy integer arrays,
so whole-field sweeps can be written without explicit loops.
"""

import functools
import re

import numpy as np

from . import _poly
from .errors import DivisionByZero, NotPrime, TooLarge

DEFAULT_SIZE_LIMIT = 2**20


def is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def factorize(n):
    """Prime factorisation by trial division, as ``{prime: exponent}``."""
    factors = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def prime_power(q):
    """Return ``(p, n)`` with ``q == p**n``, or ``None`` if q is not a prime power."""
    if q < 2:
        return None
    f = factorize(q)
    if len(f) != 1:
        return None
    ((p, n),) = f.items()
    return p, n


def _digits(x, p, n):
    return [(x // p**i) % p for i in range(n)]


class FiniteField:
    """The field GF(p^n), built once and then treated as immutable.

    Attributes
    ----------
    p, n, q : int
        Characteristic, degree, order.
    modulus : tuple of int
        Monic irreducible polynomial of degree n, low-to-high coefficients.
    generator : int
        Encoded primitive element.
    exp : ndarray
        ``exp[m]`` is ``generator**m`` for ``0 <= m < q - 1``.
    log : ndarray
        Inverse of ``exp`` on nonzero elements; ``log[0] == -1``.
    """

    def __init__(self, p, n, modulus, generator):
        self.p = p
        self.n = n
        self.q = p**n
        self.modulus = tuple(modulus)
        self.generator = generator
        self._powers = np.array([p**i for i in range(n)], dtype=np.int64)
        self.exp = self._build_exp_table()
        self.log = np.full(self.q, -1, dtype=np.int64)
        self.log[self.exp] = np.arange(self.q - 1, dtype=np.int64)
        self._trace_basis = self._build_trace_basis()

    def __repr__(self):
        if self.n == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.n}, modulus={list(self.modulus)})"

    # -- encoding -------------------------------------------------------

    def coeffs(self, x):
        """Low-to-high coefficient tuple of the element ``x``."""
        return tuple(_digits(int(x), self.p, self.n))

    def element(self, value):
        """Encode a residue or a coefficient sequence as a field element."""
        if isinstance(value, (int, np.integer)):
            if self.n == 1:
                return int(value) % self.p
            if not 0 <= value < self.q:
                raise ValueError(f"{value} is not an encoded element of {self!r}")
            return int(value)
        coeffs = list(value)
        if len(coeffs) > self.n:
            raise ValueError(f"expected at most {self.n} coefficients, got {len(coeffs)}")
        return sum((int(c) % self.p) * self.p**i for i, c in enumerate(coeffs))

    def format(self, x):
        if self.n == 1:
            return str(int(x))
        return "[" + ",".join(str(c) for c in self.coeffs(x)) + "]"

    def parse(self, text):
        """Inverse of :meth:`format`; a bare integer is read as a prime-field residue."""
        text = text.strip()
        m = re.fullmatch(r"\[\s*(-?\d+(?:\s*,\s*-?\d+)*)\s*\]", text)
        if m:
            return self.element([int(c) for c in m.group(1).split(",")])
        if re.fullmatch(r"-?\d+", text):
            return int(text) % self.p
        raise ValueError(f"cannot parse field element {text!r}")

    def to_digits(self, xs):
        xs = np.asarray(xs, dtype=np.int64)
        return (xs[..., None] // self._powers) % self.p

    def from_digits(self, digits):
        return (np.asarray(digits, dtype=np.int64) * self._powers).sum(axis=-1)

    def _poly(self, x):
        return _poly.trim(_digits(int(x), self.p, self.n))

    # -- arithmetic -----------------------------------------------------

    def add(self, a, b):
        p = self.p
        if self.n == 1:
            return (a + b) % p
        if p == 2:
            return a ^ b
        r = 0
        for pw in self._powers.tolist():
            r = r + ((a // pw % p + b // pw % p) % p) * pw
        return r

    def neg(self, a):
        p = self.p
        if self.n == 1:
            return (-a) % p
        if p == 2:
            return a
        r = 0
        for pw in self._powers.tolist():
            r = r + ((-(a // pw % p)) % p) * pw
        return r

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if self.n == 1:
            return a * b % self.p
        if np.ndim(a) == 0 and np.ndim(b) == 0:
            if a == 0 or b == 0:
                return 0
            return int(self.exp[(self.log[a] + self.log[b]) % (self.q - 1)])
        a, b = np.broadcast_arrays(np.asarray(a), np.asarray(b))
        out = self.exp[(self.log[a] + self.log[b]) % (self.q - 1)]
        return np.where((a == 0) | (b == 0), 0, out)

    def inv(self, a):
        if np.ndim(a) == 0:
            if a == 0:
                raise DivisionByZero("inverse of zero")
            return int(self.exp[(-self.log[a]) % (self.q - 1)])
        a = np.asarray(a)
        if np.any(a == 0):
            raise DivisionByZero("inverse of zero")
        return self.exp[(-self.log[a]) % (self.q - 1)]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e):
        if np.ndim(a) == 0:
            if a == 0:
                if e < 0:
                    raise DivisionByZero("zero to a negative power")
                return 1 if e == 0 else 0
            return int(self.exp[(int(self.log[a]) * e) % (self.q - 1)])
        a = np.asarray(a)
        if e < 0 and np.any(a == 0):
            raise DivisionByZero("zero to a negative power")
        out = self.exp[(self.log[a] * (e % (self.q - 1))) % (self.q - 1)]
        if e == 0:
            return np.ones_like(a)
        return np.where(a == 0, 0, out)

    def dlog(self, x):
        """Exponent m in ``[0, q-2]`` with ``generator**m == x``."""
        if np.ndim(x) == 0:
            if x == 0:
                raise DivisionByZero("discrete log of zero")
            return int(self.log[x])
        x = np.asarray(x)
        if np.any(x == 0):
            raise DivisionByZero("discrete log of zero")
        return self.log[x]

    def trace(self, x):
        """Absolute trace down to GF(p), vectorised."""
        if self.n == 1:
            return x
        return (self.to_digits(x) @ self._trace_basis) % self.p

    # -- construction helpers -------------------------------------------

    def _mul_matrix(self, h):
        """Matrix of multiplication by the polynomial h, acting on digit row vectors."""
        p, f = self.p, list(self.modulus)
        rows = []
        for i in range(self.n):
            prod = _poly.mulmod(h, [0] * i + [1], f, p)
            rows.append(prod + [0] * (self.n - len(prod)))
        return np.array(rows, dtype=np.int64)

    def _build_exp_table(self):
        p, q, n = self.p, self.q, self.n
        size = q - 1
        g = self._poly(self.generator)
        f = list(self.modulus)
        exp = np.empty(size, dtype=np.int64)
        exp[0] = 1
        filled = 1
        if n == 1:
            while filled < size:
                take = min(filled, size - filled)
                exp[filled:filled + take] = exp[:take] * pow(self.generator, filled, p) % p
                filled += take
            return exp
        digits = np.zeros((size, n), dtype=np.int64)
        digits[0, 0] = 1
        while filled < size:
            take = min(filled, size - filled)
            step = self._mul_matrix(_poly.powmod(g, filled, f, p))
            digits[filled:filled + take] = (digits[:take] @ step) % p
            filled += take
        return self.from_digits(digits)

    def _build_trace_basis(self):
        p, n, f = self.p, self.n, list(self.modulus)
        basis = []
        for i in range(n):
            xi = _poly.mod([0] * i + [1], f, p)
            total, conj = [], xi
            for _ in range(n):
                total = _poly.add(total, conj, p)
                conj = _poly.powmod(conj, p, f, p)
            # the trace lies in GF(p), so only the constant term can be nonzero
            basis.append(total[0] if total else 0)
        return np.array(basis, dtype=np.int64)


def _first_irreducible(p, n):
    if n == 1:
        return (0, 1)
    for t in range(p**n):
        f = _digits(t, p, n) + [1]
        if _poly.is_irreducible(f, p):
            return tuple(f)
    raise AssertionError(f"no irreducible polynomial of degree {n} over GF({p})")


def _smallest_generator(p, n, modulus):
    q = p**n
    order = q - 1
    cofactors = [order // r for r in factorize(order)]
    f = list(modulus)
    for cand in range(1, q):
        g = _poly.trim(_digits(cand, p, n))
        if all(_poly.powmod(g, c, f, p) != [1] for c in cofactors):
            return cand
    raise AssertionError("multiplicative group has no generator")


@functools.lru_cache(maxsize=128)
def make_field(p, n=1, limit=DEFAULT_SIZE_LIMIT):
    """Construct GF(p^n) deterministically.

    The modulus is the first monic irreducible polynomial when the lower
    coefficients are read as the integer ``c_0 + c_1 p + ...`` and counted
    upward; the generator is the smallest encoded element of order ``q - 1``.
    Calls are cached, so equal arguments return the same object.
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if n < 1:
        raise ValueError("extension degree must be positive")
    if p**n > limit:
        raise TooLarge(f"{p}^{n} exceeds the field size limit {limit}")
    modulus = _first_irreducible(p, n)
    return FiniteField(p, n, modulus, _smallest_generator(p, n, modulus))


def field_of_order(q, limit=DEFAULT_SIZE_LIMIT):
    pn = prime_power(q)
    if pn is None:
        raise NotPrime(f"{q} is not a prime power")
    return make_field(*pn, limit=limit)


def arith(field, op, *operands):
    """Dispatch ``op`` in {add, sub, mul, inv, pow} to the field's methods."""
    ops = {"add": field.add, "sub": field.sub, "mul": field.mul, "inv": field.inv, "pow": field.pow}
    try:
        fn = ops[op]
    except KeyError:
        raise ValueError(f"unknown operation {op!r}") from None
    return fn(*operands)
