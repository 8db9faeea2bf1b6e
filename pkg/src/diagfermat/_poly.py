"""Dense polynomials over GF(p) as coefficient lists, lowest degree first.

The zero polynomial is the empty list; every other list has a nonzero last entry.
Only what field construction needs is here.
"""


def trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def add(a, b, p):
    n = max(len(a), len(b))
    r = [((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % p for i in range(n)]
    return trim(r)


def sub(a, b, p):
    n = max(len(a), len(b))
    r = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)]
    return trim(r)


def mul(a, b, p):
    if not a or not b:
        return []
    r = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                r[i + j] += x * y
    return trim(c % p for c in r)


def divmod_(a, b, p):
    a = trim(a)
    b = trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    inv_lead = pow(b[-1], -1, p)
    q = [0] * max(len(a) - len(b) + 1, 0)
    r = list(a)
    while len(r) >= len(b):
        c = r[-1] * inv_lead % p
        shift = len(r) - len(b)
        q[shift] = c
        for i, y in enumerate(b):
            r[shift + i] = (r[shift + i] - c * y) % p
        r = trim(r)
    return trim(q), r


def mod(a, b, p):
    return divmod_(a, b, p)[1]


def mulmod(a, b, f, p):
    return mod(mul(a, b, p), f, p)


def powmod(a, e, f, p):
    result = [1]
    base = mod(a, f, p)
    while e:
        if e & 1:
            result = mulmod(result, base, f, p)
        base = mulmod(base, base, f, p)
        e >>= 1
    return mod(result, f, p)


def gcd(a, b, p):
    a, b = trim(a), trim(b)
    while b:
        a, b = b, mod(a, b, p)
    if a:
        inv_lead = pow(a[-1], -1, p)
        a = [c * inv_lead % p for c in a]
    return a


def is_irreducible(f, p):
    """True iff f has no factor of degree <= deg(f)/2, tested via gcd(x^(p^i) - x, f)."""
    f = trim(f)
    n = len(f) - 1
    if n < 1:
        return False
    x = [0, 1]
    h = x
    for _ in range(n // 2):
        h = powmod(h, p, f, p)
        if gcd(sub(h, x, p), f, p) != [1]:
            return False
    return True
