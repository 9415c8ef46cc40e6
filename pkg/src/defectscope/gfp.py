"""Polynomials over a prime field and small extension fields.

Polynomials are tuples of coefficients, lowest degree first, with no
trailing zeros (the zero polynomial is ``()``).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import gcd

from .perm import prime_divisors


def trim(a) -> tuple:
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return tuple(a)


def padd(a, b, p):
    n = max(len(a), len(b))
    return trim(((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % p for i in range(n))


def psub(a, b, p):
    n = max(len(a), len(b))
    return trim(((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n))


def pmul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim(c % p for c in out)


def pdivmod(a, b, p):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = [c % p for c in a]
    db = len(b) - 1
    inv = pow(b[-1], -1, p)
    q = [0] * max(len(a) - db, 0)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] * inv % p
        if c:
            q[i - db] = c
            for j, y in enumerate(b):
                a[i - db + j] = (a[i - db + j] - c * y) % p
    return trim(q), trim(a[:db])


def pmod(a, b, p):
    return pdivmod(a, b, p)[1]


def monic(a, p):
    if not a:
        return a
    inv = pow(a[-1], -1, p)
    return tuple(c * inv % p for c in a)


def pgcd(a, b, p):
    a, b = trim(a), trim(b)
    while b:
        a, b = b, pmod(a, b, p)
    return monic(a, p)


def ppowmod(base, e, mod, p):
    result = (1,)
    base = pmod(base, mod, p)
    while e:
        if e & 1:
            result = pmod(pmul(result, base, p), mod, p)
        base = pmod(pmul(base, base, p), mod, p)
        e >>= 1
    return result


def is_irreducible(f, p) -> bool:
    """Rabin's test for a monic polynomial over F_p."""
    n = len(f) - 1
    if n < 1:
        return False
    x = (0, 1)
    if ppowmod(x, p**n, f, p) != pmod(x, f, p):
        return False
    for r in prime_divisors(n):
        h = psub(ppowmod(x, p ** (n // r), f, p), x, p)
        if len(pgcd(h, f, p)) != 1:
            return False
    return True


def multiplicative_order(a: int, n: int) -> int:
    if n == 1:
        return 1
    k, x = 1, a % n
    while x != 1:
        x = x * a % n
        k += 1
    return k


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Integer coefficients of the n-th cyclotomic polynomial, lowest degree first."""
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num = _exact_div_int(num, cyclotomic_poly(d))
    return tuple(num)


def _exact_div_int(a, b):
    # b is monic with integer coefficients
    a = list(a)
    db = len(b) - 1
    q = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        q[i - db] = c
        if c:
            for j, y in enumerate(b):
                a[i - db + j] -= c * y
    assert not any(a[:db]), "inexact cyclotomic division"
    return q


def lex_key(f) -> tuple:
    """Sort key comparing polynomials from the leading coefficient down."""
    return (len(f), tuple(reversed(f)))


def least_irreducible(degree: int, p: int) -> tuple:
    """The lexicographically least monic irreducible polynomial of given degree."""
    for tail in product(range(p), repeat=degree):
        f = tuple(reversed(tail)) + (1,)
        if is_irreducible(f, p):
            return f
    raise AssertionError("no irreducible polynomial found")


@dataclass(frozen=True)
class ResidueField:
    """The field F_p[x]/(modulus) with ``p**degree`` elements."""

    p: int
    modulus: tuple

    @property
    def degree(self) -> int:
        return len(self.modulus) - 1

    @property
    def size(self) -> int:
        return self.p ** self.degree

    def __call__(self, value) -> "FqElem":
        if isinstance(value, int):
            return FqElem(self, trim((value % self.p,)))
        return FqElem(self, pmod(tuple(value), self.modulus, self.p))

    def zero(self) -> "FqElem":
        return FqElem(self, ())

    def one(self) -> "FqElem":
        return self(1)

    def generator(self) -> "FqElem":
        """The class of x."""
        return self((0, 1))

    def elements(self):
        for coeffs in product(range(self.p), repeat=self.degree):
            yield FqElem(self, trim(coeffs))


@dataclass(frozen=True)
class FqElem:
    field: ResidueField
    coeffs: tuple

    def _wrap(self, coeffs):
        return FqElem(self.field, coeffs)

    def _coerce(self, other):
        if isinstance(other, FqElem):
            return other
        return self.field(other)

    def __add__(self, other):
        other = self._coerce(other)
        return self._wrap(padd(self.coeffs, other.coeffs, self.field.p))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        return self._wrap(psub(self.coeffs, other.coeffs, self.field.p))

    def __neg__(self):
        return self._wrap(trim((-c) % self.field.p for c in self.coeffs))

    def __mul__(self, other):
        other = self._coerce(other)
        f = self.field
        return self._wrap(pmod(pmul(self.coeffs, other.coeffs, f.p), f.modulus, f.p))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        f = self.field
        if e < 0:
            return self.inverse() ** (-e)
        return self._wrap(ppowmod(self.coeffs, e, f.modulus, f.p))

    def inverse(self):
        if not self.coeffs:
            raise ZeroDivisionError("inverse of zero in a finite field")
        return self ** (self.field.size - 2)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def padded(self) -> tuple:
        d = self.field.degree
        return self.coeffs + (0,) * (d - len(self.coeffs))

    def __repr__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if i == 0 else f"{c}*x" if i == 1 else f"{c}*x^{i}")
        return " + ".join(reversed(terms))


def _poly_over_ext(roots, F: ResidueField) -> tuple:
    """Coefficients in F_p of prod (x - r); the roots form a Frobenius orbit."""
    acc = [F.one()]
    for r in roots:
        nxt = [F.zero()] * (len(acc) + 1)
        for i, c in enumerate(acc):
            nxt[i + 1] = nxt[i + 1] + c
            nxt[i] = nxt[i] - c * r
        acc = nxt
    out = []
    for c in acc:
        assert len(c.coeffs) <= 1, "minimal polynomial left the prime field"
        out.append(c.coeffs[0] if c.coeffs else 0)
    return tuple(out)


@lru_cache(maxsize=None)
def cyclotomic_factors(n: int, p: int) -> tuple[tuple, ...]:
    """Monic irreducible factors of the n-th cyclotomic polynomial mod p (p not dividing n).

    Each factor is the minimal polynomial of a Frobenius orbit of primitive
    n-th roots of unity in F_{p^f}, f the order of p mod n.  Sorted by
    :func:`lex_key`.
    """
    if n % p == 0:
        raise ValueError(f"p={p} divides n={n}")
    f = multiplicative_order(p, n)
    F = ResidueField(p, least_irreducible(f, p) if f > 1 else (0, 1))
    total = p**f - 1
    if n == 1:
        gamma = F.one()
    else:
        gamma = None
        for beta in F.elements():
            if beta.is_zero():
                continue
            cand = beta ** (total // n)
            if all((cand ** (n // r)).coeffs != (1,) for r in prime_divisors(n)):
                gamma = cand
                break
    assert gamma is not None
    seen = set()
    factors = []
    for j in range(1, n + 1):
        if j in seen or gcd(j, n) != 1:
            continue
        orbit = []
        k = j % n
        while k not in seen:
            seen.add(k)
            orbit.append(k)
            k = k * p % n
        factors.append(_poly_over_ext([gamma ** k for k in orbit], F))
    return tuple(sorted(factors, key=lex_key))

