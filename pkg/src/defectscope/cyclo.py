"""Exact arithmetic in cyclotomic fields and reduction modulo a prime above p.

A :class:`CycloNum` lives in Q(z) with z a primitive m-th root of unity and
is stored over the power basis 1, z, ..., z^(phi(m)-1) as integer
numerators over one positive common denominator.  The power basis is an
integral basis of Z[z], so a value is an algebraic integer exactly when
its denominator is 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

from .errors import DivisionByZero, NotIntegral
from .gfp import FqElem, ResidueField, cyclotomic_factors, cyclotomic_poly, multiplicative_order
from .perm import p_part


@lru_cache(maxsize=None)
def _phi(m: int):
    poly = cyclotomic_poly(m)
    deg = len(poly) - 1
    sparse = tuple((j, c) for j, c in enumerate(poly[:-1]) if c)
    return deg, sparse


def _reduce(m: int, coeffs: list) -> list:
    """Reduce an integer polynomial modulo Phi_m (in place), return the low part."""
    deg, sparse = _phi(m)
    for i in range(len(coeffs) - 1, deg - 1, -1):
        c = coeffs[i]
        if c:
            base = i - deg
            for j, pc in sparse:
                coeffs[base + j] -= c * pc
    if len(coeffs) < deg:
        coeffs = coeffs + [0] * (deg - len(coeffs))
    return coeffs[:deg]


class CycloNum:
    """An element of the m-th cyclotomic field."""

    __slots__ = ("m", "num", "den")

    def __init__(self, m: int, coeffs=(), den: int = 1):
        deg = _phi(m)[0]
        fr = [Fraction(c) for c in coeffs]
        if len(fr) > deg:
            d0 = lcm(1, *(f.denominator for f in fr))
            ints = _reduce(m, [int(f * d0) for f in fr])
            fr = [Fraction(c, d0) for c in ints]
        fr += [Fraction(0)] * (deg - len(fr))
        common = lcm(1, *(f.denominator for f in fr))
        self._set(m, [int(f * common) for f in fr], common * den)

    def _set(self, m, num, den):
        if den < 0:
            num, den = [-c for c in num], -den
        g = gcd(den, *num)
        if g > 1:
            num = [c // g for c in num]
            den //= g
        self.m = m
        self.num = tuple(num)
        self.den = den

    @classmethod
    def _make(cls, m, num, den=1):
        obj = cls.__new__(cls)
        obj._set(m, num, den)
        return obj

    # --- constructors --------------------------------------------------------

    @classmethod
    def from_int(cls, n, m: int = 1) -> "CycloNum":
        n = Fraction(n)
        deg = _phi(m)[0]
        return cls._make(m, [n.numerator] + [0] * (deg - 1), n.denominator)

    @classmethod
    def root_of_unity(cls, m: int, k: int = 1) -> "CycloNum":
        return cls.from_exponents(m, {k % m: 1})

    @classmethod
    def from_exponents(cls, m: int, terms: dict, den: int = 1) -> "CycloNum":
        """The value ``sum(c * z**k for k, c in terms.items()) / den``."""
        deg = _phi(m)[0]
        top = max([k % m for k in terms] + [deg - 1])
        coeffs = [0] * (top + 1)
        for k, c in terms.items():
            coeffs[k % m] += c
        return cls._make(m, _reduce(m, coeffs), den)

    # --- basic queries -------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.num)

    def coeffs(self) -> list[Fraction]:
        return [Fraction(c, self.den) for c in self.num]

    def is_zero(self) -> bool:
        return not any(self.num)

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return Fraction(self.num[0], self.den)

    def is_integral(self) -> bool:
        return self.den == 1

    def sort_key(self) -> tuple:
        if self.den == 1:
            return self.num
        return tuple(Fraction(c, self.den) for c in self.num)

    # --- field arithmetic -----------------------------------------------------

    def lift(self, m2: int) -> "CycloNum":
        """The same value inside the m2-th cyclotomic field (m must divide m2)."""
        if m2 == self.m:
            return self
        if m2 % self.m:
            raise ValueError(f"cannot embed Q(z_{self.m}) into Q(z_{m2})")
        step = m2 // self.m
        return CycloNum.from_exponents(m2, {i * step: c for i, c in enumerate(self.num) if c}, self.den)

    def _align(self, other):
        if isinstance(other, CycloNum):
            if other.m == self.m:
                return self, other
            big = lcm(self.m, other.m)
            return self.lift(big), other.lift(big)
        if isinstance(other, (int, Fraction)):
            return self, CycloNum.from_int(other, self.m)
        return None, None

    def __add__(self, other):
        a, b = self._align(other)
        if a is None:
            return NotImplemented
        den = lcm(a.den, b.den)
        sa, sb = den // a.den, den // b.den
        return CycloNum._make(a.m, [x * sa + y * sb for x, y in zip(a.num, b.num)], den)

    __radd__ = __add__

    def __neg__(self):
        return CycloNum._make(self.m, [-c for c in self.num], self.den)

    def __sub__(self, other):
        a, b = self._align(other)
        if a is None:
            return NotImplemented
        return a + (-b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        a, b = self._align(other)
        if a is None:
            return NotImplemented
        if b.is_rational():
            c = b.num[0]
            return CycloNum._make(a.m, [x * c for x in a.num], a.den * b.den)
        if a.is_rational():
            c = a.num[0]
            return CycloNum._make(a.m, [y * c for y in b.num], a.den * b.den)
        an = [(i, x) for i, x in enumerate(a.num) if x]
        bn = [(j, y) for j, y in enumerate(b.num) if y]
        out = [0] * (2 * len(a.num) - 1)
        for i, x in an:
            for j, y in bn:
                out[i + j] += x * y
        return CycloNum._make(a.m, _reduce(a.m, out), a.den * b.den)

    __rmul__ = __mul__

    def inverse(self) -> "CycloNum":
        if self.is_zero():
            raise DivisionByZero("division by zero in a cyclotomic field")
        if self.is_rational():
            return CycloNum.from_int(1 / self.rational(), self.m)
        return CycloNum(self.m, _poly_inverse(self.coeffs(), list(cyclotomic_poly(self.m))))

    def __truediv__(self, other):
        a, b = self._align(other)
        if a is None:
            return NotImplemented
        if b.is_zero():
            raise DivisionByZero("division by zero in a cyclotomic field")
        if b.is_rational():
            r = b.rational()
            return CycloNum._make(a.m, [x * r.denominator for x in a.num], a.den * r.numerator)
        return a * b.inverse()

    def __rtruediv__(self, other):
        return CycloNum.from_int(other, self.m) / self

    def __pow__(self, e: int) -> "CycloNum":
        base = self if e >= 0 else self.inverse()
        e = abs(e)
        out = CycloNum.from_int(1, self.m)
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other):
        a, b = self._align(other)
        if a is None:
            return NotImplemented
        return a.num == b.num and a.den == b.den

    def __hash__(self):
        if self.is_rational():
            return hash(Fraction(self.num[0], self.den))
        return hash((self.m, self.num, self.den))

    def galois(self, k: int) -> "CycloNum":
        """Image under the automorphism z -> z**k (k prime to m)."""
        if self.is_rational():
            return self
        return _galois(self, k % self.m)

    def conj(self) -> "CycloNum":
        return self.galois(-1)

    def to_complex(self) -> complex:
        import cmath
        z = cmath.exp(2j * cmath.pi / self.m)
        return sum(c * z**i for i, c in enumerate(self.num)) / self.den

    # --- serialization ---------------------------------------------------------

    def to_json(self) -> dict:
        out = []
        for c in self.num:
            g = gcd(c, self.den)
            out.append(f"{c // g}/{self.den // g}")
        return {"m": self.m, "coeffs": out}

    @classmethod
    def from_json(cls, data: dict) -> "CycloNum":
        m = int(data["m"])
        return cls(m, [Fraction(s) for s in data["coeffs"]])

    def __repr__(self):
        if self.is_rational():
            return str(self.rational())
        terms = []
        for i, c in enumerate(self.coeffs()):
            if c:
                terms.append(f"{c}" if i == 0 else f"{c}*z{self.m}^{i}")
        return " + ".join(terms)


@lru_cache(maxsize=65536)
def _galois(a: CycloNum, k: int) -> CycloNum:
    return CycloNum.from_exponents(a.m, {(i * k) % a.m: c for i, c in enumerate(a.num) if c}, a.den)


def _poly_inverse(a: list, mod: list) -> list:
    """Inverse of a modulo mod in Q[x] by the extended Euclidean algorithm."""
    def norm(p):
        p = list(p)
        while p and p[-1] == 0:
            p.pop()
        return p

    def divmod_q(u, v):
        u = list(u)
        q = [Fraction(0)] * max(len(u) - len(v) + 1, 1)
        while len(u) >= len(v) and u:
            c = Fraction(u[-1]) / v[-1]
            s = len(u) - len(v)
            q[s] = c
            for i, y in enumerate(v):
                u[s + i] -= c * y
            u = norm(u)
        return norm(q), u

    def sub(u, v):
        n = max(len(u), len(v))
        return norm([(u[i] if i < len(u) else 0) - (v[i] if i < len(v) else 0) for i in range(n)])

    def mul(u, v):
        if not u or not v:
            return []
        out = [Fraction(0)] * (len(u) + len(v) - 1)
        for i, x in enumerate(u):
            for j, y in enumerate(v):
                out[i + j] += x * y
        return out

    r0, r1 = norm([Fraction(c) for c in mod]), norm([Fraction(c) for c in a])
    s0, s1 = [], [Fraction(1)]
    while len(r1) > 1:
        q, r = divmod_q(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1))
    c = r1[0]
    return [x / c for x in s1]


def cyclo_dot(xs, ys, weights=None) -> CycloNum:
    """``sum(w * x * y)`` with a single reduction at the end."""
    xs = list(xs)
    ys = list(ys)
    if weights is None:
        weights = [1] * len(xs)
    m = lcm(1, *(v.m for v in xs), *(v.m for v in ys))
    xs = [v.lift(m) for v in xs]
    ys = [v.lift(m) for v in ys]
    deg = _phi(m)[0]
    den = lcm(1, *(x.den * y.den for x, y in zip(xs, ys)))
    acc = [0] * (2 * deg - 1)
    for x, y, w in zip(xs, ys, weights):
        scale = w * (den // (x.den * y.den))
        if not scale:
            continue
        yn = [(j, c) for j, c in enumerate(y.num) if c]
        for i, a in enumerate(x.num):
            if a:
                a *= scale
                for j, c in yn:
                    acc[i + j] += a * c
    return CycloNum._make(m, _reduce(m, acc), den)


# --- reduction modulo a prime ideal ---------------------------------------------

@dataclass(frozen=True, eq=False)
class PrimeIdealReduction:
    """A ring map from Z[z_m] onto the residue field F_p[x]/(f).

    With m = p^a * m', z_{p^a} goes to 1 and z_{m'} to the class of x, so
    z_m goes to x**s where s inverts p^a modulo m'.
    """

    p: int
    m: int
    a: int
    m_prime: int
    f: tuple
    field: ResidueField
    zeta_image: FqElem
    _powers: tuple

    @property
    def residue_degree(self) -> int:
        return self.field.degree

    def reduce(self, value: CycloNum) -> FqElem:
        return reduce(value, self)


@lru_cache(maxsize=None)
def build_reduction(p: int, m: int) -> PrimeIdealReduction:
    pa = p_part(m, p)
    a = 0
    while p**a < pa:
        a += 1
    mp = m // pa
    f = cyclotomic_factors(mp, p)[0]
    field = ResidueField(p, f)
    assert field.degree == multiplicative_order(p, mp)
    s = pow(pa, -1, mp) if mp > 1 else 0
    zeta = field.generator() ** s if mp > 1 else field.one()
    deg = _phi(m)[0]
    powers = []
    cur = field.one()
    for _ in range(deg):
        powers.append(cur.padded())
        cur = cur * zeta
    return PrimeIdealReduction(p, m, a, mp, f, field, zeta, tuple(powers))


def reduce(value: CycloNum, R: PrimeIdealReduction) -> FqElem:
    """Image of an algebraic integer in the residue field of ``R``."""
    if value.den != 1:
        raise NotIntegral(f"{value!r} is not an algebraic integer")
    if value.m != R.m:
        value = value.lift(R.m)
    p = R.p
    if value.is_rational():
        return R.field(value.num[0])
    acc = [0] * R.field.degree
    for c, pw in zip(value.num, R._powers):
        if c:
            for t, v in enumerate(pw):
                acc[t] += c * v
    return FqElem(R.field, tuple(_trim(x % p for x in acc)))


def _trim(seq):
    out = list(seq)
    while out and out[-1] == 0:
        out.pop()
    return out


def is_algebraic_integer(value: CycloNum) -> bool:
    return value.is_integral()


def cyclo_arith(a: CycloNum, b: CycloNum, op: str) -> CycloNum:
    """Dispatch one of ``add``, ``sub``, ``mul``, ``div``."""
    return {"add": a.__add__, "sub": a.__sub__, "mul": a.__mul__, "div": a.__truediv__}[op](b)
