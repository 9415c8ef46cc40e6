"""Symmetric-group combinatorics: partitions, rim hooks, cores and blocks.

Partitions index both the irreducible characters and the classes of S_n.
Rim hooks are handled on beta-sets (first-column hook lengths), where
removing an h-hook is moving one bead down h places.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial, gcd, lcm
from typing import Iterable

from .errors import SizeMismatch
from .perm import Permutation, PermGroup


class Partition(tuple):
    """A weakly decreasing tuple of positive integers."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(x) for x in parts)
        if any(x <= 0 for x in parts):
            parts = tuple(x for x in parts if x != 0)
            if any(x < 0 for x in parts):
                raise ValueError(f"negative part in {parts!r}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts must be weakly decreasing: {parts!r}")
        return tuple.__new__(cls, parts)

    @property
    def n(self) -> int:
        return sum(self)

    def conjugate(self) -> "Partition":
        if not self:
            return self
        return Partition(sum(1 for x in self if x > j) for j in range(self[0]))

    def __repr__(self):
        return "(" + ",".join(map(str, self)) + ")"


def partitions(n: int) -> list[Partition]:
    """All partitions of n in lexicographically descending order."""
    out = []

    def rec(remaining, cap, prefix):
        if remaining == 0:
            out.append(Partition(prefix))
            return
        for x in range(min(remaining, cap), 0, -1):
            rec(remaining - x, x, prefix + [x])

    rec(n, n, [])
    return out


def beta_set(lam, beads: int | None = None) -> list[int]:
    r = len(lam) if beads is None else beads
    parts = list(lam) + [0] * (r - len(lam))
    return [parts[i] + r - 1 - i for i in range(r)]


def from_beta(beta: Iterable[int]) -> Partition:
    b = sorted(beta, reverse=True)
    r = len(b)
    return Partition(x - (r - 1 - i) for i, x in enumerate(b))


@lru_cache(maxsize=None)
def _mn(lam: tuple, mu: tuple) -> int:
    if not mu:
        return 1
    h, rest = mu[0], mu[1:]
    beta = beta_set(lam)
    present = set(beta)
    total = 0
    for b in beta:
        t = b - h
        if t < 0 or t in present:
            continue
        between = sum(1 for x in beta if t < x < b)
        nb = [t if x == b else x for x in beta]
        term = _mn(tuple(from_beta(nb)), rest)
        total += -term if between % 2 else term
    return total


def mn_value(lam, mu) -> int:
    """Character chi^lam on the class of cycle type mu, by rim-hook removal."""
    lam, mu = Partition(lam), Partition(mu)
    if lam.n != mu.n:
        raise SizeMismatch(f"|{lam}| = {lam.n} but |{mu}| = {mu.n}")
    return _mn(tuple(lam), tuple(mu))


def hook_degree(lam) -> int:
    """chi^lam(1) from the hook length formula."""
    lam = Partition(lam)
    conj = lam.conjugate()
    prod = 1
    for i, row in enumerate(lam):
        for j in range(row):
            prod *= (row - j - 1) + (conj[j] - i - 1) + 1
    return factorial(lam.n) // prod


def p_core(lam, p: int) -> Partition:
    """Remove rim p-hooks until none is left (slide every bead up its runner)."""
    lam = Partition(lam)
    beta = beta_set(lam)
    counts = [0] * p
    for b in beta:
        counts[b % p] += 1
    core_beta = [rho + p * t for rho in range(p) for t in range(counts[rho])]
    return from_beta(core_beta)


def p_weight(lam, p: int) -> int:
    lam = Partition(lam)
    return (lam.n - p_core(lam, p).n) // p


def count_multipartitions(w: int, parts: int) -> int:
    """Number of ``parts``-tuples of partitions with total size w."""
    pn = [len(partitions(i)) for i in range(w + 1)]
    ways = [1] + [0] * w
    for _ in range(parts):
        new = [0] * (w + 1)
        for s in range(w + 1):
            if ways[s]:
                for t in range(w - s + 1):
                    new[s + t] += ways[s] * pn[t]
        ways = new
    return ways[w]


@dataclass(frozen=True)
class NakayamaBlock:
    core: Partition
    weight: int
    partitions: tuple

    @property
    def size(self) -> int:
        return len(self.partitions)


def nakayama_blocks(n: int, p: int) -> list[NakayamaBlock]:
    """p-blocks of S_n as sets of partitions sharing a p-core.

    The block of the trivial character (n) comes first, the rest follow by
    descending size and then by core.
    """
    groups: dict = {}
    for lam in partitions(n):
        groups.setdefault(p_core(lam, p), []).append(lam)
    principal = p_core((n,), p) if n else Partition()
    blocks = [NakayamaBlock(c, (n - c.n) // p, tuple(ls)) for c, ls in groups.items()]
    blocks.sort(key=lambda b: (b.core != principal, -b.size, b.core))
    return blocks


# --- classes of S_n -----------------------------------------------------------

def centralizer_order(mu) -> int:
    """z_mu = prod_k k^{m_k} m_k!."""
    out = 1
    for k in set(mu):
        mk = sum(1 for x in mu if x == k)
        out *= k**mk * factorial(mk)
    return out


def class_size(mu) -> int:
    return factorial(sum(mu)) // centralizer_order(mu)


def lexmin_permutation(mu) -> Permutation:
    """Lexicographically least image tuple with cycle type mu.

    Cycles are laid out shortest first on consecutive points, each sending
    a point to its successor.
    """
    img = []
    start = 0
    for k in sorted(mu):
        for i in range(k):
            img.append(start + (i + 1) % k)
        start += k
    return Permutation._raw(img)


def power_cycle_type(mu, r: int) -> Partition:
    out = []
    for k in mu:
        g = gcd(k, r)
        out += [k // g] * g
    return Partition(sorted(out, reverse=True))


def sn_exponent(n: int) -> int:
    return lcm(1, *range(1, n + 1))


# --- defect groups of S_n blocks -----------------------------------------------

def _sylow_prime_power_generators(p: int, level: int, offset: int, degree: int) -> list[Permutation]:
    """Generators of the iterated wreath product Sylow_p(S_{p^level}) on a block of points."""
    if level == 0:
        return []
    size = p ** (level - 1)
    gens = _sylow_prime_power_generators(p, level - 1, offset, degree)
    shift = list(range(degree))
    for i in range(p * size):
        shift[offset + i] = offset + (i + size) % (p * size)
    gens.append(Permutation._raw(shift))
    return gens


def principal_defect_group_sn(n: int, p: int, degree: int | None = None) -> PermGroup:
    """A Sylow p-subgroup of S_n built from the base-p digits of n.

    Each digit a_i contributes a_i copies of the iterated wreath product
    of i cyclic groups of order p, on consecutive blocks of points.
    """
    degree = n if degree is None else degree
    gens: list[Permutation] = []
    offset = 0
    level = 0
    rest = n
    digits = []
    while rest:
        digits.append(rest % p)
        rest //= p
    for level in range(len(digits) - 1, -1, -1):
        for _ in range(digits[level]):
            gens += _sylow_prime_power_generators(p, level, offset, degree)
            offset += p**level
    if not gens:
        return PermGroup.trivial(max(degree, 1))
    return PermGroup(gens, degree=degree, name=f"Syl{p}(S{n})")


def sn_block_defect_group(n: int, p: int, weight: int) -> PermGroup:
    """Defect group of a weight-w p-block of S_n: a Sylow p-subgroup of S_{wp}."""
    return principal_defect_group_sn(weight * p, p, degree=max(n, 1))


def sn_cyclic_local_orders(n: int, p: int) -> tuple[int, int]:
    """``(|N(D)|, |D C(D)|)`` in S_n for D generated by one p-cycle (n >= p).

    C(D) = D x S_{n-p} and N(D) adds the automorphisms of D, all realized
    by permutations of the cycle's support.
    """
    rest = factorial(n - p)
    return p * (p - 1) * rest, p * rest

