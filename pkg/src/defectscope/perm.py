"""Permutation groups small enough to enumerate.

Every group here is held as an explicit, sorted element list.  That keeps
subgroup membership a set lookup and makes all orderings reproducible,
at the price of only handling groups up to about a million elements.

Points are written 1..n in cycle notation; internally a permutation is a
tuple of 0-based images.  Products compose left to right, so
``(a * b)(i) = b(a(i))`` and ``x ** g`` style conjugation is
``g.inverse() * x * g``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from math import lcm
from typing import Iterable, Sequence

from .errors import LimitExceeded, NotAMember, NotASubgroup

DEFAULT_LIMIT = 10**6


def p_part(n: int, p: int) -> int:
    """Largest power of ``p`` dividing ``n``."""
    q = 1
    while n % p == 0:
        n //= p
        q *= p
    return q


def nu(n: int, p: int) -> int:
    """The ``p``-adic valuation of a nonzero integer."""
    n = abs(n)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def prime_divisors(n: int) -> list[int]:
    out = []
    q = 2
    while q * q <= n:
        if n % q == 0:
            out.append(q)
            while n % q == 0:
                n //= q
        q += 1
    if n > 1:
        out.append(n)
    return out


class Permutation(tuple):
    """A bijection of ``{0..n-1}`` stored as its image tuple."""

    __slots__ = ()

    def __new__(cls, images: Iterable[int]):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation: {images!r}")
        return tuple.__new__(cls, images)

    @classmethod
    def _raw(cls, images) -> "Permutation":
        return tuple.__new__(cls, images)

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls._raw(range(degree))

    @classmethod
    def from_cycles(cls, cycles: Sequence[Sequence[int]], degree: int) -> "Permutation":
        """Build from 1-based cycles, e.g. ``[[1, 2, 3], [4, 5]]``."""
        img = list(range(degree))
        seen = set()
        for cyc in cycles:
            for a in cyc:
                if not 1 <= a <= degree:
                    raise ValueError(f"point {a} outside 1..{degree}")
                if a in seen:
                    raise ValueError(f"point {a} repeated in cycles {cycles!r}")
                seen.add(a)
            for a, b in zip(cyc, list(cyc[1:]) + list(cyc[:1])):
                img[a - 1] = b - 1
        return cls._raw(img)

    @property
    def degree(self) -> int:
        return len(self)

    def __mul__(self, other):
        return Permutation._raw(map(other.__getitem__, self))

    def __rmul__(self, other):
        return NotImplemented

    def inverse(self) -> "Permutation":
        inv = [0] * len(self)
        for i, j in enumerate(self):
            inv[j] = i
        return Permutation._raw(inv)

    def __pow__(self, k: int) -> "Permutation":
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        result = Permutation.identity(len(self))
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self, g: "Permutation") -> "Permutation":
        """``g^-1 * self * g``: relabel points of ``self`` through ``g``."""
        img = [0] * len(self)
        for i, j in enumerate(self):
            img[g[i]] = g[j]
        return Permutation._raw(img)

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles with 1-based points, each starting at its least point."""
        seen = [False] * len(self)
        out = []
        for i in range(len(self)):
            if seen[i]:
                continue
            cyc = [i]
            seen[i] = True
            j = self[i]
            while j != i:
                seen[j] = True
                cyc.append(j)
                j = self[j]
            if len(cyc) > 1:
                out.append(tuple(a + 1 for a in cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        """Cycle lengths (fixed points included) in descending order."""
        seen = [False] * len(self)
        lengths = []
        for i in range(len(self)):
            if seen[i]:
                continue
            n = 0
            j = i
            while not seen[j]:
                seen[j] = True
                j = self[j]
                n += 1
            lengths.append(n)
        return tuple(sorted(lengths, reverse=True))

    def order(self) -> int:
        return lcm(*self.cycle_type()) if len(self) else 1

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self))

    def __repr__(self):
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + ",".join(map(str, c)) + ")" for c in cyc)


@dataclass(frozen=True)
class ConjugacyClass:
    representative: Permutation | None
    size: int
    element_order: int


def _closure(degree: int, gens: Sequence[Permutation], limit: int,
             start: Iterable[Permutation] = ()) -> set:
    ident = Permutation.identity(degree)
    elements = set(start) or {ident}
    queue = deque(elements)
    while queue:
        x = queue.popleft()
        for g in gens:
            y = Permutation._raw(map(g.__getitem__, x))
            if y not in elements:
                elements.add(y)
                if len(elements) > limit:
                    raise LimitExceeded(f"group closure exceeded {limit} elements")
                queue.append(y)
    return elements


class PermGroup:
    """A finitely generated permutation group with cached enumeration data."""

    def __init__(self, generators: Sequence, degree: int | None = None,
                 name: str | None = None, limit: int = DEFAULT_LIMIT):
        gens = []
        for g in generators:
            g = g if isinstance(g, Permutation) else Permutation(g)
            gens.append(g)
        if degree is None:
            if not gens:
                raise ValueError("degree required for a group without generators")
            degree = len(gens[0])
        for g in gens:
            if len(g) != degree:
                raise ValueError(f"generator {g!r} has degree {len(g)}, expected {degree}")
        self.degree = degree
        self.generators = tuple(g for g in gens if not g.is_identity())
        self.name = name
        self.limit = limit
        self._elements = None
        self._element_set = None
        self._classes = None
        self._class_of = None
        self._orders = None

    @classmethod
    def from_elements(cls, elements: Iterable[Permutation], degree: int,
                      name: str | None = None) -> "PermGroup":
        """Wrap an element set known to be closed; pick a greedy generating set."""
        elems = sorted(set(Permutation._raw(e) for e in elements))
        target = len(elems)
        gens: list[Permutation] = []
        span = {Permutation.identity(degree)}
        for e in elems:
            if len(span) == target:
                break
            if e in span:
                continue
            gens.append(e)
            span = _closure(degree, gens, max(target, 1), start=span)
        grp = cls(gens, degree=degree, name=name)
        grp._set_elements(elems)
        return grp

    @classmethod
    def trivial(cls, degree: int) -> "PermGroup":
        return cls.from_elements([Permutation.identity(degree)], degree, name="1")

    def _set_elements(self, elems):
        self._elements = tuple(elems)
        self._element_set = frozenset(self._elements)

    # --- enumeration -------------------------------------------------------

    def elements(self) -> tuple[Permutation, ...]:
        if self._elements is None:
            found = _closure(self.degree, self.generators, self.limit)
            self._set_elements(sorted(found))
        return self._elements

    @property
    def order(self) -> int:
        return len(self.elements())

    def __len__(self):
        return self.order

    def __contains__(self, x) -> bool:
        self.elements()
        return x in self._element_set

    def __iter__(self):
        return iter(self.elements())

    def __repr__(self):
        label = self.name or f"<{', '.join(map(repr, self.generators))}>"
        return f"PermGroup({label}, degree={self.degree})"

    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def element_orders(self) -> dict:
        if self._orders is None:
            self._orders = {x: x.order() for x in self.elements()}
        return self._orders

    @property
    def exponent(self) -> int:
        return lcm(1, *set(self.element_orders().values()))

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        if self.degree != other.degree:
            return False
        other.elements()
        return all(g in other._element_set for g in self.generators)

    def is_abelian(self) -> bool:
        gs = self.generators
        return all(a * b == b * a for i, a in enumerate(gs) for b in gs[i + 1:])

    def is_cyclic(self) -> bool:
        n = self.order
        return n == 1 or any(o == n for o in self.element_orders().values())

    def is_p_group(self, p: int) -> bool:
        return p_part(self.order, p) == self.order

    # --- classes -----------------------------------------------------------

    def conjugacy_classes(self) -> list[ConjugacyClass]:
        if self._classes is None:
            self._compute_classes()
        return self._classes

    def class_index(self) -> dict:
        """Map each element to the index of its class in canonical order."""
        if self._class_of is None:
            self._compute_classes()
        return self._class_of

    def class_elements(self, i: int) -> list[Permutation]:
        cls_of = self.class_index()
        return [x for x in self.elements() if cls_of[x] == i]

    def _compute_classes(self):
        elems = self.elements()
        orders = self.element_orders()
        gens = self.generators
        label: dict = {}
        raw = []
        for x in elems:  # ascending, so the first unseen element is its class minimum
            if x in label:
                continue
            tag = len(raw)
            label[x] = tag
            orbit = [x]
            queue = deque(orbit)
            while queue:
                y = queue.popleft()
                for g in gens:
                    z = y.conjugate(g)
                    if z not in label:
                        label[z] = tag
                        orbit.append(z)
                        queue.append(z)
            raw.append(ConjugacyClass(x, len(orbit), orders[x]))
        perm = sorted(range(len(raw)),
                      key=lambda t: (raw[t].size, raw[t].element_order, raw[t].representative))
        where = {old: new for new, old in enumerate(perm)}
        self._classes = [raw[t] for t in perm]
        self._class_of = {x: where[t] for x, t in label.items()}


# --- module-level operations ----------------------------------------------------

def enumerate_group(G: PermGroup, limit: int | None = None) -> tuple[tuple[Permutation, ...], int]:
    """All elements of ``G`` in lexicographic order, and the order."""
    if limit is not None and G._elements is None:
        G.limit = limit
    elems = G.elements()
    return elems, len(elems)


def conjugacy_classes(G: PermGroup) -> list[ConjugacyClass]:
    return G.conjugacy_classes()


def _require_member(G: PermGroup, x):
    if x not in G:
        raise NotAMember(f"{x!r} is not an element of {G!r}")


def _require_subgroup(G: PermGroup, H: PermGroup):
    if not H.is_subgroup_of(G):
        raise NotASubgroup(f"{H!r} is not a subgroup of {G!r}")


def centralizer(G: PermGroup, x) -> PermGroup:
    _require_member(G, x)
    x = Permutation._raw(x)
    elems = [g for g in G.elements() if x * g == g * x]
    return PermGroup.from_elements(elems, G.degree)


def centralizer_of_subgroup(G: PermGroup, H: PermGroup) -> PermGroup:
    _require_subgroup(G, H)
    hs = H.generators
    elems = [g for g in G.elements() if all(h * g == g * h for h in hs)]
    return PermGroup.from_elements(elems, G.degree)


def normalizes(g: Permutation, H: PermGroup) -> bool:
    H.elements()
    return all(h.conjugate(g) in H._element_set for h in H.generators)


def normalizer(G: PermGroup, H: PermGroup) -> PermGroup:
    _require_subgroup(G, H)
    elems = [g for g in G.elements() if normalizes(g, H)]
    return PermGroup.from_elements(elems, G.degree)


def subgroup(G: PermGroup, generators: Sequence) -> PermGroup:
    """Subgroup of ``G`` generated by ``generators``."""
    for g in generators:
        _require_member(G, g)
    H = PermGroup(list(generators), degree=G.degree, limit=G.limit)
    H.elements()
    return H


def product_subgroup(G: PermGroup, A: PermGroup, B: PermGroup) -> PermGroup:
    """The subgroup generated by ``A`` and ``B`` (equal to ``AB`` when one normalizes the other)."""
    _require_subgroup(G, A)
    _require_subgroup(G, B)
    H = PermGroup(list(A.generators) + list(B.generators), degree=G.degree, limit=G.limit)
    H.elements()
    return H


def sylow(G: PermGroup, p: int) -> PermGroup:
    """A Sylow ``p``-subgroup, grown from a largest ``p``-element through normalizers.

    Deterministic: each step adjoins the lexicographically least ``p``-element
    of ``N_G(P)`` outside ``P``.
    """
    target = p_part(G.order, p)
    if target == 1:
        return PermGroup.trivial(G.degree)
    orders = G.element_orders()
    p_elems = [x for x in G.elements() if p_part(orders[x], p) == orders[x] and orders[x] > 1]
    top = max(orders[x] for x in p_elems)
    start = next(x for x in p_elems if orders[x] == top)
    P = PermGroup([start], degree=G.degree)
    while P.order < target:
        y = next(x for x in p_elems if x not in P and normalizes(x, P))
        P = PermGroup(list(P.generators) + [y], degree=G.degree)
    return P


def is_p_nilpotent(G: PermGroup, p: int) -> bool:
    """True iff ``G`` has a normal ``p``-complement.

    Counts elements of order prime to ``p``; there are exactly ``|G|_p'``
    of them precisely when they form a (normal) subgroup.
    """
    n = G.order
    comp = n // p_part(n, p)
    count = sum(1 for o in G.element_orders().values() if o % p)
    return count == comp


def intersection(A: PermGroup, B: PermGroup) -> PermGroup:
    B.elements()
    return PermGroup.from_elements([a for a in A.elements() if a in B._element_set], A.degree)


def embed(perm: Permutation, degree: int, offset: int = 0) -> Permutation:
    """Move ``perm`` onto points ``offset..offset+len-1`` of a larger set."""
    img = list(range(degree))
    for i, j in enumerate(perm):
        img[offset + i] = offset + j
    return Permutation._raw(img)

