"""Ideals, multiplicatively closed sets and the ideal lattice.

Subsets of a ring are stored as Python integers used as bitmasks: bit ``a``
is set when element ``a`` belongs to the subset.  That keeps inclusion,
intersection and equality to single integer operations.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

from .errors import InvalidMultSetError, InvalidParameterError
from .ring import FiniteRing


def to_mask(elements: Iterable[int]) -> int:
    m = 0
    for a in elements:
        m |= 1 << a
    return m


def from_mask(mask: int) -> tuple[int, ...]:
    out = []
    a = 0
    while mask:
        if mask & 1:
            out.append(a)
        mask >>= 1
        a += 1
    return tuple(out)


def _check_elements(R: FiniteRing, elements: Iterable[int]) -> list[int]:
    elements = [int(a) for a in elements]
    for a in elements:
        if not (0 <= a < R.size):
            raise InvalidParameterError(f"element {a} is out of range for a ring of size {R.size}")
    return elements


def _image_mask(row: tuple[int, ...], mask: int) -> int:
    """Bitmask of ``{row[a] : a in mask}``, i.e. ``s*X`` when ``row`` is ``mul[s]``."""
    out = 0
    for a in from_mask(mask):
        out |= 1 << row[a]
    return out


@dataclass(frozen=True)
class Ideal:
    ring: FiniteRing = field(repr=False)
    mask: int

    @cached_property
    def members(self) -> tuple[int, ...]:
        return from_mask(self.mask)

    def __contains__(self, a: int) -> bool:
        return bool(self.mask >> a & 1)

    def __len__(self) -> int:
        return self.mask.bit_count() if hasattr(int, "bit_count") else bin(self.mask).count("1")

    def __le__(self, other: "Ideal") -> bool:
        return self.mask & ~other.mask == 0

    def __lt__(self, other: "Ideal") -> bool:
        return self <= other and self.mask != other.mask

    @property
    def is_whole(self) -> bool:
        return self.mask == (1 << self.ring.size) - 1

    def scaled(self, s: int) -> int:
        """Bitmask of the elementwise product set ``s*I``."""
        return _image_mask(self.ring.mul_rows[s], self.mask)

    def sort_key(self) -> tuple:
        return (len(self), self.members)

    def __repr__(self) -> str:
        return f"Ideal({list(self.members)})"


@dataclass(frozen=True)
class MultSet:
    """A multiplicatively closed subset: contains 1, avoids 0, closed under products."""

    ring: FiniteRing = field(repr=False)
    mask: int
    gens: tuple[int, ...] = field(default=(), compare=False)

    @cached_property
    def members(self) -> tuple[int, ...]:
        return from_mask(self.mask)

    def __contains__(self, a: int) -> bool:
        return bool(self.mask >> a & 1)

    def __iter__(self):
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __repr__(self) -> str:
        return f"MultSet({list(self.members)})"


def canonical_sort(ideals: Iterable[Ideal]) -> list[Ideal]:
    """Order by cardinality, then by the sorted member list."""
    return sorted(ideals, key=Ideal.sort_key)


def _additive_closure(R: FiniteRing, seed: set[int]) -> int:
    seen = set(seed) | {0}
    todo = list(seen)
    add = R.add_rows
    while todo:
        x = todo.pop()
        row = add[x]
        for y in list(seen):
            c = row[y]
            if c not in seen:
                seen.add(c)
                todo.append(c)
    return to_mask(seen)


def ideal_generated(R: FiniteRing, gens: Iterable[int]) -> Ideal:
    """Least ideal containing ``gens``."""
    gens = _check_elements(R, gens)
    seed = {R.mul_rows[r][g] for g in gens for r in R.elements}
    return Ideal(R, _additive_closure(R, seed))


def principal(R: FiniteRing, a: int) -> Ideal:
    return ideal_generated(R, [a])


def zero_ideal(R: FiniteRing) -> Ideal:
    return Ideal(R, 1)


def whole_ring(R: FiniteRing) -> Ideal:
    return Ideal(R, (1 << R.size) - 1)


def ideal_from_members(R: FiniteRing, members: Iterable[int]) -> Ideal:
    """Wrap an explicit member list, checking it really is an ideal."""
    mask = to_mask(_check_elements(R, members))
    if not is_ideal_mask(R, mask):
        raise InvalidParameterError(f"{sorted(from_mask(mask))} is not an ideal")
    return Ideal(R, mask)


def is_ideal_mask(R: FiniteRing, mask: int) -> bool:
    if not mask & 1:
        return False
    els = from_mask(mask)
    for a in els:
        row = R.add_rows[a]
        for b in els:
            if not mask >> row[b] & 1:
                return False
        for r in R.elements:
            if not mask >> R.mul_rows[r][a] & 1:
                return False
    return True


def _same_ring(I: Ideal, J: Ideal) -> FiniteRing:
    if I.ring is not J.ring and I.ring != J.ring:
        raise InvalidParameterError("ideals live in different rings")
    return I.ring


def ideal_sum(I: Ideal, J: Ideal) -> Ideal:
    R = _same_ring(I, J)
    out = 0
    jm = J.members
    for i in I.members:
        row = R.add_rows[i]
        for j in jm:
            out |= 1 << row[j]
    return Ideal(R, out)


def ideal_product(I: Ideal, J: Ideal) -> Ideal:
    R = _same_ring(I, J)
    prods = {R.mul_rows[i][j] for i in I.members for j in J.members}
    return Ideal(R, _additive_closure(R, prods))


def ideal_intersect(I: Ideal, J: Ideal) -> Ideal:
    R = _same_ring(I, J)
    return Ideal(R, I.mask & J.mask)


def colon_mask(R: FiniteRing, mask: int, s: int) -> int:
    row = R.mul_rows[s]
    out = 0
    for a in R.elements:
        if mask >> row[a] & 1:
            out |= 1 << a
    return out


def colon(I: Ideal, s: int) -> Ideal:
    """``(I : s) = {a : s*a in I}``."""
    _check_elements(I.ring, [s])
    return Ideal(I.ring, colon_mask(I.ring, I.mask, s))


def all_ideals(R: FiniteRing) -> list[Ideal]:
    """Every ideal of ``R`` in canonical order.

    Starts from the principal ideals and closes under pairwise sums; each
    ideal of a finite ring is a finite sum of principal ones.
    """
    return list(_all_ideals_cached(R))


_LATTICE_CACHE: dict[FiniteRing, tuple[Ideal, ...]] = {}


def _all_ideals_cached(R: FiniteRing) -> tuple[Ideal, ...]:
    hit = _LATTICE_CACHE.get(R)
    if hit is not None:
        return hit
    found: dict[int, Ideal] = {1: zero_ideal(R)}
    for a in R.elements:
        I = principal(R, a)
        found.setdefault(I.mask, I)
    frontier = list(found.values())
    while frontier:
        new = []
        current = list(found.values())
        for I in frontier:
            for J in current:
                if I.mask & ~J.mask == 0 or J.mask & ~I.mask == 0:
                    continue
                K = ideal_sum(I, J)
                if K.mask not in found:
                    found[K.mask] = K
                    new.append(K)
        frontier = new
    result = tuple(canonical_sort(found.values()))
    if len(_LATTICE_CACHE) > 256:
        _LATTICE_CACHE.clear()
    _LATTICE_CACHE[R] = result
    return result


def mult_closure(R: FiniteRing, gens: Iterable[int]) -> MultSet:
    """Least multiplicatively closed set containing ``gens`` and 1.

    Raises :class:`InvalidMultSetError` if the closure reaches 0.
    """
    gens = tuple(_check_elements(R, gens))
    seen = set(gens)
    todo = list(seen)
    while todo:
        x = todo.pop()
        row = R.mul_rows[x]
        for y in list(seen):
            c = row[y]
            if c not in seen:
                seen.add(c)
                todo.append(c)
    seen.add(R.one)
    if 0 in seen:
        raise InvalidMultSetError(f"multiplicative closure of {list(gens)} contains 0")
    return MultSet(R, to_mask(seen), gens)


def s_radical(R: FiniteRing, S: MultSet, I: Ideal) -> Ideal:
    """``{a : s * a^n in I for some s in S, n >= 1}``.

    An element qualifies once some power of it lands in the union of the
    colons ``(I : s)``.  Powers are followed until they repeat, which in a
    finite ring bounds the search.
    """
    if S.ring != R or I.ring != R:
        raise InvalidParameterError("ring mismatch")
    target = 0
    for s in S.members:
        target |= colon_mask(R, I.mask, s)
    mul = R.mul_rows
    out = 0
    for a in R.elements:
        p = a
        seen = set()
        while p not in seen:
            if target >> p & 1:
                out |= 1 << a
                break
            seen.add(p)
            p = mul[p][a]
    return Ideal(R, out)


def radical(R: FiniteRing, I: Ideal) -> Ideal:
    """The ordinary nilradical of ``I``."""
    return s_radical(R, mult_closure(R, []), I)


def is_s_radical_ideal(R: FiniteRing, S: MultSet, I: Ideal) -> bool:
    return s_radical(R, S, I) == I
