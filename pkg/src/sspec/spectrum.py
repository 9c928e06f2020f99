"""S-prime ideals, the S-prime spectrum and S-varieties.

Sets of spectrum points are bitmasks over point indices, in the same way
that ideals are bitmasks over ring elements.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, NamedTuple

import numpy as np

from .errors import InvalidParameterError, TheoremCounterexample
from .ideals import (Ideal, MultSet, all_ideals, colon, from_mask, ideal_from_members,
                     ideal_generated, mult_closure, to_mask)
from .ring import FiniteRing, RingMorphism, ring_from_json


def _membership(R: FiniteRing, mask: int) -> np.ndarray:
    return np.array([mask >> a & 1 for a in R.elements], dtype=bool)


def is_prime(R: FiniteRing, P: Ideal) -> bool:
    """Classical primality: proper, and ``ab in P`` forces ``a in P`` or ``b in P``."""
    if P.is_whole:
        return False
    inP = _membership(R, P.mask)
    ok = ~inP[R.mul_table] | inP[:, None] | inP[None, :]
    return bool(ok.all())


def is_s_prime(R: FiniteRing, S: MultSet, P: Ideal) -> tuple[bool, tuple[int, ...]]:
    """Return ``(is_s_prime, witnesses)``.

    A witness is an ``s`` in ``S`` such that ``ab in P`` implies ``sa in P``
    or ``sb in P`` for all ``a, b``.  Every witness is collected.
    """
    if P.mask & S.mask or P.is_whole:
        return False, ()
    inP = _membership(R, P.mask)
    need = inP[R.mul_table]          # need[a, b]: ab lies in P
    witnesses = []
    for s in S.members:
        sa = inP[R.mul_table[s]]
        if not (need & ~sa[:, None] & ~sa[None, :]).any():
            witnesses.append(s)
    return bool(witnesses), tuple(witnesses)


@dataclass(frozen=True)
class SpectrumPoint:
    ideal: Ideal
    witnesses: tuple[int, ...]
    is_prime: bool
    colon_prime: Ideal

    def __repr__(self) -> str:
        return (f"SpectrumPoint({list(self.ideal.members)}, witnesses={list(self.witnesses)}, "
                f"prime={self.is_prime}, colon={list(self.colon_prime.members)})")


@dataclass(frozen=True)
class SpectrumSpace:
    ring: FiniteRing = field(repr=False)
    mults: MultSet
    points: tuple[SpectrumPoint, ...]

    def __len__(self) -> int:
        return len(self.points)

    @property
    def full(self) -> int:
        return (1 << len(self.points)) - 1

    def index_of(self, ideal: Ideal) -> int:
        for i, p in enumerate(self.points):
            if p.ideal.mask == ideal.mask:
                return i
        raise KeyError(f"{ideal!r} is not a point of this spectrum")

    def ideals(self) -> list[Ideal]:
        return [p.ideal for p in self.points]


def _make_point(R: FiniteRing, S: MultSet, P: Ideal, witnesses: tuple[int, ...]) -> SpectrumPoint:
    prime_colons = {}
    for s in witnesses:
        C = colon(P, s)
        if is_prime(R, C):
            prime_colons.setdefault(C.mask, C)
    if not prime_colons:
        raise TheoremCounterexample(
            "S-prime ideal with no witness giving a prime colon ideal",
            {"ideal": list(P.members), "witnesses": list(witnesses)})
    if len(prime_colons) > 1:
        raise TheoremCounterexample(
            "witnesses of one S-prime ideal give different prime colon ideals",
            {"ideal": list(P.members), "colons": [list(C.members) for C in prime_colons.values()]})
    (C,) = prime_colons.values()
    return SpectrumPoint(P, witnesses, is_prime(R, P), C)


def spec_s(R: FiniteRing, S: MultSet) -> SpectrumSpace:
    """All S-prime ideals of ``R`` in canonical ideal order, with witness data."""
    if S.ring != R:
        raise InvalidParameterError("multiplicative set belongs to another ring")
    points = []
    for P in all_ideals(R):
        ok, wit = is_s_prime(R, S, P)
        if ok:
            points.append(_make_point(R, S, P, wit))
    return SpectrumSpace(R, S, tuple(points))


def _scaled_masks(space: SpectrumSpace, I: Ideal) -> set[int]:
    return {I.scaled(s) for s in space.mults.members}


def v_s(space: SpectrumSpace, I: Ideal) -> int:
    """Points ``P`` with ``s*I`` inside ``P`` for some ``s`` in ``S`` (bitmask)."""
    if I.ring != space.ring:
        raise InvalidParameterError("ideal belongs to another ring")
    scaled = _scaled_masks(space, I)
    out = 0
    for k, pt in enumerate(space.points):
        pm = pt.ideal.mask
        if any(m & ~pm == 0 for m in scaled):
            out |= 1 << k
    return out


def d_s(space: SpectrumSpace, I: Ideal) -> int:
    """Complement of :func:`v_s`."""
    return space.full & ~v_s(space, I)


def witness_colon(point: SpectrumPoint) -> Ideal:
    return point.colon_prime


class LocalizationSpectrum(NamedTuple):
    primes: tuple[Ideal, ...]
    maximal: tuple[Ideal, ...]


def localization_spec(R: FiniteRing, S: MultSet) -> LocalizationSpectrum:
    """Primes of ``R`` disjoint from ``S``, and the inclusion-maximal ones among them.

    This is how the spectrum of the localization at ``S`` is modelled; the
    localized ring itself is never built.
    """
    primes = tuple(P for P in all_ideals(R) if not P.mask & S.mask and is_prime(R, P))
    maximal = tuple(P for P in primes if not any(P < Q for Q in primes))
    return LocalizationSpectrum(primes, maximal)


# ---------------------------------------------------------------------------
# morphisms

def image_mults(phi: RingMorphism, S: MultSet) -> MultSet:
    """``phi(S)`` as a multiplicative set of the target; 0 in the image is an error."""
    img = {phi.map[s] for s in S.members}
    if 0 in img:
        raise InvalidParameterError("0 lies in the image of the multiplicative set")
    T = mult_closure(phi.target, sorted(img))
    if T.mask != to_mask(img):
        raise InvalidParameterError("image of the multiplicative set is not multiplicatively closed")
    return T


def preimage(phi: RingMorphism, J: Ideal) -> Ideal:
    return Ideal(phi.source, to_mask(a for a in phi.source.elements if phi.map[a] in J))


def extension(phi: RingMorphism, I: Ideal) -> Ideal:
    """The ideal of the target generated by ``phi(I)``."""
    return ideal_generated(phi.target, {phi.map[a] for a in I.members})


@dataclass(frozen=True)
class InducedMap:
    phi: RingMorphism = field(repr=False)
    source: SpectrumSpace
    target: SpectrumSpace
    mapping: tuple[int, ...]   # target point index -> source point index

    def preimage_of(self, points: int) -> int:
        """Pull back a set of source points to the target spectrum."""
        out = 0
        for t, s in enumerate(self.mapping):
            if points >> s & 1:
                out |= 1 << t
        return out


def induced_map(phi: RingMorphism, S: MultSet) -> InducedMap:
    """``Q -> phi^{-1}(Q)`` from the ``phi(S)``-spectrum of the target to the
    ``S``-spectrum of the source."""
    if S.ring != phi.source:
        raise InvalidParameterError("multiplicative set must live in the source ring")
    T = image_mults(phi, S)
    src = spec_s(phi.source, S)
    tgt = spec_s(phi.target, T)
    mapping = []
    for q in tgt.points:
        P = preimage(phi, q.ideal)
        try:
            mapping.append(src.index_of(P))
        except KeyError:
            raise TheoremCounterexample(
                "preimage of a point is not S-prime",
                {"morphism": list(phi.map), "target_ideal": list(q.ideal.members),
                 "preimage": list(P.members)}) from None
    return InducedMap(phi, src, tgt, tuple(mapping))


# ---------------------------------------------------------------------------
# JSON round trip

def spectrum_to_json(space: SpectrumSpace) -> dict[str, Any]:
    return {
        "ring": space.ring.description,
        "mults": {"gens": list(space.mults.gens), "members": list(space.mults.members)},
        "points": [
            {"ideal": list(p.ideal.members), "witnesses": list(p.witnesses),
             "is_prime": p.is_prime, "colon_prime": list(p.colon_prime.members)}
            for p in space.points
        ],
    }


def spectrum_from_json(obj: dict[str, Any]) -> SpectrumSpace:
    """Rebuild a :class:`SpectrumSpace` from :func:`spectrum_to_json` output.

    Stored data is trusted for the point list but every ideal and the
    multiplicative set are re-validated.
    """
    R = ring_from_json(obj["ring"])
    m = obj["mults"]
    S = mult_closure(R, m["gens"])
    if list(S.members) != list(m["members"]):
        raise InvalidParameterError("stored multiplicative set does not match its generators")
    pts = []
    for p in obj["points"]:
        pts.append(SpectrumPoint(ideal_from_members(R, p["ideal"]), tuple(p["witnesses"]),
                                 bool(p["is_prime"]), ideal_from_members(R, p["colon_prime"])))
    return SpectrumSpace(R, S, tuple(pts))


def point_label(space: SpectrumSpace, k: int) -> str:
    return str(list(space.points[k].ideal.members))


def points_of(mask: int) -> tuple[int, ...]:
    """Indices in a point bitmask."""
    return from_mask(mask)


__all__ = [
    "SpectrumPoint", "SpectrumSpace", "InducedMap", "LocalizationSpectrum",
    "is_prime", "is_s_prime", "spec_s", "v_s", "d_s", "witness_colon", "localization_spec",
    "image_mults", "preimage", "extension", "induced_map", "spectrum_to_json",
    "spectrum_from_json", "point_label", "points_of",
]
