"""Finite topologies on the S-prime spectrum.

A topology is stored as its complete family of open sets, each a bitmask
over point indices.  Both the S-Zariski and the S-flat topology are built
here, together with the point-set operations the theorem checks need.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

from .errors import InvalidParameterError, TheoremCounterexample
from .ideals import Ideal, all_ideals, from_mask, principal, s_radical, zero_ideal
from .spectrum import SpectrumSpace, v_s


def _popcount(m: int) -> int:
    return bin(m).count("1")


def mask_key(m: int) -> tuple:
    return (_popcount(m), from_mask(m))


@dataclass(frozen=True)
class FiniteTopology:
    point_count: int
    opens: tuple[int, ...]
    kind: str = "derived"

    @property
    def full(self) -> int:
        return (1 << self.point_count) - 1

    @cached_property
    def open_set(self) -> frozenset[int]:
        return frozenset(self.opens)

    @cached_property
    def closed(self) -> tuple[int, ...]:
        return tuple(sorted((self.full & ~o for o in self.opens), key=mask_key))

    @cached_property
    def closed_set(self) -> frozenset[int]:
        return frozenset(self.closed)

    def is_open(self, A: int) -> bool:
        return A in self.open_set

    def is_closed(self, A: int) -> bool:
        return A in self.closed_set

    @cached_property
    def point_closures(self) -> tuple[int, ...]:
        return tuple(closure(self, 1 << k) for k in range(self.point_count))


def is_topology(point_count: int, opens: Iterable[int]) -> bool:
    fam = set(opens)
    full = (1 << point_count) - 1
    if 0 not in fam or full not in fam:
        return False
    items = list(fam)
    return all((a | b) in fam and (a & b) in fam for a in items for b in items)


def topology_from_open_subbasis(point_count: int, subbasis: Iterable[int],
                                kind: str = "derived") -> FiniteTopology:
    """Coarsest topology in which every set of ``subbasis`` is open."""
    full = (1 << point_count) - 1
    basis = {full}
    for U in subbasis:
        if U & ~full:
            raise InvalidParameterError(f"sub-basic set {from_mask(U)} is not inside the carrier")
        basis.add(U)
    frontier = list(basis)
    while frontier:
        new = []
        for a in frontier:
            for b in list(basis):
                c = a & b
                if c not in basis:
                    basis.add(c)
                    new.append(c)
        frontier = new
    opens = {0}
    for b in basis:
        opens |= {o | b for o in opens}
    return FiniteTopology(point_count, tuple(sorted(opens, key=mask_key)), kind)


def s_zariski_topology(space: SpectrumSpace) -> FiniteTopology:
    """Closed sets are the S-varieties of all ideals."""
    closed = {v_s(space, I) for I in all_ideals(space.ring)}
    full = space.full
    opens = {full & ~c for c in closed}
    if not is_topology(len(space), opens):
        raise TheoremCounterexample("S-varieties do not form the closed sets of a topology",
                                    {"closed": [list(from_mask(c)) for c in sorted(closed)]})
    return FiniteTopology(len(space), tuple(sorted(opens, key=mask_key)), "s_zariski")


def principal_varieties(space: SpectrumSpace) -> list[int]:
    """``V_S((f))`` for every element ``f``, indexed by ``f``."""
    return [v_s(space, principal(space.ring, f)) for f in space.ring.elements]


def s_flat_topology(space: SpectrumSpace) -> FiniteTopology:
    """Topology generated by the principal S-varieties as open sets."""
    return topology_from_open_subbasis(len(space), principal_varieties(space), "s_flat")


def closure(T: FiniteTopology, A: int) -> int:
    out = T.full
    for c in T.closed:
        if A & ~c == 0:
            out &= c
    return out


def lambda_closure(space: SpectrumSpace, p: int) -> int:
    """Points ``Q`` with ``s*Q`` inside ``P`` for some ``s`` in ``S``, where ``P`` is point ``p``."""
    pm = space.points[p].ideal.mask
    out = 0
    for k, q in enumerate(space.points):
        if any(q.ideal.scaled(s) & ~pm == 0 for s in space.mults.members):
            out |= 1 << k
    return out


def _proper_closed_subsets(T: FiniteTopology, C: int) -> list[int]:
    return [c for c in T.closed if c != C and c & ~C == 0]


def is_irreducible(T: FiniteTopology, C: int) -> bool:
    """``C`` is nonempty and not the union of two proper closed subsets."""
    if not T.is_closed(C):
        raise InvalidParameterError(f"{from_mask(C)} is not closed")
    if C == 0:
        return False
    for c1 in _proper_closed_subsets(T, C):
        # the smallest closed set that could pair with c1 is the closure of what it misses
        if closure(T, C & ~c1) != C:
            return False
    return True


@dataclass(frozen=True)
class GenericPoints:
    points: int          # bitmask of all generic points
    prime: int           # index of the unique generic point that is a prime ideal


def generic_points(space: SpectrumSpace, T: FiniteTopology, C: int) -> GenericPoints:
    """Generic points of an irreducible flat-closed set, with its prime representative."""
    if T.kind != "s_flat":
        raise InvalidParameterError("generic points are reported for the S-flat topology")
    if not is_irreducible(T, C):
        raise InvalidParameterError(f"{from_mask(C)} is not an irreducible closed set")
    gen = 0
    for k in from_mask(C):
        if T.point_closures[k] == C:
            gen |= 1 << k
    if gen == 0:
        raise TheoremCounterexample("irreducible closed set without a generic point",
                                    {"closed_set": list(from_mask(C))})
    primes = [k for k in from_mask(gen) if space.points[k].is_prime]
    k0 = from_mask(gen)[0]
    try:
        rep = space.index_of(space.points[k0].colon_prime)
    except KeyError:
        raise TheoremCounterexample("prime colon ideal of a point is not itself a point",
                                    {"point": list(space.points[k0].ideal.members)}) from None
    if primes != [rep]:
        raise TheoremCounterexample("generic prime point is not unique or differs from the colon prime",
                                    {"closed_set": list(from_mask(C)), "prime_generic": primes,
                                     "colon_representative": rep})
    return GenericPoints(gen, rep)


def irreducible_closed_sets(T: FiniteTopology) -> list[int]:
    return [c for c in T.closed if c and is_irreducible(T, c)]


def irreducible_components(T: FiniteTopology) -> list[int]:
    """Maximal irreducible closed sets, in canonical order."""
    irr = irreducible_closed_sets(T)
    return [c for c in irr if not any(c != d and c & ~d == 0 for d in irr)]


def clopens(T: FiniteTopology) -> list[int]:
    return [o for o in T.opens if T.is_closed(o)]


def connected_components(T: FiniteTopology) -> list[int]:
    """Partition of the points into connected components, ordered by least point."""
    cl = clopens(T)
    comps = []
    seen = 0
    for k in range(T.point_count):
        if seen >> k & 1:
            continue
        comp = T.full
        for c in cl:
            if c >> k & 1:
                comp &= c
        comps.append(comp)
        seen |= comp
    return comps


def is_t0(space: SpectrumSpace, T: FiniteTopology) -> bool:
    cl = T.point_closures
    return len(set(cl)) == len(cl)


# ---------------------------------------------------------------------------
# clopen partitions

def find_clopen_certificate(space: SpectrumSpace, C1: int, C2: int,
                            varieties: list[int] | None = None) -> tuple[int, int] | None:
    """First ``(f1, f2)`` with ``V_S(f_i) = C_i``, ``f1+f2`` in ``S`` and
    ``f1*f2`` in the S-radical of zero, or ``None``."""
    R = space.ring
    V = varieties if varieties is not None else principal_varieties(space)
    rad0 = s_radical(R, space.mults, zero_ideal(R))
    first = [f for f in R.elements if V[f] == C1]
    second = [f for f in R.elements if V[f] == C2]
    for f1 in first:
        for f2 in second:
            if R.add(f1, f2) in space.mults and R.mul(f1, f2) in rad0:
                return f1, f2
    return None


def clopen_certificate(space: SpectrumSpace, C1: int, C2: int) -> tuple[int, int]:
    """Certificate for a partition of the spectrum into two S-Zariski closed sets."""
    full = space.full
    if C1 | C2 != full or C1 & C2:
        raise InvalidParameterError("C1, C2 must partition the spectrum")
    Z = s_zariski_topology(space)
    if not (Z.is_closed(C1) and Z.is_closed(C2)):
        raise InvalidParameterError("C1 and C2 must both be S-Zariski closed")
    cert = find_clopen_certificate(space, C1, C2)
    if cert is None:
        raise TheoremCounterexample("clopen partition without an element certificate",
                                    {"C1": list(from_mask(C1)), "C2": list(from_mask(C2))})
    return cert


# ---------------------------------------------------------------------------
# varieties and the noetherian conditions

def varieties_for_opens(space: SpectrumSpace, T_flat: FiniteTopology) -> dict[int, Ideal | None]:
    """First ideal in canonical order whose S-variety is each open, or ``None``."""
    out: dict[int, Ideal | None] = {U: None for U in T_flat.opens}
    for I in all_ideals(space.ring):
        V = v_s(space, I)
        if V in out and out[V] is None:
            out[V] = I
    return out


def flat_opens_as_varieties(space: SpectrumSpace, T_flat: FiniteTopology) -> dict[int, Ideal]:
    """Map each flat open ``U`` to an ideal ``I`` with ``V_S(I) = U``."""
    found = varieties_for_opens(space, T_flat)
    missing = [U for U, I in found.items() if I is None]
    if missing:
        raise TheoremCounterexample("flat open that is not an S-variety",
                                    {"opens": [list(from_mask(U)) for U in missing]})
    return found  # type: ignore[return-value]


@dataclass(frozen=True)
class NoetherianReport:
    flat_noetherian: bool
    longest_closed_chain: int
    opens_are_varieties: bool
    varieties: dict[int, Ideal | None] = field(repr=False)
    lambda_is_basic_open: bool
    lambda_witnesses: dict[int, int | None]
    zariski_opens_meet_closed: bool

    @property
    def conditions(self) -> tuple[bool, bool, bool, bool]:
        return (self.flat_noetherian, self.opens_are_varieties,
                self.lambda_is_basic_open, self.zariski_opens_meet_closed)

    @property
    def consistent(self) -> bool:
        return len(set(self.conditions)) == 1


def _longest_descending_chain(closed: Iterable[int]) -> int:
    best: dict[int, int] = {}
    for c in sorted(closed, key=mask_key):
        best[c] = 1 + max((best[d] for d in best if d != c and d & ~c == 0), default=0)
    return max(best.values(), default=0)


def noetherian_report(space: SpectrumSpace) -> NoetherianReport:
    """Evaluate the four equivalent noetherian conditions on the spectrum.

    1. flat-closed sets satisfy the descending chain condition (a finite
       family always does; the longest chain is reported);
    2. every flat open is an S-variety;
    3. for every prime point ``P`` the flat closure of ``P`` equals
       ``D_S(f)`` for some element ``f``;
    4. any intersection of S-Zariski opens is S-Zariski open.
    """
    F = s_flat_topology(space)
    Z = s_zariski_topology(space)
    chain = _longest_descending_chain(F.closed)
    flat_noetherian = chain <= len(F.closed)

    varieties = varieties_for_opens(space, F)
    opens_ok = all(I is not None for I in varieties.values())

    V = principal_varieties(space)
    wit: dict[int, int | None] = {}
    for k, pt in enumerate(space.points):
        if not pt.is_prime:
            continue
        lam = lambda_closure(space, k)
        wit[k] = next((f for f in space.ring.elements if space.full & ~V[f] == lam), None)
    lam_ok = all(f is not None for f in wit.values())

    zo = Z.open_set
    meet_ok = all((a & b) in zo for a in Z.opens for b in Z.opens)
    return NoetherianReport(flat_noetherian, chain, opens_ok, varieties, lam_ok, wit, meet_ok)


# ---------------------------------------------------------------------------
# DOT export

def specialization_edges(T: FiniteTopology) -> list[tuple[int, int]]:
    """Edges ``q -> p`` for ``q`` in the closure of ``p``, transitively reduced.

    Points with equal closures form a class drawn as a directed cycle; the
    classes themselves are joined by the covering relation of their order.
    """
    cl = T.point_closures
    classes: dict[int, list[int]] = {}
    for k, c in enumerate(cl):
        classes.setdefault(c, []).append(k)
    reps = sorted(classes.values(), key=lambda ks: ks[0])
    edges = []
    for ks in reps:
        if len(ks) > 1:
            edges += [(ks[i], ks[(i + 1) % len(ks)]) for i in range(len(ks))]

    def below(a: list[int], b: list[int]) -> bool:   # class a lies in closure of class b
        return a is not b and cl[b[0]] >> a[0] & 1 == 1

    for a in reps:
        for b in reps:
            if below(a, b) and not any(below(a, m) and below(m, b) for m in reps):
                edges.append((a[0], b[0]))
    return sorted(set(edges))


def specialization_dot(space: SpectrumSpace, T: FiniteTopology) -> str:
    lines = [f"digraph {T.kind} {{"]
    for k, pt in enumerate(space.points):
        lines.append(f'  p{k} [label="{list(pt.ideal.members)}"];')
    for q, p in specialization_edges(T):
        lines.append(f"  p{q} -> p{p};")
    lines.append("}")
    return "\n".join(lines) + "\n"
