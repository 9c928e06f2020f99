"""Exhaustive theorem checks over a (ring, multiplicative set) pair.

Every check returns a :class:`TheoremCheck`.  A failure carries a witness
payload with the ring description and generators so it can be replayed
with :func:`replay`.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Any, Callable

from .errors import TheoremCounterexample
from .ideals import (Ideal, MultSet, all_ideals, colon_mask, from_mask, ideal_generated,
                     ideal_intersect, ideal_product, ideal_sum, mult_closure, s_radical, to_mask,
                     whole_ring, zero_ideal)
from .ring import FiniteRing, enumerate_morphisms, ring_from_json
from .spectrum import (SpectrumSpace, extension, image_mults, induced_map, is_prime,
                       localization_spec, spec_s, v_s)
from .topology import (connected_components, find_clopen_certificate, generic_points,
                       irreducible_closed_sets, irreducible_components, is_t0, lambda_closure,
                       noetherian_report, principal_varieties, s_flat_topology,
                       s_zariski_topology, varieties_for_opens)

PASS, FAIL, SKIPPED = "pass", "fail", "skipped"

TAGS = (
    "prop-2.3", "prop-2.4", "thm-2.1", "lemma-4.1", "cor-4.3-finite", "prop-4.4", "thm-4.5",
    "lemma-4.6", "prop-4.7", "cor-4.8", "thm-5.1", "cor-5.2", "lemma-6.1", "thm-6.2",
    "prop-3.2", "remark-3.1", "remark-4.x-sP",
)
MORPHISM_TAG = "prop-3.3"
ALL_TAGS = TAGS + (MORPHISM_TAG,)

@dataclass
class TheoremCheck:
    id: str
    status: str
    witness: dict[str, Any] | None = None
    elapsed: float = 0.0
    detail: str = ""

    def to_json(self) -> dict[str, Any]:
        return {"id": self.id, "status": self.status, "witness": self.witness,
                "elapsed": round(self.elapsed, 6), "detail": self.detail}


class _Fail(Exception):
    """Internal: a check found a counterexample."""

    def __init__(self, why: str, **payload: Any):
        self.why = why
        self.payload = payload
        super().__init__(why)


def _pts(mask: int) -> list[int]:
    return list(from_mask(mask))


def _ideal(I: Ideal) -> list[int]:
    return list(I.members)


class _Context:
    """Lazily computed data shared by the checks of one (R, S) pair."""

    def __init__(self, R: FiniteRing, S: MultSet):
        self.R = R
        self.S = S

    @cached_property
    def space(self) -> SpectrumSpace:
        return spec_s(self.R, self.S)

    @cached_property
    def lattice(self) -> list[Ideal]:
        return all_ideals(self.R)

    @cached_property
    def rad(self) -> dict[int, Ideal]:
        return {I.mask: s_radical(self.R, self.S, I) for I in self.lattice}

    def radical(self, I: Ideal) -> Ideal:
        hit = self.rad.get(I.mask)
        return hit if hit is not None else s_radical(self.R, self.S, I)

    @cached_property
    def V(self) -> dict[int, int]:
        return {I.mask: v_s(self.space, I) for I in self.lattice}

    @cached_property
    def principal_V(self) -> list[int]:
        return principal_varieties(self.space)

    @cached_property
    def flat(self):
        return s_flat_topology(self.space)

    @cached_property
    def zariski(self):
        return s_zariski_topology(self.space)

    @cached_property
    def lam(self) -> list[int]:
        return [lambda_closure(self.space, k) for k in range(len(self.space))]

    @cached_property
    def prime_points(self) -> list[int]:
        return [k for k, p in enumerate(self.space.points) if p.is_prime]


def _variety_of_subset(space: SpectrumSpace, E: list[int]) -> int:
    R = space.ring
    out = 0
    for k, pt in enumerate(space.points):
        if any(all(R.mul(s, e) in pt.ideal for e in E) for s in space.mults.members):
            out |= 1 << k
    return out


# ---------------------------------------------------------------------------
# individual checks; each returns (status, detail) or raises _Fail

def _check_radical_as_intersection(c: _Context):
    primes = [P for P in c.lattice if not P.mask & c.S.mask and is_prime(c.R, P)]
    for I in c.lattice:
        meet = whole_ring(c.R).mask
        for P in primes:
            if I <= P:
                meet &= P.mask
        if c.radical(I).mask != meet:
            raise _Fail("S-radical differs from the intersection of primes over I avoiding S",
                        ideal=_ideal(I), s_radical=_ideal(c.radical(I)), intersection=_pts(meet))
    return PASS, f"{len(c.lattice)} ideals"


def _check_variety_radical_order(c: _Context):
    full = c.space.full
    rad0 = c.radical(zero_ideal(c.R))
    for I in c.lattice:
        rI, VI = c.radical(I), c.V[I.mask]
        if (VI == full) != (rI == rad0):
            raise _Fail("V_S(I) = Spec_S R does not match sqrt_S(I) = sqrt_S(0)", ideal=_ideal(I))
        empty, whole, meets = VI == 0, rI.is_whole, bool(I.mask & c.S.mask)
        if not (empty == whole == meets):
            raise _Fail("V_S(I) empty, sqrt_S(I) = R, I meets S disagree", ideal=_ideal(I),
                        variety_empty=empty, radical_whole=whole, meets_s=meets)
        for J in c.lattice:
            rJ, VJ = c.radical(J), c.V[J.mask]
            if (VI & ~VJ == 0) != (rJ <= rI):
                raise _Fail("V_S(I) inside V_S(J) does not match sqrt_S(J) inside sqrt_S(I)",
                            I=_ideal(I), J=_ideal(J))
            if (VI == VJ) != (rI == rJ):
                raise _Fail("equal varieties do not match equal S-radicals", I=_ideal(I), J=_ideal(J))
    return PASS, f"{len(c.lattice) ** 2} ideal pairs"


def _check_variety_calculus(c: _Context):
    sp, R = c.space, c.R
    for E in [[a] for a in R.elements] + [list(p) for p in combinations(R.elements, 2)]:
        if _variety_of_subset(sp, E) != v_s(sp, ideal_generated(R, E)):
            raise _Fail("V_S(E) differs from V_S((E))", subset=E)
    if c.V[whole_ring(R).mask] != 0:
        raise _Fail("V_S(R) is not empty")
    if c.V[zero_ideal(R).mask] != sp.full:
        raise _Fail("V_S(0) is not the whole spectrum")
    meet_all, total = sp.full, zero_ideal(R)
    for I in c.lattice:
        meet_all &= c.V[I.mask]
        total = ideal_sum(total, I)
        for J in c.lattice:
            if c.V[I.mask] & c.V[J.mask] != v_s(sp, ideal_sum(I, J)):
                raise _Fail("intersection of varieties differs from variety of the sum",
                            I=_ideal(I), J=_ideal(J))
            union = c.V[I.mask] | c.V[J.mask]
            vi, vp = c.V[ideal_intersect(I, J).mask], v_s(sp, ideal_product(I, J))
            if not (union == vi == vp):
                raise _Fail("union of varieties differs from variety of intersection or product",
                            I=_ideal(I), J=_ideal(J), union=_pts(union),
                            of_intersection=_pts(vi), of_product=_pts(vp))
    if meet_all != v_s(sp, total):
        raise _Fail("intersection over the whole lattice differs from the variety of the total sum")
    return PASS, f"{len(c.lattice)} ideals"


def _check_radical_product(c: _Context):
    for I in c.lattice:
        for J in c.lattice:
            lhs = s_radical(c.R, c.S, ideal_product(c.radical(I), c.radical(J)))
            rhs = c.radical(ideal_product(I, J))
            if lhs != rhs:
                raise _Fail("sqrt_S(sqrt_S(I) sqrt_S(J)) != sqrt_S(IJ)", I=_ideal(I), J=_ideal(J),
                            lhs=_ideal(lhs), rhs=_ideal(rhs))
    return PASS, f"{len(c.lattice) ** 2} ideal pairs"


def _check_opens_are_varieties(c: _Context):
    found = varieties_for_opens(c.space, c.flat)
    missing = [U for U, I in found.items() if I is None]
    if missing:
        raise _Fail("flat open that is not an S-variety", opens=[_pts(U) for U in missing])
    for I in c.lattice:
        if not c.flat.is_open(c.V[I.mask]):
            raise _Fail("S-variety that is not flat open", ideal=_ideal(I))
    return PASS, f"{len(c.flat.opens)} flat opens"


def _check_lambda_formula(c: _Context):
    for k in range(len(c.space)):
        top = c.flat.point_closures[k]
        if top != c.lam[k]:
            raise _Fail("flat closure of a point differs from the formula set", point=k,
                        ideal=_ideal(c.space.points[k].ideal), closure=_pts(top), formula=_pts(c.lam[k]))
    return PASS, f"{len(c.space)} points"


def _check_generic_points(c: _Context):
    irr = irreducible_closed_sets(c.flat)
    for C in irr:
        try:
            generic_points(c.space, c.flat, C)
        except TheoremCounterexample as exc:
            raise _Fail(str(exc), **exc.payload) from None
    return PASS, f"{len(irr)} irreducible closed sets"


def _check_prime_lambda_injective(c: _Context):
    pp = c.prime_points
    if len(pp) < 2:
        return SKIPPED, "fewer than two prime points"
    for p, q in combinations(pp, 2):
        if c.lam[p] == c.lam[q]:
            raise _Fail("distinct prime points with equal flat closures", p=p, q=q)
    return PASS, f"{len(pp)} prime points"


def _check_localization_bijection(c: _Context):
    loc = localization_spec(c.R, c.S)
    try:
        idx = [c.space.index_of(P) for P in loc.primes]
    except KeyError:
        raise _Fail("prime avoiding S is not a spectrum point") from None
    if sorted(idx) != c.prime_points:
        raise _Fail("prime points differ from primes avoiding S", prime_points=c.prime_points,
                    localization=sorted(idx))
    images = [c.lam[k] for k in idx]
    if len(set(images)) != len(images):
        raise _Fail("closure map is not injective on primes avoiding S")
    irr = set(irreducible_closed_sets(c.flat))
    if set(images) != irr:
        raise _Fail("closures of primes avoiding S differ from the irreducible closed sets",
                    closures=sorted(map(_pts, images)), irreducible=sorted(map(_pts, irr)))
    maxima = {c.lam[c.space.index_of(P)] for P in loc.maximal}
    comps = set(irreducible_components(c.flat))
    if maxima != comps:
        raise _Fail("closures of maximal primes differ from the irreducible components",
                    closures=sorted(map(_pts, maxima)), components=sorted(map(_pts, comps)))
    return PASS, f"{len(idx)} primes, {len(comps)} components"


def _check_t0(c: _Context):
    t0 = is_t0(c.space, c.flat)
    all_prime = all(p.is_prime for p in c.space.points)
    colon_moves = any(p.colon_prime != p.ideal for p in c.space.points)
    if t0 != all_prime:
        raise _Fail("T0 property does not match 'every point is prime'", t0=t0, all_prime=all_prime)
    if colon_moves != (not all_prime):
        raise _Fail("non-prime points do not match points whose colon prime differs")
    return PASS, f"T0={t0}"


def _check_clopen_partitions(c: _Context):
    # Each condition is evaluated on every partition at once by collecting the
    # halves C1 for which it holds; the theorem says the three collections agree.
    full, R = c.space.full, c.R
    zar = {C for C in c.zariski.closed if c.zariski.is_closed(full & ~C)}
    flat = {C for C in c.flat.closed if c.flat.is_closed(full & ~C)}
    rad0 = c.radical(zero_ideal(R))
    V = c.principal_V
    cert: dict[int, tuple[int, int]] = {}
    for f1 in R.elements:
        for f2 in R.elements:
            if (V[f1] | V[f2] == full and not V[f1] & V[f2]
                    and R.add(f1, f2) in c.S and R.mul(f1, f2) in rad0):
                cert.setdefault(V[f1], (f1, f2))
    if not (zar == set(cert) == flat):
        odd = sorted((zar ^ set(cert)) | (zar ^ flat), key=from_mask)[0]
        raise _Fail("Zariski-closed, certificate and flat-closed disagree on a partition",
                    C1=_pts(odd), C2=_pts(full & ~odd), zariski=odd in zar,
                    certificate=cert.get(odd), flat=odd in flat)
    for C1 in zar:
        if find_clopen_certificate(c.space, C1, full & ~C1, V) is None:
            raise _Fail("clopen partition without certificate", C1=_pts(C1))
    nontrivial = len(zar - {0, full}) // 2
    if nontrivial == 0:
        return SKIPPED, "no nontrivial clopen partition"
    return PASS, f"{nontrivial} nontrivial clopen partitions"


def _check_connectivity(c: _Context):
    a, b = connected_components(c.flat), connected_components(c.zariski)
    if a != b:
        raise _Fail("flat and Zariski connected components differ", flat=[_pts(x) for x in a],
                    zariski=[_pts(x) for x in b])
    return PASS, f"{len(a)} components"


def _check_lambda_inside_open(c: _Context):
    full = c.space.full
    for I in c.lattice:
        D = full & ~c.V[I.mask]
        for k in from_mask(D):
            if c.lam[k] & ~D:
                raise _Fail("closure of a point of D_S(I) leaves D_S(I)", ideal=_ideal(I), point=k)
    return PASS, f"{len(c.lattice)} ideals"


def _check_noetherian(c: _Context):
    rep = noetherian_report(c.space)
    if not rep.consistent or not all(rep.conditions):
        raise _Fail("noetherian conditions disagree", conditions=list(rep.conditions))
    return PASS, f"longest closed chain {rep.longest_closed_chain}"


def _check_colon_continuity(c: _Context):
    for a in c.R.elements:
        pre = to_mask(k for k, p in enumerate(c.space.points) if a in p.colon_prime)
        if pre != c.principal_V[a]:
            raise _Fail("preimage of V(a) under the colon map differs from V_S(a)", element=a,
                        preimage=_pts(pre), variety=_pts(c.principal_V[a]))
    return PASS, f"{c.R.size} sub-basic opens"


def _check_colon_uniqueness(c: _Context):
    for k, pt in enumerate(c.space.points):
        for s in c.S.members:
            C = Ideal(c.R, colon_mask(c.R, pt.ideal.mask, s))
            if is_prime(c.R, C) and C != pt.colon_prime:
                raise _Fail("two prime colon ideals of one point differ", point=k,
                            ideal=_ideal(pt.ideal), s=s, colon=_ideal(C),
                            stored=_ideal(pt.colon_prime))
    return PASS, f"{len(c.space)} points"


def _check_scaled_points(c: _Context):
    sp = c.space
    for k, pt in enumerate(sp.points):
        for s in c.S.members:
            sP = Ideal(c.R, pt.ideal.scaled(s))
            try:
                j = sp.index_of(sP)
            except KeyError:
                raise _Fail("s*P is not an S-prime ideal", point=k, s=s, product=_ideal(sP)) from None
            if c.lam[j] != c.lam[k]:
                raise _Fail("closure of s*P differs from closure of P", point=k, s=s)
    return PASS, f"{len(sp) * len(c.S)} (point, s) pairs"


CHECKS: dict[str, Callable[[_Context], tuple[str, str]]] = {
    "prop-2.3": _check_radical_as_intersection,
    "prop-2.4": _check_variety_radical_order,
    "thm-2.1": _check_variety_calculus,
    "lemma-4.1": _check_radical_product,
    "cor-4.3-finite": _check_opens_are_varieties,
    "prop-4.4": _check_lambda_formula,
    "thm-4.5": _check_generic_points,
    "lemma-4.6": _check_prime_lambda_injective,
    "prop-4.7": _check_localization_bijection,
    "cor-4.8": _check_t0,
    "thm-5.1": _check_clopen_partitions,
    "cor-5.2": _check_connectivity,
    "lemma-6.1": _check_lambda_inside_open,
    "thm-6.2": _check_noetherian,
    "prop-3.2": _check_colon_continuity,
    "remark-3.1": _check_colon_uniqueness,
    "remark-4.x-sP": _check_scaled_points,
}


def _base_payload(R: FiniteRing, S: MultSet) -> dict[str, Any]:
    return {"ring": R.description, "mults": list(S.gens) if S.gens else list(S.members)}


def _run(tag: str, fn: Callable[[], tuple[str, str]], base: dict[str, Any]) -> TheoremCheck:
    t0 = time.perf_counter()
    try:
        status, detail = fn()
        witness = None
    except _Fail as exc:
        status, detail, witness = FAIL, exc.why, {**base, **exc.payload}
    except TheoremCounterexample as exc:
        status, detail, witness = FAIL, str(exc), {**base, **exc.payload}
    return TheoremCheck(tag, status, witness, time.perf_counter() - t0, detail)


def verify_all(R: FiniteRing, S: MultSet, only: set[str] | None = None) -> list[TheoremCheck]:
    """One check per theorem tag, in the fixed tag order."""
    ctx = _Context(R, S)
    base = _base_payload(R, S)
    try:
        ctx.space
    except TheoremCounterexample as exc:
        out = []
        for tag in TAGS:
            if only and tag not in only:
                continue
            if tag == "remark-3.1":
                out.append(TheoremCheck(tag, FAIL, {**base, **exc.payload}, 0.0, str(exc)))
            else:
                out.append(TheoremCheck(tag, SKIPPED, None, 0.0, "spectrum could not be built"))
        return out
    return [_run(tag, lambda fn=CHECKS[tag]: fn(ctx), base)
            for tag in TAGS if not only or tag in only]


def _morphism_check(R1: FiniteRing, R2: FiniteRing, S: MultSet, cap: int | None) -> tuple[str, str]:
    morphisms = enumerate_morphisms(R1, R2, cap)
    lattice = all_ideals(R1)
    used = 0
    for phi in morphisms:
        if any(phi.map[s] == 0 for s in S.members):
            continue
        used += 1
        ind = induced_map(phi, S)
        T = image_mults(phi, S)
        tflat = s_flat_topology(ind.target)
        for I in lattice:
            pulled = ind.preimage_of(v_s(ind.source, I))
            expected = v_s(ind.target, extension(phi, I))
            if pulled != expected:
                raise _Fail("preimage of V_S(I) differs from the variety of the extended ideal",
                            target=R2.description, morphism=list(phi.map), ideal=_ideal(I),
                            preimage=_pts(pulled), expected=_pts(expected),
                            image_mults=list(T.members))
            if not tflat.is_open(pulled):
                raise _Fail("preimage of a sub-basic flat open is not flat open",
                            target=R2.description, morphism=list(phi.map), ideal=_ideal(I))
    if not morphisms:
        return PASS, "no morphisms (vacuous)"
    return PASS, f"{used} of {len(morphisms)} morphisms avoid 0 on S"


def verify_morphisms(R1: FiniteRing, R2: FiniteRing, S: MultSet,
                     cap: int | None = None) -> list[TheoremCheck]:
    """Continuity of the induced spectrum map for every morphism ``R1 -> R2``."""
    base = {**_base_payload(R1, S), "target": R2.description}
    return [_run(MORPHISM_TAG, lambda: _morphism_check(R1, R2, S, cap), base)]


def replay(check: TheoremCheck) -> bool:
    """Re-run a failed check from its witness payload; True if it fails again."""
    if check.witness is None:
        return False
    w = check.witness
    R = ring_from_json(w["ring"])
    S = mult_closure(R, w["mults"])
    if check.id == MORPHISM_TAG:
        res = verify_morphisms(R, ring_from_json(w["target"]), S)
    else:
        res = verify_all(R, S, only={check.id})
    return any(r.status == FAIL for r in res)


__all__ = ["TheoremCheck", "verify_all", "verify_morphisms", "replay", "TAGS", "ALL_TAGS",
           "MORPHISM_TAG", "PASS", "FAIL", "SKIPPED"]
