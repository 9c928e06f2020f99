"""Brute-force experiments on going-down for S-prime ideals.

Given ``phi: R1 -> R2`` and ``S`` in ``R1`` with ``0`` not in ``phi(S)``, an
instance is a chain ``p_low <= p_high`` of S-primes of ``R1`` and an
``phi(S)``-prime ``q_high`` of ``R2`` lying over ``p_high``.  Going-down holds
for the instance if some ``q_low <= q_high`` lies over ``p_low``.

Two readings of ``<=`` are supported: plain containment, and
``s*p_low`` contained in ``p_high`` for some ``s`` (``s_specialization``).
Nothing here asserts the answer; the search only reports what it finds.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Any, Iterator

from .corpus import CorpusSpec
from .errors import CapacityError, InvalidParameterError
from .ideals import Ideal, MultSet, ideal_from_members, mult_closure
from .ring import FiniteRing, RingMorphism, enumerate_morphisms, ring_from_json, ring_label
from .spectrum import InducedMap, SpectrumSpace, induced_map, preimage

log = logging.getLogger(__name__)

CONTAINMENT = "containment"
S_SPECIALIZATION = "s_specialization"
ORDER_MODES = (CONTAINMENT, S_SPECIALIZATION)


def _normalize_mode(mode: str) -> str:
    mode = mode.replace("-", "_")
    if mode not in ORDER_MODES:
        raise InvalidParameterError(f"unknown order mode {mode!r}")
    return mode


def below(space: SpectrumSpace, lo: int, hi: int, mode: str) -> bool:
    """Whether point ``lo`` lies below point ``hi`` in the chosen order."""
    P, Q = space.points[lo].ideal, space.points[hi].ideal
    if mode == CONTAINMENT:
        return P <= Q
    return any(P.scaled(s) & ~Q.mask == 0 for s in space.mults.members)


@dataclass(frozen=True)
class GoingDownInstance:
    phi: RingMorphism
    S: MultSet
    order_mode: str
    p_low: Ideal
    p_high: Ideal
    q_high: Ideal

    def to_json(self) -> dict[str, Any]:
        return {"source": self.phi.source.description, "target": self.phi.target.description,
                "morphism": list(self.phi.map), "mults": list(self.S.gens or self.S.members),
                "order_mode": self.order_mode, "p_low": list(self.p_low.members),
                "p_high": list(self.p_high.members), "q_high": list(self.q_high.members)}

    @classmethod
    def from_json(cls, obj: dict[str, Any]) -> "GoingDownInstance":
        R1, R2 = ring_from_json(obj["source"]), ring_from_json(obj["target"])
        phi = RingMorphism(R1, R2, tuple(obj["morphism"]))
        return cls(phi, mult_closure(R1, obj["mults"]), _normalize_mode(obj["order_mode"]),
                   ideal_from_members(R1, obj["p_low"]), ideal_from_members(R1, obj["p_high"]),
                   ideal_from_members(R2, obj["q_high"]))


@dataclass(frozen=True)
class GoingDownResult:
    holds: bool
    q_low: Ideal | None


def _lift(ind: InducedMap, mode: str, p_low: int, q_high: int) -> int | None:
    for t, s in enumerate(ind.mapping):
        if s == p_low and below(ind.target, t, q_high, mode):
            return t
    return None


def check_going_down(instance: GoingDownInstance) -> GoingDownResult:
    """Look for a point below ``q_high`` lying over ``p_low``."""
    mode = _normalize_mode(instance.order_mode)
    ind = induced_map(instance.phi, instance.S)
    try:
        lo = ind.source.index_of(instance.p_low)
        hi = ind.source.index_of(instance.p_high)
        qh = ind.target.index_of(instance.q_high)
    except KeyError as exc:
        raise InvalidParameterError(f"instance ideal is not a spectrum point: {exc}") from None
    if preimage(instance.phi, instance.q_high) != instance.p_high:
        raise InvalidParameterError("q_high does not lie over p_high")
    if not below(ind.source, lo, hi, mode):
        raise InvalidParameterError("p_low is not below p_high")
    t = _lift(ind, mode, lo, qh)
    return GoingDownResult(t is not None, None if t is None else ind.target.points[t].ideal)


def instances(ind: InducedMap, mode: str) -> Iterator[tuple[int, int, int]]:
    """All valid ``(p_low, p_high, q_high)`` index triples for an induced map."""
    src = ind.source
    for qh, ph in enumerate(ind.mapping):
        for pl in range(len(src)):
            if below(src, pl, ph, mode):
                yield pl, ph, qh


@dataclass
class GoingDownReport:
    order_mode: str
    counterexamples: list[dict[str, Any]] = field(default_factory=list)
    instances_checked: int = 0
    morphisms_checked: int = 0
    skipped: list[str] = field(default_factory=list)

    @property
    def found(self) -> bool:
        return bool(self.counterexamples)

    def to_json(self) -> dict[str, Any]:
        return {"order_mode": self.order_mode, "instances_checked": self.instances_checked,
                "morphisms_checked": self.morphisms_checked,
                "counterexamples": self.counterexamples, "skipped": self.skipped,
                "result": "counterexamples found" if self.found else "no counterexample found"}


def search_pair(R1: FiniteRing, S: MultSet, R2: FiniteRing, mode: str,
                report: GoingDownReport, cap: int | None = None) -> None:
    """Add every failing instance for morphisms ``R1 -> R2`` to ``report``."""
    for phi in enumerate_morphisms(R1, R2, cap):
        if any(phi.map[s] == 0 for s in S.members):
            continue
        report.morphisms_checked += 1
        ind = induced_map(phi, S)
        for pl, ph, qh in instances(ind, mode):
            report.instances_checked += 1
            if _lift(ind, mode, pl, qh) is None:
                inst = GoingDownInstance(phi, S, mode, ind.source.points[pl].ideal,
                                         ind.source.points[ph].ideal, ind.target.points[qh].ideal)
                report.counterexamples.append(inst.to_json())


def search_counterexamples(corpus: CorpusSpec, targets: list[FiniteRing] | None,
                           order_mode: str = CONTAINMENT) -> GoingDownReport:
    """Search every corpus (ring, S) against ``targets``.

    With ``targets=None`` each entry's own target list is used.  Pairs whose
    source exceeds the morphism cap are skipped and logged.
    """
    mode = _normalize_mode(order_mode)
    report = GoingDownReport(mode)
    for entry in corpus.entries:
        tlist = entry.targets if targets is None else targets
        for gens in entry.mults:
            S = mult_closure(entry.ring, gens)
            for T in tlist:
                try:
                    search_pair(entry.ring, S, T, mode, report, corpus.morphism_cap)
                except CapacityError as exc:
                    msg = f"{ring_label(entry.ring.description)} -> {ring_label(T.description)}: {exc}"
                    log.warning("skipping: %s", msg)
                    report.skipped.append(msg)
    return report


def replay(counterexample: dict[str, Any]) -> bool:
    """True if a reported counterexample still fails."""
    return not check_going_down(GoingDownInstance.from_json(counterexample)).holds
