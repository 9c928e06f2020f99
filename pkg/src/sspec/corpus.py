"""Ring corpora and whole-corpus verification reports.

A corpus file is a JSON list of entries::

    [{"ring": <ring>, "mults": [[3], []], "targets": [<ring>, ...]}, ...]

``targets`` is optional and lists the rings that morphisms out of ``ring``
are checked against.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from .errors import CapacityError, InvalidParameterError
from .ideals import mult_closure
from .ring import DEFAULT_MORPHISM_CAP, DEFAULT_SIZE_CAP, FiniteRing, ring_from_json, ring_label
from .verifier import FAIL, PASS, SKIPPED, TheoremCheck, verify_all, verify_morphisms

log = logging.getLogger(__name__)

_ENTRY_KEYS = {"ring", "mults", "targets"}


def _zn(n: int) -> dict:
    return {"kind": "zn", "n": n}


def _prod(*factors: dict) -> dict:
    return {"kind": "product", "factors": list(factors)}


def _poly(m: int, coeffs: list[int]) -> dict:
    return {"kind": "poly_quotient", "modulus": m, "poly": coeffs}


_Z4_TABLE = {
    "kind": "table", "n": 4, "one": 1,
    "add": [[(a + b) % 4 for b in range(4)] for a in range(4)],
    "mul": [[(a * b) % 4 for b in range(4)] for a in range(4)],
}

# Element numbering: Z/n by residue; products in mixed radix with the first
# factor most significant; polynomial quotients by base-m coefficient digits.
BUILTIN_CORPUS: list[dict[str, Any]] = [
    {"ring": _zn(12), "mults": [[], [3], [9], [5, 7]], "targets": [_zn(6), _zn(4), _zn(3), _zn(2)]},
    {"ring": _zn(6), "mults": [[], [5]], "targets": [_zn(2), _zn(3), _zn(6)]},
    {"ring": _zn(2), "mults": [[]], "targets": [_zn(2), _zn(3)]},
    {"ring": _poly(2, [1, 1, 1]), "mults": [[], [2]], "targets": [_poly(2, [1, 1, 1])]},
    {"ring": _poly(2, [0, 0, 1]), "mults": [[], [3]], "targets": [_zn(2), _poly(2, [0, 0, 1])]},
    {"ring": _zn(4), "mults": [[], [3]], "targets": [_zn(2), _zn(4)]},
    {"ring": _Z4_TABLE, "mults": [[]]},
    {"ring": _zn(8), "mults": [[], [3], [3, 5]], "targets": [_zn(4), _zn(2)]},
    {"ring": _prod(_zn(2), _zn(2)), "mults": [[], [2]], "targets": [_zn(2), _prod(_zn(2), _zn(2))]},
    {"ring": _prod(_zn(2), _zn(3)), "mults": [[], [3], [5]], "targets": [_zn(2), _zn(3), _zn(6)]},
    {"ring": _prod(_zn(2), _zn(2), _zn(2)), "mults": [[], [4], [6]],
     "targets": [_zn(2), _prod(_zn(2), _zn(2))]},
    {"ring": _prod(_zn(2), _zn(4)), "mults": [[], [6], [4]], "targets": [_zn(2), _zn(4)]},
    {"ring": _prod(_zn(2), _poly(2, [0, 0, 1])), "mults": [[], [4], [7]], "targets": [_zn(2)]},
    {"ring": _poly(2, [0, 0, 0, 1]), "mults": [[], [3]], "targets": [_poly(2, [0, 0, 1]), _zn(2)]},
    {"ring": _poly(3, [0, 0, 1]), "mults": [[], [2]], "targets": [_zn(3)]},
    {"ring": _zn(9), "mults": [[], [2]], "targets": [_zn(3)]},
    {"ring": _zn(18), "mults": [[], [2], [3]]},
    {"ring": _zn(36), "mults": [[], [2], [3], [5]]},
    {"ring": _prod(_zn(4), _zn(4)), "mults": [[], [6], [9]]},
    {"ring": _prod(_zn(2), _zn(2), _zn(4)), "mults": [[], [14]], "targets": [_zn(2)]},
    {"ring": _zn(60), "mults": [[], [2], [6]]},
    {"ring": _prod(*[_zn(2)] * 5), "mults": [[], [24], [16]]},
    {"ring": _prod(*[_zn(2)] * 6), "mults": [[56]]},
]


@dataclass
class CorpusEntry:
    ring: FiniteRing
    mults: list[list[int]]
    targets: list[FiniteRing] = field(default_factory=list)


@dataclass
class CorpusSpec:
    entries: list[CorpusEntry]
    size_cap: int = DEFAULT_SIZE_CAP
    morphism_cap: int = DEFAULT_MORPHISM_CAP


def parse_corpus(obj: Any, size_cap: int | None = None,
                 morphism_cap: int | None = None) -> CorpusSpec:
    """Parse and validate a corpus; any bad entry raises before checks run."""
    if not isinstance(obj, list):
        raise InvalidParameterError("corpus must be a JSON list")
    entries = []
    for k, e in enumerate(obj):
        if not isinstance(e, dict) or not {"ring", "mults"} <= set(e) <= _ENTRY_KEYS:
            raise InvalidParameterError(f"corpus entry {k}: expected keys ring, mults[, targets]")
        R = ring_from_json(e["ring"], size_cap)
        mults = e["mults"]
        if not isinstance(mults, list) or not all(isinstance(g, list) for g in mults):
            raise InvalidParameterError(f"corpus entry {k}: mults must be a list of generator lists")
        for gens in mults:
            mult_closure(R, gens)
        targets = [ring_from_json(t, size_cap) for t in e.get("targets", [])]
        entries.append(CorpusEntry(R, [list(g) for g in mults], targets))
    return CorpusSpec(entries,
                      DEFAULT_SIZE_CAP if size_cap is None else size_cap,
                      DEFAULT_MORPHISM_CAP if morphism_cap is None else morphism_cap)


def builtin_corpus() -> CorpusSpec:
    return parse_corpus(BUILTIN_CORPUS)


def load_corpus(source: str) -> CorpusSpec:
    if source == "builtin":
        return builtin_corpus()
    try:
        obj = json.loads(Path(source).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise InvalidParameterError(f"cannot read corpus {source}: {exc}") from exc
    return parse_corpus(obj)


@dataclass
class EntryReport:
    ring: FiniteRing
    mults: list[int]
    checks: list[TheoremCheck]
    target: FiniteRing | None = None

    def to_json(self) -> dict[str, Any]:
        out = {"ring": self.ring.description, "label": ring_label(self.ring.description),
               "mults": self.mults}
        if self.target is not None:
            out["target"] = self.target.description
            out["target_label"] = ring_label(self.target.description)
        out["checks"] = [c.to_json() for c in self.checks]
        return out


@dataclass
class CorpusReport:
    entries: list[EntryReport] = field(default_factory=list)
    morphisms: list[EntryReport] = field(default_factory=list)
    skipped_pairs: list[str] = field(default_factory=list)

    def all_checks(self) -> list[TheoremCheck]:
        return [c for e in self.entries + self.morphisms for c in e.checks]

    def counts(self) -> dict[str, int]:
        out = {PASS: 0, FAIL: 0, SKIPPED: 0}
        for c in self.all_checks():
            out[c.status] += 1
        return out

    @property
    def exit_status(self) -> int:
        return 1 if self.counts()[FAIL] else 0

    def to_json(self) -> dict[str, Any]:
        return {"entries": [e.to_json() for e in self.entries],
                "morphisms": [e.to_json() for e in self.morphisms],
                "skipped_pairs": self.skipped_pairs,
                "summary": self.counts(),
                "exit_status": self.exit_status}


def verify_corpus(spec: CorpusSpec, only: set[str] | None = None) -> CorpusReport:
    """Run every theorem check on every entry, in corpus order."""
    report = CorpusReport()
    for entry in spec.entries:
        for gens in entry.mults:
            S = mult_closure(entry.ring, gens)
            report.entries.append(EntryReport(entry.ring, gens, verify_all(entry.ring, S, only)))
            if only and "prop-3.3" not in only:
                continue
            for T in entry.targets:
                try:
                    checks = verify_morphisms(entry.ring, T, S, spec.morphism_cap)
                except CapacityError as exc:
                    msg = f"{ring_label(entry.ring.description)} -> {ring_label(T.description)}: {exc}"
                    log.warning("skipping morphism pair: %s", msg)
                    report.skipped_pairs.append(msg)
                    continue
                report.morphisms.append(EntryReport(entry.ring, gens, checks, T))
    return report


__all__ = ["BUILTIN_CORPUS", "CorpusEntry", "CorpusSpec", "CorpusReport", "EntryReport",
           "parse_corpus", "builtin_corpus", "load_corpus", "verify_corpus"]
