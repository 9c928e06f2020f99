"""
Looking for going-down failures
===============================

For every morphism out of the builtin corpus rings into their listed
targets, try to lift each chain of S-primes.  Both orders on the spectrum are
searched; the counts below are observations, not claims.
"""

from collections import Counter

from sspec.corpus import builtin_corpus
from sspec.goingdown import ORDER_MODES, replay, search_counterexamples
from sspec.ring import ring_label

corpus = builtin_corpus()
for mode in ORDER_MODES:
    report = search_counterexamples(corpus, None, mode)
    print(f"\n{mode}: {report.morphisms_checked} morphisms, {report.instances_checked} instances, "
          f"{len(report.counterexamples)} failures")
    pairs = Counter((ring_label(c["source"]), ring_label(c["target"])) for c in report.counterexamples)
    for (src, tgt), n in sorted(pairs.items()):
        print(f"  {src} -> {tgt}: {n}")
    assert all(replay(c) for c in report.counterexamples)

# one failure in detail: Z/12 -> Z/4 with S = <3>
report = search_counterexamples(corpus, None, "containment")
c = next(c for c in report.counterexamples if c["target"] == {"kind": "zn", "n": 4})
print("\nexample:", {k: c[k] for k in ("mults", "p_low", "p_high", "q_high")})
