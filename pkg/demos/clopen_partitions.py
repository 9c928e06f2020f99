"""
Splitting a spectrum with idempotent-like pairs
===============================================

A partition of the S-spectrum into two Zariski-closed pieces is always cut
out by elements f1, f2 with f1 + f2 in S and f1*f2 in the S-radical of 0.
Here we list those pieces and their certificates across a few rings.
"""

from sspec import clopen_certificate, make_product, make_zn, mult_closure, s_zariski_topology, spec_s
from sspec.ideals import from_mask

cases = [
    (make_zn(6), []),
    (make_zn(60), [2]),
    (make_product([make_zn(2), make_zn(2), make_zn(2)]), []),
]

for R, gens in cases:
    S = mult_closure(R, gens)
    space = spec_s(R, S)
    Z = s_zariski_topology(space)
    print(f"\n{R.description}  S generated by {gens or [1]}  ({len(space)} points)")
    for C1 in Z.closed:
        C2 = space.full & ~C1
        if C1 in (0, space.full) or C1 > C2 or not Z.is_closed(C2):
            continue
        f1, f2 = clopen_certificate(space, C1, C2)
        print(f"  {list(from_mask(C1))} | {list(from_mask(C2))}:  f1={f1}, f2={f2}, "
              f"f1+f2={R.add(f1, f2)}, f1*f2={R.mul(f1, f2)}")
