"""
When S consists of units
========================

With S = {1}, or any set of units, S-primes are just primes and the two
topologies become the classical Zariski and flat topologies.  Z/36 shows the
two pictures side by side for S = {1} and S = <2>.
"""

from sspec import (connected_components, make_zn, mult_closure, s_flat_topology, s_zariski_topology,
                   spec_s, units)

R = make_zn(36)
print("units:", sorted(units(R)))

for gens in ([], sorted(units(R)), [2]):
    S = mult_closure(R, gens)
    space = spec_s(R, S)
    names = [str(list(p.ideal.members)[:4])[:-1] + ", ...]" for p in space.points]
    print(f"\nS generated by {gens or [1]}: {len(space)} points")
    for n, p in zip(names, space.points):
        print(f"  {n:<22} prime={p.is_prime}")
    F, Z = s_flat_topology(space), s_zariski_topology(space)
    print("  flat opens   :", len(F.opens), " components:", len(connected_components(F)))
    print("  zariski opens:", len(Z.opens), " components:", len(connected_components(Z)))
