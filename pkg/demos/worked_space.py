"""
A small S-prime spectrum
========================

Z/12 with S generated by 3 has only two S-prime ideals, and one of them is
not prime.  This walks through the space point by point.
"""

from sspec import (irreducible_components, is_t0, lambda_closure, localization_spec, make_zn,
                   mult_closure, s_flat_topology, s_radical, s_zariski_topology, spec_s,
                   specialization_dot, zero_ideal)

R = make_zn(12)
S = mult_closure(R, [3])
print("S =", list(S.members))

space = spec_s(R, S)
for k, pt in enumerate(space.points):
    print(f"point {k}: {list(pt.ideal.members)}  witnesses {list(pt.witnesses)}  "
          f"prime={pt.is_prime}  colon prime {list(pt.colon_prime.members)}")

# every element killed by some s*a^n lands in the S-radical of zero
print("S-radical of (0):", list(s_radical(R, S, zero_ideal(R)).members))

# both topologies collapse to {empty, everything}
flat = s_flat_topology(space)
zar = s_zariski_topology(space)
print("flat opens:", [bin(o) for o in flat.opens], " zariski opens:", [bin(o) for o in zar.opens])

# the non-prime point (6) cannot be told apart from (2)
print("closures:", [bin(lambda_closure(space, k)) for k in range(len(space))])
print("T0:", is_t0(space, flat))
print("primes avoiding S:", [list(P.members) for P in localization_spec(R, S).primes])
print("irreducible components:", len(irreducible_components(flat)))

print(specialization_dot(space, flat))
