"""S-prime spectra, the S-Zariski and S-flat topologies of finite commutative rings."""

from .errors import (CapacityError, InvalidMultSetError, InvalidParameterError,
                     RingValidationError, SSpecError, TheoremCounterexample)
from .ideals import (Ideal, MultSet, all_ideals, colon, ideal_generated, ideal_intersect,
                     ideal_product, ideal_sum, is_s_radical_ideal, mult_closure, principal,
                     radical, s_radical, whole_ring, zero_ideal)
from .ring import (FiniteRing, RingMorphism, enumerate_morphisms, load_ring, make_poly_quotient,
                   make_product, make_table, make_zn, ring_from_json, units)
from .spectrum import (SpectrumPoint, SpectrumSpace, d_s, induced_map, is_prime, is_s_prime,
                       localization_spec, spec_s, v_s, witness_colon)
from .topology import (FiniteTopology, clopen_certificate, closure, connected_components,
                       flat_opens_as_varieties, generic_points, irreducible_components,
                       is_irreducible, is_t0, lambda_closure, noetherian_report, s_flat_topology,
                       s_zariski_topology, specialization_dot, topology_from_open_subbasis)

__version__ = "0.1.0"
