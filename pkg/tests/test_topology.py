import pytest
from hypothesis import given, settings, strategies as st

from conftest import corpus_pairs, pair_id
from oracles import classical_flat_opens, classical_zariski_closed, generated_topology
from sspec import (InvalidParameterError, clopen_certificate, closure, connected_components,
                   flat_opens_as_varieties, generic_points, irreducible_components,
                   is_irreducible, is_t0, lambda_closure, make_zn, mult_closure, noetherian_report,
                   principal, s_flat_topology, s_zariski_topology, spec_s, specialization_dot, v_s,
                   topology_from_open_subbasis, whole_ring, zero_ideal)
from sspec.ideals import from_mask
from sspec.ring import ring_label
from sspec.topology import is_topology, specialization_edges

PAIRS = corpus_pairs(max_size=36)
SMALL_RINGS = list({R.description["kind"] + str(R.description): R for R, _ in corpus_pairs(max_size=16)}.values())


def as_sets(space, masks):
    return {frozenset(frozenset(space.points[k].ideal.members) for k in from_mask(m)) for m in masks}


@pytest.fixture(scope="module")
def z6():
    R = make_zn(6)
    return R, spec_s(R, mult_closure(R, []))


@pytest.fixture(scope="module")
def z12_space(z12_s3):
    return spec_s(*z12_s3)


def test_subbasis_example():
    T = topology_from_open_subbasis(3, [0b011, 0b110])
    assert set(T.opens) == {0, 0b010, 0b011, 0b110, 0b111}
    with pytest.raises(InvalidParameterError):
        topology_from_open_subbasis(2, [0b100])


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 5).flatmap(
    lambda n: st.tuples(st.just(n), st.lists(st.integers(0, (1 << n) - 1), max_size=5))))
def test_subbasis_matches_oracle(args):
    n, sub = args
    T = topology_from_open_subbasis(n, sub)
    assert is_topology(n, T.opens)
    pts = list(range(n))
    expect = generated_topology(pts, [frozenset(from_mask(m)) for m in sub])
    assert {frozenset(from_mask(o)) for o in T.opens} == expect


def test_z12_flat_is_indiscrete(z12_space):
    F = s_flat_topology(z12_space)
    assert set(F.opens) == {0, 0b11}
    assert lambda_closure(z12_space, 0) == lambda_closure(z12_space, 1) == 0b11
    assert not is_t0(z12_space, F)
    assert irreducible_components(F) == [0b11]
    assert connected_components(F) == [0b11]
    gp = generic_points(z12_space, F, 0b11)
    assert gp.points == 0b11
    assert z12_space.points[gp.prime].ideal == principal(z12_space.ring, 2)
    with pytest.raises(InvalidParameterError):
        generic_points(z12_space, s_zariski_topology(z12_space), 0b11)


def test_z6_classical(z6):
    R, space = z6
    assert [p.ideal for p in space.points] == [principal(R, 3), principal(R, 2)]
    Z = s_zariski_topology(space)
    F = s_flat_topology(space)
    assert set(Z.opens) == set(F.opens) == {0, 1, 2, 3}
    assert is_t0(space, F)
    assert connected_components(F) == [1, 2]
    assert irreducible_components(Z) == [1, 2]
    assert clopen_certificate(space, 1, 2) == (3, 4)
    assert clopen_certificate(space, 3, 0) == (0, 1)
    with pytest.raises(InvalidParameterError):
        clopen_certificate(space, 1, 1)


def test_z6_opens_as_varieties(z6):
    R, space = z6
    got = flat_opens_as_varieties(space, s_flat_topology(space))
    assert got == {3: zero_ideal(R), 0: whole_ring(R), 1: principal(R, 3), 2: principal(R, 2)}


def test_closure_and_irreducibility(z6):
    _, space = z6
    Z = s_zariski_topology(space)
    assert closure(Z, 1) == 1
    assert closure(Z, 3) == 3
    assert not is_irreducible(Z, 3)
    assert is_irreducible(Z, 1)
    assert not is_irreducible(Z, 0)


def test_noetherian_finite(z12_space, z6):
    for space in (z12_space, z6[1]):
        rep = noetherian_report(space)
        assert rep.conditions == (True, True, True, True)
        assert rep.consistent


def test_dot_output(z12_space, z6):
    dot = specialization_dot(z12_space, s_flat_topology(z12_space))
    assert dot.startswith("digraph s_flat {")
    assert "p0 -> p1;" in dot and "p1 -> p0;" in dot
    assert '[label="[0, 6]"]' in dot
    assert "->" not in specialization_dot(z6[1], s_flat_topology(z6[1]))
    chain = topology_from_open_subbasis(2, [0b10])
    assert specialization_edges(chain) == [(0, 1)]


@pytest.mark.parametrize("pair", PAIRS, ids=[pair_id(p) for p in PAIRS])
def test_point_structure(pair):
    space = spec_s(*pair)
    F = s_flat_topology(space)
    Z = s_zariski_topology(space)
    for T in (F, Z):
        assert is_topology(len(space), T.opens)
        comps = connected_components(T)
        assert sum(comps) == space.full and len({c for c in comps}) == len(comps)
        for c in T.point_closures:
            assert is_irreducible(T, c)
        assert is_t0(space, T) == (len(set(T.point_closures)) == len(space))
    for k in range(len(space)):
        assert F.point_closures[k] == lambda_closure(space, k)


@pytest.mark.parametrize("R", SMALL_RINGS, ids=[ring_label(R.description) for R in SMALL_RINGS])
def test_classical_topologies(R):
    space = spec_s(R, mult_closure(R, []))
    primes = [frozenset(p.ideal.members) for p in space.points]
    Z = s_zariski_topology(space)
    F = s_flat_topology(space)
    assert as_sets(space, Z.closed) == classical_zariski_closed(R, primes)
    assert as_sets(space, F.opens) == classical_flat_opens(R, primes)


def test_trivial_subbases():
    assert set(topology_from_open_subbasis(3, []).opens) == {0, 0b111}
    assert len(topology_from_open_subbasis(3, [1, 2, 4]).opens) == 8
    indiscrete = topology_from_open_subbasis(3, [])
    assert closure(indiscrete, 0b010) == 0b111
    discrete = topology_from_open_subbasis(3, [1, 2, 4])
    assert closure(discrete, 0b101) == 0b101


def test_z6_lambda_and_generic(z6):
    R, space = z6
    F = s_flat_topology(space)
    assert lambda_closure(space, 1) == 0b10
    gp = generic_points(space, F, 0b01)
    assert gp.points == 0b01 and gp.prime == 0
    assert not is_irreducible(F, 0b11)


def test_one_point_space():
    from sspec import make_poly_quotient
    F4 = make_poly_quotient(2, [1, 1, 1])
    space = spec_s(F4, mult_closure(F4, []))
    F = s_flat_topology(space)
    assert is_t0(space, F)
    assert connected_components(F) == [1] == irreducible_components(F)
    assert generic_points(space, F, 1).points == 1
    assert noetherian_report(space).consistent
    assert flat_opens_as_varieties(space, F) == {1: zero_ideal(F4), 0: whole_ring(F4)}


def test_noetherian_witnesses(z12_space, z6):
    from sspec.topology import principal_varieties
    rep = noetherian_report(z12_space)
    V = principal_varieties(z12_space)
    f = rep.lambda_witnesses[1]
    assert V[f] == 0      # D_S(f) is the whole space, as for f = 3
    assert V[3] == 0
    rep6 = noetherian_report(z6[1])
    assert rep6.lambda_witnesses[1] == 3


def test_z12_flat_opens_as_varieties(z12_space):
    R = z12_space.ring
    got = flat_opens_as_varieties(z12_space, s_flat_topology(z12_space))
    assert got[0b11] == zero_ideal(R)
    # (3) and (1) both have empty variety; (3) comes first in lattice order
    assert got[0] == principal(R, 3)
    assert v_s(z12_space, whole_ring(R)) == 0
