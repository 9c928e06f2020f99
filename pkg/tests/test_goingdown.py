import pytest

from oracles import going_down_fails
from sspec import (InvalidParameterError, RingMorphism, enumerate_morphisms, make_product, make_zn,
                   mult_closure, principal, zero_ideal)
from sspec.corpus import builtin_corpus
from sspec.goingdown import (CONTAINMENT, ORDER_MODES, S_SPECIALIZATION, GoingDownInstance,
                             GoingDownReport, check_going_down, replay, search_counterexamples,
                             search_pair)


@pytest.fixture(scope="module")
def z12_to_z6():
    Z12, Z6 = make_zn(12), make_zn(6)
    (phi,) = enumerate_morphisms(Z12, Z6)
    return phi, mult_closure(Z12, [3])


def test_example_instance_holds(z12_to_z6):
    phi, S = z12_to_z6
    Z12, Z6 = phi.source, phi.target
    inst = GoingDownInstance(phi, S, CONTAINMENT, principal(Z12, 6), principal(Z12, 2), principal(Z6, 2))
    res = check_going_down(inst)
    assert res.holds
    assert res.q_low == zero_ideal(Z6)
    assert GoingDownInstance.from_json(inst.to_json()) == inst


def test_invalid_instances_rejected(z12_to_z6):
    phi, S = z12_to_z6
    Z12, Z6 = phi.source, phi.target
    with pytest.raises(InvalidParameterError):
        check_going_down(GoingDownInstance(phi, S, CONTAINMENT, principal(Z12, 6), principal(Z12, 2),
                                           zero_ideal(Z6)))
    with pytest.raises(InvalidParameterError):
        check_going_down(GoingDownInstance(phi, S, CONTAINMENT, principal(Z12, 3), principal(Z12, 2),
                                           principal(Z6, 2)))
    with pytest.raises(InvalidParameterError):
        check_going_down(GoingDownInstance(phi, S, "sideways", principal(Z12, 6), principal(Z12, 2),
                                           principal(Z6, 2)))


@pytest.mark.parametrize("mode", ORDER_MODES)
def test_identity_has_no_counterexample(mode):
    for R in [make_zn(12), make_product([make_zn(2), make_zn(4)])]:
        report = GoingDownReport(mode)
        for gens in ([], [3] if R.size == 12 else [5]):
            search_pair(R, mult_closure(R, gens), R, mode, report)
        assert not report.found
        assert report.instances_checked > 0


def test_empty_targets():
    report = search_counterexamples(builtin_corpus(), targets=[])
    assert report.instances_checked == 0
    assert report.to_json()["result"] == "no counterexample found"


@pytest.mark.parametrize("mode", ORDER_MODES)
def test_every_reported_counterexample_replays(mode):
    report = search_counterexamples(builtin_corpus(), None, mode)
    assert report.morphisms_checked > 0
    for c in report.counterexamples:
        assert replay(c)


def test_known_failure():
    Z12, Z4 = make_zn(12), make_zn(4)
    (phi,) = enumerate_morphisms(Z12, Z4)
    inst = GoingDownInstance(phi, mult_closure(Z12, [3]), CONTAINMENT, principal(Z12, 6),
                             principal(Z12, 2), principal(Z4, 2))
    res = check_going_down(inst)
    assert not res.holds and res.q_low is None
    assert replay(inst.to_json())


def test_containment_matches_oracle():
    total = 0
    for entry in builtin_corpus().entries:
        if entry.ring.size > 16:
            continue
        for gens in entry.mults:
            S = mult_closure(entry.ring, gens)
            for T in entry.targets:
                for phi in enumerate_morphisms(entry.ring, T):
                    if any(phi.map[s] == 0 for s in S.members):
                        continue
                    report = GoingDownReport(CONTAINMENT)
                    search_pair_single(phi, S, report)
                    got = {(frozenset(c["p_low"]), frozenset(c["p_high"]), frozenset(c["q_high"]))
                           for c in report.counterexamples}
                    assert got == going_down_fails(entry.ring, T, phi.map, frozenset(S.members))
                    total += len(got)
    assert total > 0


def test_s_specialization_is_weaker_order(z12_to_z6):
    # every containment instance is also an s-specialization instance
    phi, S = z12_to_z6
    a, b = GoingDownReport(CONTAINMENT), GoingDownReport(S_SPECIALIZATION)
    search_pair(phi.source, S, phi.target, CONTAINMENT, a)
    search_pair(phi.source, S, phi.target, S_SPECIALIZATION, b)
    assert b.instances_checked >= a.instances_checked


def search_pair_single(phi: RingMorphism, S, report):
    from sspec.goingdown import _lift, instances
    from sspec.spectrum import induced_map
    ind = induced_map(phi, S)
    for pl, ph, qh in instances(ind, report.order_mode):
        if _lift(ind, report.order_mode, pl, qh) is None:
            report.counterexamples.append(GoingDownInstance(
                phi, S, report.order_mode, ind.source.points[pl].ideal,
                ind.source.points[ph].ideal, ind.target.points[qh].ideal).to_json())


@pytest.mark.parametrize("mode", ORDER_MODES)
def test_reflexive_and_identity_instances(z12_to_z6, mode):
    from sspec.spectrum import induced_map, preimage
    phi, S = z12_to_z6
    ind = induced_map(phi, S)
    for qh, ph in enumerate(ind.mapping):
        P, Q = ind.source.points[ph].ideal, ind.target.points[qh].ideal
        res = check_going_down(GoingDownInstance(phi, S, mode, P, P, Q))
        assert res.holds and preimage(phi, res.q_low) == P
    R = phi.source
    ident = RingMorphism.identity(R)
    pts = induced_map(ident, S).source.points
    for lo in pts:
        for hi in pts:
            if lo.ideal <= hi.ideal:
                res = check_going_down(GoingDownInstance(ident, S, CONTAINMENT, lo.ideal, hi.ideal, hi.ideal))
                assert res.holds and res.q_low == lo.ideal
