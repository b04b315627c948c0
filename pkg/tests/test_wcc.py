import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import bundle, built
from wcpkit import fixtures as fx
from wcpkit import wcc, wcp
from wcpkit.errors import PreconditionError
from wcpkit.structures import check_comonoid
from wcpkit.tensor import Mor, compose, dualize, identity, tensor

NAMES = list(fx.REGISTRY)


def dual(name):
    return fx.dual_bundle(bundle(name))


@pytest.mark.parametrize("name", NAMES)
def test_dual_fixture_passes_self_test(name):
    d = dual(name)
    assert fx.self_test(d).ok
    cb = wcc.build_crossed_coproduct(d.coquadruple)
    assert cb.consequences.ok
    assert wcc.check_precounit(d.coquadruple, cb, d.precounit).ok
    assert wcc.check_corecovery(cb, d.precounit).ok


@pytest.mark.parametrize("name", NAMES)
def test_dual_matrices_are_transposes(name):
    d = dual(name)
    cb = wcc.build_crossed_coproduct(d.coquadruple)
    pb = built(name)
    assert cb.gamma_idem == dualize(pb.nabla)
    assert cb.delta_big == dualize(pb.mu_big)
    assert cb.split.image.dim == pb.image.dim


@pytest.mark.parametrize("name", NAMES)
def test_dual_crosscheck(name):
    d = dual(name)
    rep = wcc.dual_crosscheck(d.coquadruple, d.precounit)
    assert rep.ok, rep.first_failure()


def test_round_trip_of_duals():
    q = bundle("WHA-PGPD").quadruple
    assert wcc.dual_quadruple(wcc.dual_coquadruple(q)) == q


def test_image_comonoid():
    d = dual("WHA-PGPD")
    cb = wcc.build_crossed_coproduct(d.coquadruple)
    assert check_comonoid(wcc.image_comonoid(cb, d.precounit)).ok


def test_omega_is_coalgebra_map():
    d = dual("WHA-PGPD")
    cb = wcc.build_crossed_coproduct(d.coquadruple)
    assert wcc.omega_properties(d.coquadruple, cb, d.precounit).ok


def test_scaled_coswitch_fails():
    cq = dual("CZ2").coquadruple
    bad = wcc.CoQuadruple(cq.C, cq.V, cq.chi.scale(2), cq.raw_tau)
    assert not wcc.check_coswitch(bad).passed("co-wmeas-wcp")
    with pytest.raises(PreconditionError):
        wcc.build_crossed_coproduct(bad)


def test_corrupted_cycle_fails():
    q = bundle("CZ3").quadruple
    A, V = q.A.carrier, q.V
    s = Mor.from_basis_map(V @ V, A @ V, lambda ij: {(0, sum(ij) % 3): 2 if ij == (1, 1) else 1})
    cq = wcc.dual_coquadruple(wcp.Quadruple(q.A, V, q.psi, s))
    rep = wcc.check_coquadruple(cq)
    assert rep.passed("co-twis-wcp")
    assert not rep.passed("co-cocy-wcp")


def test_zero_precounit_fails():
    d = dual("CZ2TW")
    cb = wcc.build_crossed_coproduct(d.coquadruple)
    u = d.precounit.upsilon
    rep = wcc.check_precounit(d.coquadruple, cb, wcc.PrecounitData(Mor.zero(u.dom, u.cod)))
    assert not rep.passed("co-pre2-wcp")


def test_direct_coproducts_of_biproducts():
    # coquadruples written by hand rather than obtained by dualizing
    for bd in (fx.make_bip_cz2(), fx.make_wha_biproduct(2)):
        cq = bd.coquadruple
        assert wcc.check_coquadruple(cq).ok
        assert wcc.check_precounit(cq, bd.coproduct, bd.precounit).ok
        assert wcc.dual_crosscheck(cq, bd.precounit).ok


def test_gamma_fixes_tau():
    cq = dual("WHA-PGPD").coquadruple
    g = wcc.gamma_of(cq)
    assert compose(cq.tau, g) == cq.tau
    assert cq.tau == compose(cq.raw_tau, g)


@given(st.fractions(min_value=-4, max_value=4, max_denominator=3).filter(lambda x: x != 0))
def test_dual_of_any_carry_cocycle(t):
    b = fx.make_group_algebra_crossed(2, t)
    d = fx.dual_bundle(b)
    rep = wcc.dual_crosscheck(d.coquadruple, d.precounit)
    assert rep.ok
    cb = wcc.build_crossed_coproduct(d.coquadruple)
    assert cb.gamma_idem == identity(cb.gamma_idem.dom)
    C = d.coquadruple.C.carrier
    ups = d.precounit.upsilon
    # precounit laws are exact counit laws in the Brzezinski case
    VC = cb.gamma_idem.dom
    assert compose(tensor(ups, identity(VC)), cb.delta_big) == identity(VC)
    assert C.dim == 2
