import functools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from wcpkit import biproduct as bp
from wcpkit import equivalence as eqv
from wcpkit import fixtures as fx
from wcpkit.errors import PreconditionError, ShapeError
from wcpkit.structures import check_comonoid, check_monoid
from wcpkit.tensor import compose, identity
from wcpkit.wcc import image_comonoid
from wcpkit.wcp import PreunitData, image_monoid


@functools.lru_cache(maxsize=None)
def bip(name):
    return fx.make_bip_cz2() if name == "BIP-CZ2" else fx.make_wha_biproduct(2)


@functools.lru_cache(maxsize=None)
def shifted():
    bd = bip("BIP-CZ2")
    return bp.transport_biproduct(bd, *fx.bip_cz2_shift_gauge(bd))


@pytest.mark.parametrize("name", ["BIP-CZ2", "WHA-BIP"])
def test_check_biproduct(name):
    bd = bip(name)
    rep = bp.check_biproduct(bd)
    assert rep.ok, rep.first_failure()
    assert rep.passed("nabla-equals-gamma")
    assert rep.passed("3-1-a") and rep.passed("3-1-b")
    assert bd.shared_split


@pytest.mark.parametrize("name", ["BIP-CZ2", "WHA-BIP"])
def test_image_is_monoid_and_comonoid(name):
    bd = bip(name)
    assert check_monoid(image_monoid(bd.product, bd.preunit)).ok
    assert check_comonoid(image_comonoid(bd.coproduct, bd.precounit)).ok


@pytest.mark.parametrize("name", ["BIP-CZ2", "WHA-BIP"])
def test_identity_equivalence(name):
    bd = bip(name)
    n = bd.product.nabla
    assert bp.verify_biproduct_ts(bd, bd, n, n).ok
    rep = bp.verify_biproduct_gauge(bd, bd, *bp.identity_biproduct_gauge(bd))
    assert rep.ok, rep.first_failure()
    w = bp.biproduct_iso(bd, bd, n, n)
    assert w.alpha == identity(bd.product.image)
    assert bp.check_biproduct_iso(w, bd, bd).ok


def test_shift_gauge_transport():
    bd = bip("BIP-CZ2")
    g = fx.bip_cz2_shift_gauge(bd)
    bd2 = shifted()
    assert bp.check_biproduct(bd2).ok
    rep = bp.verify_biproduct_gauge(bd, bd2, *g)
    assert rep.ok, rep.first_failure()
    assert any(h.startswith("probe:") for h in rep.header)


def test_shift_gauge_iso_preserves_everything():
    bd = bip("BIP-CZ2")
    bd2 = shifted()
    gamma, theta, pi, zeta = fx.bip_cz2_shift_gauge(bd)
    tp = eqv.ts_from_gauge(eqv.GaugePair(gamma, theta), bd.product, bd2.product, bd.preunit, bd2.preunit)
    assert bp.verify_biproduct_ts(bd, bd2, tp.T, tp.S).ok
    w = bp.biproduct_iso(bd, bd2, tp.T, tp.S)
    rep = bp.check_biproduct_iso(w, bd, bd2)
    for key in ("multiplicative", "unit", "left-linear", "comultiplicative", "counit", "colinear"):
        assert rep.passed(key)
    # the isomorphism moves basis vectors: it is not the identity matrix
    assert w.alpha != identity(bd.product.image)


def test_corrupted_preunit_fails_3_1_a():
    bd = bip("BIP-CZ2")
    bad = bp.BiproductData(bd.quadruple, PreunitData(bd.preunit.nu.scale(2)), bd.product,
                           bd.coquadruple, bd.precounit, bd.coproduct)
    rep = bp.check_biproduct(bad)
    assert not rep.passed("3-1-a")
    assert rep.passed("3-1-b")


def test_corrupted_zeta_fails_special():
    bd = bip("BIP-CZ2")
    bd2 = shifted()
    gamma, theta, pi, zeta = fx.bip_cz2_shift_gauge(bd)
    rep = bp.verify_biproduct_gauge(bd, bd2, gamma, theta, pi, zeta.scale(2))
    assert not rep.passed("bi-co-gamma-theta-special")
    assert rep.passed("bi-gamma-theta-special")


def test_invalid_biproduct_rejected():
    bd = bip("BIP-CZ2")
    bad = bp.BiproductData(bd.quadruple, PreunitData(bd.preunit.nu.scale(2)), bd.product,
                           bd.coquadruple, bd.precounit, bd.coproduct)
    n = bd.product.nabla
    with pytest.raises(PreconditionError):
        bp.verify_biproduct_ts(bad, bd, n, n)


def test_mismatched_shapes():
    a, w = bip("BIP-CZ2"), bip("WHA-BIP")
    with pytest.raises(ShapeError):
        bp.make_biproduct(a.quadruple, a.preunit, w.coquadruple, w.precounit)
    with pytest.raises(ShapeError):
        bp.verify_biproduct_ts(a, w, a.product.nabla, a.product.nabla)


def test_transfer_probe_is_informational():
    bd = bip("BIP-CZ2")
    gamma, theta, pi, zeta = fx.bip_cz2_shift_gauge(bd)
    # the probe may go either way; it is reported and never affects ok
    probe = bp.transfer_probe(bd, gamma, zeta)
    rep = bp.verify_biproduct_gauge(bd, shifted(), gamma, theta, pi, zeta)
    word = "equals" if probe else "differs from"
    assert any(word in h for h in rep.header)
    assert rep.ok


def test_wha_biproduct_nabla_is_not_identity():
    bd = bip("WHA-BIP")
    assert bd.product.nabla != identity(bd.product.nabla.dom)
    assert compose(bd.product.nabla, bd.product.nabla) == bd.coproduct.gamma_idem


@given(st.data())
def test_biproduct_entries_match_separate_checks(data):
    from conftest import mors
    bd = bip("BIP-CZ2")
    bd2 = shifted()
    gamma, theta, pi, zeta = fx.bip_cz2_shift_gauge(bd)
    tp = eqv.ts_from_gauge(eqv.GaugePair(gamma, theta), bd.product, bd2.product, bd.preunit, bd2.preunit)
    T = tp.T + data.draw(mors(tp.T.dom, tp.T.cod))
    S = tp.S
    rep = bp.verify_biproduct_ts(bd, bd2, T, S)
    prod = eqv.verify_ts(eqv.TransferPair(T, S), bd.product, bd2.product, bd.preunit, bd2.preunit)
    co = eqv.co_verify_ts(eqv.CoTransferPair(T, S), bd.coproduct, bd2.coproduct, bd.precounit, bd2.precounit)
    for old, new in bp._TS_NAMES:
        assert rep.passed(new) == prod.passed(old)
    for old, new in bp._CO_TS_NAMES:
        assert rep.passed(new) == co.passed(old)
