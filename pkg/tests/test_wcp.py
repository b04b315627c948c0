from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import bundle, built, pair_groupoid_nabla, pair_groupoid_product, twisted_group_product
from wcpkit import fixtures as fx
from wcpkit import wcp
from wcpkit.errors import PreconditionError
from wcpkit.tensor import Mor, compose, identity, swap, tensor

nonzero = st.fractions(min_value=-5, max_value=5, max_denominator=4).filter(lambda x: x != 0)


@pytest.mark.parametrize("name", list(fx.REGISTRY))
def test_fixture_quadruples_pass(name):
    b = bundle(name)
    assert wcp.check_quadruple(b.quadruple).ok
    pb = built(name)
    assert pb.consequences.ok
    assert wcp.check_preunit(b.quadruple, pb, b.preunit).ok
    assert wcp.check_recovery(pb, b.preunit).ok
    assert fx.self_test(b).ok


@pytest.mark.parametrize("n,t", [(1, 1), (2, 1), (3, 1), (2, 2), (3, Fraction(-1, 3))])
def test_group_algebra_product_matches_direct_formula(n, t):
    b = fx.make_group_algebra_crossed(n, t)
    pb = wcp.build_crossed_product(b.quadruple)
    assert pb.mu_big == twisted_group_product(n, t)
    assert pb.nabla == identity(b.quadruple.AV)


@pytest.mark.parametrize("n", [2, 3])
def test_pair_groupoid_matches_matrix_units(n):
    pb = built("WHA-PGPD" if n == 2 else "WHA-PGPD3")
    assert pb.nabla == pair_groupoid_nabla(n)
    assert pb.mu_big == pair_groupoid_product(n)
    assert pb.image.dim == n * n


def test_image_monoid_unit_and_associativity():
    b = bundle("WHA-PGPD")
    pb = built("WHA-PGPD")
    m = wcp.image_monoid(pb, b.preunit)
    from wcpkit.structures import check_monoid
    assert check_monoid(m).ok


def test_scaled_switch_fails():
    b = bundle("CZ2")
    q = b.quadruple
    bad = wcp.Quadruple(q.A, q.V, q.psi.scale(2), q.raw_sigma)
    rep = wcp.check_switch(bad)
    assert not rep.passed("wmeas-wcp")
    with pytest.raises(PreconditionError):
        wcp.build_crossed_product(bad)


def corrupt_sigma(q, n):
    # c(1, 1) = 2 and c = 1 elsewhere breaks c(1,1) c(2,2) = c(1,2) c(1,0)
    A, V = q.A.carrier, q.V
    return Mor.from_basis_map(V @ V, A @ V, lambda ij: {(0, sum(ij) % n): 2 if ij == (1, 1) else 1})


def test_corrupted_cocycle_fails():
    q = bundle("CZ3").quadruple
    bad = wcp.Quadruple(q.A, q.V, q.psi, corrupt_sigma(q, 3))
    rep = wcp.check_quadruple(bad)
    assert rep.passed("twis-wcp")
    assert not rep.passed("cocy2-wcp")
    with pytest.raises(PreconditionError, match="cocy2-wcp"):
        wcp.build_crossed_product(bad)
    m = wcp.mu_big_of(bad)
    AV = bad.AV
    assert compose(m, tensor(m, identity(AV))) != compose(m, tensor(identity(AV), m))


def test_zero_preunit_fails_pre2():
    b = bundle("CZ2TW")
    pb = built("CZ2TW")
    zero = wcp.PreunitData(Mor.zero(b.preunit.nu.dom, b.preunit.nu.cod))
    rep = wcp.check_preunit(b.quadruple, pb, zero)
    assert not rep.passed("pre2-wcp")


@pytest.mark.parametrize("name", ["CZ2TW", "WHA-PGPD", "WHA-PGPD3"])
def test_nabla_from_preunit(name):
    b = bundle(name)
    pb = built(name)
    AV = b.quadruple.AV
    assert pb.nabla == compose(pb.mu_big, tensor(identity(AV), b.preunit.nu))


@pytest.mark.parametrize("name", ["CZ2TW", "WHA-PGPD"])
def test_recover_psi_sigma_exact(name):
    b = bundle(name)
    psi, sigma = wcp.recover_psi_sigma(built(name), b.preunit)
    assert psi == b.quadruple.psi
    assert sigma == b.quadruple.sigma


def test_beta_is_algebra_map():
    b = bundle("WHA-PGPD")
    assert wcp.beta_properties(b.quadruple, built("WHA-PGPD"), b.preunit).ok


def test_sigma_normalization():
    b = bundle("WHA-PGPD")
    q = b.quadruple
    assert q.sigma == compose(wcp.nabla_of(q), q.raw_sigma)
    again = wcp.Quadruple(q.A, q.V, q.psi, q.sigma)
    assert again.sigma == q.sigma


# -- properties


@given(st.sampled_from([2, 3]), nonzero)
def test_any_carry_cocycle_gives_associative_product(n, t):
    b = fx.make_group_algebra_crossed(n, t)
    assert wcp.check_quadruple(b.quadruple).ok
    pb = wcp.build_crossed_product(b.quadruple)
    assert pb.consequences.passed("associativity")
    assert wcp.check_preunit(b.quadruple, pb, b.preunit).ok


@given(nonzero.filter(lambda s: s != 1))
def test_scaled_switch_never_passes(s):
    q = bundle("CZ3").quadruple
    assert not wcp.check_switch(wcp.Quadruple(q.A, q.V, q.psi.scale(s), q.raw_sigma)).ok


vec4 = st.lists(st.integers(-4, 4), min_size=4, max_size=4)


@given(vec4, vec4, vec4)
def test_image_product_associative_on_random_elements(x, y, z):
    pb = built("WHA-PGPD")
    im = pb.image

    def el(v):
        return Mor.from_rows(im.__class__(), im, [[c] for c in v])

    def mul(a, b):
        return compose(pb.mu_small, tensor(a, b))

    X, Y, Z = el(x), el(y), el(z)
    assert mul(mul(X, Y), Z) == mul(X, mul(Y, Z))


@given(st.lists(st.integers(-3, 3), min_size=4, max_size=4))
def test_nabla_fixes_image_and_kills_kernel(v):
    pb = built("WHA-PGPD")
    AV = pb.quadruple.AV
    x = Mor.from_rows(AV.__class__(), AV, [[c] for c in v] + [[0]] * (AV.dim - 4))
    y = compose(pb.nabla, x)
    assert compose(pb.nabla, y) == y
    assert compose(pb.nabla, x - y).is_zero()


def test_swap_is_the_group_switch():
    q = bundle("CZ3").quadruple
    assert q.psi == swap(q.V, q.A.carrier)
