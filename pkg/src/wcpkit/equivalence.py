"""
Equivalences of weak crossed products and coproducts.

Three descriptions of the same equivalence are translated into each other:
an isomorphism of the split images (``IsoWitness``), a transfer pair (T, S)
on the ambient spaces, and a gauge pair (gamma, theta).  All condition
checks are expressed on A(x)V / A(x)W, so the chosen splittings only matter
inside ``iso_from_ts`` and ``check_iso``.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import wcc, wcp
from .errors import InvariantError, PreconditionError, ShapeError, TransportError
from .report import CheckReport
from .tensor import Mor, compose, dualize, identity, tensor
from .wcc import CoQuadruple, CrossedCoproductBuild, PrecounitData
from .wcp import CrossedProductBuild, PreunitData, Quadruple


@dataclass(frozen=True)
class TransferPair:
    T: Mor
    S: Mor


@dataclass(frozen=True)
class GaugePair:
    gamma: Mor
    theta: Mor


@dataclass(frozen=True)
class IsoWitness:
    alpha: Mor
    alpha_inv: Mor


@dataclass(frozen=True)
class CoTransferPair:
    """P: V(x)C -> W(x)C and R: W(x)C -> V(x)C."""

    P: Mor
    R: Mor


@dataclass(frozen=True)
class CoGaugePair:
    """pi: W(x)C -> V and zeta: V(x)C -> W."""

    pi: Mor
    zeta: Mor


def _expect(m: Mor, dom, cod, what):
    if m.dom != dom or m.cod != cod:
        raise ShapeError(f"{what} must be {dom!r} -> {cod!r}, got {m.dom!r} -> {m.cod!r}")


def _same_monoid(bv: CrossedProductBuild, bw: CrossedProductBuild):
    if bv.quadruple.A != bw.quadruple.A:
        raise ShapeError("both crossed products must be built over the same monoid A")
    return bv.quadruple.A


def _require(rep: CheckReport, keys, what, exc=PreconditionError):
    bad = [k for k in keys if not rep.passed(k)]
    if bad:
        raise exc(f"{what}: {bad[0]} fails", rep)


# --------------------------------------------------------------------------
# (ii) transfer pairs


TS_CONDITIONS = ("T-left-linear", "S-left-linear", "preserv-preunit", "preserv-product",
                 "preserv-idemp-1", "preserv-idemp-2")


def verify_ts(tp: TransferPair, bv: CrossedProductBuild, bw: CrossedProductBuild,
              nu_v: PreunitData, nu_w: PreunitData) -> CheckReport:
    """Entries for every transfer-pair condition plus the two consequences
    (preserv-preunit-b) and (preserv-product-s)."""
    Am = _same_monoid(bv, bw)
    A, mu = Am.carrier, Am.mult
    V, W = bv.quadruple.V, bw.quadruple.V
    T, S = tp.T, tp.S
    _expect(T, A @ V, A @ W, "T")
    _expect(S, A @ W, A @ V, "S")
    rep = CheckReport("transfer pair")
    rep.equation("T-left-linear", compose(T, tensor(mu, V)), compose(tensor(mu, W), tensor(A, T)))
    rep.equation("S-left-linear", compose(S, tensor(mu, W)), compose(tensor(mu, V), tensor(A, S)))
    rep.equation("preserv-preunit", compose(T, nu_v.nu), nu_w.nu)
    rep.equation("preserv-product", compose(T, bv.mu_big), compose(bw.mu_big, tensor(T, T)))
    rep.equation("preserv-idemp-1", compose(S, T), bv.nabla)
    rep.equation("preserv-idemp-2", compose(T, S), bw.nabla)
    rep.equation("preserv-preunit-b", compose(S, nu_w.nu), nu_v.nu, note="consequence")
    rep.equation("preserv-product-s", compose(S, bw.mu_big), compose(bv.mu_big, tensor(S, S)), note="consequence")
    return rep


def check_iso(w: IsoWitness, bv: CrossedProductBuild, bw: CrossedProductBuild,
              nu_v: PreunitData, nu_w: PreunitData) -> CheckReport:
    """alpha is an isomorphism of monoids and of left A-modules between the images."""
    Am = _same_monoid(bv, bw)
    _expect(w.alpha, bv.image, bw.image, "alpha")
    _expect(w.alpha_inv, bw.image, bv.image, "alpha_inv")
    a, ai = w.alpha, w.alpha_inv
    f = Am.field
    rep = CheckReport("isomorphism of images")
    rep.equation("inverse-1", compose(ai, a), identity(bv.image, f))
    rep.equation("inverse-2", compose(a, ai), identity(bw.image, f))
    rep.equation("unit", compose(a, bv.proj, nu_v.nu), compose(bw.proj, nu_w.nu))
    rep.equation("multiplicative", compose(a, bv.mu_small), compose(bw.mu_small, tensor(a, a)))
    rep.equation("left-linear", compose(a, bv.image_action()), compose(bw.image_action(), tensor(Am.carrier, a)))
    return rep


def ts_from_iso(w: IsoWitness, bv, bw, nu_v, nu_w, check: bool = True) -> TransferPair:
    """``T = i_W o alpha o p_V`` and ``S = i_V o alpha^-1 o p_W``.

    With ``check=False`` the formulas are applied without verifying either
    the witness or the result.
    """
    if check:
        pre = check_iso(w, bv, bw, nu_v, nu_w)
        if not pre.ok:
            raise PreconditionError(f"ts_from_iso: {pre.first_failure()} fails", pre)
    T = compose(bw.inj, w.alpha, bv.proj)
    S = compose(bv.inj, w.alpha_inv, bw.proj)
    if check:
        rep = verify_ts(TransferPair(T, S), bv, bw, nu_v, nu_w)
        rep.equation("preserv-comp-1", compose(T, S, T), T)
        rep.equation("preserv-comp-2", compose(S, T, S), S)
        if not rep.ok:
            raise InvariantError(f"transfer pair violates {rep.first_failure()}", rep)
    return TransferPair(T, S)


def iso_from_ts(tp: TransferPair, bv, bw, nu_v, nu_w) -> IsoWitness:
    _require(verify_ts(tp, bv, bw, nu_v, nu_w), TS_CONDITIONS, "iso_from_ts")
    T, S = tp.T, tp.S
    w = IsoWitness(compose(bw.proj, T, bv.inj), compose(bv.proj, S, bw.inj))
    rep = check_iso(w, bv, bw, nu_v, nu_w)
    rep.equation("eq1", compose(bv.proj, S), compose(bv.proj, S, bw.nabla))
    rep.equation("eq2", compose(bw.proj, T), compose(bw.proj, T, bv.nabla))
    rep.equation("eq3", compose(S, bw.inj), compose(bv.nabla, S, bw.inj))
    rep.equation("eq4", compose(T, bv.inj), compose(bw.nabla, T, bv.inj))
    if not rep.ok:
        raise InvariantError(f"induced isomorphism violates {rep.first_failure()}", rep)
    return w


# --------------------------------------------------------------------------
# (iii) gauge pairs


GAUGE_CONDITIONS = ("gamma-theta-preunit", "gamma-theta-idemp", "gamma-theta-psi",
                    "gamma-theta-sigma", "gamma-theta-special")


def _gauge_shapes(gp: GaugePair, A, V, W):
    _expect(gp.gamma, V, A @ W, "gamma")
    _expect(gp.theta, W, A @ V, "theta")


def verify_gauge(gp: GaugePair, bv: CrossedProductBuild, bw: CrossedProductBuild,
                 nu_v: PreunitData, nu_w: PreunitData) -> CheckReport:
    Am = _same_monoid(bv, bw)
    A, mu, eta = Am.carrier, Am.mult, Am.unit
    qv, qw = bv.quadruple, bw.quadruple
    V, W = qv.V, qw.V
    _gauge_shapes(gp, A, V, W)
    g, th = gp.gamma, gp.theta
    rep = CheckReport("gauge pair")
    rep.equation("gamma-theta-preunit", nu_v.nu, compose(tensor(mu, V), tensor(A, th), nu_w.nu))
    rep.equation("gamma-theta-idemp", th, compose(bv.nabla, th))
    rep.equation("gamma-theta-psi", qw.psi,
                 compose(tensor(mu, W), tensor(mu, g), tensor(A, qv.psi), tensor(th, A)))
    rep.equation("gamma-theta-sigma", qw.sigma,
                 compose(tensor(mu, W), tensor(A, g), bv.mu_big, tensor(th, th)))
    rep.equation("gamma-theta-special", compose(tensor(mu, V), tensor(A, th), g),
                 compose(bv.nabla, tensor(eta, V)))
    return rep


def gauge_from_ts(tp: TransferPair, bv, bw, nu_v, nu_w) -> GaugePair:
    _require(verify_ts(tp, bv, bw, nu_v, nu_w), TS_CONDITIONS, "gauge_from_ts")
    Am = bv.quadruple.A
    V, W = bv.quadruple.V, bw.quadruple.V
    gamma = compose(tp.T, tensor(Am.unit, V))
    theta = compose(bv.nabla, tp.S, tensor(Am.unit, W))
    gp = GaugePair(gamma, theta)
    rep = verify_gauge(gp, bv, bw, nu_v, nu_w)
    rep.equation("preserv-preunit-b", compose(tp.S, nu_w.nu), nu_v.nu)
    if not rep.ok:
        raise InvariantError(f"gauge pair violates {rep.first_failure()}", rep)
    return gp


def ts_from_gauge(gp: GaugePair, bv, bw, nu_v, nu_w) -> TransferPair:
    _require(verify_gauge(gp, bv, bw, nu_v, nu_w), GAUGE_CONDITIONS, "ts_from_gauge")
    Am = bv.quadruple.A
    A, mu, eta = Am.carrier, Am.mult, Am.unit
    V, W = bv.quadruple.V, bw.quadruple.V
    T = compose(tensor(mu, W), tensor(A, gp.gamma))
    S = compose(tensor(mu, V), tensor(A, gp.theta))
    tp = TransferPair(T, S)
    rep = verify_ts(tp, bv, bw, nu_v, nu_w)
    rep.equation("gamma-theta-special-2", compose(T, gp.theta), compose(bw.nabla, tensor(eta, W)))
    rep.equation("gamma-theta-preunit-b", nu_w.nu, compose(T, nu_v.nu))
    if not rep.ok:
        raise InvariantError(f"transfer pair violates {rep.first_failure()}", rep)
    return tp


def identity_gauge(b: CrossedProductBuild) -> GaugePair:
    """``gamma = theta = nabla o (eta_A (x) V)``."""
    q = b.quadruple
    g = compose(b.nabla, tensor(q.A.unit, q.V))
    return GaugePair(g, g)


def _sup11_sides(gp: GaugePair, qv: Quadruple, qw: Quadruple):
    A, mu = qv.A.carrier, qv.A.mult
    V, W = qv.V, qw.V
    g = gp.gamma
    lhs = compose(tensor(mu, W), tensor(mu, qw.sigma), tensor(A, g, W), tensor(qv.psi, W), tensor(V, g))
    rhs = compose(tensor(mu, W), tensor(A, g), qv.sigma)
    return lhs, rhs


def check_sup11(gp: GaugePair, bv: CrossedProductBuild, qw: Quadruple) -> CheckReport:
    """The sup-11 identity, after confirming its two hypotheses."""
    qv = bv.quadruple
    if qv.A != qw.A:
        raise ShapeError("both quadruples must share the monoid A")
    A, mu, eta = qv.A.carrier, qv.A.mult, qv.A.unit
    V, W = qv.V, qw.V
    _gauge_shapes(gp, A, V, W)
    g, th = gp.gamma, gp.theta
    rep = CheckReport("sup-11")
    rep.equation("gamma-theta-sigma", qw.sigma, compose(tensor(mu, W), tensor(A, g), bv.mu_big, tensor(th, th)))
    rep.equation("gamma-theta-special", compose(tensor(mu, V), tensor(A, th), g), compose(bv.nabla, tensor(eta, V)))
    _require(rep, ("gamma-theta-sigma", "gamma-theta-special"), "check_sup11")
    rep.equation("sup-11", *_sup11_sides(gp, qv, qw))
    return rep


def transport_structure(bv: CrossedProductBuild, nu_v: PreunitData, gamma: Mor, theta: Mor
                        ) -> tuple[Quadruple, PreunitData]:
    """Define psi_W, sigma_W, nu_W from a gauge pair and verify the result.

    Raises TransportError naming the first condition the transported data
    violates.
    """
    qv = bv.quadruple
    A, mu, eta = qv.A.carrier, qv.A.mult, qv.A.unit
    V = qv.V
    W = theta.dom
    gp = GaugePair(gamma, theta)
    _gauge_shapes(gp, A, V, W)
    pre = CheckReport("transport hypotheses")
    pre.equation("gamma-theta-idemp", theta, compose(bv.nabla, theta))
    pre.equation("gamma-theta-special", compose(tensor(mu, V), tensor(A, theta), gamma),
                 compose(bv.nabla, tensor(eta, V)))
    _require(pre, ("gamma-theta-idemp", "gamma-theta-special"), "transport_structure")
    psi_w = compose(tensor(mu, W), tensor(mu, gamma), tensor(A, qv.psi), tensor(theta, A))
    sigma_w = compose(tensor(mu, W), tensor(A, gamma), bv.mu_big, tensor(theta, theta))
    nu_w = PreunitData(compose(tensor(mu, W), tensor(A, gamma), nu_v.nu))
    qw = Quadruple(qv.A, W, psi_w, sigma_w)
    rep = wcp.check_quadruple(qw)
    if not rep.ok:
        raise TransportError(f"transported data violates {rep.first_failure()}", rep)
    bw = wcp.build_crossed_product(qw)
    rep.extend(wcp.check_preunit(qw, bw, nu_w))
    rep.extend(verify_gauge(gp, bv, bw, nu_v, nu_w))
    if not rep.ok:
        raise TransportError(f"transported data violates {rep.first_failure()}", rep)
    return qw, nu_w


# --------------------------------------------------------------------------
# Brzezinski case


def check_brzezinski(q: Quadruple, eta_v: Mor) -> CheckReport:
    A, V = q.A.carrier, q.V
    eta_a = q.A.unit
    f = q.field
    rep = CheckReport("Brzezinski crossed product")
    rep.equation("brz1", compose(q.psi, tensor(eta_v, A)), tensor(A, eta_v))
    rep.equation("brz2", compose(q.psi, tensor(V, eta_a)), tensor(eta_a, V))
    rep.equation("brz3-a", compose(q.sigma, tensor(eta_v, V)), tensor(eta_a, V))
    rep.equation("brz3-b", compose(q.sigma, tensor(V, eta_v)), tensor(eta_a, V))
    if not wcp.check_switch(q).ok:
        rep.flag("nabla-identity", False, note="switch condition fails")
        return rep
    rep.equation("nabla-identity", wcp.nabla_of(q), identity(A @ V, f))
    m = wcp.mu_big_of(q)
    nu = tensor(eta_a, eta_v)
    AV = A @ V
    rep.equation("unit-left", compose(m, tensor(nu, AV)), identity(AV, f))
    rep.equation("unit-right", compose(m, tensor(AV, nu)), identity(AV, f))
    return rep


PANAITE_HYPOTHESES = ("gamma-theta-psi", "gamma-theta-sigma", "gamma-theta-special-BRZ")


def check_panaite_reduction(gp: GaugePair, bv: CrossedProductBuild, bw: CrossedProductBuild,
                            eta_v: Mor, eta_w: Mor) -> CheckReport:
    """Assume only the three hypotheses, then verify each derived condition."""
    Am = _same_monoid(bv, bw)
    A, mu, eta = Am.carrier, Am.mult, Am.unit
    qv, qw = bv.quadruple, bw.quadruple
    V, W = qv.V, qw.V
    f = Am.field
    _gauge_shapes(gp, A, V, W)
    if bv.nabla != identity(A @ V, f) or bw.nabla != identity(A @ W, f):
        raise PreconditionError("check_panaite_reduction: nabla is not the identity")
    for q, e in ((qv, eta_v), (qw, eta_w)):
        brz = check_brzezinski(q, e)
        if not brz.ok:
            raise PreconditionError(f"check_panaite_reduction: {brz.first_failure()} fails", brz)
    g, th = gp.gamma, gp.theta
    rep = CheckReport("Panaite reduction")
    rep.header.append("assumed: " + ", ".join(PANAITE_HYPOTHESES))
    rep.equation("gamma-theta-psi", qw.psi,
                 compose(tensor(mu, W), tensor(mu, g), tensor(A, qv.psi), tensor(th, A)))
    rep.equation("gamma-theta-sigma", qw.sigma,
                 compose(tensor(mu, W), tensor(A, g), bv.mu_big, tensor(th, th)))
    rep.equation("gamma-theta-special-BRZ", compose(tensor(mu, V), tensor(A, th), g), tensor(eta, V))
    _require(rep, PANAITE_HYPOTHESES, "check_panaite_reduction")
    b_side = compose(tensor(mu, W), tensor(A, g), th)
    rep.equation("gamma-theta-special-BRZ-b", b_side, tensor(eta, W))
    rep.equation("gamma-theta-special-BRZ-1-Pan", b_side, tensor(eta, W))
    inner = compose(tensor(mu, W), tensor(A, qw.sigma), tensor(compose(g, eta_v), W))
    rep.equation("aux-brz", compose(tensor(mu, W), tensor(A, inner)), identity(A @ W, f))
    rep.equation("gamma-theta-preunit-b-BRZ", compose(g, eta_v), tensor(eta, eta_w))
    rep.equation("gamma-theta-preunit-BRZ", compose(th, eta_w), tensor(eta, eta_v))
    rep.equation("gamma-theta-unit-Pan-1", compose(th, eta_w), tensor(eta, eta_v))
    rep.equation("gamma-theta-unit-Pan-2", compose(g, eta_v), tensor(eta, eta_w))
    rep.equation("sup-11-Pan", *_sup11_sides(gp, qv, qw))
    return rep


# --------------------------------------------------------------------------
# coproduct side


def _same_comonoid(cv: CrossedCoproductBuild, cw: CrossedCoproductBuild):
    if cv.coquadruple.C != cw.coquadruple.C:
        raise ShapeError("both crossed coproducts must be built over the same comonoid C")
    return cv.coquadruple.C


CO_TS_CONDITIONS = ("P-right-colinear", "R-right-colinear", "co-preserv-preunit", "co-preserv-product",
                    "co-preserv-idemp-1", "co-preserv-idemp-2")


def co_verify_ts(ctp: CoTransferPair, cv: CrossedCoproductBuild, cw: CrossedCoproductBuild,
                 ups_v: PrecounitData, ups_w: PrecounitData) -> CheckReport:
    Cm = _same_comonoid(cv, cw)
    C, delta = Cm.carrier, Cm.comult
    V, W = cv.coquadruple.V, cw.coquadruple.V
    P, R = ctp.P, ctp.R
    _expect(P, V @ C, W @ C, "P")
    _expect(R, W @ C, V @ C, "R")
    rep = CheckReport("cotransfer pair")
    rep.equation("P-right-colinear", compose(tensor(W, delta), P), compose(tensor(P, C), tensor(V, delta)))
    rep.equation("R-right-colinear", compose(tensor(V, delta), R), compose(tensor(R, C), tensor(W, delta)))
    rep.equation("co-preserv-preunit", compose(ups_w.upsilon, P), ups_v.upsilon)
    rep.equation("co-preserv-product", compose(cw.delta_big, P), compose(tensor(P, P), cv.delta_big))
    rep.equation("co-preserv-idemp-1", compose(R, P), cv.gamma_idem)
    rep.equation("co-preserv-idemp-2", compose(P, R), cw.gamma_idem)
    rep.equation("co-preserv-preunit-b", compose(ups_v.upsilon, R), ups_w.upsilon, note="consequence")
    rep.equation("co-preserv-product-r", compose(cv.delta_big, R), compose(tensor(R, R), cw.delta_big),
                 note="consequence")
    return rep


CO_GAUGE_CONDITIONS = ("co-gamma-theta-preunit", "co-gamma-theta-idemp", "co-gamma-theta-psi",
                       "co-gamma-theta-sigma", "co-gamma-theta-special")


def _co_gauge_shapes(cg: CoGaugePair, C, V, W):
    _expect(cg.pi, W @ C, V, "pi")
    _expect(cg.zeta, V @ C, W, "zeta")


def co_verify_gauge(cg: CoGaugePair, cv: CrossedCoproductBuild, cw: CrossedCoproductBuild,
                    ups_v: PrecounitData, ups_w: PrecounitData) -> CheckReport:
    Cm = _same_comonoid(cv, cw)
    C, delta, eps = Cm.carrier, Cm.comult, Cm.counit
    qv, qw = cv.coquadruple, cw.coquadruple
    V, W = qv.V, qw.V
    _co_gauge_shapes(cg, C, V, W)
    pi, z = cg.pi, cg.zeta
    rep = CheckReport("cogauge pair")
    rep.equation("co-gamma-theta-preunit", compose(ups_w.upsilon, tensor(z, C), tensor(V, delta)), ups_v.upsilon)
    rep.equation("co-gamma-theta-idemp", z, compose(z, cv.gamma_idem))
    rep.equation("co-gamma-theta-psi", qw.chi,
                 compose(tensor(C, z), tensor(qv.chi, C), tensor(pi, delta), tensor(W, delta)))
    rep.equation("co-gamma-theta-sigma", qw.tau,
                 compose(tensor(z, z), cv.delta_big, tensor(pi, C), tensor(W, delta)))
    rep.equation("co-gamma-theta-special", compose(pi, tensor(z, C), tensor(V, delta)),
                 compose(tensor(V, eps), cv.gamma_idem))
    return rep


def co_gauge_from_ts(ctp: CoTransferPair, cv, cw, ups_v, ups_w) -> CoGaugePair:
    _require(co_verify_ts(ctp, cv, cw, ups_v, ups_w), CO_TS_CONDITIONS, "co_gauge_from_ts")
    eps = cv.coquadruple.C.counit
    V, W = cv.coquadruple.V, cw.coquadruple.V
    pi = compose(tensor(V, eps), ctp.R)
    zeta = compose(tensor(W, eps), ctp.P, cv.gamma_idem)
    cg = CoGaugePair(pi, zeta)
    rep = co_verify_gauge(cg, cv, cw, ups_v, ups_w)
    rep.equation("co-preserv-preunit-b", compose(ups_v.upsilon, ctp.R), ups_w.upsilon)
    if not rep.ok:
        raise InvariantError(f"cogauge pair violates {rep.first_failure()}", rep)
    return cg


def co_ts_from_gauge(cg: CoGaugePair, cv, cw, ups_v, ups_w) -> CoTransferPair:
    _require(co_verify_gauge(cg, cv, cw, ups_v, ups_w), CO_GAUGE_CONDITIONS, "co_ts_from_gauge")
    Cm = cv.coquadruple.C
    C, delta, eps = Cm.carrier, Cm.comult, Cm.counit
    V, W = cv.coquadruple.V, cw.coquadruple.V
    P = compose(tensor(cg.zeta, C), tensor(V, delta))
    R = compose(tensor(cg.pi, C), tensor(W, delta))
    ctp = CoTransferPair(P, R)
    rep = co_verify_ts(ctp, cv, cw, ups_v, ups_w)
    rep.equation("co-gamma-theta-special-2", compose(cg.zeta, R), compose(tensor(W, eps), cw.gamma_idem))
    rep.equation("co-gamma-theta-preunit-b", ups_w.upsilon, compose(ups_v.upsilon, R))
    if not rep.ok:
        raise InvariantError(f"cotransfer pair violates {rep.first_failure()}", rep)
    return ctp


def co_identity_gauge(b: CrossedCoproductBuild) -> CoGaugePair:
    """``pi = zeta = (V (x) eps_C) o Gamma``."""
    cq = b.coquadruple
    z = compose(tensor(cq.V, cq.C.counit), b.gamma_idem)
    return CoGaugePair(z, z)


def co_transport_structure(cv: CrossedCoproductBuild, ups_v: PrecounitData, pi: Mor, zeta: Mor
                           ) -> tuple[CoQuadruple, PrecounitData]:
    """Mirror of ``transport_structure``: chi_W, tau_W, upsilon_W from (pi, zeta)."""
    cq = cv.coquadruple
    Cm = cq.C
    C, delta, eps = Cm.carrier, Cm.comult, Cm.counit
    V = cq.V
    W = zeta.cod
    cg = CoGaugePair(pi, zeta)
    _co_gauge_shapes(cg, C, V, W)
    pre = CheckReport("cotransport hypotheses")
    pre.equation("co-gamma-theta-idemp", zeta, compose(zeta, cv.gamma_idem))
    pre.equation("co-gamma-theta-special", compose(pi, tensor(zeta, C), tensor(V, delta)),
                 compose(tensor(V, eps), cv.gamma_idem))
    _require(pre, ("co-gamma-theta-idemp", "co-gamma-theta-special"), "co_transport_structure")
    chi_w = compose(tensor(C, zeta), tensor(cq.chi, C), tensor(pi, delta), tensor(W, delta))
    tau_w = compose(tensor(zeta, zeta), cv.delta_big, tensor(pi, C), tensor(W, delta))
    ups_w = PrecounitData(compose(ups_v.upsilon, tensor(pi, C), tensor(W, delta)))
    cw_q = CoQuadruple(Cm, W, chi_w, tau_w)
    rep = wcc.check_coquadruple(cw_q)
    if not rep.ok:
        raise TransportError(f"transported data violates {rep.first_failure()}", rep)
    cw = wcc.build_crossed_coproduct(cw_q)
    rep.extend(wcc.check_precounit(cw_q, cw, ups_w))
    rep.extend(co_verify_gauge(cg, cv, cw, ups_v, ups_w))
    if not rep.ok:
        raise TransportError(f"transported data violates {rep.first_failure()}", rep)
    return cw_q, ups_w


# --------------------------------------------------------------------------
# duality cross-checks for the coproduct family


def _dual_side(cb: CrossedCoproductBuild, ups: PrecounitData):
    q = wcc.dual_quadruple(cb.coquadruple)
    return wcp.build_crossed_product(q), PreunitData(dualize(ups.upsilon))


_CO_TS_PAIRS = [
    ("P-right-colinear", "S-left-linear"), ("R-right-colinear", "T-left-linear"),
    ("co-preserv-preunit", "preserv-preunit-b"), ("co-preserv-product", "preserv-product-s"),
    ("co-preserv-idemp-1", "preserv-idemp-1"), ("co-preserv-idemp-2", "preserv-idemp-2"),
    ("co-preserv-preunit-b", "preserv-preunit"), ("co-preserv-product-r", "preserv-product"),
]


def _compare(rep: CheckReport, direct: CheckReport, mirrored: CheckReport, pairs):
    for co, pr in pairs:
        a, b = direct.passed(co), mirrored.passed(pr)
        rep.flag(f"agree:{co}", a == b, note=f"direct={'pass' if a else 'fail'}")


def co_ts_crosscheck(ctp: CoTransferPair, cv, cw, ups_v, ups_w) -> CheckReport:
    """Compare ``co_verify_ts`` with ``verify_ts`` on the dualized data,
    where T = D(R) and S = D(P)."""
    bv, nv = _dual_side(cv, ups_v)
    bw, nw = _dual_side(cw, ups_w)
    direct = co_verify_ts(ctp, cv, cw, ups_v, ups_w)
    mirrored = verify_ts(TransferPair(dualize(ctp.R), dualize(ctp.P)), bv, bw, nv, nw)
    rep = CheckReport("cotransfer duality crosscheck")
    _compare(rep, direct, mirrored, _CO_TS_PAIRS)
    return rep


def co_gauge_crosscheck(cg: CoGaugePair, cv, cw, ups_v, ups_w) -> CheckReport:
    """Compare ``co_verify_gauge`` with ``verify_gauge`` where gamma = D(pi)
    and theta = D(zeta)."""
    bv, nv = _dual_side(cv, ups_v)
    bw, nw = _dual_side(cw, ups_w)
    direct = co_verify_gauge(cg, cv, cw, ups_v, ups_w)
    mirrored = verify_gauge(GaugePair(dualize(cg.pi), dualize(cg.zeta)), bv, bw, nv, nw)
    rep = CheckReport("cogauge duality crosscheck")
    _compare(rep, direct, mirrored, [(f"co-{k}", k) for k in GAUGE_CONDITIONS])
    return rep
