"""
Weak crossed biproducts: a crossed product and a crossed coproduct on the
same space A (x) C whose idempotents agree.

The coproduct side is a ``CoQuadruple`` with comonoid C and object A, so
its ambient space A (x) C is literally the product side's A (x) V with
V = C.  When nabla = Gamma both builds share one splitting.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import equivalence as eqv
from . import wcc, wcp
from .errors import InvariantError, PreconditionError, ShapeError
from .report import CheckReport
from .tensor import Mor, compose, tensor
from .wcc import CoQuadruple, CrossedCoproductBuild, PrecounitData
from .wcp import CrossedProductBuild, PreunitData, Quadruple


@dataclass(frozen=True)
class BiproductData:
    quadruple: Quadruple
    preunit: PreunitData
    product: CrossedProductBuild
    coquadruple: CoQuadruple
    precounit: PrecounitData
    coproduct: CrossedCoproductBuild

    @property
    def A(self):
        return self.quadruple.A

    @property
    def C(self):
        return self.coquadruple.C

    @property
    def shared_split(self) -> bool:
        return self.coproduct.split is self.product.split


def make_biproduct(q: Quadruple, nu: PreunitData, cq: CoQuadruple, ups: PrecounitData) -> BiproductData:
    """Wire a product quadruple on A (x) C and a coproduct quadruple on A (x) C.

    Both sides must satisfy their own defining conditions so they can be
    built; the compatibility conditions are left to ``check_biproduct``.
    """
    if q.V != cq.C.carrier or cq.V != q.A.carrier:
        raise ShapeError(f"product side lives on {q.AV!r}, coproduct side on {cq.VC!r}")
    pb = wcp.build_crossed_product(q)
    gamma = wcc.gamma_of(cq) if wcc.check_coswitch(cq).ok else None
    split = pb.split if gamma is not None and gamma == pb.nabla else None
    cb = wcc.build_crossed_coproduct(cq, split=split)
    return BiproductData(q, nu, pb, cq, ups, cb)


def check_biproduct(bd: BiproductData) -> CheckReport:
    q, cq = bd.quadruple, bd.coquadruple
    rep = CheckReport("weak crossed biproduct")
    rep.extend(wcp.check_quadruple(q))
    rep.extend(wcp.check_preunit(q, bd.product, bd.preunit))
    rep.extend(wcc.check_coquadruple(cq))
    rep.extend(wcc.check_precounit(cq, bd.coproduct, bd.precounit))
    rep.equation("nabla-equals-gamma", bd.product.nabla, bd.coproduct.gamma_idem)
    A, C = q.A.carrier, cq.C.carrier
    rep.equation("3-1-a", q.A.unit, compose(tensor(A, cq.C.counit), bd.preunit.nu))
    rep.equation("3-1-b", cq.C.counit, compose(bd.precounit.upsilon, tensor(q.A.unit, C)))
    return rep


def _require_valid(*bds):
    for bd in bds:
        rep = check_biproduct(bd)
        if not rep.ok:
            raise PreconditionError(f"biproduct violates {rep.first_failure()}", rep)
    if bds[0].A != bds[1].A or bds[0].C != bds[1].C:
        raise ShapeError("biproducts must share A and C")


_TS_NAMES = [
    ("T-left-linear", "T-left-linear"), ("S-left-linear", "S-left-linear"),
    ("preserv-preunit", "bi-preserv-preunit"), ("preserv-product", "bi-preserv-product"),
    ("preserv-idemp-1", "bi-preserv-idemp-1"), ("preserv-idemp-2", "bi-preserv-idemp-2"),
]
_CO_TS_NAMES = [
    ("P-right-colinear", "T-right-colinear"), ("R-right-colinear", "S-right-colinear"),
    ("co-preserv-preunit", "bi-co-preserv-preunit"), ("co-preserv-product", "bi-co-preserv-product"),
]


def _copy(dst: CheckReport, src: CheckReport, names):
    for old, new in names:
        e = src[old]
        dst.entries.append(type(e)(new, e.passed, e.lhs, e.rhs, e.note))


def verify_biproduct_ts(bd1: BiproductData, bd2: BiproductData, T: Mor, S: Mor) -> CheckReport:
    """T, S: A (x) C -> A (x) C serve as (T, S) on the product side and as
    (P, R) on the coproduct side."""
    _require_valid(bd1, bd2)
    prod = eqv.verify_ts(eqv.TransferPair(T, S), bd1.product, bd2.product, bd1.preunit, bd2.preunit)
    co = eqv.co_verify_ts(eqv.CoTransferPair(T, S), bd1.coproduct, bd2.coproduct, bd1.precounit, bd2.precounit)
    rep = CheckReport("biproduct transfer pair")
    _copy(rep, prod, _TS_NAMES)
    _copy(rep, co, _CO_TS_NAMES)
    return rep


_GAUGE_NAMES = [
    ("gamma-theta-preunit", "bi-gamma-theta-preunit"), ("gamma-theta-idemp", "bigamma-theta-idemp-1"),
    ("gamma-theta-psi", "bi-gamma-theta-psi"), ("gamma-theta-sigma", "bi-gamma-theta-sigma"),
    ("gamma-theta-special", "bi-gamma-theta-special"),
]
_CO_GAUGE_NAMES = [
    ("co-gamma-theta-preunit", "bi-co-gamma-theta-preunit"), ("co-gamma-theta-idemp", "bigamma-theta-idemp-2"),
    ("co-gamma-theta-psi", "bi-co-gamma-theta-psi"), ("co-gamma-theta-sigma", "bi-co-gamma-theta-sigma"),
    ("co-gamma-theta-special", "bi-co-gamma-theta-special"),
]


def transfer_probe(bd: BiproductData, gamma: Mor, zeta: Mor) -> bool:
    """Does ``(mu_A (x) C) o (A (x) gamma)`` equal ``(zeta (x) C) o (A (x) delta_C)``?"""
    A, mu = bd.A.carrier, bd.A.mult
    C, delta = bd.C.carrier, bd.C.comult
    return compose(tensor(mu, C), tensor(A, gamma)) == compose(tensor(zeta, C), tensor(A, delta))


def verify_biproduct_gauge(bd1: BiproductData, bd2: BiproductData, gamma: Mor, theta: Mor,
                           pi: Mor, zeta: Mor) -> CheckReport:
    _require_valid(bd1, bd2)
    prod = eqv.verify_gauge(eqv.GaugePair(gamma, theta), bd1.product, bd2.product, bd1.preunit, bd2.preunit)
    co = eqv.co_verify_gauge(eqv.CoGaugePair(pi, zeta), bd1.coproduct, bd2.coproduct,
                             bd1.precounit, bd2.precounit)
    rep = CheckReport("biproduct gauge")
    _copy(rep, prod, _GAUGE_NAMES)
    _copy(rep, co, _CO_GAUGE_NAMES)
    agree = transfer_probe(bd1, gamma, zeta)
    rep.header.append(f"probe: transfer from gamma {'equals' if agree else 'differs from'} transfer from zeta "
                      "(informational, not a condition)")
    return rep


def identity_biproduct_gauge(bd: BiproductData) -> tuple[Mor, Mor, Mor, Mor]:
    g = eqv.identity_gauge(bd.product)
    z = eqv.co_identity_gauge(bd.coproduct)
    return g.gamma, g.theta, z.pi, z.zeta


def check_biproduct_iso(w: eqv.IsoWitness, bd1: BiproductData, bd2: BiproductData) -> CheckReport:
    rep = eqv.check_iso(w, bd1.product, bd2.product, bd1.preunit, bd2.preunit)
    a, C = w.alpha, bd1.C.carrier
    c1, c2 = bd1.coproduct, bd2.coproduct
    rep.equation("comultiplicative", compose(tensor(a, a), c1.delta_small), compose(c2.delta_small, a))
    rep.equation("counit", compose(bd2.precounit.upsilon, c2.inj, a), compose(bd1.precounit.upsilon, c1.inj))
    rep.equation("colinear", compose(c2.image_coaction(), a), compose(tensor(a, C), c1.image_coaction()))
    return rep


def biproduct_iso(bd1: BiproductData, bd2: BiproductData, T: Mor, S: Mor) -> eqv.IsoWitness:
    rep = verify_biproduct_ts(bd1, bd2, T, S)
    if not rep.ok:
        raise PreconditionError(f"biproduct_iso: {rep.first_failure()} fails", rep)
    p1, p2 = bd1.product, bd2.product
    w = eqv.IsoWitness(compose(p2.proj, T, p1.inj), compose(p1.proj, S, p2.inj))
    rep = check_biproduct_iso(w, bd1, bd2)
    if not rep.ok:
        raise InvariantError(f"biproduct isomorphism violates {rep.first_failure()}", rep)
    return w


def transport_biproduct(bd: BiproductData, gamma: Mor, theta: Mor, pi: Mor, zeta: Mor) -> BiproductData:
    """Transport both sides along a gauge quadruple and rebuild."""
    q2, nu2 = eqv.transport_structure(bd.product, bd.preunit, gamma, theta)
    cq2, ups2 = eqv.co_transport_structure(bd.coproduct, bd.precounit, pi, zeta)
    return make_biproduct(q2, nu2, cq2, ups2)
