"""Monoids, comonoids, modules and comodules with exact axiom checkers."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ShapeError
from .report import CheckReport
from .tensor import K, Mor, Obj, compose, dualize, identity, swap, tensor


def _expect(m: Mor, dom: Obj, cod: Obj, what: str):
    if m.dom != dom or m.cod != cod:
        raise ShapeError(f"{what} must be {dom!r} -> {cod!r}, got {m.dom!r} -> {m.cod!r}")


@dataclass(frozen=True)
class Monoid:
    carrier: Obj
    unit: Mor
    mult: Mor

    def __post_init__(self):
        A = self.carrier
        _expect(self.unit, K, A, "unit")
        _expect(self.mult, A @ A, A, "multiplication")

    @property
    def field(self):
        return self.mult.field


@dataclass(frozen=True)
class Comonoid:
    carrier: Obj
    counit: Mor
    comult: Mor

    def __post_init__(self):
        C = self.carrier
        _expect(self.counit, C, K, "counit")
        _expect(self.comult, C, C @ C, "comultiplication")

    @property
    def field(self):
        return self.comult.field


@dataclass(frozen=True)
class LeftModule:
    monoid: Monoid
    carrier: Obj
    action: Mor

    def __post_init__(self):
        _expect(self.action, self.monoid.carrier @ self.carrier, self.carrier, "action")


@dataclass(frozen=True)
class RightComodule:
    comonoid: Comonoid
    carrier: Obj
    coaction: Mor

    def __post_init__(self):
        _expect(self.coaction, self.carrier, self.carrier @ self.comonoid.carrier, "coaction")


@dataclass(frozen=True)
class WeakHopfData:
    """Monoid and comonoid on one carrier plus a stored antipode.

    Only the pieces the crossed-product formulas consume are checked; the
    weak bialgebra compatibilities and antipode identities are not.
    """

    carrier: Obj
    unit: Mor
    mult: Mor
    counit: Mor
    comult: Mor
    antipode: Mor

    def __post_init__(self):
        H = self.carrier
        _expect(self.antipode, H, H, "antipode")
        Monoid(H, self.unit, self.mult)
        Comonoid(H, self.counit, self.comult)

    @property
    def monoid(self) -> Monoid:
        return Monoid(self.carrier, self.unit, self.mult)

    @property
    def comonoid(self) -> Comonoid:
        return Comonoid(self.carrier, self.counit, self.comult)

    @property
    def field(self):
        return self.mult.field

    def delta_tensor(self) -> Mor:
        """``(H (x) c_{H,H} (x) H) o (delta (x) delta)``."""
        H = self.carrier
        return compose(tensor(H, swap(H, H, self.field), H), tensor(self.comult, self.comult))


# --------------------------------------------------------------------------


def check_monoid(m: Monoid) -> CheckReport:
    A, eta, mu = m.carrier, m.unit, m.mult
    rep = CheckReport("monoid axioms")
    idA = identity(A, m.field)
    rep.equation("right-unit", compose(mu, tensor(A, eta)), idA)
    rep.equation("left-unit", compose(mu, tensor(eta, A)), idA)
    rep.equation("associativity", compose(mu, tensor(A, mu)), compose(mu, tensor(mu, A)))
    return rep


def check_comonoid(c: Comonoid) -> CheckReport:
    C, eps, delta = c.carrier, c.counit, c.comult
    rep = CheckReport("comonoid axioms")
    idC = identity(C, c.field)
    rep.equation("left-counit", compose(tensor(eps, C), delta), idC)
    rep.equation("right-counit", compose(tensor(C, eps), delta), idC)
    rep.equation("coassociativity", compose(tensor(delta, C), delta), compose(tensor(C, delta), delta))
    return rep


def check_left_module(lm: LeftModule) -> CheckReport:
    A, M, phi = lm.monoid.carrier, lm.carrier, lm.action
    rep = CheckReport("left module axioms")
    rep.equation("module-unit", compose(phi, tensor(lm.monoid.unit, M)), identity(M, phi.field))
    rep.equation("module-assoc", compose(phi, tensor(A, phi)), compose(phi, tensor(lm.monoid.mult, M)))
    return rep


def check_right_comodule(rc: RightComodule) -> CheckReport:
    C, M, rho = rc.comonoid.carrier, rc.carrier, rc.coaction
    rep = CheckReport("right comodule axioms")
    rep.equation("comodule-counit", compose(tensor(M, rc.comonoid.counit), rho), identity(M, rho.field))
    rep.equation("comodule-coassoc", compose(tensor(rho, C), rho), compose(tensor(M, rc.comonoid.comult), rho))
    return rep


def check_module_monoid(lm: LeftModule, algebra: Monoid, hopf: WeakHopfData) -> CheckReport:
    """Module axioms for ``H`` acting on ``A`` plus multiplicativity of the action,
    ``phi o (H (x) mu_A) = mu_A o (phi (x) phi) o (H (x) c_{H,A} (x) A) o (delta_H (x) A (x) A)``."""
    if lm.carrier != algebra.carrier or lm.monoid.carrier != hopf.carrier:
        raise ShapeError("module carrier must be the algebra, acting monoid must be H")
    H, A, phi = hopf.carrier, algebra.carrier, lm.action
    rep = check_left_module(lm)
    rep.title = "weak module monoid (partial)"
    rep.header.append("axiom choice: module laws + multiplicativity of the action; "
                      "the weak unit compatibility is not checked")
    rhs = compose(algebra.mult, tensor(phi, phi), tensor(H, swap(H, A, phi.field), A), tensor(hopf.comult, A, A))
    rep.equation("action-multiplicative", compose(phi, tensor(H, algebra.mult)), rhs)
    return rep


def check_monoid_morphism(f: Mor, src: Monoid, dst: Monoid) -> CheckReport:
    _expect(f, src.carrier, dst.carrier, "monoid morphism")
    rep = CheckReport("monoid morphism")
    rep.equation("multiplicative", compose(dst.mult, tensor(f, f)), compose(f, src.mult))
    rep.equation("unit", compose(f, src.unit), dst.unit)
    return rep


def check_comonoid_morphism(f: Mor, src: Comonoid, dst: Comonoid) -> CheckReport:
    _expect(f, src.carrier, dst.carrier, "comonoid morphism")
    rep = CheckReport("comonoid morphism")
    rep.equation("comultiplicative", compose(tensor(f, f), src.comult), compose(dst.comult, f))
    rep.equation("counit", compose(dst.counit, f), src.counit)
    return rep


def dual_comonoid(m: Monoid) -> Comonoid:
    """Comonoid on the reversed carrier obtained by dualizing ``m``."""
    return Comonoid(m.carrier.reversed(), dualize(m.unit), dualize(m.mult))


def dual_monoid(c: Comonoid) -> Monoid:
    return Monoid(c.carrier.reversed(), dualize(c.counit), dualize(c.comult))
