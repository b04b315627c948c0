"""
Weak crossed products on A (x) V.

A ``Quadruple`` packages a monoid A, an object V, a switch map
psi: V(x)A -> A(x)V and a cocycle map sigma: V(x)V -> A(x)V.  The checkers
below evaluate each defining identity as an exact matrix equation; report
entries are named after the equation labels they verify.
"""

from __future__ import annotations

from dataclasses import InitVar, dataclass, field

from .errors import InvariantError, PreconditionError, ShapeError
from .report import CheckReport
from .structures import Monoid, check_monoid, check_monoid_morphism
from .tensor import K, Mor, Obj, SplitResult, compose, split_idempotent, tensor


@dataclass(frozen=True)
class Quadruple:
    """``(A, V, psi, sigma)``.

    When the switch condition holds, ``sigma`` is replaced by
    ``nabla o sigma`` on construction; the input is kept as ``raw_sigma``.
    """

    A: Monoid
    V: Obj
    psi: Mor
    sigma: Mor
    normalize: InitVar[bool] = True
    raw_sigma: Mor = field(init=False, repr=False, compare=False)

    def __post_init__(self, normalize):
        A, V = self.A.carrier, self.V
        if self.psi.dom != V @ A or self.psi.cod != A @ V:
            raise ShapeError(f"psi must be {V @ A!r} -> {A @ V!r}, got {self.psi.dom!r} -> {self.psi.cod!r}")
        if self.sigma.dom != V @ V or self.sigma.cod != A @ V:
            raise ShapeError(f"sigma must be {V @ V!r} -> {A @ V!r}, got {self.sigma.dom!r} -> {self.sigma.cod!r}")
        object.__setattr__(self, "raw_sigma", self.sigma)
        if normalize and check_switch(self).ok:
            object.__setattr__(self, "sigma", compose(nabla_of(self), self.sigma))

    @property
    def field(self):
        return self.A.field

    @property
    def AV(self) -> Obj:
        return self.A.carrier @ self.V


@dataclass(frozen=True)
class PreunitData:
    nu: Mor


@dataclass(frozen=True)
class CrossedProductBuild:
    quadruple: Quadruple
    nabla: Mor
    split: SplitResult
    mu_big: Mor
    mu_small: Mor
    consequences: CheckReport = field(repr=False, compare=False)

    @property
    def image(self) -> Obj:
        return self.split.image

    @property
    def inj(self) -> Mor:
        return self.split.inj

    @property
    def proj(self) -> Mor:
        return self.split.proj

    def image_action(self) -> Mor:
        """``phi_{AxV} = p o (mu_A (x) V) o (A (x) i)``."""
        q = self.quadruple
        A = q.A.carrier
        return compose(self.proj, tensor(q.A.mult, q.V), tensor(A, self.inj))


# --------------------------------------------------------------------------
# the raw formulas


def nabla_of(q: Quadruple) -> Mor:
    """``(mu_A (x) V) o (A (x) psi) o (A (x) V (x) eta_A)``, unchecked."""
    A, V, mu, eta = q.A.carrier, q.V, q.A.mult, q.A.unit
    return compose(tensor(mu, V), tensor(A, q.psi), tensor(A, V, eta))


def mu_big_of(q: Quadruple) -> Mor:
    """``(mu_A (x) V) o (mu_A (x) sigma) o (A (x) psi (x) V)``."""
    A, V, mu = q.A.carrier, q.V, q.A.mult
    return compose(tensor(mu, V), tensor(mu, q.sigma), tensor(A, q.psi, V))


def left_action(q: Quadruple) -> Mor:
    return tensor(q.A.mult, q.V)


# --------------------------------------------------------------------------
# condition checkers


def check_switch(q: Quadruple) -> CheckReport:
    A, V, mu, psi = q.A.carrier, q.V, q.A.mult, q.psi
    rep = CheckReport("switch condition")
    rep.equation("wmeas-wcp",
                 compose(tensor(mu, V), tensor(A, psi), tensor(psi, A)),
                 compose(psi, tensor(V, mu)))
    return rep


def _require(rep: CheckReport, what: str):
    if not rep.ok:
        raise PreconditionError(f"{what}: {rep.first_failure()} fails", rep)


def nabla_properties(q: Quadruple, nabla: Mor) -> CheckReport:
    A, V, mu, psi = q.A.carrier, q.V, q.A.mult, q.psi
    rep = CheckReport("idempotent")
    rep.equation("idempotent", compose(nabla, nabla), nabla)
    rep.equation("nabla-left-linear", compose(nabla, tensor(mu, V)), compose(tensor(mu, V), tensor(A, nabla)))
    mid = compose(tensor(mu, V), tensor(A, psi))
    rep.equation("fi-nab-1", compose(mid, tensor(nabla, A)), mid)
    rep.equation("fi-nab-2", mid, compose(nabla, mid))
    return rep


def compute_nabla(q: Quadruple) -> Mor:
    _require(check_switch(q), "compute_nabla")
    nabla = nabla_of(q)
    props = nabla_properties(q, nabla)
    if not props.ok:
        raise InvariantError(f"nabla violates {props.first_failure()}", props)
    return nabla


def normalize_sigma(q: Quadruple) -> Quadruple:
    nabla = compute_nabla(q)
    return Quadruple(q.A, q.V, q.psi, compose(nabla, q.sigma), normalize=False)


def check_twisted(q: Quadruple) -> CheckReport:
    A, V, mu, psi, sigma = q.A.carrier, q.V, q.A.mult, q.psi, q.sigma
    rep = CheckReport("twisted condition")
    ok = rep.equation("twis-wcp",
                      compose(tensor(mu, V), tensor(A, psi), tensor(sigma, A)),
                      compose(tensor(mu, V), tensor(A, sigma), tensor(psi, V), tensor(V, psi)))
    if not ok:
        return rep
    nabla = nabla_of(q)
    s_psi = compose(tensor(mu, V), tensor(A, sigma), tensor(psi, V))
    s_plain = compose(tensor(mu, V), tensor(A, sigma))
    rep.equation("c1", compose(s_psi, tensor(V, nabla)), compose(nabla, s_psi))
    rep.equation("aw", compose(nabla, s_plain, tensor(nabla, V)), compose(nabla, s_plain))
    if compose(nabla, sigma) == sigma:
        rep.equation("c11", compose(s_psi, tensor(V, nabla)), s_psi)
        rep.equation("aw1", compose(s_plain, tensor(nabla, V)), s_plain)
    return rep


def check_cocycle(q: Quadruple) -> CheckReport:
    A, V, mu, psi, sigma = q.A.carrier, q.V, q.A.mult, q.psi, q.sigma
    rep = CheckReport("cocycle condition")
    rep.equation("cocy2-wcp",
                 compose(tensor(mu, V), tensor(A, sigma), tensor(sigma, V)),
                 compose(tensor(mu, V), tensor(A, sigma), tensor(psi, V), tensor(V, sigma)))
    return rep


def check_quadruple(q: Quadruple) -> CheckReport:
    """Switch, twisted and cocycle conditions in one report."""
    rep = CheckReport("weak crossed product conditions")
    rep.extend(check_switch(q))
    if not rep.ok:
        return rep
    rep.equation("idemp-sigma-inv", compose(nabla_of(q), q.sigma), q.sigma)
    rep.extend(check_twisted(q))
    rep.extend(check_cocycle(q))
    return rep


# --------------------------------------------------------------------------
# construction


def _product_consequences(q: Quadruple, nabla: Mor, mu: Mor) -> CheckReport:
    A, V = q.A.carrier, q.V
    AV = A @ V
    rep = nabla_properties(q, nabla)
    rep.title = "crossed product consequences"
    rep.equation("associativity", compose(mu, tensor(AV, mu)), compose(mu, tensor(mu, AV)))
    rep.equation("normalized-1", compose(nabla, mu), mu)
    rep.equation("normalized-2", compose(mu, tensor(nabla, nabla)), mu)
    rep.equation("otra-prop", compose(mu, tensor(nabla, AV)), mu)
    rep.equation("vieja-proof", compose(mu, tensor(AV, nabla)), mu)
    rep.equation("mu-left-linear", compose(mu, tensor(q.A.mult, V, AV)), compose(tensor(q.A.mult, V), tensor(A, mu)))
    return rep


def build_crossed_product(q: Quadruple) -> CrossedProductBuild:
    """Build nabla, its splitting, mu_{A(x)V} and mu_{AxV}, verifying the
    associativity and normalization consequences in full."""
    _require(check_quadruple(q), "build_crossed_product")
    nabla = nabla_of(q)
    mu = mu_big_of(q)
    rep = _product_consequences(q, nabla, mu)
    if not rep.ok:
        raise InvariantError(f"crossed product violates {rep.first_failure()}", rep)
    sp = split_idempotent(nabla, label=f"{q.A.carrier}x{q.V}")
    mu_small = compose(sp.proj, mu, tensor(sp.inj, sp.inj))
    I = sp.image
    rep.equation("image-associativity", compose(mu_small, tensor(I, mu_small)), compose(mu_small, tensor(mu_small, I)))
    phi_small = compose(sp.proj, tensor(q.A.mult, q.V), tensor(q.A.carrier, sp.inj))
    rep.equation("image-left-linear", compose(mu_small, tensor(phi_small, I)), compose(phi_small, tensor(q.A.carrier, mu_small)))
    if not rep.ok:
        raise InvariantError(f"crossed product violates {rep.first_failure()}", rep)
    return CrossedProductBuild(q, nabla, sp, mu, mu_small, rep)


# --------------------------------------------------------------------------
# preunits


def _check_nu(q: Quadruple, nu: PreunitData):
    if nu.nu.dom != K or nu.nu.cod != q.AV:
        raise ShapeError(f"preunit must be K -> {q.AV!r}, got {nu.nu.dom!r} -> {nu.nu.cod!r}")


def beta_of(q: Quadruple, nu: PreunitData) -> Mor:
    _check_nu(q, nu)
    return compose(tensor(q.A.mult, q.V), tensor(q.A.carrier, nu.nu))


def check_preunit(q: Quadruple, b: CrossedProductBuild, nu: PreunitData) -> CheckReport:
    _check_nu(q, nu)
    A, V, mu, eta, psi, sigma = q.A.carrier, q.V, q.A.mult, q.A.unit, q.psi, q.sigma
    AV = A @ V
    n, nabla, m = nu.nu, b.nabla, b.mu_big
    target = compose(nabla, tensor(eta, V))
    rep = CheckReport("preunit conditions")
    rep.equation("pre1-wcp", compose(tensor(mu, V), tensor(A, sigma), tensor(psi, V), tensor(V, n)), target)
    rep.equation("pre2-wcp", compose(tensor(mu, V), tensor(A, sigma), tensor(n, V)), target)
    rep.equation("pre3-wcp", compose(tensor(mu, V), tensor(A, psi), tensor(n, A)), beta_of(q, nu))
    right = compose(m, tensor(AV, n))
    rep.equation("preunit-law-1", right, compose(m, tensor(n, AV)))
    rep.equation("preunit-law-2", compose(m, tensor(n, AV)), compose(m, tensor(AV, compose(m, tensor(n, n)))))
    rep.equation("preunit-idemp", compose(nabla, n), n)
    rep.equation("nabla-preunit", nabla, right, note="nabla equals m o (A (x) V (x) nu)")
    return rep


def preunit_ok(q, b, nu) -> bool:
    rep = check_preunit(q, b, nu)
    return all(rep.passed(k) for k in ("pre1-wcp", "pre2-wcp", "pre3-wcp"))


def beta(q: Quadruple, nu: PreunitData, build: CrossedProductBuild | None = None) -> Mor:
    """``beta_nu = (mu_A (x) V) o (A (x) nu)``; with a build whose preunit
    checks pass, also verifies multiplicativity and left linearity."""
    bt = beta_of(q, nu)
    if build is not None and preunit_ok(q, build, nu):
        rep = beta_properties(q, build, nu, bt)
        if not rep.ok:
            raise InvariantError(f"beta violates {rep.first_failure()}", rep)
    return bt


def beta_properties(q, b, nu, bt=None) -> CheckReport:
    bt = beta_of(q, nu) if bt is None else bt
    A, V, mu = q.A.carrier, q.V, q.A.mult
    rep = CheckReport("beta")
    rep.equation("beta-multiplicative", compose(bt, mu), compose(b.mu_big, tensor(bt, bt)))
    rep.equation("beta-left-linear", compose(bt, mu), compose(tensor(mu, V), tensor(A, bt)))
    rep.equation("beta-unit", compose(bt, q.A.unit), nu.nu)
    return rep


def recover_psi_sigma(b: CrossedProductBuild, nu: PreunitData) -> tuple[Mor, Mor]:
    """Recompute psi and sigma from the product and the preunit."""
    q = b.quadruple
    V, eta = q.V, q.A.unit
    bt = beta_of(q, nu)
    psi = compose(b.mu_big, tensor(eta, V, bt))
    sigma = compose(b.mu_big, tensor(eta, V, eta, V))
    return psi, sigma


def check_recovery(b: CrossedProductBuild, nu: PreunitData) -> CheckReport:
    q = b.quadruple
    psi, sigma = recover_psi_sigma(b, nu)
    rep = CheckReport("psi/sigma recovery")
    rep.equation("fi-wcp", psi, q.psi)
    rep.equation("sigma-wcp", sigma, q.sigma)
    return rep


def image_monoid(b: CrossedProductBuild, nu: PreunitData) -> Monoid:
    """Monoid structure on the image A x V with unit ``p o nu``."""
    q = b.quadruple
    pre = check_preunit(q, b, nu)
    _require(pre, "image_monoid")
    M = Monoid(b.image, compose(b.proj, nu.nu), b.mu_small)
    rep = check_monoid(M)
    bar = compose(b.proj, beta_of(q, nu))
    rep.extend(check_monoid_morphism(bar, q.A, M), prefix="beta-bar-")
    if not rep.ok:
        raise InvariantError(f"image monoid violates {rep.first_failure()}", rep)
    return M
