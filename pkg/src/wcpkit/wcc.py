"""
Weak crossed coproducts on V (x) C, written out directly from their own
formulas.  ``dual_crosscheck`` re-derives every verdict by dualizing the
data into a product quadruple and running the product-side checkers.
"""

from __future__ import annotations

from dataclasses import InitVar, dataclass, field

from . import wcp
from .errors import InvariantError, PreconditionError, ShapeError
from .report import CheckReport
from .structures import Comonoid, check_comonoid, check_comonoid_morphism, dual_monoid
from .tensor import K, Mor, Obj, SplitResult, compose, dualize, split_idempotent, tensor


@dataclass(frozen=True)
class CoQuadruple:
    """``(C, V, chi, tau)`` with chi: V(x)C -> C(x)V and tau: V(x)C -> V(x)V.

    ``tau`` is replaced by ``tau o Gamma`` on construction when the
    coswitch condition holds; the input survives as ``raw_tau``.
    """

    C: Comonoid
    V: Obj
    chi: Mor
    tau: Mor
    normalize: InitVar[bool] = True
    raw_tau: Mor = field(init=False, repr=False, compare=False)

    def __post_init__(self, normalize):
        C, V = self.C.carrier, self.V
        if self.chi.dom != V @ C or self.chi.cod != C @ V:
            raise ShapeError(f"chi must be {V @ C!r} -> {C @ V!r}, got {self.chi.dom!r} -> {self.chi.cod!r}")
        if self.tau.dom != V @ C or self.tau.cod != V @ V:
            raise ShapeError(f"tau must be {V @ C!r} -> {V @ V!r}, got {self.tau.dom!r} -> {self.tau.cod!r}")
        object.__setattr__(self, "raw_tau", self.tau)
        if normalize and check_coswitch(self).ok:
            object.__setattr__(self, "tau", compose(self.tau, gamma_of(self)))

    @property
    def field(self):
        return self.C.field

    @property
    def VC(self) -> Obj:
        return self.V @ self.C.carrier


@dataclass(frozen=True)
class PrecounitData:
    upsilon: Mor


@dataclass(frozen=True)
class CrossedCoproductBuild:
    coquadruple: CoQuadruple
    gamma_idem: Mor
    split: SplitResult
    delta_big: Mor
    delta_small: Mor
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

    def image_coaction(self) -> Mor:
        """``rho_{V box C} = (p (x) C) o (V (x) delta_C) o i``."""
        cq = self.coquadruple
        return compose(tensor(self.proj, cq.C.carrier), tensor(cq.V, cq.C.comult), self.inj)


def gamma_of(cq: CoQuadruple) -> Mor:
    """``(eps_C (x) V (x) C) o (chi (x) C) o (V (x) delta_C)``, unchecked."""
    C, V, eps, delta = cq.C.carrier, cq.V, cq.C.counit, cq.C.comult
    return compose(tensor(eps, V, C), tensor(cq.chi, C), tensor(V, delta))


def delta_big_of(cq: CoQuadruple) -> Mor:
    C, V, delta = cq.C.carrier, cq.V, cq.C.comult
    return compose(tensor(V, cq.chi, C), tensor(cq.tau, delta), tensor(V, delta))


def coaction(cq: CoQuadruple) -> Mor:
    return tensor(cq.V, cq.C.comult)


# --------------------------------------------------------------------------


def check_coswitch(cq: CoQuadruple) -> CheckReport:
    C, V, chi, delta = cq.C.carrier, cq.V, cq.chi, cq.C.comult
    rep = CheckReport("coswitch condition")
    rep.equation("co-wmeas-wcp",
                 compose(tensor(C, chi), tensor(chi, C), tensor(V, delta)),
                 compose(tensor(delta, V), chi))
    return rep


def gamma_properties(cq: CoQuadruple, gamma: Mor) -> CheckReport:
    C, V, chi, delta = cq.C.carrier, cq.V, cq.chi, cq.C.comult
    rep = CheckReport("idempotent")
    rep.equation("idempotent", compose(gamma, gamma), gamma)
    rep.equation("gamma-right-colinear", compose(tensor(gamma, C), tensor(V, delta)), compose(tensor(V, delta), gamma))
    mid = compose(tensor(chi, C), tensor(V, delta))
    rep.equation("co-fi-nab-1", compose(tensor(C, gamma), mid), mid)
    rep.equation("co-fi-nab-2", mid, compose(mid, gamma))
    return rep


def _require(rep: CheckReport, what: str):
    if not rep.ok:
        raise PreconditionError(f"{what}: {rep.first_failure()} fails", rep)


def compute_gamma(cq: CoQuadruple) -> Mor:
    _require(check_coswitch(cq), "compute_gamma")
    g = gamma_of(cq)
    props = gamma_properties(cq, g)
    if not props.ok:
        raise InvariantError(f"Gamma violates {props.first_failure()}", props)
    return g


def check_cotwisted(cq: CoQuadruple) -> CheckReport:
    C, V, chi, tau, delta = cq.C.carrier, cq.V, cq.chi, cq.tau, cq.C.comult
    rep = CheckReport("cotwisted condition")
    ok = rep.equation("co-twis-wcp",
                      compose(tensor(C, tau), tensor(chi, C), tensor(V, delta)),
                      compose(tensor(chi, V), tensor(V, chi), tensor(tau, C), tensor(V, delta)))
    if not ok:
        return rep
    gamma = gamma_of(cq)
    y = compose(tensor(V, chi), tensor(tau, C), tensor(V, delta))
    z = compose(tensor(tau, C), tensor(V, delta))
    rep.equation("co-c1", compose(tensor(gamma, V), y), compose(y, gamma))
    rep.equation("co-aw", compose(tensor(V, gamma), z, gamma), compose(z, gamma))
    if compose(tau, gamma) == tau:
        rep.equation("co-c11", compose(tensor(gamma, V), y), y)
        rep.equation("co-aw1", compose(tensor(V, gamma), z), z)
    return rep


def check_cycle(cq: CoQuadruple) -> CheckReport:
    C, V, chi, tau, delta = cq.C.carrier, cq.V, cq.chi, cq.tau, cq.C.comult
    rep = CheckReport("cycle condition")
    rep.equation("co-cocy-wcp",
                 compose(tensor(V, tau), tensor(tau, C), tensor(V, delta)),
                 compose(tensor(tau, V), tensor(V, chi), tensor(tau, C), tensor(V, delta)))
    return rep


def check_coquadruple(cq: CoQuadruple) -> CheckReport:
    rep = CheckReport("weak crossed coproduct conditions")
    rep.extend(check_coswitch(cq))
    if not rep.ok:
        return rep
    rep.equation("co-idemp-tau-inv", compose(cq.tau, gamma_of(cq)), cq.tau)
    rep.extend(check_cotwisted(cq))
    rep.extend(check_cycle(cq))
    return rep


def _coproduct_consequences(cq: CoQuadruple, gamma: Mor, delta: Mor) -> CheckReport:
    C, V = cq.C.carrier, cq.V
    VC = V @ C
    rep = gamma_properties(cq, gamma)
    rep.title = "crossed coproduct consequences"
    rep.equation("coassociativity", compose(tensor(delta, VC), delta), compose(tensor(VC, delta), delta))
    rep.equation("conormalized-1", compose(delta, gamma), delta)
    rep.equation("conormalized-2", compose(tensor(gamma, gamma), delta), delta)
    rep.equation("co-otra-prop", compose(tensor(VC, gamma), delta), delta)
    rep.equation("co-vieja-proof", compose(tensor(gamma, VC), delta), delta)
    rep.equation("delta-right-colinear", compose(tensor(VC, V, cq.C.comult), delta),
                 compose(tensor(delta, C), tensor(V, cq.C.comult)))
    return rep


def build_crossed_coproduct(cq: CoQuadruple, split: SplitResult | None = None) -> CrossedCoproductBuild:
    """Build Gamma, its splitting, delta_{V(x)C} and delta_{V box C}.

    ``split`` reuses an existing factorization of the same idempotent.
    """
    _require(check_coquadruple(cq), "build_crossed_coproduct")
    gamma = gamma_of(cq)
    delta = delta_big_of(cq)
    rep = _coproduct_consequences(cq, gamma, delta)
    if not rep.ok:
        raise InvariantError(f"crossed coproduct violates {rep.first_failure()}", rep)
    if split is None:
        split = split_idempotent(gamma, label=f"{cq.V}box{cq.C.carrier}")
    elif compose(split.inj, split.proj) != gamma:
        raise ShapeError("supplied splitting does not factor Gamma")
    p, i = split.proj, split.inj
    small = compose(tensor(p, p), delta, i)
    I, C = split.image, cq.C.carrier
    rep.equation("image-coassociativity", compose(tensor(small, I), small), compose(tensor(I, small), small))
    rho = compose(tensor(p, C), tensor(cq.V, cq.C.comult), i)
    rep.equation("image-right-colinear", compose(tensor(I, rho), small), compose(tensor(small, C), rho))
    if not rep.ok:
        raise InvariantError(f"crossed coproduct violates {rep.first_failure()}", rep)
    return CrossedCoproductBuild(cq, gamma, split, delta, small, rep)


# --------------------------------------------------------------------------
# precounits


def _check_ups(cq: CoQuadruple, ups: PrecounitData):
    u = ups.upsilon
    if u.dom != cq.VC or u.cod != K:
        raise ShapeError(f"precounit must be {cq.VC!r} -> K, got {u.dom!r} -> {u.cod!r}")


def omega_of(cq: CoQuadruple, ups: PrecounitData) -> Mor:
    _check_ups(cq, ups)
    return compose(tensor(ups.upsilon, cq.C.carrier), tensor(cq.V, cq.C.comult))


def check_precounit(cq: CoQuadruple, b: CrossedCoproductBuild, ups: PrecounitData) -> CheckReport:
    _check_ups(cq, ups)
    C, V, chi, tau, delta, eps = cq.C.carrier, cq.V, cq.chi, cq.tau, cq.C.comult, cq.C.counit
    VC = V @ C
    u, gamma, d = ups.upsilon, b.gamma_idem, b.delta_big
    target = compose(tensor(V, eps), gamma)
    rep = CheckReport("precounit conditions")
    rep.equation("co-pre1-wcp", compose(tensor(u, V), tensor(V, chi), tensor(tau, C), tensor(V, delta)), target)
    rep.equation("co-pre2-wcp", compose(tensor(V, u), tensor(tau, C), tensor(V, delta)), target)
    rep.equation("co-pre3-wcp", compose(tensor(C, u), tensor(chi, C), tensor(V, delta)), omega_of(cq, ups))
    left = compose(tensor(u, VC), d)
    rep.equation("precounit-law-1", left, compose(tensor(VC, u), d))
    rep.equation("precounit-law-2", compose(tensor(VC, u), d),
                 compose(tensor(compose(tensor(u, u), d), VC), d))
    rep.equation("co-preunit-idemp", compose(u, gamma), u)
    rep.equation("gamma-precounit", gamma, left, note="Gamma equals (upsilon (x) V (x) C) o delta")
    return rep


def precounit_ok(cq, b, ups) -> bool:
    rep = check_precounit(cq, b, ups)
    return all(rep.passed(k) for k in ("co-pre1-wcp", "co-pre2-wcp", "co-pre3-wcp"))


def omega_properties(cq, b, ups, om=None) -> CheckReport:
    om = omega_of(cq, ups) if om is None else om
    C, V, delta = cq.C.carrier, cq.V, cq.C.comult
    rep = CheckReport("omega")
    rep.equation("omega-comultiplicative", compose(tensor(om, om), b.delta_big), compose(delta, om))
    rep.equation("omega-right-colinear", compose(tensor(om, C), tensor(V, delta)), compose(delta, om))
    rep.equation("omega-counit", compose(cq.C.counit, om), ups.upsilon)
    return rep


def omega(cq: CoQuadruple, ups: PrecounitData, build: CrossedCoproductBuild | None = None) -> Mor:
    """``omega = (upsilon (x) C) o (V (x) delta_C)``; verified against the build
    when its precounit checks pass."""
    om = omega_of(cq, ups)
    if build is not None and precounit_ok(cq, build, ups):
        rep = omega_properties(cq, build, ups, om)
        if not rep.ok:
            raise InvariantError(f"omega violates {rep.first_failure()}", rep)
    return om


def recover_chi_tau(b: CrossedCoproductBuild, ups: PrecounitData) -> tuple[Mor, Mor]:
    cq = b.coquadruple
    V, eps = cq.V, cq.C.counit
    om = omega_of(cq, ups)
    chi = compose(tensor(om, V, eps), b.delta_big)
    tau = compose(tensor(V, eps, V, eps), b.delta_big)
    return chi, tau


def check_corecovery(b: CrossedCoproductBuild, ups: PrecounitData) -> CheckReport:
    cq = b.coquadruple
    chi, tau = recover_chi_tau(b, ups)
    rep = CheckReport("chi/tau recovery")
    rep.equation("co-fi-wcp", chi, cq.chi)
    rep.equation("co-sigma-wcp", tau, cq.tau)
    return rep


def image_comonoid(b: CrossedCoproductBuild, ups: PrecounitData) -> Comonoid:
    cq = b.coquadruple
    _require(check_precounit(cq, b, ups), "image_comonoid")
    Cm = Comonoid(b.image, compose(ups.upsilon, b.inj), b.delta_small)
    rep = check_comonoid(Cm)
    bar = compose(omega_of(cq, ups), b.inj)
    rep.extend(check_comonoid_morphism(bar, Cm, cq.C), prefix="omega-bar-")
    if not rep.ok:
        raise InvariantError(f"image comonoid violates {rep.first_failure()}", rep)
    return Cm


# --------------------------------------------------------------------------
# duality oracle


def dual_quadruple(cq: CoQuadruple) -> wcp.Quadruple:
    """Product quadruple on rev(C) (x) rev(V) obtained by dualizing ``cq``."""
    return wcp.Quadruple(dual_monoid(cq.C), cq.V.reversed(), dualize(cq.chi), dualize(cq.raw_tau))


def dual_coquadruple(q: wcp.Quadruple) -> CoQuadruple:
    from .structures import dual_comonoid
    return CoQuadruple(dual_comonoid(q.A), q.V.reversed(), dualize(q.psi), dualize(q.raw_sigma))


_PAIRS = [
    ("co-wmeas-wcp", "wmeas-wcp"), ("co-idemp-tau-inv", "idemp-sigma-inv"),
    ("co-twis-wcp", "twis-wcp"), ("co-c1", "c1"), ("co-aw", "aw"), ("co-c11", "c11"),
    ("co-aw1", "aw1"), ("co-cocy-wcp", "cocy2-wcp"),
]

_PRE_PAIRS = [
    ("co-pre1-wcp", "pre1-wcp"), ("co-pre2-wcp", "pre2-wcp"), ("co-pre3-wcp", "pre3-wcp"),
    ("precounit-law-1", "preunit-law-1"), ("precounit-law-2", "preunit-law-2"),
    ("co-preunit-idemp", "preunit-idemp"), ("gamma-precounit", "nabla-preunit"),
]


def _agree(rep: CheckReport, direct: CheckReport, mirrored: CheckReport, pairs):
    for co, pr in pairs:
        a, b = co in direct, pr in mirrored
        if not a and not b:
            continue
        if a != b:
            rep.flag(f"agree:{co}", False, note="condition evaluated on one side only")
            continue
        da, db = direct.passed(co), mirrored.passed(pr)
        rep.flag(f"agree:{co}", da == db, note=f"direct={'pass' if da else 'fail'}")


def dual_crosscheck(cq: CoQuadruple, ups: PrecounitData | None = None) -> CheckReport:
    """Compare every direct verdict with its dualized product-side verdict.

    Also compares Gamma, delta and (with a precounit) omega, the recovered
    chi/tau against the duals of nabla, mu, beta and the recovered psi/sigma.
    A failing entry here means the two code paths disagree.
    """
    rep = CheckReport("duality crosscheck")
    q = dual_quadruple(cq)
    direct = check_coquadruple(cq)
    mirrored = wcp.check_quadruple(q)
    _agree(rep, direct, mirrored, _PAIRS)
    rep.equation("tau-normalization", dualize(cq.tau), q.sigma)
    if not (direct.ok and mirrored.ok):
        return rep
    b = build_crossed_coproduct(cq)
    bq = wcp.build_crossed_product(q)
    rep.equation("matrix:Gamma", b.gamma_idem, dualize(bq.nabla))
    rep.equation("matrix:delta", b.delta_big, dualize(bq.mu_big))
    rep.flag("image-dim", b.image.dim == bq.image.dim, note=f"{b.image.dim} vs {bq.image.dim}")
    if ups is None:
        return rep
    nu = wcp.PreunitData(dualize(ups.upsilon))
    dpre, mpre = check_precounit(cq, b, ups), wcp.check_preunit(q, bq, nu)
    _agree(rep, dpre, mpre, _PRE_PAIRS)
    rep.equation("matrix:omega", omega_of(cq, ups), dualize(wcp.beta_of(q, nu)))
    chi, tau = recover_chi_tau(b, ups)
    psi, sigma = wcp.recover_psi_sigma(bq, nu)
    rep.equation("matrix:co-fi-wcp", chi, dualize(psi))
    rep.equation("matrix:co-sigma-wcp", tau, dualize(sigma))
    return rep
