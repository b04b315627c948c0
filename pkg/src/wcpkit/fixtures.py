"""
Canonical verified instances.

* ``make_group_algebra_crossed(n, t)``: A = V = kZ_n, psi the flip, sigma the
  carry cocycle c(i, j) = t if i + j >= n else 1.  Unital, nabla = id.
* ``make_pair_groupoid_wha(n)``: the matrix-unit weak Hopf algebra on n^2
  elements e_ij acting on A = K^n.  nabla has rank n^2 out of n^3.
* ``make_grouplike_comonoid(n)``: K^n with every basis vector grouplike.

Each bundle carries the verdict table it is expected to reproduce.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from . import wcc, wcp
from .equivalence import GaugePair, check_brzezinski
from .errors import ConvolutionError, ShapeError
from .report import CheckReport
from .structures import Comonoid, LeftModule, Monoid, WeakHopfData, check_module_monoid
from .tensor import QQ, FieldSpec, K, Mor, Obj, compose, dualize, swap, tensor


@dataclass
class FixtureBundle:
    name: str
    quadruple: wcp.Quadruple
    preunit: wcp.PreunitData
    verdicts: dict[str, bool]
    eta_v: Mor | None = None
    hopf: WeakHopfData | None = None
    module: LeftModule | None = None
    cocycle: Mor | None = None
    extras: dict = field(default_factory=dict)

    @property
    def field(self) -> FieldSpec:
        return self.quadruple.field


@dataclass
class CoFixtureBundle:
    name: str
    coquadruple: wcc.CoQuadruple
    precounit: wcc.PrecounitData
    verdicts: dict[str, bool]


# --------------------------------------------------------------------------
# group algebras


def group_algebra(label: str, n: int, field: FieldSpec = QQ) -> WeakHopfData:
    """kZ_n with basis g^0..g^{n-1}; grouplike comultiplication."""
    if n < 1:
        raise ValueError("n must be >= 1")
    H = Obj.atom(label, n)
    unit = Mor.from_basis_map(K, H, lambda _: {(0,): 1}, field)
    mult = Mor.from_basis_map(H @ H, H, lambda ij: {((ij[0] + ij[1]) % n,): 1}, field)
    counit = Mor.from_basis_map(H, K, lambda _: {(): 1}, field)
    comult = Mor.from_basis_map(H, H @ H, lambda i: {(i[0], i[0]): 1}, field)
    antipode = Mor.from_basis_map(H, H, lambda i: {((-i[0]) % n,): 1}, field)
    return WeakHopfData(H, unit, mult, counit, comult, antipode)


def carry_cocycle(n: int, t) -> Callable[[int, int], object]:
    return lambda i, j: t if i + j >= n else 1


def make_group_algebra_crossed(n: int, t=1, field: FieldSpec = QQ) -> FixtureBundle:
    if not isinstance(n, int) or n < 1:
        raise ValueError("n must be an integer >= 1")
    t = field.coerce(t)
    if field.is_zero(t):
        raise ValueError("t must be invertible")
    Ah = group_algebra("A", n, field)
    Vh = group_algebra("V", n, field)
    A, V = Ah.carrier, Vh.carrier
    c = carry_cocycle(n, t)
    psi = swap(V, A, field)
    sigma = Mor.from_basis_map(V @ V, A @ V, lambda ij: {(0, (ij[0] + ij[1]) % n): c(*ij)}, field)
    q = wcp.Quadruple(Ah.monoid, V, psi, sigma)
    nu = wcp.PreunitData(tensor(Ah.unit, Vh.unit))
    # trivial action of H = V on A and the scalar cocycle H(x)H -> A
    action = tensor(Vh.counit, A)
    coc = Mor.from_basis_map(V @ V, A, lambda ij: {(0,): c(*ij)}, field)
    name = "TRIV" if n == 1 else f"CZ{n}" + ("" if t == 1 else "TW")
    verdicts = {k: True for k in (
        "wmeas-wcp", "idemp-sigma-inv", "twis-wcp", "c1", "aw", "c11", "aw1", "cocy2-wcp",
        "pre1-wcp", "pre2-wcp", "pre3-wcp", "fi-wcp", "sigma-wcp", "brz1", "brz2", "brz3-a", "brz3-b",
        "nabla-identity")}
    return FixtureBundle(name, q, nu, verdicts, eta_v=Vh.unit, hopf=Vh,
                         module=LeftModule(Vh.monoid, A, action), cocycle=coc,
                         extras={"n": n, "t": t})


# --------------------------------------------------------------------------
# pair groupoid weak Hopf algebra


def pair_groupoid_algebra(n: int, field: FieldSpec = QQ) -> WeakHopfData:
    """Matrix units e_ij (index i*n + j): e_ij e_kl = d_jk e_il, e_ij -> e_ij (x) e_ij."""
    H = Obj.atom("H", n * n)

    def split(x):
        return divmod(x, n)

    unit = Mor.from_basis_map(K, H, lambda _: {(i * n + i,): 1 for i in range(n)}, field)

    def mul(xy):
        (i, j), (k, l) = split(xy[0]), split(xy[1])
        return {(i * n + l,): 1} if j == k else {}

    mult = Mor.from_basis_map(H @ H, H, mul, field)
    counit = Mor.from_basis_map(H, K, lambda _: {(): 1}, field)
    comult = Mor.from_basis_map(H, H @ H, lambda x: {(x[0], x[0]): 1}, field)

    def anti(x):
        i, j = split(x[0])
        return {(j * n + i,): 1}

    antipode = Mor.from_basis_map(H, H, anti, field)
    return WeakHopfData(H, unit, mult, counit, comult, antipode)


def diagonal_algebra(label: str, n: int, field: FieldSpec = QQ) -> Monoid:
    """K^n with orthogonal idempotents p_k."""
    A = Obj.atom(label, n)
    unit = Mor.from_basis_map(K, A, lambda _: {(k,): 1 for k in range(n)}, field)
    mult = Mor.from_basis_map(A @ A, A, lambda kl: {(kl[0],): 1} if kl[0] == kl[1] else {}, field)
    return Monoid(A, unit, mult)


def wha_psi(H: WeakHopfData, Am: Monoid, phi: Mor) -> Mor:
    """``(phi_A (x) H) o (H (x) c_{H,A}) o (delta_H (x) A)``."""
    Hc, A = H.carrier, Am.carrier
    return compose(tensor(phi, Hc), tensor(Hc, swap(Hc, A, H.field)), tensor(H.comult, A))


def wha_sigma(H: WeakHopfData, Am: Monoid, coc: Mor) -> Mor:
    """``(sigma (x) mu_H) o delta_{H(x)H}``."""
    return compose(tensor(coc, H.mult), H.delta_tensor())


def wha_nabla(H: WeakHopfData, Am: Monoid, phi: Mor) -> Mor:
    """``((mu_A o (A (x) u_1)) (x) H) o (A (x) delta_H)``."""
    Hc, A = H.carrier, Am.carrier
    u1 = compose(phi, tensor(Hc, Am.unit))
    return compose(tensor(compose(Am.mult, tensor(A, u1)), Hc), tensor(A, H.comult))


def check_wha_cocycle(H: WeakHopfData, Am: Monoid, phi: Mor, coc: Mor) -> CheckReport:
    """twisted-wha, cocy-wha and normal-wha for sigma: H(x)H -> A."""
    Hc, A, mu = H.carrier, Am.carrier, Am.mult
    f = H.field
    dHH = H.delta_tensor()
    rep = CheckReport("weak Hopf cocycle")
    lhs = compose(mu, tensor(compose(phi, tensor(Hc, phi)), A), tensor(Hc, Hc, swap(A, A, f)),
                  tensor(compose(tensor(Hc, Hc, coc), dHH), A))
    rhs = compose(mu, tensor(A, phi), tensor(compose(tensor(coc, H.mult), dHH), A))
    rep.equation("twisted-wha", lhs, rhs)
    lhs = compose(mu, tensor(phi, coc), tensor(Hc, swap(Hc, A, f), H.mult),
                  tensor(H.comult, coc, Hc, Hc), tensor(Hc, dHH))
    rhs = compose(mu, tensor(coc, coc), tensor(Hc, Hc, H.mult, Hc), tensor(dHH, Hc))
    rep.equation("cocy-wha", lhs, rhs)
    u1 = compose(phi, tensor(Hc, Am.unit))
    rep.equation("normal-wha-1", compose(coc, tensor(H.unit, Hc)), u1)
    rep.equation("normal-wha-2", compose(coc, tensor(Hc, H.unit)), u1)
    return rep


def make_pair_groupoid_wha(n: int = 2, field: FieldSpec = QQ) -> FixtureBundle:
    if not isinstance(n, int) or n < 2:
        raise ValueError("n must be an integer >= 2")
    H = pair_groupoid_algebra(n, field)
    Am = diagonal_algebra("A", n, field)
    Hc, A = H.carrier, Am.carrier

    def act(x):
        e, k = x
        i, j = divmod(e, n)
        return {(i,): 1} if j == k else {}

    phi = Mor.from_basis_map(Hc @ A, A, act, field)
    u1 = compose(phi, tensor(Hc, Am.unit))
    coc = compose(u1, H.mult)
    psi = wha_psi(H, Am, phi)
    sigma = wha_sigma(H, Am, coc)
    q = wcp.Quadruple(Am, Hc, psi, sigma)
    nabla = wcp.nabla_of(q)
    nu = wcp.PreunitData(compose(nabla, tensor(Am.unit, H.unit)))
    rep = check_wha_cocycle(H, Am, phi, coc)
    rep.equation("nabla-wha", wha_nabla(H, Am, phi), nabla)
    rho = tensor(A, H.comult)
    rep.equation("nabla-colinear", compose(tensor(nabla, Hc), rho), compose(rho, nabla))
    if not rep.ok:
        raise AssertionError(f"pair groupoid fixture violates {rep.first_failure()}")
    verdicts = {k: True for k in (
        "wmeas-wcp", "idemp-sigma-inv", "twis-wcp", "c1", "aw", "c11", "aw1", "cocy2-wcp",
        "pre1-wcp", "pre2-wcp", "pre3-wcp", "fi-wcp", "sigma-wcp", "twisted-wha", "cocy-wha",
        "normal-wha-1", "normal-wha-2", "nabla-wha", "action-multiplicative")}
    verdicts.update({k: False for k in ("brz1", "brz2", "brz3-a", "brz3-b", "nabla-identity")})
    return FixtureBundle("WHA-PGPD" if n == 2 else f"WHA-PGPD{n}", q, nu, verdicts, eta_v=H.unit, hopf=H,
                         module=LeftModule(H.monoid, A, phi), cocycle=coc,
                         extras={"n": n, "u1": u1, "rho": rho})


def wha_image_coaction(b: wcp.CrossedProductBuild, H: WeakHopfData) -> Mor:
    """``rho_{A x H} = (p (x) H) o (A (x) delta_H) o i``."""
    A = b.quadruple.A.carrier
    return compose(tensor(b.proj, H.carrier), tensor(A, H.comult), b.inj)


# --------------------------------------------------------------------------
# gauges


def convolution(H: WeakHopfData, Am: Monoid, f: Mor, g: Mor) -> Mor:
    return compose(Am.mult, tensor(f, g), H.comult)


def gauge_from_convolution(H: WeakHopfData, Am: Monoid, f: Mor, g: Mor, action: Mor) -> GaugePair:
    """``gamma = (f (x) H) o delta_H`` and ``theta = (g (x) H) o delta_H``,
    after checking ``f * g = phi_A o (H (x) eta_A)``."""
    Hc, A = H.carrier, Am.carrier
    for m, nm in ((f, "f"), (g, "g")):
        if m.dom != Hc or m.cod != A:
            raise ShapeError(f"{nm} must be {Hc!r} -> {A!r}")
    rep = CheckReport("convolution")
    rep.equation("convolution", convolution(H, Am, f, g), compose(action, tensor(Hc, Am.unit)))
    if not rep.ok:
        raise ConvolutionError("f * g differs from phi_A o (H (x) eta_A)", rep)
    gamma = compose(tensor(f, Hc), H.comult)
    theta = compose(tensor(g, Hc), H.comult)
    for m, src, nm in ((gamma, f, "gamma"), (theta, g, "theta")):
        rep.equation(f"{nm}-colinear", compose(tensor(m, Hc), H.comult), compose(tensor(A, H.comult), m))
        rep.equation(f"{nm}-recovery", compose(tensor(A, H.counit), m), src)
    if not rep.ok:
        raise ConvolutionError(f"gauge from convolution violates {rep.first_failure()}", rep)
    return GaugePair(gamma, theta)


def scalar_weight_gauge(bundle: FixtureBundle, weights) -> GaugePair:
    """gamma(h) = u(h) 1 (x) h and theta(h) = u(h)^-1 1 (x) h on a group-algebra bundle."""
    H, Am = bundle.hopf, bundle.quadruple.A
    fs = bundle.field
    u = [fs.coerce(w) for w in weights]
    f = Mor.from_basis_map(H.carrier, Am.carrier, lambda i: {(0,): u[i[0]]}, fs)
    g = Mor.from_basis_map(H.carrier, Am.carrier, lambda i: {(0,): fs.inv(u[i[0]])}, fs)
    return gauge_from_convolution(H, Am, f, g, bundle.module.action)


def matrix_weight_gauge(bundle: FixtureBundle, lam) -> GaugePair:
    """f(e_ij) = lam[i][j] p_i, g(e_ij) = lam[i][j]^-1 p_i on the pair groupoid bundle."""
    H, Am = bundle.hopf, bundle.quadruple.A
    fs = bundle.field
    n = bundle.extras["n"]
    lam = [[fs.coerce(x) for x in row] for row in lam]
    f = Mor.from_basis_map(H.carrier, Am.carrier, lambda e: {(e[0] // n,): lam[e[0] // n][e[0] % n]}, fs)
    g = Mor.from_basis_map(H.carrier, Am.carrier,
                           lambda e: {(e[0] // n,): fs.inv(lam[e[0] // n][e[0] % n])}, fs)
    return gauge_from_convolution(H, Am, f, g, bundle.module.action)


def gauge_action_formula(H: WeakHopfData, Am: Monoid, phi: Mor, f: Mor, g: Mor) -> Mor:
    """``mu_A o (mu_A (x) A) o (f (x) phi_A (x) g) o (H (x) H (x) c_{H,A})
    o (H (x) delta_H (x) A) o (delta_H (x) A)``."""
    Hc, A, mu = H.carrier, Am.carrier, Am.mult
    return compose(mu, tensor(mu, A), tensor(f, phi, g), tensor(Hc, Hc, swap(Hc, A, H.field)),
                   tensor(Hc, H.comult, A), tensor(H.comult, A))


def gauge_cocycle_formula(H: WeakHopfData, Am: Monoid, phi: Mor, coc: Mor, f: Mor, g: Mor) -> Mor:
    """``mu_A o (mu_A (x) A) o (mu_A (x) A (x) A) o (f (x) (phi_A o (H (x) f)) (x) sigma (x) (g o mu_H))
    o (delta_H (x) H (x) delta_{H(x)H}) o delta_{H(x)H}``."""
    Hc, A, mu = H.carrier, Am.carrier, Am.mult
    dHH = H.delta_tensor()
    inner = tensor(f, compose(phi, tensor(Hc, f)), coc, compose(g, H.mult))
    return compose(mu, tensor(mu, A), tensor(mu, A, A), inner, tensor(H.comult, Hc, dHH), dHH)


def check_gauge_translation(bundle: FixtureBundle, gp: GaugePair, qw: wcp.Quadruple) -> CheckReport:
    """Compose the transported psi_W, sigma_W with A (x) eps_H and compare with
    the closed formulas in (f, g).

    theta is applied first in both transport formulas, so the left slot of
    each closed formula takes ``(A (x) eps_H) o theta`` and the right slot
    ``(A (x) eps_H) o gamma``.
    """
    H, Am, phi = bundle.hopf, bundle.quadruple.A, bundle.module.action
    A = Am.carrier
    first = compose(tensor(A, H.counit), gp.theta)
    last = compose(tensor(A, H.counit), gp.gamma)
    rep = CheckReport("gauge translation")
    rep.equation("gauge-action-formula", compose(tensor(A, H.counit), qw.psi),
                 gauge_action_formula(H, Am, phi, first, last))
    rep.equation("gauge-cocycle-formula", compose(tensor(A, H.counit), qw.sigma),
                 gauge_cocycle_formula(H, Am, phi, bundle.cocycle, first, last))
    return rep


# --------------------------------------------------------------------------
# comonoids and duals


def make_grouplike_comonoid(n: int, label: str = "C", field: FieldSpec = QQ) -> Comonoid:
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1 and label == "C":
        C = K
    else:
        C = Obj.atom(label, n)
    counit = Mor.from_basis_map(C, K, lambda _: {(): 1}, field)
    comult = Mor.from_basis_map(C, C @ C, lambda i: {tuple(i) + tuple(i): 1}, field)
    return Comonoid(C, counit, comult)


def dual_bundle(b: FixtureBundle) -> CoFixtureBundle:
    cq = wcc.dual_coquadruple(b.quadruple)
    ups = wcc.PrecounitData(dualize(b.preunit.nu))
    return CoFixtureBundle("DUAL-" + b.name, cq, ups, {_CO_NAMES[k]: val for k, val in b.verdicts.items()
                                                         if k in _CO_NAMES})


_CO_NAMES = {
    "wmeas-wcp": "co-wmeas-wcp", "idemp-sigma-inv": "co-idemp-tau-inv", "twis-wcp": "co-twis-wcp",
    "c1": "co-c1", "aw": "co-aw", "c11": "co-c11", "aw1": "co-aw1", "cocy2-wcp": "co-cocy-wcp",
    "pre1-wcp": "co-pre1-wcp", "pre2-wcp": "co-pre2-wcp", "pre3-wcp": "co-pre3-wcp",
    "fi-wcp": "co-fi-wcp", "sigma-wcp": "co-sigma-wcp",
}


# --------------------------------------------------------------------------
# biproducts


def make_bip_cz2(field: FieldSpec = QQ):
    """kZ2 (x) kZ2 with the tensor product algebra and the tensor coalgebra
    built from grouplike structures on both factors."""
    from .biproduct import make_biproduct
    Ah = group_algebra("A", 2, field)
    Ch = group_algebra("C", 2, field)
    A, C = Ah.carrier, Ch.carrier
    psi = swap(C, A, field)
    sigma = Mor.from_basis_map(C @ C, A @ C, lambda ij: {(0, (ij[0] + ij[1]) % 2): 1}, field)
    q = wcp.Quadruple(Ah.monoid, C, psi, sigma)
    nu = wcp.PreunitData(tensor(Ah.unit, Ch.unit))
    chi = swap(A, C, field)
    tau = tensor(Ah.comult, Ch.counit)
    cq = wcc.CoQuadruple(Ch.comonoid, A, chi, tau)
    ups = wcc.PrecounitData(tensor(Ah.counit, Ch.counit))
    return make_biproduct(q, nu, cq, ups)


def bip_cz2_shift_gauge(bd):
    """Gauge quadruple for the algebra automorphism a (x) g^j -> a g^j (x) g^j."""
    fs = bd.A.field
    A, C = bd.A.carrier, bd.C.carrier
    gamma = Mor.from_basis_map(C, A @ C, lambda j: {(j[0], j[0]): 1}, fs)
    theta = Mor.from_basis_map(C, A @ C, lambda j: {((-j[0]) % 2, j[0]): 1}, fs)
    zeta = Mor.from_basis_map(A @ C, A, lambda aj: {((aj[0] + aj[1]) % 2,): 1}, fs)
    pi = Mor.from_basis_map(A @ C, A, lambda aj: {((aj[0] - aj[1]) % 2,): 1}, fs)
    return gamma, theta, pi, zeta


def make_wha_biproduct(n: int = 2, field: FieldSpec = QQ):
    """The pair groupoid crossed product on A (x) H glued with a crossed
    coproduct on the same space whose idempotent is the same nabla."""
    from .biproduct import make_biproduct
    b = make_pair_groupoid_wha(n, field)
    q, H = b.quadruple, b.hopf
    A, Hc = q.A.carrier, H.carrier

    def chi_map(x):
        k, e = x
        return {(e, k): 1} if e // n == k else {}

    def tau_map(x):
        k, e = x
        return {(k, k): 1} if e // n == k else {}

    chi = Mor.from_basis_map(A @ Hc, Hc @ A, chi_map, field)
    tau = Mor.from_basis_map(A @ Hc, A @ A, tau_map, field)
    ups = Mor.from_basis_map(A @ Hc, K, lambda x: {(): 1} if x[1] // n == x[0] else {}, field)
    cq = wcc.CoQuadruple(H.comonoid, A, chi, tau)
    return make_biproduct(q, b.preunit, cq, wcc.PrecounitData(ups))


# --------------------------------------------------------------------------
# self test


def evaluate(bundle: FixtureBundle) -> dict[str, bool]:
    """Run the public checkers and collect verdicts for every recorded name."""
    q, nu = bundle.quadruple, bundle.preunit
    rep = CheckReport(bundle.name)
    rep.extend(wcp.check_quadruple(q))
    if rep.ok:
        b = wcp.build_crossed_product(q)
        rep.extend(wcp.check_preunit(q, b, nu))
        rep.extend(wcp.check_recovery(b, nu))
    if bundle.eta_v is not None:
        rep.extend(check_brzezinski(q, bundle.eta_v))
    if bundle.name.startswith("WHA"):
        H, Am, phi = bundle.hopf, q.A, bundle.module.action
        rep.extend(check_wha_cocycle(H, Am, phi, bundle.cocycle))
        rep.equation("nabla-wha", wha_nabla(H, Am, phi), wcp.nabla_of(q))
        rep.extend(check_module_monoid(bundle.module, Am, H))
    out = rep.verdicts()
    return {k: out.get(k) for k in bundle.verdicts}


def evaluate_co(bundle: CoFixtureBundle) -> dict[str, bool]:
    cq, ups = bundle.coquadruple, bundle.precounit
    rep = CheckReport(bundle.name)
    rep.extend(wcc.check_coquadruple(cq))
    if rep.ok:
        b = wcc.build_crossed_coproduct(cq)
        rep.extend(wcc.check_precounit(cq, b, ups))
        rep.extend(wcc.check_corecovery(b, ups))
    out = rep.verdicts()
    return {k: out.get(k) for k in bundle.verdicts}


def self_test(bundle) -> CheckReport:
    got = evaluate_co(bundle) if isinstance(bundle, CoFixtureBundle) else evaluate(bundle)
    rep = CheckReport(f"self-test {bundle.name}")
    for k, want in bundle.verdicts.items():
        rep.flag(k, got[k] == want, note=f"expected {'pass' if want else 'fail'}, got {got[k]}")
    return rep


# --------------------------------------------------------------------------
# registry


def _cz(n, t):
    return lambda: make_group_algebra_crossed(n, t)


REGISTRY: dict[str, Callable[[], FixtureBundle]] = {
    "TRIV": _cz(1, 1),
    "CZ2": _cz(2, 1),
    "CZ3": _cz(3, 1),
    "CZ2TW": _cz(2, 2),
    "CZ3TW": _cz(3, Fraction(-1, 3)),
    "WHA-PGPD": lambda: make_pair_groupoid_wha(2),
    "WHA-PGPD3": lambda: make_pair_groupoid_wha(3),
}


def get(name: str) -> FixtureBundle:
    try:
        return REGISTRY[name]()
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}; known: {', '.join(sorted(REGISTRY))}") from None
