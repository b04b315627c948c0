"""Command-line driver: ``wcpkit check``, ``wcpkit report``, ``wcpkit fixtures``."""

from __future__ import annotations

import argparse
import sys

from . import fixtures as fx
from .errors import WcpError
from .specfile import DocumentBuilder, SpecDocument, SpecError, emit_report, parse, run, serialize

EXIT_OK, EXIT_FAIL, EXIT_PARSE = 0, 1, 2


def _product_part(db: DocumentBuilder, q, nu, prefix=""):
    A = q.A
    m_eta = db.mor(prefix + "eta", A.unit)
    m_mu = db.mor(prefix + "mu", A.mult)
    mon = db.struct("monoid", prefix + "Am", A, unit=m_eta, mult=m_mu)
    V = db.obj(q.V)
    psi = db.mor(prefix + "psi", q.psi)
    sigma = db.mor(prefix + "sigma", q.raw_sigma)
    qn = db.struct("quadruple", prefix + "q", q, A=mon, V=V, psi=psi, sigma=sigma)
    nun = db.struct("preunit", prefix + "nu", nu, nu=db.mor(prefix + "nu_mor", nu.nu))
    return qn, nun


def _coproduct_part(db: DocumentBuilder, cq, ups, prefix=""):
    C = cq.C
    m_eps = db.mor(prefix + "eps", C.counit)
    m_delta = db.mor(prefix + "delta", C.comult)
    com = db.struct("comonoid", prefix + "Cm", C, counit=m_eps, comult=m_delta)
    V = db.obj(cq.V)
    chi = db.mor(prefix + "chi", cq.chi)
    tau = db.mor(prefix + "tau", cq.raw_tau)
    cqn = db.struct("coquadruple", prefix + "cq", cq, C=com, V=V, chi=chi, tau=tau)
    un = db.struct("precounit", prefix + "ups", ups, upsilon=db.mor(prefix + "ups_mor", ups.upsilon))
    return cqn, un


def bundle_document(b: fx.FixtureBundle) -> SpecDocument:
    db = DocumentBuilder(b.field)
    qn, nun = _product_part(db, b.quadruple, b.preunit)
    db.directive("check", "quadruple", qn)
    db.directive("build", qn)
    db.directive("check", "preunit", qn, nun)
    db.directive("check", "recovery", qn, nun)
    if b.eta_v is not None and b.verdicts.get("nabla-identity"):
        db.directive("check", "brzezinski", qn, db.mor("eta_V", b.eta_v))
    return db.doc


def cobundle_document(b: fx.CoFixtureBundle) -> SpecDocument:
    db = DocumentBuilder(b.coquadruple.field)
    cqn, un = _coproduct_part(db, b.coquadruple, b.precounit)
    db.directive("check", "coquadruple", cqn)
    db.directive("build", cqn)
    db.directive("check", "precounit", cqn, un)
    db.directive("check", "corecovery", cqn, un)
    db.directive("check", "dual", cqn, un)
    return db.doc


def biproduct_document(bd) -> SpecDocument:
    db = DocumentBuilder(bd.A.field)
    qn, nun = _product_part(db, bd.quadruple, bd.preunit)
    cqn, un = _coproduct_part(db, bd.coquadruple, bd.precounit)
    bn = db.struct("biproduct", "bp", bd, quadruple=qn, preunit=nun, coquadruple=cqn, precounit=un)
    db.directive("check", "biproduct", bn)
    return db.doc


def _emitters():
    out = {}
    for name in fx.REGISTRY:
        out[name] = (lambda n=name: bundle_document(fx.get(n)))
        out["DUAL-" + name] = (lambda n=name: cobundle_document(fx.dual_bundle(fx.get(n))))
    out["BIP-CZ2"] = lambda: biproduct_document(fx.make_bip_cz2())
    out["WHA-BIP"] = lambda: biproduct_document(fx.make_wha_biproduct(2))
    return out


EMITTERS = _emitters()


def fixture_text(name: str) -> str:
    if name not in EMITTERS:
        raise KeyError(f"unknown fixture {name!r}; known: {', '.join(sorted(EMITTERS))}")
    return serialize(EMITTERS[name]())


def _load(path: str):
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


def _run_file(path: str, fmt: str, out, err) -> int:
    try:
        doc = _load(path)
    except SpecError as exc:
        print(f"{path}: {exc}", file=err)
        return EXIT_PARSE
    except (OSError, UnicodeDecodeError) as exc:
        print(f"{path}: {exc}", file=err)
        return EXIT_PARSE
    rep = run(doc)
    out.write(emit_report(rep, fmt).decode())
    if fmt == "json":
        out.write("\n")
    return rep.exit_code


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="wcpkit", description="Check weak crossed product spec files.")
    sub = p.add_subparsers(dest="cmd", required=True)
    c = sub.add_parser("check", help="run a spec file and print one line per condition")
    c.add_argument("file")
    r = sub.add_parser("report", help="run a spec file and emit a report")
    r.add_argument("file")
    r.add_argument("--format", choices=("json", "text"), default="text")
    f = sub.add_parser("fixtures", help="canonical fixtures")
    fsub = f.add_subparsers(dest="fcmd", required=True)
    e = fsub.add_parser("emit", help="print a fixture as a spec file")
    e.add_argument("name")
    fsub.add_parser("list", help="list fixture names")
    return p


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        if args.cmd == "check":
            return _run_file(args.file, "text", out, err)
        if args.cmd == "report":
            return _run_file(args.file, args.format, out, err)
        if args.fcmd == "list":
            out.write("\n".join(sorted(EMITTERS)) + "\n")
            return EXIT_OK
        out.write(fixture_text(args.name))
        return EXIT_OK
    except KeyError as exc:
        print(exc.args[0], file=err)
        return EXIT_PARSE
    except WcpError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
