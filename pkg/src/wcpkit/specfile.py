"""
Line-oriented spec files: declarations, structures and directives.

    field Q                      | field Fp 7
    obj A dim 2
    mor mu : A*A -> A { 0 0 1; 1 1 1; 1 2 1; 0 3 1 }
    monoid Am unit eta mult mu
    quadruple q A Am V V psi psi sigma sigma
    preunit nu nu nu_mor
    check quadruple q
    build q

Entries inside braces are ``row col value`` triples separated by ``;``.
Braces may span lines.  ``#`` starts a comment.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from dataclasses import field as dc_field
from typing import Any

from . import biproduct as bip
from . import equivalence as eqv
from . import wcc, wcp
from .errors import PreconditionError, ShapeError, WcpError
from .report import CheckEntry, CheckReport
from .structures import (Comonoid, LeftModule, Monoid, RightComodule, check_comonoid, check_left_module,
                         check_monoid, check_right_comodule)
from .tensor import QQ, FieldSpec, K, Mor, Obj, format_scalar


class SpecError(WcpError):
    """Syntax, name or scalar error at a source location."""

    def __init__(self, msg: str, line: int, col: int = 1):
        super().__init__(f"line {line}, col {col}: {msg}")
        self.line = line
        self.col = col
        self.reason = msg


# structure kind -> ordered (keyword, expected kind); "obj" and "mor" are primitive
SCHEMAS: dict[str, tuple[tuple[str, str], ...]] = {
    "monoid": (("unit", "mor"), ("mult", "mor")),
    "comonoid": (("counit", "mor"), ("comult", "mor")),
    "module": (("monoid", "monoid"), ("carrier", "obj"), ("action", "mor")),
    "comodule": (("comonoid", "comonoid"), ("carrier", "obj"), ("coaction", "mor")),
    "quadruple": (("A", "monoid"), ("V", "obj"), ("psi", "mor"), ("sigma", "mor")),
    "coquadruple": (("C", "comonoid"), ("V", "obj"), ("chi", "mor"), ("tau", "mor")),
    "preunit": (("nu", "mor"),),
    "precounit": (("upsilon", "mor"),),
    "gauge": (("gamma", "mor"), ("theta", "mor")),
    "transfer": (("T", "mor"), ("S", "mor")),
    "cogauge": (("pi", "mor"), ("zeta", "mor")),
    "cotransfer": (("P", "mor"), ("R", "mor")),
    "biproduct": (("quadruple", "quadruple"), ("preunit", "preunit"),
                  ("coquadruple", "coquadruple"), ("precounit", "precounit")),
}


@dataclass
class Decl:
    kind: str
    name: str
    refs: dict[str, str]
    line: int


@dataclass
class Directive:
    verb: str
    args: list[str]
    line: int

    @property
    def text(self) -> str:
        return " ".join([self.verb] + self.args)


@dataclass
class SpecDocument:
    field: FieldSpec = QQ
    objects: dict[str, Obj] = dc_field(default_factory=dict)
    morphisms: dict[str, Mor] = dc_field(default_factory=dict)
    decls: list[Decl] = dc_field(default_factory=list)
    values: dict[str, Any] = dc_field(default_factory=dict)
    kinds: dict[str, str] = dc_field(default_factory=dict)
    directives: list[Directive] = dc_field(default_factory=list)

    def get(self, name: str, kind: str | None = None):
        if name not in self.kinds:
            raise KeyError(name)
        if kind is not None and self.kinds[name] != kind:
            raise TypeError(f"{name} is a {self.kinds[name]}, expected {kind}")
        return self.values[name]


# --------------------------------------------------------------------------
# parsing

_TOKEN = re.compile(r"\S+")
_NAME = re.compile(r"^[A-Za-z_][A-Za-z0-9_.\-']*$")


def _strip(line: str) -> str:
    i = line.find("#")
    return line if i < 0 else line[:i]


def _tokens(line: str) -> list[tuple[str, int]]:
    return [(m.group(), m.start() + 1) for m in _TOKEN.finditer(line)]


def _build(kind: str, name: str, v: dict[str, Any]):
    if kind == "monoid":
        return Monoid(v["mult"].cod, v["unit"], v["mult"])
    if kind == "comonoid":
        return Comonoid(v["comult"].dom, v["counit"], v["comult"])
    if kind == "module":
        return LeftModule(v["monoid"], v["carrier"], v["action"])
    if kind == "comodule":
        return RightComodule(v["comonoid"], v["carrier"], v["coaction"])
    if kind == "quadruple":
        return wcp.Quadruple(v["A"], v["V"], v["psi"], v["sigma"])
    if kind == "coquadruple":
        return wcc.CoQuadruple(v["C"], v["V"], v["chi"], v["tau"])
    if kind == "preunit":
        return wcp.PreunitData(v["nu"])
    if kind == "precounit":
        return wcc.PrecounitData(v["upsilon"])
    if kind == "gauge":
        return eqv.GaugePair(v["gamma"], v["theta"])
    if kind == "transfer":
        return eqv.TransferPair(v["T"], v["S"])
    if kind == "cogauge":
        return eqv.CoGaugePair(v["pi"], v["zeta"])
    if kind == "cotransfer":
        return eqv.CoTransferPair(v["P"], v["R"])
    if kind == "biproduct":
        return bip.make_biproduct(v["quadruple"], v["preunit"], v["coquadruple"], v["precounit"])
    raise AssertionError(kind)


class _Parser:
    def __init__(self, text: str):
        self.lines = text.splitlines()
        self.doc = SpecDocument()
        self.field_set = False

    def define(self, name: str, kind: str, value, line: int, col: int):
        if not _NAME.match(name):
            raise SpecError(f"invalid name {name!r}", line, col)
        if name in self.doc.kinds:
            raise SpecError(f"{name!r} already defined", line, col)
        self.doc.kinds[name] = kind
        self.doc.values[name] = value

    def obj_expr(self, tok: str, line: int, col: int) -> Obj:
        if tok == "K":
            return K
        out = K
        for part in tok.split("*"):
            if part == "K":
                continue
            if part not in self.doc.objects:
                raise SpecError(f"undefined object {part!r}", line, col)
            out = out @ self.doc.objects[part]
        return out

    def parse(self) -> SpecDocument:
        i = 0
        while i < len(self.lines):
            lineno = i + 1
            body = _strip(self.lines[i])
            i += 1
            toks = _tokens(body)
            if not toks:
                continue
            head = toks[0][0]
            if head == "mor" and "{" in body and "}" not in body:
                while i < len(self.lines) and "}" not in _strip(self.lines[i]):
                    body += " " + _strip(self.lines[i])
                    i += 1
                if i >= len(self.lines):
                    raise SpecError("unterminated '{'", lineno, body.find("{") + 1)
                body += " " + _strip(self.lines[i])
                i += 1
            self.statement(head, body, toks, lineno)
        return self.doc

    def statement(self, head: str, body: str, toks, line: int):
        if head == "field":
            self.field_stmt(toks, line)
        elif head == "obj":
            self.obj_stmt(toks, line)
        elif head == "mor":
            self.mor_stmt(body, line)
        elif head in SCHEMAS:
            self.struct_stmt(head, toks, line)
        elif head in ("check", "build", "equiv", "transport"):
            if len(toks) < 2:
                raise SpecError(f"{head} needs arguments", line, toks[0][1])
            self.doc.directives.append(Directive(head, [t for t, _ in toks[1:]], line))
        else:
            raise SpecError(f"unknown statement {head!r}", line, toks[0][1])

    def field_stmt(self, toks, line):
        if self.doc.objects or self.doc.morphisms:
            raise SpecError("field must be declared before objects and morphisms", line, toks[0][1])
        words = [t for t, _ in toks[1:]]
        if words == ["Q"]:
            self.doc.field = QQ
        elif len(words) == 2 and words[0] == "Fp":
            try:
                self.doc.field = FieldSpec.prime(int(words[1]))
            except ValueError:
                raise SpecError(f"modulus must be a prime integer, got {words[1]!r}", line, toks[2][1]) from None
        else:
            raise SpecError("expected 'field Q' or 'field Fp <p>'", line, toks[0][1])

    def obj_stmt(self, toks, line):
        if len(toks) != 4 or toks[2][0] != "dim":
            raise SpecError("expected 'obj <name> dim <n>'", line, toks[0][1])
        name, col = toks[1]
        try:
            n = int(toks[3][0])
            if n < 1:
                raise ValueError
        except ValueError:
            raise SpecError(f"dimension must be a positive integer, got {toks[3][0]!r}", line, toks[3][1]) from None
        if name == "K":
            raise SpecError("K is reserved for the unit object", line, col)
        o = Obj.atom(name, n)
        self.define(name, "obj", o, line, col)
        self.doc.objects[name] = o

    def mor_stmt(self, body: str, line: int):
        m = re.match(r"\s*mor\s+(\S+)\s*:\s*(\S+)\s*->\s*(\S+)\s*\{(.*)\}\s*$", body)
        if not m:
            raise SpecError("expected 'mor <name> : <obj> -> <obj> { r c v; ... }'", line, 1)
        name = m.group(1)
        dom = self.obj_expr(m.group(2), line, m.start(2) + 1)
        cod = self.obj_expr(m.group(3), line, m.start(3) + 1)
        fs = self.doc.field
        entries = []
        off = m.start(4)
        for chunk in m.group(4).split(";"):
            parts = chunk.split()
            col = off + 1
            off += len(chunk) + 1
            if not parts:
                continue
            if len(parts) != 3:
                raise SpecError(f"entry needs 'row col value', got {chunk.strip()!r}", line, col)
            try:
                r, c = int(parts[0]), int(parts[1])
            except ValueError:
                raise SpecError(f"bad index in {chunk.strip()!r}", line, col) from None
            try:
                v = fs.coerce(parts[2])
            except (ValueError, ZeroDivisionError, TypeError) as exc:
                raise SpecError(f"cannot parse scalar {parts[2]!r}: {exc}", line, col) from None
            if not (0 <= r < cod.dim and 0 <= c < dom.dim):
                raise SpecError(f"entry ({r}, {c}) outside {cod.dim}x{dom.dim}", line, col)
            entries.append((r, c, v))
        mor = Mor.from_entries(dom, cod, entries, fs)
        self.define(name, "mor", mor, line, m.start(1) + 1)
        self.doc.morphisms[name] = mor

    def struct_stmt(self, kind, toks, line):
        schema = SCHEMAS[kind]
        if len(toks) != 2 + 2 * len(schema):
            want = " ".join(f"{k} <{t}>" for k, t in schema)
            raise SpecError(f"expected '{kind} <name> {want}'", line, toks[0][1])
        name, ncol = toks[1]
        refs, vals = {}, {}
        for j, (key, want) in enumerate(schema):
            (kw, kcol), (ref, rcol) = toks[2 + 2 * j], toks[3 + 2 * j]
            if kw != key:
                raise SpecError(f"expected keyword {key!r}, got {kw!r}", line, kcol)
            if want == "obj":
                vals[key] = self.obj_expr(ref, line, rcol)
            else:
                if ref not in self.doc.kinds:
                    raise SpecError(f"undefined name {ref!r}", line, rcol)
                if self.doc.kinds[ref] != want:
                    raise SpecError(f"{ref!r} is a {self.doc.kinds[ref]}, expected {want}", line, rcol)
                vals[key] = self.doc.values[ref]
            refs[key] = ref
        try:
            value = _build(kind, name, vals)
        except ShapeError as exc:
            raise SpecError(str(exc), line, ncol) from None
        except PreconditionError as exc:
            raise SpecError(f"{kind} {name}: {exc}", line, ncol) from None
        self.define(name, kind, value, line, ncol)
        self.doc.decls.append(Decl(kind, name, refs, line))


def parse(text: str) -> SpecDocument:
    return _Parser(text).parse()


# --------------------------------------------------------------------------
# serialization


def _obj_text(o: Obj) -> str:
    return "*".join(o.labels) if o.factors else "K"


def format_mor(name: str, m: Mor, per_line: int = 8) -> str:
    ents = [f"{r} {c} {format_scalar(v)}" for r, c, v in m.entries()]
    head = f"mor {name} : {_obj_text(m.dom)} -> {_obj_text(m.cod)} {{"
    if len(ents) <= per_line:
        return head + (" " + "; ".join(ents) + " " if ents else " ") + "}"
    rows = ["  " + "; ".join(ents[i:i + per_line]) + ";" for i in range(0, len(ents), per_line)]
    return "\n".join([head] + rows + ["}"])


def serialize(doc: SpecDocument) -> str:
    out = [f"field {doc.field}"]
    for name, o in doc.objects.items():
        out.append(f"obj {name} dim {o.dim}")
    for name, m in doc.morphisms.items():
        out.append(format_mor(name, m))
    for d in doc.decls:
        out.append(" ".join([d.kind, d.name] + [f"{k} {v}" for k, v in d.refs.items()]))
    for d in doc.directives:
        out.append(d.text)
    return "\n".join(out) + "\n"


class DocumentBuilder:
    """Assemble a document from live values, naming morphisms on demand."""

    def __init__(self, fs: FieldSpec = QQ):
        self.doc = SpecDocument(field=fs)
        self._mor_names: dict[int, str] = {}

    def obj(self, o: Obj) -> str:
        for label, dim in o.factors:
            have = self.doc.objects.get(label)
            if have is None:
                a = Obj.atom(label, dim)
                self.doc.objects[label] = a
                self.doc.kinds[label] = "obj"
                self.doc.values[label] = a
            elif have.dim != dim:
                raise ShapeError(f"factor {label!r} used with dimensions {have.dim} and {dim}")
        return _obj_text(o)

    def mor(self, name: str, m: Mor) -> str:
        self.obj(m.dom)
        self.obj(m.cod)
        for existing, mm in self.doc.morphisms.items():
            if mm == m and mm.dom == m.dom and mm.cod == m.cod:
                return existing
        while name in self.doc.kinds:
            name += "_"
        self.doc.morphisms[name] = m
        self.doc.kinds[name] = "mor"
        self.doc.values[name] = m
        return name

    def struct(self, kind: str, name: str, value, **refs: str) -> str:
        self.doc.decls.append(Decl(kind, name, dict(refs), 0))
        self.doc.kinds[name] = kind
        self.doc.values[name] = value
        return name

    def directive(self, *words: str):
        self.doc.directives.append(Directive(words[0], list(words[1:]), 0))


# --------------------------------------------------------------------------
# running


@dataclass
class DirectiveResult:
    directive: str
    line: int
    entries: list[CheckEntry] = dc_field(default_factory=list)
    info: dict[str, Any] = dc_field(default_factory=dict)
    error: str | None = None
    error_kind: str | None = None

    @property
    def ok(self) -> bool:
        return self.error is None and all(e.passed for e in self.entries)


@dataclass
class Report:
    directives: list[DirectiveResult] = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(d.ok for d in self.directives)

    @property
    def exit_code(self) -> int:
        if any(d.error_kind == "shape" for d in self.directives):
            return 2
        return 0 if self.ok else 1


class _Runner:
    def __init__(self, doc: SpecDocument):
        self.doc = doc
        self.builds: dict[str, Any] = {}

    def val(self, name, kind):
        try:
            return self.doc.get(name, kind)
        except KeyError:
            raise SpecError(f"undefined name {name!r}", 0) from None
        except TypeError as exc:
            raise SpecError(str(exc), 0) from None

    def mor(self, name):
        return self.val(name, "mor")

    def build_q(self, name):
        if name not in self.builds:
            self.builds[name] = wcp.build_crossed_product(self.val(name, "quadruple"))
        return self.builds[name]

    def build_cq(self, name):
        if name not in self.builds:
            self.builds[name] = wcc.build_crossed_coproduct(self.val(name, "coquadruple"))
        return self.builds[name]

    def run(self, d: Directive) -> DirectiveResult:
        res = DirectiveResult(d.text, d.line)
        try:
            rep = getattr(self, f"do_{d.verb}")(d.args, res)
            if rep is not None:
                res.entries.extend(rep.entries)
        except (ShapeError, SpecError) as exc:
            res.error, res.error_kind = str(exc), "shape"
        except PreconditionError as exc:
            res.error, res.error_kind = str(exc), "precondition"
            if exc.report is not None:
                res.entries.extend(exc.report.entries)
        except WcpError as exc:
            res.error, res.error_kind = str(exc), "invariant"
            if getattr(exc, "report", None) is not None:
                res.entries.extend(exc.report.entries)
        return res

    def _arity(self, args, n, usage):
        if len(args) not in (n if isinstance(n, tuple) else (n,)):
            raise SpecError(f"usage: {usage}", 0)

    def do_check(self, args, res):
        what, rest = args[0], args[1:]
        simple = {"monoid": check_monoid, "comonoid": check_comonoid, "module": check_left_module,
                  "comodule": check_right_comodule, "quadruple": wcp.check_quadruple,
                  "coquadruple": wcc.check_coquadruple}
        if what in simple:
            self._arity(rest, 1, f"check {what} <name>")
            return simple[what](self.val(rest[0], what))
        if what == "biproduct":
            self._arity(rest, 1, "check biproduct <name>")
            return bip.check_biproduct(self.val(rest[0], "biproduct"))
        if what in ("preunit", "recovery"):
            self._arity(rest, 2, f"check {what} <quadruple> <preunit>")
            q, nu = self.val(rest[0], "quadruple"), self.val(rest[1], "preunit")
            b = self.build_q(rest[0])
            res.info["image_dim"] = b.image.dim
            return wcp.check_preunit(q, b, nu) if what == "preunit" else wcp.check_recovery(b, nu)
        if what in ("precounit", "corecovery"):
            self._arity(rest, 2, f"check {what} <coquadruple> <precounit>")
            cq, u = self.val(rest[0], "coquadruple"), self.val(rest[1], "precounit")
            b = self.build_cq(rest[0])
            res.info["image_dim"] = b.image.dim
            return wcc.check_precounit(cq, b, u) if what == "precounit" else wcc.check_corecovery(b, u)
        if what == "brzezinski":
            self._arity(rest, 2, "check brzezinski <quadruple> <eta_V>")
            return eqv.check_brzezinski(self.val(rest[0], "quadruple"), self.mor(rest[1]))
        if what == "dual":
            self._arity(rest, (1, 2), "check dual <coquadruple> [<precounit>]")
            ups = self.val(rest[1], "precounit") if len(rest) == 2 else None
            return wcc.dual_crosscheck(self.val(rest[0], "coquadruple"), ups)
        raise SpecError(f"unknown check {what!r}", 0)

    def do_build(self, args, res):
        self._arity(args, 1, "build <quadruple|coquadruple>")
        name = args[0]
        kind = self.doc.kinds.get(name)
        if kind == "quadruple":
            b = self.build_q(name)
            rep = CheckReport("build")
            rep.extend(b.consequences)
            res.info.update(ambient_dim=b.nabla.dom.dim, image_dim=b.image.dim)
            return rep
        if kind == "coquadruple":
            b = self.build_cq(name)
            res.info.update(ambient_dim=b.gamma_idem.dom.dim, image_dim=b.image.dim)
            return b.consequences
        raise SpecError(f"{name!r} is not a quadruple or coquadruple", 0)

    def _pair(self, args, qkind, pkind):
        qv, nv, qw, nw = args
        if qkind == "quadruple":
            return self.build_q(qv), self.val(nv, pkind), self.build_q(qw), self.val(nw, pkind)
        return self.build_cq(qv), self.val(nv, pkind), self.build_cq(qw), self.val(nw, pkind)

    def do_equiv(self, args, res):
        what, rest = args[0], args[1:]
        fam = {"ts": ("transfer", "quadruple", "preunit", eqv.verify_ts),
               "gauge": ("gauge", "quadruple", "preunit", eqv.verify_gauge),
               "cots": ("cotransfer", "coquadruple", "precounit", eqv.co_verify_ts),
               "cogauge": ("cogauge", "coquadruple", "precounit", eqv.co_verify_gauge)}
        if what in fam:
            kind, qk, pk, fn = fam[what]
            self._arity(rest, 5, f"equiv {what} <{kind}> <{qk}> <{pk}> <{qk}> <{pk}>")
            bv, nv, bw, nw = self._pair(rest[1:], qk, pk)
            return fn(self.val(rest[0], kind), bv, bw, nv, nw)
        if what == "sup11":
            self._arity(rest, 3, "equiv sup11 <gauge> <quadruple V> <quadruple W>")
            return eqv.check_sup11(self.val(rest[0], "gauge"), self.build_q(rest[1]), self.val(rest[2], "quadruple"))
        if what == "panaite":
            self._arity(rest, 5, "equiv panaite <gauge> <quadruple V> <quadruple W> <eta_V> <eta_W>")
            return eqv.check_panaite_reduction(self.val(rest[0], "gauge"), self.build_q(rest[1]),
                                               self.build_q(rest[2]), self.mor(rest[3]), self.mor(rest[4]))
        if what == "biproduct-ts":
            self._arity(rest, 3, "equiv biproduct-ts <biproduct> <biproduct> <transfer>")
            tp = self.val(rest[2], "transfer")
            return bip.verify_biproduct_ts(self.val(rest[0], "biproduct"), self.val(rest[1], "biproduct"), tp.T, tp.S)
        if what == "biproduct-gauge":
            self._arity(rest, 4, "equiv biproduct-gauge <biproduct> <biproduct> <gauge> <cogauge>")
            g, c = self.val(rest[2], "gauge"), self.val(rest[3], "cogauge")
            rep = bip.verify_biproduct_gauge(self.val(rest[0], "biproduct"), self.val(rest[1], "biproduct"),
                                             g.gamma, g.theta, c.pi, c.zeta)
            res.info["probe"] = rep.header[-1]
            return rep
        raise SpecError(f"unknown equiv {what!r}", 0)

    def do_transport(self, args, res):
        self._arity(args, 5, "transport <new quadruple> <new preunit> <quadruple> <preunit> <gauge>")
        newq, newnu, qv, nv, gname = args
        for n in (newq, newnu):
            if n in self.doc.kinds:
                raise SpecError(f"{n!r} already defined", 0)
        gp = self.val(gname, "gauge")
        qw, nw = eqv.transport_structure(self.build_q(qv), self.val(nv, "preunit"), gp.gamma, gp.theta)
        self.doc.kinds[newq], self.doc.values[newq] = "quadruple", qw
        self.doc.kinds[newnu], self.doc.values[newnu] = "preunit", nw
        rep = CheckReport("transport")
        rep.extend(wcp.check_quadruple(qw))
        return rep


def run(doc: SpecDocument) -> Report:
    """Execute the directives in order.  The document's namespace is copied so
    ``transport`` definitions do not leak into the caller's document."""
    scratch = SpecDocument(doc.field, dict(doc.objects), dict(doc.morphisms), list(doc.decls),
                           dict(doc.values), dict(doc.kinds), list(doc.directives))
    r = _Runner(scratch)
    return Report([r.run(d) for d in scratch.directives])


# --------------------------------------------------------------------------
# output


def _matrix(m: Mor | None):
    if m is None:
        return None
    return [[format_scalar(v) for v in row] for row in m.to_rows()]


def report_dict(r: Report) -> dict:
    out = []
    for d in r.directives:
        out.append({
            "directive": d.directive,
            "line": d.line,
            "status": "pass" if d.ok else ("error" if d.error and not d.entries else "fail"),
            "conditions": {e.name: "pass" if e.passed else "fail" for e in d.entries},
            "failures": [{"name": e.name, "lhs": _matrix(e.lhs), "rhs": _matrix(e.rhs)}
                         for e in d.entries if not e.passed],
            "info": d.info,
            "error": d.error,
        })
    return {"directives": out}


def emit_report(r: Report, fmt: str = "text") -> bytes:
    if fmt == "json":
        return json.dumps(report_dict(r), separators=(",", ":"), ensure_ascii=False).encode()
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}")
    lines = []
    for d in r.directives:
        lines.append(f"# {d.directive}" + (f"  (line {d.line})" if d.line else ""))
        for k, v in d.info.items():
            lines.append(f"# {k} = {v}")
        for e in d.entries:
            lines.append(f"{e.name}: {'PASS' if e.passed else 'FAIL'}")
        if d.error:
            lines.append(f"# error: {d.error}")
    return ("\n".join(lines) + ("\n" if lines else "")).encode()
