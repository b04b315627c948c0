"""
Exact linear algebra on tensor-structured finite-dimensional spaces.

An ``Obj`` is an ordered list of named factors.  The basis of X (x) Y is
indexed left-factor-major: basis pair (i, j) sits at ``i * dim(Y) + j``.
A ``Mor`` is an exact matrix (rows = codomain basis, columns = domain
basis) stored column-sparse, so composites of the shape
``mu o (mu (x) id)`` stay cheap even when the dense matrix would not.

Scalars live in a ``FieldSpec``: the rationals (``fractions.Fraction``)
or a prime field (reduced ``int``).  Floats are refused.
"""

from __future__ import annotations

import numbers
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Callable, Iterable, Mapping, Sequence, Union

from .errors import NotIdempotentError, ShapeError


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    kind: str = "Q"
    modulus: int | None = None

    def __post_init__(self):
        if self.kind == "Q":
            if self.modulus is not None:
                raise ValueError("the rationals take no modulus")
        elif self.kind == "Fp":
            if not isinstance(self.modulus, int) or not _is_prime(self.modulus):
                raise ValueError(f"modulus must be prime, got {self.modulus!r}")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls("Q")

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls("Fp", p)

    @property
    def is_prime_field(self) -> bool:
        return self.kind == "Fp"

    def __str__(self):
        return "Q" if self.kind == "Q" else f"Fp {self.modulus}"

    def coerce(self, x):
        """Convert ``x`` to a canonical scalar of this field."""
        if isinstance(x, bool):
            x = int(x)
        if isinstance(x, float) or not isinstance(x, (numbers.Rational, str)):
            raise TypeError(f"inexact or unsupported scalar {x!r}; use int, Fraction or 'p/q'")
        if isinstance(x, str):
            x = parse_scalar(x)
        if self.kind == "Q":
            return Fraction(x)
        p = self.modulus
        x = Fraction(x)
        if x.denominator % p == 0:
            raise ZeroDivisionError(f"{x} has no image in F_{p}")
        return (x.numerator * pow(x.denominator, -1, p)) % p

    def reduce(self, x):
        # canonical form after arithmetic on canonical scalars
        if self.kind == "Q":
            return x
        return x % self.modulus

    def inv(self, x):
        if self.is_zero(x):
            raise ZeroDivisionError("inverse of zero")
        if self.kind == "Q":
            return 1 / Fraction(x)
        return pow(x, -1, self.modulus)

    def is_zero(self, x) -> bool:
        return x == 0

    @property
    def one(self):
        return self.coerce(1)

    @property
    def zero(self):
        return self.coerce(0)


QQ = FieldSpec.rationals()


def parse_scalar(text: str) -> Fraction:
    """Parse ``"p"`` or ``"p/q"`` into a Fraction; raise ValueError otherwise."""
    s = text.strip()
    if "." in s or "e" in s.lower():
        raise ValueError(f"not an exact scalar: {text!r}")
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad scalar {text!r}: {exc}") from None


def format_scalar(x) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


# --------------------------------------------------------------------------
# objects


@dataclass(frozen=True)
class Obj:
    factors: tuple[tuple[str, int], ...] = ()

    def __post_init__(self):
        fs = tuple((str(lab), int(d)) for lab, d in self.factors)
        for lab, d in fs:
            if d < 1:
                raise ShapeError(f"factor {lab!r} has non-positive dimension {d}")
        object.__setattr__(self, "factors", fs)

    @classmethod
    def atom(cls, label: str, dim: int) -> "Obj":
        return cls(((label, dim),))

    @property
    def dim(self) -> int:
        n = 1
        for _, d in self.factors:
            n *= d
        return n

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(d for _, d in self.factors)

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(lab for lab, _ in self.factors)

    def __matmul__(self, other: "Obj") -> "Obj":
        return Obj(self.factors + other.factors)

    def reversed(self) -> "Obj":
        return Obj(tuple(reversed(self.factors)))

    def is_unit(self) -> bool:
        return not self.factors

    def __str__(self):
        if not self.factors:
            return "K"
        return "*".join(lab for lab, _ in self.factors)

    def __repr__(self):
        if not self.factors:
            return "Obj(K)"
        return "Obj(" + " (x) ".join(f"{lab}[{d}]" for lab, d in self.factors) + ")"


K = Obj()


def tensor_obj(*objs: Obj) -> Obj:
    return reduce(lambda x, y: x @ y, objs, K)


# --------------------------------------------------------------------------
# morphisms

Scalar = Union[int, Fraction]
Columns = dict  # col -> {row: value}


class Mor:
    """Exact linear map ``dom -> cod`` with column-sparse storage.

    Instances are immutable by convention; every operation returns a new one.
    """

    __slots__ = ("dom", "cod", "field", "_cols")

    def __init__(self, dom: Obj, cod: Obj, cols: Mapping[int, Mapping[int, Scalar]] | None = None,
                 field: FieldSpec = QQ, *, _trusted: bool = False):
        self.dom = dom
        self.cod = cod
        self.field = field
        if _trusted:
            self._cols = cols if cols is not None else {}
            return
        nd, nc = dom.dim, cod.dim
        clean: dict[int, dict[int, Scalar]] = {}
        for c, col in (cols or {}).items():
            if not 0 <= c < nd:
                raise ShapeError(f"column {c} out of range for domain {dom!r}")
            out = {}
            for r, v in col.items():
                if not 0 <= r < nc:
                    raise ShapeError(f"row {r} out of range for codomain {cod!r}")
                v = field.coerce(v)
                if v != 0:
                    out[r] = v
            if out:
                clean[c] = out
        self._cols = clean

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_entries(cls, dom: Obj, cod: Obj, entries: Mapping[tuple[int, int], Scalar] | Iterable,
                     field: FieldSpec = QQ) -> "Mor":
        """Build from ``{(row, col): value}`` or an iterable of ``(row, col, value)``."""
        items = entries.items() if isinstance(entries, Mapping) else (((r, c), v) for r, c, v in entries)
        cols: dict[int, dict[int, Scalar]] = {}
        for (r, c), v in items:
            col = cols.setdefault(c, {})
            col[r] = field.reduce(col.get(r, 0) + field.coerce(v))
        return cls(dom, cod, cols, field)

    @classmethod
    def from_rows(cls, dom: Obj, cod: Obj, rows: Sequence[Sequence[Scalar]], field: FieldSpec = QQ) -> "Mor":
        if len(rows) != cod.dim or any(len(row) != dom.dim for row in rows):
            raise ShapeError(f"matrix shape does not match {cod.dim}x{dom.dim} for {dom!r} -> {cod!r}")
        cols: dict[int, dict[int, Scalar]] = {}
        for r, row in enumerate(rows):
            for c, v in enumerate(row):
                if v != 0:
                    cols.setdefault(c, {})[r] = v
        return cls(dom, cod, cols, field)

    @classmethod
    def from_basis_map(cls, dom: Obj, cod: Obj, fn: Callable[[tuple[int, ...]], Mapping[tuple[int, ...], Scalar]],
                       field: FieldSpec = QQ) -> "Mor":
        """Build from a function sending a domain multi-index to ``{codomain multi-index: coeff}``.

        Multi-indices follow the factor lists of ``dom`` and ``cod``.
        """
        cols = {}
        for c in range(dom.dim):
            image = fn(unravel(c, dom.dims))
            if image:
                cols[c] = {ravel(idx, cod.dims): v for idx, v in image.items()}
        return cls(dom, cod, cols, field)

    @classmethod
    def zero(cls, dom: Obj, cod: Obj, field: FieldSpec = QQ) -> "Mor":
        return cls(dom, cod, {}, field, _trusted=True)

    # -- access ------------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.cod.dim, self.dom.dim)

    def columns(self) -> Mapping[int, Mapping[int, Scalar]]:
        return self._cols

    def __getitem__(self, rc: tuple[int, int]):
        r, c = rc
        return self._cols.get(c, {}).get(r, self.field.zero)

    def column(self, c: int) -> dict[int, Scalar]:
        return dict(self._cols.get(c, {}))

    def entries(self) -> list[tuple[int, int, Scalar]]:
        """Nonzero entries as ``(row, col, value)``, row-major."""
        return sorted((r, c, v) for c, col in self._cols.items() for r, v in col.items())

    @property
    def nnz(self) -> int:
        return sum(len(col) for col in self._cols.values())

    def to_rows(self) -> list[list[Scalar]]:
        z = self.field.zero
        rows = [[z] * self.dom.dim for _ in range(self.cod.dim)]
        for c, col in self._cols.items():
            for r, v in col.items():
                rows[r][c] = v
        return rows

    def is_zero(self) -> bool:
        return not self._cols

    # -- algebra -----------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Mor):
            return NotImplemented
        return (self.dom == other.dom and self.cod == other.cod
                and self.field == other.field and self._cols == other._cols)

    def __hash__(self):
        return hash((self.dom, self.cod, self.field,
                     tuple(sorted((c, tuple(sorted(col.items()))) for c, col in self._cols.items()))))

    def __matmul__(self, other: "Mor") -> "Mor":
        return compose(self, other)

    def _check_parallel(self, other: "Mor"):
        if not isinstance(other, Mor):
            raise TypeError(f"expected Mor, got {type(other).__name__}")
        if self.dom != other.dom or self.cod != other.cod:
            raise ShapeError(f"cannot add {self.dom!r}->{self.cod!r} and {other.dom!r}->{other.cod!r}")
        _same_field(self, other)

    def __add__(self, other: "Mor") -> "Mor":
        self._check_parallel(other)
        f = self.field
        cols = {c: dict(col) for c, col in self._cols.items()}
        for c, col in other._cols.items():
            out = cols.setdefault(c, {})
            for r, v in col.items():
                s = f.reduce(out.get(r, 0) + v)
                if s == 0:
                    out.pop(r, None)
                else:
                    out[r] = s
            if not out:
                del cols[c]
        return Mor(self.dom, self.cod, cols, f, _trusted=True)

    def __neg__(self) -> "Mor":
        return self.scale(-1)

    def __sub__(self, other: "Mor") -> "Mor":
        return self + (-other)

    def scale(self, s) -> "Mor":
        f = self.field
        s = f.coerce(s)
        if s == 0:
            return Mor.zero(self.dom, self.cod, f)
        cols = {c: {r: f.reduce(v * s) for r, v in col.items()} for c, col in self._cols.items()}
        return Mor(self.dom, self.cod, cols, f, _trusted=True)

    def __rmul__(self, s) -> "Mor":
        if isinstance(s, Mor):
            return NotImplemented
        return self.scale(s)

    def relabel(self, dom: Obj | None = None, cod: Obj | None = None) -> "Mor":
        """Same matrix, new (equal-dimension) domain/codomain factor lists."""
        dom = self.dom if dom is None else dom
        cod = self.cod if cod is None else cod
        if dom.dim != self.dom.dim or cod.dim != self.cod.dim:
            raise ShapeError(f"relabel changes dimension: {self.dom!r}->{dom!r}, {self.cod!r}->{cod!r}")
        return Mor(dom, cod, self._cols, self.field, _trusted=True)

    def __repr__(self):
        return f"Mor({self.dom} -> {self.cod}, {self.shape[0]}x{self.shape[1]}, nnz={self.nnz}, {self.field})"

    def pretty(self) -> str:
        rows = [[format_scalar(v) for v in row] for row in self.to_rows()]
        w = max((len(s) for row in rows for s in row), default=1)
        return "\n".join("[" + " ".join(s.rjust(w) for s in row) + "]" for row in rows)


def _same_field(*ms: Mor) -> FieldSpec:
    f = ms[0].field
    for m in ms[1:]:
        if m.field != f:
            raise ShapeError(f"mixed fields {f} and {m.field}")
    return f


def ravel(idx: Sequence[int], dims: Sequence[int]) -> int:
    n = 0
    for i, d in zip(idx, dims):
        n = n * d + i
    return n


def unravel(n: int, dims: Sequence[int]) -> tuple[int, ...]:
    out = []
    for d in reversed(dims):
        n, i = divmod(n, d)
        out.append(i)
    return tuple(reversed(out))


# --------------------------------------------------------------------------
# categorical operations


def identity(X: Obj, field: FieldSpec = QQ) -> Mor:
    one = field.one
    return Mor(X, X, {i: {i: one} for i in range(X.dim)}, field, _trusted=True)


def _as_mor(x, field: FieldSpec) -> Mor:
    if isinstance(x, Obj):
        return identity(x, field)
    if isinstance(x, Mor):
        return x
    raise TypeError(f"expected Mor or Obj, got {type(x).__name__}")


def _field_of(items) -> FieldSpec:
    fields = {x.field for x in items if isinstance(x, Mor)}
    if len(fields) > 1:
        raise ShapeError(f"mixed fields {sorted(map(str, fields))}")
    return fields.pop() if fields else QQ


def compose(*ms: Mor) -> Mor:
    """``compose(h, g, f) = h o g o f``; needs ``dom(g) == cod(f)`` at each seam."""
    if not ms:
        raise ValueError("compose needs at least one morphism")
    out = ms[-1]
    for g in reversed(ms[:-1]):
        out = _compose2(g, out)
    return out


def _compose2(g: Mor, f: Mor) -> Mor:
    if g.dom != f.cod:
        raise ShapeError(f"cannot compose: codomain {f.cod!r} of the right map "
                         f"differs from domain {g.dom!r} of the left map")
    field = _same_field(g, f)
    gcols = g._cols
    cols = {}
    for c, col in f._cols.items():
        acc: dict[int, Scalar] = {}
        for k, v in col.items():
            gk = gcols.get(k)
            if gk is None:
                continue
            for r, w in gk.items():
                acc[r] = acc.get(r, 0) + w * v
        if field.is_prime_field:
            p = field.modulus
            acc = {r: x % p for r, x in acc.items() if x % p}
        else:
            acc = {r: x for r, x in acc.items() if x}
        if acc:
            cols[c] = acc
    return Mor(f.dom, g.cod, cols, field, _trusted=True)


def tensor(*items: Union[Mor, Obj]) -> Mor:
    """Kronecker product, left-factor-major.  An ``Obj`` stands for its identity,
    so ``tensor(A, f)`` is ``id_A (x) f``."""
    field = _field_of(items)
    ms = [_as_mor(x, field) for x in items]
    if not ms:
        return identity(K, field)
    return reduce(_tensor2, ms)


def _tensor2(f: Mor, g: Mor) -> Mor:
    field = _same_field(f, g)
    gd, gc = g.dom.dim, g.cod.dim
    cols = {}
    red = field.reduce
    for cf, colf in f._cols.items():
        for cg, colg in g._cols.items():
            cols[cf * gd + cg] = {rf * gc + rg: red(vf * vg)
                                  for rf, vf in colf.items() for rg, vg in colg.items()}
    return Mor(f.dom @ g.dom, f.cod @ g.cod, cols, field, _trusted=True)


def permute_factors(X: Obj, perm: Sequence[int], field: FieldSpec = QQ) -> Mor:
    """Isomorphism ``X -> Y`` with ``Y.factors[k] = X.factors[perm[k]]``."""
    n = len(X.factors)
    if sorted(perm) != list(range(n)):
        raise ValueError(f"{perm} is not a permutation of {n} factors")
    Y = Obj(tuple(X.factors[k] for k in perm))
    dx, dy = X.dims, Y.dims
    one = field.one
    cols = {}
    for c in range(X.dim):
        ix = unravel(c, dx)
        cols[c] = {ravel([ix[k] for k in perm], dy): one}
    return Mor(X, Y, cols, field, _trusted=True)


def swap(X: Obj, Y: Obj, field: FieldSpec = QQ) -> Mor:
    """Symmetry ``c_{X,Y}: X (x) Y -> Y (x) X``."""
    dx, dy = X.dim, Y.dim
    one = field.one
    cols = {i * dy + j: {j * dx + i: one} for i in range(dx) for j in range(dy)}
    return Mor(X @ Y, Y @ X, cols, field, _trusted=True)


def transpose_dual(f: Mor) -> Mor:
    """Transpose: ``cod -> dom`` with factor lists kept."""
    cols: dict[int, dict[int, Scalar]] = {}
    for c, col in f._cols.items():
        for r, v in col.items():
            cols.setdefault(r, {})[c] = v
    return Mor(f.cod, f.dom, cols, f.field, _trusted=True)


def reverse_order(f: Mor) -> Mor:
    """Conjugate by the factor-reversing symmetries: ``rev(dom) -> rev(cod)``.

    This is the strict monoidal functor that swaps the order of tensor
    factors; it is needed to move between A (x) V and V (x) A settings.
    """
    nd, nc = len(f.dom.factors), len(f.cod.factors)
    pd = permute_factors(f.dom, list(range(nd))[::-1], f.field)
    pc = permute_factors(f.cod, list(range(nc))[::-1], f.field)
    return compose(pc, f, transpose_dual(pd))


def dualize(f: Mor) -> Mor:
    """Transpose followed by factor reversal.

    A contravariant involution that turns monoids into comonoids and the
    ``A (x) V`` product data into the ``V (x) C`` coproduct data.
    """
    return reverse_order(transpose_dual(f))


# --------------------------------------------------------------------------
# idempotent splitting


@dataclass(frozen=True)
class SplitResult:
    image: Obj
    inj: Mor
    proj: Mor


def rref(rows: list[list[Scalar]], field: FieldSpec) -> tuple[list[list[Scalar]], list[int]]:
    """Reduced row echelon form and pivot columns (exact)."""
    m = [list(r) for r in rows]
    nr = len(m)
    nc = len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(nc):
        if r >= nr:
            break
        piv = next((i for i in range(r, nr) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = field.inv(m[r][c])
        m[r] = [field.reduce(x * inv) for x in m[r]]
        for i in range(nr):
            if i != r and m[i][c] != 0:
                s = m[i][c]
                m[i] = [field.reduce(a - s * b) for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m, pivots


def rank(f: Mor) -> int:
    return len(rref(f.to_rows(), f.field)[1])


def split_idempotent(e: Mor, label: str = "im") -> SplitResult:
    """Rank factorization ``e = inj o proj`` with ``proj o inj = id``.

    ``inj`` holds the pivot columns of ``e``; ``proj`` is the nonzero part of
    its reduced row echelon form.
    """
    if e.dom != e.cod:
        raise ShapeError(f"idempotent must be an endomorphism, got {e.dom!r} -> {e.cod!r}")
    defect = compose(e, e) - e
    if not defect.is_zero():
        raise NotIdempotentError("e o e != e", defect=defect)
    field = e.field
    R, pivots = rref(e.to_rows(), field)
    k = len(pivots)
    if k == 0:
        raise ShapeError("idempotent has rank 0; its image is the zero space")
    image = Obj.atom(label, k)
    inj = Mor(image, e.cod, {j: e.column(c) for j, c in enumerate(pivots)}, field, _trusted=True)
    proj = Mor.from_rows(e.dom, image, R[:k], field)
    if compose(proj, inj) != identity(image, field) or compose(inj, proj) != e:
        raise AssertionError("rank factorization of an idempotent failed its splitting laws")
    return SplitResult(image, inj, proj)
