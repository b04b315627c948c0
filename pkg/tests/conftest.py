import functools
from fractions import Fraction

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from wcpkit import fixtures as fx
from wcpkit.tensor import QQ, Mor, Obj

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")

small = st.integers(min_value=-3, max_value=3)


@st.composite
def mors(draw, dom: Obj, cod: Obj, field=QQ):
    rows = draw(st.lists(st.lists(small, min_size=dom.dim, max_size=dom.dim),
                         min_size=cod.dim, max_size=cod.dim))
    return Mor.from_rows(dom, cod, rows, field)


@functools.lru_cache(maxsize=None)
def bundle(name):
    return fx.get(name)


@functools.lru_cache(maxsize=None)
def built(name):
    from wcpkit import wcp
    return wcp.build_crossed_product(bundle(name).quadruple)


@pytest.fixture(params=list(fx.REGISTRY))
def fixture_name(request):
    return request.param


# -- oracles written out by hand, independent of the library formulas


def twisted_group_product(n, t):
    """(g^a (x) g^i)(g^b (x) g^j) = c(i, j) g^(a+b) (x) g^(i+j), written out directly."""
    A = fx.group_algebra("A", n).carrier
    V = fx.group_algebra("V", n).carrier
    c = fx.carry_cocycle(n, t)
    return Mor.from_basis_map(A @ V @ A @ V, A @ V,
                              lambda x: {((x[0] + x[2]) % n, (x[1] + x[3]) % n): c(x[1], x[3])})


def pair_groupoid_product(n):
    """(p_a (x) e_ij)(p_b (x) e_kl) = [a = i][b = j][j = k] p_i (x) e_il."""
    A = fx.diagonal_algebra("A", n).carrier
    H = fx.pair_groupoid_algebra(n).carrier

    def f(x):
        a, e, b, e2 = x
        i, j = divmod(e, n)
        k, l = divmod(e2, n)
        return {(i, i * n + l): 1} if a == i and b == j and j == k else {}

    return Mor.from_basis_map(A @ H @ A @ H, A @ H, f)


def pair_groupoid_nabla(n):
    A = fx.diagonal_algebra("A", n).carrier
    H = fx.pair_groupoid_algebra(n).carrier
    return Mor.from_basis_map(A @ H, A @ H, lambda x: {x: 1} if x[0] == x[1] // n else {})


def trace(m):
    return sum(m[i, i] for i in range(m.dom.dim))


def elimination_rank(rows):
    # plain Gaussian elimination on Fractions, kept apart from the library rref
    m = [[Fraction(x) for x in r] for r in rows]
    rk = 0
    for c in range(len(m[0])):
        p = next((i for i in range(rk, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[rk], m[p] = m[p], m[rk]
        for i in range(rk + 1, len(m)):
            s = m[i][c] / m[rk][c]
            m[i] = [a - s * b for a, b in zip(m[i], m[rk])]
        rk += 1
    return rk

# criterion number -> (passed, label); filled in by test_acceptance
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, label = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k:2d}: {'PASS' if ok else 'FAIL'}  {label}")
