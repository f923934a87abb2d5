import random

import pytest
from flint import fmpq_poly
from hypothesis import settings, strategies as st

from ppvkit.field import PolyX, RatT, RatX
from ppvkit.ore import OpT

settings.register_profile("ci", max_examples=40, deadline=None)
settings.load_profile("ci")

X, T = RatX.x(), RatX.t()

small_int = st.integers(-6, 6)


@st.composite
def ratt(draw, max_deg=2, allow_zero=True):
    num = draw(st.lists(small_int, min_size=1, max_size=max_deg + 1))
    den = draw(st.lists(small_int, min_size=1, max_size=max_deg + 1))
    if not any(den):
        den = [1]
    v = RatT(fmpq_poly(num), fmpq_poly(den))
    if not allow_zero and v.is_zero():
        v = RatT(1)
    return v


@st.composite
def polyx(draw, max_deg=2, t_deg=1):
    cs = draw(st.lists(ratt(t_deg), min_size=1, max_size=max_deg + 1))
    return PolyX(cs)


@st.composite
def ratx(draw, max_deg=2, t_deg=1, allow_zero=True):
    n = draw(polyx(max_deg, t_deg))
    d = draw(polyx(max_deg, t_deg))
    if d.is_zero():
        d = PolyX([1])
    v = RatX.frac(n, d)
    if not allow_zero and v.is_zero():
        v = RatX(1)
    return v


def rand_ratt(rng, deg=1, lo=-4, hi=4):
    num = [rng.randint(lo, hi) for _ in range(deg + 1)]
    den = [rng.randint(lo, hi) for _ in range(deg + 1)]
    if not any(den):
        den = [1]
    return RatT(fmpq_poly(num), fmpq_poly(den))


def rand_op(rng, order, monic=False):
    cs = [rand_ratt(rng, 1) for _ in range(order + 1)]
    if monic or cs[-1].is_zero():
        cs[-1] = RatT(1)
    return OpT(cs)


@pytest.fixture
def rng():
    return random.Random(1234)


def to_sympy(v):
    """Independent route: hand a canonical string to sympy."""
    import sympy
    x, t = sympy.symbols("x t")
    return sympy.sympify(str(v).replace("^", "**"), locals={"x": x, "t": t})


def sympy_equal(a, b):
    import sympy
    return sympy.cancel(sympy.together(a - b)) == 0
