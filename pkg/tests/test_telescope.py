import mpmath
import pytest

from conftest import X, T
from oracles import certified_minimal
from ppvkit.field import RatT, RatX
from ppvkit.ore import OpT, apply_t
from ppvkit.telescope import (Bounds, bounds_exponential, check_integrable,
                              primitive_of_exponential, primitive_of_rational,
                              verify_exponential, verify_rational)

t = RatT.t()
PF_P = -(1 / X + 1 / (X - 1) + 1 / (X - T)) / 2
PF_Q = 1 / (2 * (X - T))


@pytest.mark.parametrize("eta, L, f", [
    (2 * T / (X ** 2 + T), "∂t - 1/(2*t)", "-x/(x^2+t)"),
    (1 / X ** 2, "1", "-1/x"),
    (1 / (X - T), "∂t", "-1/(x-t)"),
    (T * X, "1", "t*x^2/2"),
    ((X ** 2 + T ** 2 * X + T) / (X ** 3 + T * X), "∂t^2 - (1/(2*t))*∂t", None),
])
def test_rational_goldens(eta, L, f):
    c = primitive_of_rational(eta)
    assert str(c.L) == L
    if f is not None:
        assert str(c.f) == f
    assert certified_minimal(c)


def test_rational_zero():
    c = primitive_of_rational(RatX())
    assert c.L.is_one() and c.f.is_zero()


def test_rational_optimized_agrees():
    for eta in (2 * T / (X ** 2 + T), (X + T) / (X - T) ** 3, 1 / (X * (X - T))):
        assert primitive_of_rational(eta).L == primitive_of_rational(eta, optimize=True).L


def test_verify_rejects_perturbation():
    c = primitive_of_rational(2 * T / (X ** 2 + T))
    c.f = c.f + 1 / X
    assert not verify_rational(c)


def test_picard_fuchs_verified_form():
    c = primitive_of_exponential(PF_P, PF_Q)
    cleared = [a * (t * t - t) for a in c.L.coeffs]
    assert cleared == [RatT(1) / 4, 2 * t - 1, t * t - t]
    assert c.h == -(X ** 2 - X) / (2 * T * (T - 1) * (X - T))
    assert verify_exponential(c)
    assert certified_minimal(c)
    assert c.trace.N_tried == [0, 1, 2]


def test_picard_fuchs_numeric_oracle():
    # y(t) = int_0^1 dx / sqrt(x (1-x) (t-x)) solves the cleared operator
    def y(s):
        return mpmath.quad(lambda u: 1 / mpmath.sqrt(u * (1 - u) * (s - u)), [0, 1])
    s = mpmath.mpf(3)
    with mpmath.workdps(30):
        y0, y1, y2 = y(s), mpmath.diff(y, s), mpmath.diff(y, s, 2)
        plus = s * (s - 1) * y2 + (2 * s - 1) * y1 + y0 / 4
        minus = s * (s - 1) * y2 + (2 * s - 1) * y1 - y0 / 4
    assert abs(plus) < mpmath.mpf(10) ** -12
    assert abs(minus) > mpmath.mpf(10) ** -2


def test_picard_fuchs_bounds():
    assert bounds_exponential(PF_P, PF_Q, 2) == Bounds(1, 1)
    c = primitive_of_exponential(PF_P, PF_Q)
    assert c.trace.bounds[-1] == {"N": 2, "S": 1, "T": 1}


@pytest.mark.parametrize("p, q, L, h", [
    (-1 / (2 * X), RatX(), "1", "2*x"),
    (-1 / (2 * X) - 1 / (2 * (X - T)), 1 / (2 * (X - T)), "∂t", "-x/t"),
])
def test_exponential_goldens(p, q, L, h):
    c = primitive_of_exponential(p, q)
    assert str(c.L) == L and str(c.h) == h
    assert certified_minimal(c)


def test_exponential_resonant_infinity():
    # p ~ -3/x at infinity lets h have degree 2 with S~ = 0
    p = -3 / X + 1 / (2 * (X - 1)) + 1 / (2 * (X - T))
    q = -1 / (2 * (X - T))
    c = primitive_of_exponential(p, q)
    assert verify_exponential(c)
    assert certified_minimal(c)


def test_not_integrable():
    with pytest.raises(ValueError, match="p,q not integrable"):
        check_integrable(1 / X, 1 / X)
    with pytest.raises(ValueError, match="p,q not integrable"):
        primitive_of_exponential(RatX(), X)


def test_residue_span_small():
    # residues t and t^2 span a 2-dimensional space over the constants
    eta = T / (X - 1) + T ** 2 / (X - T) + 3 * T / (X + T)
    c = primitive_of_rational(eta)
    assert c.order == 2
    for r in (T, T ** 2):
        assert apply_t(c.L, r).is_zero()
