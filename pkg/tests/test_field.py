import sympy
from flint import fmpq_poly
from hypothesis import given, settings

from conftest import X, T, polyx, ratt, ratx, sympy_equal, to_sympy
from ppvkit.field import (PolyX, RatT, RatX, _polyx_to_mp, _mp_to_polyx, base_d_expand,
                          gcd_x, integer_roots, pole_order, polypart, rational_root_multiset,
                          residue_resultant, resultant_x, simple_pole_divisor,
                          squarefree_kernel, zpencil_resultant)
from ppvkit.parse import parse_expr


# ---- Q(t)

@given(ratt(), ratt(), ratt())
def test_ratt_ring_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a - a == RatT(0)


@given(ratt(allow_zero=False))
def test_ratt_inverse(a):
    assert a * a.inv() == RatT(1)
    assert a.den.is_monic() if hasattr(a.den, "is_monic") else True


@given(ratt(), ratt())
def test_ratt_leibniz(a, b):
    assert (a * b).deriv() == a.deriv() * b + a * b.deriv()


def test_ratt_canonical():
    a = RatT(fmpq_poly([0, 2]), fmpq_poly([0, 4]))
    assert a == RatT(fmpq_poly([1]), fmpq_poly([2]))
    assert str(a) == "1/2"
    assert hash(a) == hash(RatT(fmpq_poly([1]), fmpq_poly([2])))


# ---- Q(t)(x)

@given(ratx(), ratx(), ratx())
def test_ratx_field_laws(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)


@given(ratx(), ratx(allow_zero=False))
def test_ratx_division(a, b):
    assert (a / b) * b == a


@given(ratx(), ratx())
def test_derivations(a, b):
    assert (a * b).dx() == a.dx() * b + a * b.dx()
    assert (a * b).dt() == a.dt() * b + a * b.dt()
    assert a.dx().dt() == a.dt().dx()


@settings(max_examples=10)
@given(ratx(1), ratx(1))
def test_ratx_against_sympy(a, b):
    # independent arithmetic route through canonical strings
    assert sympy_equal(to_sympy(a * b + a.dx()), to_sympy(a) * to_sympy(b)
                       + sympy.diff(to_sympy(a), sympy.Symbol("x")))


@given(ratx())
def test_print_parse_roundtrip(a):
    assert parse_expr(str(a)) == a


def test_canonical_strings():
    assert str(2 * T / (X ** 2 + T)) == "2*t/(x^2+t)"
    assert str(-X / (X ** 2 + T)) == "-x/(x^2+t)"
    assert str((T ** 2 - T) / X ** 2) == "(t^2-t)/x^2"
    assert str(X / (3 * T)) == "x/(3*t)"
    assert str(RatX(-1)) == "-1"


def test_num_den_view():
    f = (X + 1) / (2 * T * X ** 2 + T)
    assert f.den.lc() == RatT(1)
    assert RatX.frac(f.num, f.den) == f


# ---- polynomials over Q(t)

@given(polyx(3), polyx(2))
def test_divmod(a, b):
    if b.is_zero():
        return
    q, r = divmod(a, b)
    assert q * b + r == a
    assert r.is_zero() or r.deg < b.deg


@given(polyx(2), polyx(2), polyx(1))
def test_gcd_against_flint(a, b, c):
    # Euclid over Q(t) vs the bivariate flint gcd
    a, b = a * c, b * c
    if a.is_zero() and b.is_zero():
        return
    g = gcd_x(a, b)
    na, _ = _polyx_to_mp(a)
    nb, _ = _polyx_to_mp(b)
    oracle = _mp_to_polyx(na.gcd(nb), fmpq_poly([1])).monic()
    assert g == oracle
    if not c.is_zero():
        assert (g % c.monic()).is_zero() or c.is_const()


@given(polyx(2), polyx(2))
def test_resultant_against_flint(a, b):
    # Euclidean remainder sequence vs the bivariate Sylvester resultant
    if a.is_zero() or b.is_zero():
        return
    na, la = _polyx_to_mp(a)
    nb, lb = _polyx_to_mp(b)
    R = na.resultant(nb, "x")
    oracle = RatT(fmpq_poly([0]))
    if not R.is_zero():
        cs = {i: c for (i, _), c in R.to_dict().items()}
        num = fmpq_poly([cs.get(i, 0) for i in range(max(cs) + 1)])
        oracle = RatT(num, la ** b.deg * lb ** a.deg)
    assert resultant_x(a, b) == oracle


def test_resultant_known():
    a = PolyX([RatT(-1), RatT(0), RatT(1)])   # x^2 - 1
    b = PolyX([RatT(0), RatT(1)])             # x
    assert resultant_x(a, b) == RatT(-1)


def test_squarefree_kernel():
    den = ((X - T) ** 3 * (X ** 2 + T)).to_polyx()
    d, n = squarefree_kernel(den)
    assert d == ((X - T) * (X ** 2 + T)).to_polyx()
    assert n == 3


@given(ratx(3))
def test_base_d_reassemble(f):
    if f.is_zero():
        return
    d, _ = squarefree_kernel(f.den)
    e = base_d_expand(f, d)
    assert e.reassemble() == f
    assert all(L.is_zero() or L.deg < max(d.deg, 1) for L in e.layers)
    assert polypart(f) == e.polypart
    assert pole_order(f, d) == len(e.layers)


def test_simple_pole_divisor():
    den = ((X - T) ** 2 * X * (X + 1)).to_polyx()
    assert simple_pole_divisor(den) == (X * (X + 1)).to_polyx()


def test_residue_resultant():
    f = T / X + 3 / (X - T) + 1 / (X - T) ** 2
    R = residue_resultant(f)
    # only the simple pole x = 0 counts
    assert R == PolyX([-RatT(fmpq_poly([0, 1])), RatT(1)])
    assert rational_root_multiset(residue_resultant(1 / X - 1 / (X - 1))) is not None
    roots = rational_root_multiset(residue_resultant(RatX(1) / 2 / X + RatX(3) / 2 / (X - T)))
    assert sorted(r for r, _ in roots) == [sympy.Rational(1, 2), sympy.Rational(3, 2)]


def test_integer_roots():
    z = PolyX([RatT(0), RatT(1)])
    p = (z - PolyX([RatT(3)])) * (z + PolyX([RatT(2)])) * (z - PolyX([RatT(fmpq_poly([0, 1]))]))
    assert integer_roots(p) == [-2, 3]
    assert integer_roots(p, nonneg=True) == [3]
    assert integer_roots(PolyX([RatT(1), RatT(1)])) == [-1]
