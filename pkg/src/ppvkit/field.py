"""Exact arithmetic in the tower Q < Q(t) < Q(t)[x] < Q(t)(x).

Q[t] is python-flint's ``fmpq_poly``.  An element of Q(t)(x) is stored as a
coprime pair of bivariate ``fmpq_mpoly`` in (t, x); the pair is scaled so the
x-leading coefficient of the denominator has leading t-coefficient 1, which
makes the representation unique.  ``RatX.num``/``RatX.den`` give the usual
x-monic view over Q(t).
"""
from fractions import Fraction
import random

from flint import fmpq, fmpq_poly, fmpq_mpoly_ctx

CTX = fmpq_mpoly_ctx.get(("t", "x"), "lex")
CTX3 = fmpq_mpoly_ctx.get(("t", "x", "z"), "lex")

_P0 = fmpq_poly([])
_P1 = fmpq_poly([1])
_M0 = CTX.from_dict({})
_M1 = CTX.from_dict({(0, 0): 1})


def _q(v):
    if isinstance(v, fmpq):
        return v
    if isinstance(v, Fraction):
        return fmpq(v.numerator, v.denominator)
    if isinstance(v, int):
        return fmpq(v)
    raise TypeError(f"not a rational number: {v!r}")


def _qp(v):
    if isinstance(v, fmpq_poly):
        return v
    return fmpq_poly([_q(v)])


def _plcm(a, b):
    return a * b // a.gcd(b)


# ---------------------------------------------------------------- Q(t)


class RatT:
    """Element of Q(t): reduced num/den with den monic."""

    __slots__ = ("num", "den", "_h")

    def __init__(self, num=0, den=1):
        n, d = _qp(num), _qp(den)
        if d.is_zero():
            raise ZeroDivisionError("zero denominator in Q(t)")
        if n.is_zero():
            n, d = _P0, _P1
        else:
            g = n.gcd(d)
            if not g.is_one():
                n, d = n // g, d // g
            lc = d.leading_coefficient()
            if lc != 1:
                n, d = n / lc, d / lc
        self.num, self.den = n, d
        self._h = None

    @classmethod
    def _raw(cls, n, d):
        obj = cls.__new__(cls)
        obj.num, obj.den, obj._h = n, d, None
        return obj

    @staticmethod
    def t():
        return RatT._raw(fmpq_poly([0, 1]), _P1)

    def is_zero(self):
        return self.num.is_zero()

    def is_one(self):
        return self.num.is_one() and self.den.is_one()

    def is_const(self):
        return self.den.is_one() and self.num.degree() <= 0

    def const_value(self):
        """The rational value of a t-free element."""
        if not self.is_const():
            raise ValueError("element depends on t")
        return self.num[0]

    def __bool__(self):
        return not self.num.is_zero()

    def __add__(self, o):
        o = _rt(o)
        if o is NotImplemented:
            return o
        if self.den == o.den:
            return RatT(self.num + o.num, self.den)
        return RatT(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatT._raw(-self.num, self.den)

    def __sub__(self, o):
        o = _rt(o)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, o):
        return (-self) + o

    def __mul__(self, o):
        o = _rt(o)
        if o is NotImplemented:
            return o
        return RatT(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inv(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return RatT(self.den, self.num)

    def __truediv__(self, o):
        o = _rt(o)
        if o is NotImplemented:
            return o
        return self * o.inv()

    def __rtruediv__(self, o):
        return _rt(o) * self.inv()

    def __pow__(self, e):
        if e < 0:
            return self.inv() ** (-e)
        return RatT._raw(self.num ** e, self.den ** e)

    def __eq__(self, o):
        o = _rt(o)
        if o is NotImplemented:
            return False
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        if self._h is None:
            self._h = hash((tuple(self.num.coeffs()), tuple(self.den.coeffs())))
        return self._h

    def deriv(self):
        """d/dt."""
        n, d = self.num, self.den
        if d.is_one():
            return RatT._raw(n.derivative(), _P1)
        return RatT(n.derivative() * d - n * d.derivative(), d * d)

    def __call__(self, v):
        v = _q(v)
        dv = self.den(v)
        if dv == 0:
            raise ZeroDivisionError("evaluation at a pole")
        return self.num(v) / dv

    def to_mpoly(self):
        """(numerator, denominator) as bivariate polynomials."""
        return _tp_to_mp(self.num), _tp_to_mp(self.den)

    def __str__(self):
        return render_frac(_tp_dict(self.num), _tp_dict(self.den))

    def __repr__(self):
        return f"RatT({self})"


def _rt(v):
    if isinstance(v, RatT):
        return v
    if isinstance(v, (int, Fraction, fmpq, fmpq_poly)):
        return RatT(v)
    return NotImplemented


def as_ratt(v):
    r = _rt(v)
    if r is NotImplemented:
        raise TypeError(f"cannot coerce {v!r} to Q(t)")
    return r


def ratt_lcm_den(vals):
    """lcm of the denominators of a sequence of RatT values."""
    L = _P1
    for v in vals:
        if not v.den.is_one():
            L = _plcm(L, v.den)
    return L


# ------------------------------------------------------- bivariate helpers


def _tp_dict(p):
    return {(i, 0): c for i, c in enumerate(p.coeffs()) if c != 0}


def _tp_to_mp(p):
    return CTX.from_dict(_tp_dict(p))


def _mp_xcoeffs(m):
    """x-coefficients of a bivariate polynomial, as fmpq_poly in t."""
    if m.is_zero():
        return []
    buckets = {}
    for (i, j), c in m.to_dict().items():
        buckets.setdefault(j, {})[i] = c
    out = []
    for j in range(max(buckets) + 1):
        b = buckets.get(j)
        if not b:
            out.append(_P0)
        else:
            cs = [0] * (max(b) + 1)
            for i, c in b.items():
                cs[i] = c
            out.append(fmpq_poly(cs))
    return out


def _mp_degx(m):
    if m.is_zero():
        return 0
    return m.degrees()[1]


def _mp_lcx(m):
    """x-leading coefficient as fmpq_poly in t."""
    j = _mp_degx(m)
    cs = {}
    for (a, b), c in m.to_dict().items():
        if b == j:
            cs[a] = c
    arr = [0] * (max(cs) + 1)
    for a, c in cs.items():
        arr[a] = c
    return fmpq_poly(arr)


def _mp_from_xcoeffs(polys):
    d = {}
    for j, p in enumerate(polys):
        for i, c in enumerate(p.coeffs()):
            if c != 0:
                d[(i, j)] = c
    return CTX.from_dict(d)


# -------------------------------------------------------------- Q(t)[x]


class PolyX:
    """Polynomial in x over Q(t); coeffs[i] is the coefficient of x^i."""

    __slots__ = ("coeffs", "_h")

    def __init__(self, coeffs=()):
        cs = [as_ratt(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs = tuple(cs)
        self._h = None

    @staticmethod
    def x():
        return PolyX([0, 1])

    @staticmethod
    def const(c):
        return PolyX([c])

    @property
    def deg(self):
        # deg(0) = 0 convention
        return max(len(self.coeffs) - 1, 0)

    def is_zero(self):
        return not self.coeffs

    def is_const(self):
        return len(self.coeffs) <= 1

    def lc(self):
        return self.coeffs[-1] if self.coeffs else RatT(0)

    def coeff(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else RatT(0)

    def __eq__(self, o):
        if isinstance(o, PolyX):
            return self.coeffs == o.coeffs
        if isinstance(o, (int, Fraction, fmpq, RatT)):
            return self == PolyX([o])
        return False

    def __hash__(self):
        if self._h is None:
            self._h = hash(self.coeffs)
        return self._h

    def __add__(self, o):
        o = _px(o)
        a, b = self.coeffs, o.coeffs
        n = max(len(a), len(b))
        zero = RatT(0)
        return PolyX([(a[i] if i < len(a) else zero) + (b[i] if i < len(b) else zero)
                      for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return PolyX([-c for c in self.coeffs])

    def __sub__(self, o):
        return self + (-_px(o))

    def __rsub__(self, o):
        return _px(o) - self

    def __mul__(self, o):
        if isinstance(o, (int, Fraction, fmpq, RatT)):
            c = as_ratt(o)
            return PolyX([c * a for a in self.coeffs])
        o = _px(o)
        if self.is_zero() or o.is_zero():
            return PolyX()
        return _mp_to_polyx(*_polyx_mul_mp(self, o))

    __rmul__ = __mul__

    def __pow__(self, e):
        out = PolyX([1])
        base = self
        while e:
            if e & 1:
                out = out * base
            e >>= 1
            if e:
                base = base * base
        return out

    def __divmod__(self, o):
        o = _px(o)
        if o.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        db = len(o.coeffs) - 1
        inv = o.lc().inv()
        q = [RatT(0)] * max(len(r) - db, 0)
        for k in range(len(r) - 1, db - 1, -1):
            c = r[k]
            if c.is_zero():
                continue
            c = c * inv
            q[k - db] = c
            for i, b in enumerate(o.coeffs):
                r[k - db + i] = r[k - db + i] - c * b
        return PolyX(q), PolyX(r[:db] if db else [])

    def __floordiv__(self, o):
        return divmod(self, o)[0]

    def __mod__(self, o):
        return divmod(self, o)[1]

    def exquo(self, o):
        q, r = divmod(self, o)
        if not r.is_zero():
            raise ArithmeticError("inexact polynomial division")
        return q

    def monic(self):
        if self.is_zero():
            return self
        inv = self.lc().inv()
        return PolyX([c * inv for c in self.coeffs])

    def deriv_x(self):
        return PolyX([c * i for i, c in enumerate(self.coeffs)][1:])

    def deriv_t(self):
        return PolyX([c.deriv() for c in self.coeffs])

    def __call__(self, v):
        v = as_ratt(v)
        acc = RatT(0)
        for c in reversed(self.coeffs):
            acc = acc * v + c
        return acc

    def to_ratx(self):
        return RatX.from_polyx(self)

    def to_mpoly(self):
        """(numerator, t-denominator) with numerator bivariate."""
        return _polyx_to_mp(self)

    def __str__(self):
        return str(self.to_ratx())

    def __repr__(self):
        return f"PolyX({self})"


def _px(v):
    if isinstance(v, PolyX):
        return v
    return PolyX([v])


def _polyx_to_mp(p):
    L = ratt_lcm_den(p.coeffs)
    polys = [c.num * (L // c.den) for c in p.coeffs]
    return _mp_from_xcoeffs(polys), L


def _polyx_mul_mp(a, b):
    na, la = _polyx_to_mp(a)
    nb, lb = _polyx_to_mp(b)
    return na * nb, la * lb


def _mp_to_polyx(N, c):
    """PolyX for N / c with N bivariate and c in Q[t]."""
    return PolyX([RatT(p, c) for p in _mp_xcoeffs(N)])


# ------------------------------------------------------------- Q(t)(x)


class RatX:
    """Element of Q(t)(x)."""

    __slots__ = ("N", "D", "_h")

    def __init__(self, N=0, D=None):
        if isinstance(N, RatX) and D is None:
            self.N, self.D, self._h = N.N, N.D, N._h
            return
        N = _as_mp(N)
        D = _M1 if D is None else _as_mp(D)
        if D.is_zero():
            raise ZeroDivisionError("zero denominator in Q(t)(x)")
        if N.is_zero():
            N, D = _M0, _M1
        else:
            g = N.gcd(D)
            if not g.is_one():
                N, D = N / g, D / g
            c = _mp_lcx(D).leading_coefficient()
            if c != 1:
                N, D = N / c, D / c
        self.N, self.D, self._h = N, D, None

    @classmethod
    def _raw(cls, N, D):
        obj = cls.__new__(cls)
        obj.N, obj.D, obj._h = N, D, None
        return obj

    @staticmethod
    def x():
        return RatX._raw(CTX.gens()[1], _M1)

    @staticmethod
    def t():
        return RatX._raw(CTX.gens()[0], _M1)

    @staticmethod
    def from_ratt(c):
        c = as_ratt(c)
        return RatX(_tp_to_mp(c.num), _tp_to_mp(c.den))

    @staticmethod
    def from_polyx(p):
        N, L = _polyx_to_mp(p)
        return RatX(N, _tp_to_mp(L))

    @staticmethod
    def frac(num, den):
        """num/den for PolyX (or coercible) arguments."""
        return RatX.from_polyx(_px(num)) / RatX.from_polyx(_px(den))

    # views
    @property
    def num(self):
        lc = _mp_lcx(self.D)
        return PolyX([RatT(p, lc) for p in _mp_xcoeffs(self.N)])

    @property
    def den(self):
        lc = _mp_lcx(self.D)
        return PolyX([RatT(p, lc) for p in _mp_xcoeffs(self.D)])

    def is_zero(self):
        return self.N.is_zero()

    def __bool__(self):
        return not self.N.is_zero()

    def is_one(self):
        return self.N == self.D

    def is_poly(self):
        return _mp_degx(self.D) == 0

    def is_x_free(self):
        return _mp_degx(self.N) == 0 and _mp_degx(self.D) == 0

    def is_t_free(self):
        return all(i == 0 for i, _ in self.N.to_dict()) and all(i == 0 for i, _ in self.D.to_dict())

    def to_polyx(self):
        if not self.is_poly():
            raise ValueError("not a polynomial in x")
        return _mp_to_polyx(self.N, _mp_xcoeffs(self.D)[0])

    def to_ratt(self):
        if not self.is_x_free():
            raise ValueError("depends on x")
        return RatT(_mp_xcoeffs(self.N)[0] if not self.N.is_zero() else _P0, _mp_xcoeffs(self.D)[0])

    def den_degree(self):
        return _mp_degx(self.D)

    def num_degree(self):
        return _mp_degx(self.N)

    # arithmetic
    def __add__(self, o):
        o = _rx(o)
        if o is NotImplemented:
            return o
        if self.D == o.D:
            return RatX(self.N + o.N, self.D)
        return RatX(self.N * o.D + o.N * self.D, self.D * o.D)

    __radd__ = __add__

    def __neg__(self):
        return RatX._raw(-self.N, self.D)

    def __sub__(self, o):
        o = _rx(o)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, o):
        return (-self) + o

    def __mul__(self, o):
        o = _rx(o)
        if o is NotImplemented:
            return o
        return RatX(self.N * o.N, self.D * o.D)

    __rmul__ = __mul__

    def inv(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return RatX(self.D, self.N)

    def __truediv__(self, o):
        o = _rx(o)
        if o is NotImplemented:
            return o
        return self * o.inv()

    def __rtruediv__(self, o):
        return _rx(o) * self.inv()

    def __pow__(self, e):
        if e < 0:
            return self.inv() ** (-e)
        return RatX._raw(self.N ** e, self.D ** e)

    def __eq__(self, o):
        o = _rx(o)
        if o is NotImplemented:
            return False
        return self.N == o.N and self.D == o.D

    def __hash__(self):
        if self._h is None:
            self._h = hash((tuple(sorted(self.N.to_dict().items())),
                            tuple(sorted(self.D.to_dict().items()))))
        return self._h

    def _deriv(self, var):
        N, D = self.N, self.D
        dN = N.derivative(var)
        if D.is_one():
            return RatX._raw(dN, D) if not dN.is_zero() else RatX()
        return RatX(dN * D - N * D.derivative(var), D * D)

    def dx(self):
        return self._deriv("x")

    def dt(self):
        return self._deriv("t")

    def __str__(self):
        return render_frac(self.N.to_dict(), self.D.to_dict())

    def __repr__(self):
        return f"RatX({self})"


def _as_mp(v):
    if isinstance(v, type(_M0)):
        return v
    if isinstance(v, fmpq_poly):
        return _tp_to_mp(v)
    return CTX.from_dict({(0, 0): _q(v)} if v != 0 else {})


def _rx(v):
    if isinstance(v, RatX):
        return v
    if isinstance(v, (int, Fraction, fmpq)):
        return RatX(v)
    if isinstance(v, RatT):
        return RatX.from_ratt(v)
    if isinstance(v, PolyX):
        return RatX.from_polyx(v)
    return NotImplemented


def as_ratx(v):
    r = _rx(v)
    if r is NotImplemented:
        raise TypeError(f"cannot coerce {v!r} to Q(t)(x)")
    return r


X = RatX.x()
T = RatX.t()


def deriv_x(f):
    return as_ratx(f).dx()


def deriv_t(f):
    return as_ratx(f).dt()


# ------------------------------------------------------- rendering


def _int_clear(dicts):
    """Scale dicts of rational coefficients to coprime integers."""
    from math import gcd, lcm
    L = 1
    for d in dicts:
        for c in d.values():
            L = lcm(L, int(c.q))
    out = [{k: int(c.p) * (L // int(c.q)) for k, c in d.items()} for d in dicts]
    g = 0
    for d in out:
        for c in d.values():
            g = gcd(g, c)
    if g > 1:
        out = [{k: c // g for k, c in d.items()} for d in out]
    return out


def _order(keys):
    # descending x-degree, then descending t-degree; keys are (t_exp, x_exp)
    return sorted(keys, key=lambda k: (-k[1], -k[0]))


def _mono(i, j):
    parts = []
    if i:
        parts.append("t" if i == 1 else f"t^{i}")
    if j:
        parts.append("x" if j == 1 else f"x^{j}")
    return "*".join(parts)


def render_intpoly(d):
    """Render {(t_exp, x_exp): int} as a canonical string."""
    if not d:
        return "0"
    out = []
    for k in _order(d):
        c = d[k]
        m = _mono(*k)
        a = abs(c)
        if not m:
            body = str(a)
        elif a == 1:
            body = m
        else:
            body = f"{a}*{m}"
        if not out:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append(("-" if c < 0 else "+") + body)
    return "".join(out)


def render_frac(Nd, Dd):
    if not Nd:
        return "0"
    Ni, Di = _int_clear([Nd, Dd])
    lead = _order(Di)[0]
    if Di[lead] < 0:
        Ni = {k: -c for k, c in Ni.items()}
        Di = {k: -c for k, c in Di.items()}
    ns = render_intpoly(Ni)
    if Di == {(0, 0): 1}:
        return ns
    ds = render_intpoly(Di)
    if len(Ni) > 1:
        ns = f"({ns})"
    simple_den = len(Di) == 1 and (
        list(Di) == [(0, 0)] or (list(Di.values()) == [1] and 0 in list(Di)[0]))
    if not simple_den:
        ds = f"({ds})"
    return f"{ns}/{ds}"


def render_upoly(p, var="z"):
    """Render a PolyX as a polynomial in ``var`` with Q(t) coefficients."""
    if p.is_zero():
        return "0"
    terms = []
    for i in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[i]
        if c.is_zero():
            continue
        s = str(c)
        m = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if not m:
            terms.append(s)
        elif s == "1":
            terms.append(m)
        elif s == "-1":
            terms.append("-" + m)
        else:
            terms.append(f"({s})*{m}")
    return " + ".join(terms)


# ------------------------------------------------ gcd / squarefree / resultants


def gcd_x(a, b):
    """Monic gcd in Q(t)[x] by the Euclidean algorithm."""
    a, b = _px(a), _px(b)
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd of zeros")
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def squarefree_kernel(den):
    """Return (d, n): d = den/gcd(den, den') monic, n minimal with den | d^n."""
    den = _px(den)
    if den.is_zero():
        raise ValueError("squarefree kernel of zero")
    d = den.exquo(gcd_x(den, den.deriv_x())).monic()
    n, acc = 0, PolyX([1])
    while not (acc % den).is_zero():
        acc = acc * d
        n += 1
    return d, n


class BaseDExpansion:
    """polypart + sum_k layers[k-1] / d^k."""

    __slots__ = ("polypart", "layers", "d")

    def __init__(self, polypart, layers, d):
        self.polypart, self.layers, self.d = polypart, list(layers), d

    def order(self):
        """Highest k with a nonzero layer (0 if none)."""
        for k in range(len(self.layers), 0, -1):
            if not self.layers[k - 1].is_zero():
                return k
        return 0

    def layer(self, k):
        return self.layers[k - 1] if 1 <= k <= len(self.layers) else PolyX()

    def reassemble(self):
        out = RatX.from_polyx(self.polypart)
        dr = RatX.from_polyx(self.d)
        for k, Nk in enumerate(self.layers, start=1):
            if not Nk.is_zero():
                out = out + RatX.from_polyx(Nk) / dr ** k
        return out

    def __repr__(self):
        return f"BaseDExpansion({self.polypart}, {[str(n) for n in self.layers]}, d={self.d})"


def pole_order(f, d):
    """Smallest k >= 0 with d^k * f a polynomial, or None."""
    den = as_ratx(f).den
    acc, k = PolyX([1]), 0
    while not (acc % den).is_zero():
        if k > den.deg:
            return None
        acc = acc * d
        k += 1
    return k


def base_d_expand(f, d):
    f = as_ratx(f)
    d = _px(d)
    k = pole_order(f, d)
    if k is None:
        raise ValueError("denominator outside d-adic span")
    if d.is_const():
        return BaseDExpansion(f.to_polyx(), [], d)
    num, den = f.num, f.den
    P = num * (d ** k).exquo(den)
    digits = []
    while not P.is_zero():
        P, r = divmod(P, d)
        digits.append(r)
    layers = [digits[k - j] if k - j < len(digits) else PolyX() for j in range(1, k + 1)]
    poly = PolyX()
    for j in range(len(digits) - 1, k - 1, -1):
        poly = poly * d + digits[j]
    return BaseDExpansion(poly, layers, d)


def polypart(f):
    f = as_ratx(f)
    return divmod(f.num, f.den)[0]


def resultant_x(a, b):
    """res_x(a, b) over Q(t) by the Euclidean remainder sequence."""
    a, b = _px(a), _px(b)
    if a.is_zero() or b.is_zero():
        return RatT(0)
    res = RatT(1)
    while True:
        m, n = len(a.coeffs) - 1, len(b.coeffs) - 1
        if n == 0:
            return res * b.lc() ** m
        r = a % b
        if r.is_zero():
            return RatT(0)
        k = len(r.coeffs) - 1
        if (m * n) % 2:
            res = -res
        res = res * b.lc() ** (m - k)
        a, b = b, r


def _to_mp3(m, zpow=0):
    return CTX3.from_dict({(i, j, zpow): c for (i, j), c in m.to_dict().items()})


def _zpoly_from_mp3(R):
    """Bivariate (t, z) polynomial (x-free) -> PolyX in z, made monic."""
    buckets = {}
    for (i, j, k), c in R.to_dict().items():
        assert j == 0
        buckets.setdefault(k, {})[i] = c
    polys = []
    for k in range(max(buckets) + 1 if buckets else 0):
        b = buckets.get(k, {})
        arr = [0] * (max(b) + 1 if b else 0)
        for i, c in b.items():
            arr[i] = c
        polys.append(fmpq_poly(arr))
    return PolyX([RatT(p) for p in polys]).monic()


def simple_pole_divisor(den):
    """Product of the factors of den of multiplicity exactly one."""
    den = _px(den)
    d, _ = squarefree_kernel(den)
    rep = gcd_x(d, gcd_x(den, den.deriv_x()))
    return d.exquo(rep).monic()


def _common_mp(polys):
    """Bivariate numerators of PolyX values over one common t-denominator."""
    L = ratt_lcm_den([c for p in polys for c in p.coeffs])
    out = [_mp_from_xcoeffs([c.num * (L // c.den) for c in p.coeffs]) for p in polys]
    return out, L


def zpencil_resultant(B, parts):
    """Monic (in z) res_x(B, sum_j P_j(x) * c_j(z)).

    ``parts`` is a list of (PolyX P_j, [c_j0, c_j1, ...]) with rational c_ji
    the coefficients of z^i.
    """
    B = _px(B)
    if B.is_const():
        return PolyX([1])
    nb, _ = _polyx_to_mp(B)
    nums, _ = _common_mp([_px(P) for P, _ in parts])
    z = CTX3.gens()[2]
    A = CTX3.from_dict({})
    for num, (_, cz) in zip(nums, parts):
        zc = CTX3.from_dict({(0, 0, i): _q(c) for i, c in enumerate(cz) if c != 0})
        A = A + _to_mp3(num) * zc
    R = _to_mp3(nb).resultant(A, "x")
    if R.is_zero():
        raise ArithmeticError("degenerate parametric resultant")
    return _zpoly_from_mp3(R)


def pencil_resultant(D1, P, Q):
    """Monic (in z) res_x(D1, P - z*Q) as a PolyX in z."""
    return zpencil_resultant(D1, [(P, [1]), (Q, [0, -1])])


def residue_resultant(f):
    """Polynomial in z (monic, over Q(t)) whose roots are the residues of f at
    its simple poles."""
    f = as_ratx(f)
    den = f.den
    D1 = simple_pole_divisor(den)
    if D1.is_const():
        return PolyX([1])
    G = den.exquo(D1)
    return pencil_resultant(D1, f.num, D1.deriv_x() * G)


# ---------------------------------------------------------- root finding


_ROOT_RNG_SEED = 20240611


def integer_roots(p, nonneg=False):
    """Integer roots of a PolyX in z with Q(t) coefficients.

    Candidates come from three random rational specialisations of t; each
    surviving candidate is checked exactly.
    """
    p = _px(p)
    if p.is_zero():
        raise ValueError("integer roots of the zero polynomial")
    if p.is_const():
        return []
    L = ratt_lcm_den(p.coeffs)
    polys = [c.num * (L // c.den) for c in p.coeffs]
    rng = random.Random(_ROOT_RNG_SEED)
    cands = None
    tries = 0
    while tries < 3:
        t0 = fmpq(rng.randint(-97, 97), rng.randint(1, 31))
        spec = fmpq_poly([q(t0) for q in polys])
        if spec.is_zero():
            continue
        tries += 1
        found = {int(r.p) for r, _ in spec.roots() if r.q == 1}
        cands = found if cands is None else cands & found
        if not cands:
            return []
    out = []
    for z0 in sorted(cands):
        acc = _P0
        for q in reversed(polys):
            acc = acc * z0 + q
        if acc.is_zero():
            out.append(z0)
    if nonneg:
        out = [z for z in out if z >= 0]
    return out


def rational_root_multiset(p):
    """If every root of p is a t-free rational, return [(root, mult)], else None."""
    p = _px(p).monic()
    if p.is_const():
        return []
    if not all(c.is_const() for c in p.coeffs):
        return None
    q = fmpq_poly([c.const_value() for c in p.coeffs])
    roots = q.roots()
    if sum(m for _, m in roots) != q.degree():
        return None
    return [(Fraction(int(r.p), int(r.q)), m) for r, m in roots]
