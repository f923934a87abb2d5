"""Linear differential operators: Q(t)[d/dt] acting on Q(t)(x), and
Q(t)(x)[d/dx]."""
from math import comb

from .field import RatT, RatX, as_ratt, as_ratx, ratt_lcm_den


def _trim(cs, zero_test):
    cs = list(cs)
    while cs and zero_test(cs[-1]):
        cs.pop()
    return tuple(cs)


def _depth0(s, chars):
    depth = 0
    for i, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif depth == 0 and i > 0 and ch in chars:
            return True
    return False


def _is_negative(s):
    return s.startswith("-") or s.startswith("(-")


def render_operator(coeffs, symbol):
    """Highest order first; coefficients in canonical form."""
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c.is_zero():
            continue
        s = str(c)
        neg = _is_negative(s)
        if neg and terms:
            s = str(-c)
        mono = "" if k == 0 else (symbol if k == 1 else f"{symbol}^{k}")
        if not mono:
            body = f"({s})" if _depth0(s, "+-") and not s.startswith("(") else s
        elif s == "1":
            body = mono
        elif s == "-1":
            body = "-" + mono
        elif _depth0(s, "+-/") or s.startswith("("):
            body = f"({s})*{mono}"
        else:
            body = f"{s}*{mono}"
        if not terms:
            terms.append(body)
        else:
            terms.append((" - " if neg else " + ") + body)
    return "".join(terms) if terms else "0"


class OpT:
    """sum coeffs[i] * dt^i with coefficients in Q(t)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        self.coeffs = _trim((as_ratt(c) for c in coeffs), lambda c: c.is_zero())

    @staticmethod
    def dt():
        return OpT([0, 1])

    @staticmethod
    def one():
        return OpT([1])

    @property
    def order(self):
        # the zero operator has order -1
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def is_one(self):
        return len(self.coeffs) == 1 and self.coeffs[0].is_one()

    def coeff(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else RatT(0)

    def lc(self):
        return self.coeffs[-1]

    def is_monic(self):
        return bool(self.coeffs) and self.lc().is_one()

    def monic(self):
        if self.is_zero():
            raise ValueError("monic of the zero operator")
        inv = self.lc().inv()
        return OpT([c * inv for c in self.coeffs])

    def __eq__(self, o):
        return isinstance(o, OpT) and self.coeffs == o.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, o):
        n = max(len(self.coeffs), len(o.coeffs))
        return OpT([self.coeff(i) + o.coeff(i) for i in range(n)])

    def __neg__(self):
        return OpT([-c for c in self.coeffs])

    def __sub__(self, o):
        return self + (-o)

    def scale(self, c):
        """Left multiplication by a scalar of Q(t)."""
        c = as_ratt(c)
        return OpT([c * a for a in self.coeffs])

    def __mul__(self, o):
        if isinstance(o, OpT):
            return mul_t(self, o)
        return self.scale(o)

    def __call__(self, f):
        return apply_t(self, f)

    def cleared(self):
        """The operator times the lcm of its coefficient denominators."""
        L = RatT(ratt_lcm_den(self.coeffs))
        return OpT([c * L for c in self.coeffs])

    def __str__(self):
        return render_operator(self.coeffs, "∂t")

    def __repr__(self):
        return f"OpT({self})"


def apply_t(L, f):
    f = as_ratx(f)
    out = RatX()
    cur = f
    for i, a in enumerate(L.coeffs):
        if i:
            cur = cur.dt()
        if not a.is_zero():
            out = out + RatX.from_ratt(a) * cur
    return out


def _dt_powers(b, n):
    out = [b]
    for _ in range(n):
        out.append(out[-1].deriv())
    return out


def mul_t(L1, L2):
    """Composition L1 o L2 under dt o a = a dt + a'."""
    if L1.is_zero() or L2.is_zero():
        return OpT()
    acc = [RatT(0)] * (L1.order + L2.order + 1)
    ders = [_dt_powers(b, L1.order) for b in L2.coeffs]
    for i, a in enumerate(L1.coeffs):
        if a.is_zero():
            continue
        for j, bd in enumerate(ders):
            for k in range(i + 1):
                term = bd[k]
                if term.is_zero():
                    continue
                acc[i - k + j] = acc[i - k + j] + a * term * comb(i, k)
    return OpT(acc)


def right_divide_t(L, Lp):
    """(Q, R) with L = Q o Lp + R and ord R < ord Lp."""
    if Lp.is_zero():
        raise ZeroDivisionError("division by zero operator")
    R = L
    Q = OpT()
    d = Lp.order
    inv = Lp.lc().inv()
    while not R.is_zero() and R.order >= d:
        k = R.order - d
        term = OpT([0] * k + [R.lc() * inv])
        Q = Q + term
        R = R - mul_t(term, Lp)
    return Q, R


class OpX:
    """sum coeffs[j] * dx^j with coefficients in Q(t)(x)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        self.coeffs = _trim((as_ratx(c) for c in coeffs), lambda c: c.is_zero())

    @property
    def order(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def coeff(self, j):
        return self.coeffs[j] if 0 <= j < len(self.coeffs) else RatX()

    def lc(self):
        return self.coeffs[-1]

    def monic(self):
        inv = self.lc().inv()
        return OpX([c * inv for c in self.coeffs])

    def __eq__(self, o):
        return isinstance(o, OpX) and self.coeffs == o.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, f):
        return apply_x(self, f)

    def __str__(self):
        return render_operator(self.coeffs, "∂x")

    def __repr__(self):
        return f"OpX({self})"


def apply_x(D, f):
    f = as_ratx(f)
    out = RatX()
    cur = f
    for j, b in enumerate(D.coeffs):
        if j:
            cur = cur.dx()
        if not b.is_zero():
            out = out + b * cur
    return out
