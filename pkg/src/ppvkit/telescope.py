"""Minimal telescopers in Q(t)[dt] with certificates.

primitive_of_rational(eta) finds the monic L of least order with
L(eta) = dx(f), f rational.  primitive_of_exponential(p, q) does the same for
eta with dx(eta) = p*eta and dt(eta) = q*eta, where the certificate h
satisfies sum a_i R_i = dx(h) + p*h.  Both search N = 0, 1, ... over an
undetermined-coefficient ansatz and stop at the first N whose linear system
has a solution with alpha_N = 1.
"""
from dataclasses import dataclass, field as dc_field

from .field import (PolyX, RatT, RatX, as_ratx, base_d_expand, integer_roots,
                    pole_order, polypart, residue_resultant, squarefree_kernel)
from .linalg import MatT, nullspace, solve_with_unit_pivot
from .ore import OpT, apply_t


@dataclass
class SearchTrace:
    N_tried: list = dc_field(default_factory=list)
    system_dims: list = dc_field(default_factory=list)
    bounds: list = dc_field(default_factory=list)

    def as_dict(self):
        return {"N_tried": list(self.N_tried),
                "system_dims": [list(d) for d in self.system_dims],
                "bounds": [dict(b) for b in self.bounds]}


@dataclass
class RationalCert:
    L: OpT
    f: RatX
    eta: RatX
    trace: SearchTrace = None

    @property
    def order(self):
        return self.L.order


@dataclass
class ExponentialCert:
    L: OpT
    h: RatX
    p: RatX
    q: RatX
    trace: SearchTrace = None

    @property
    def order(self):
        return self.L.order


@dataclass(frozen=True)
class Bounds:
    S: int
    T: int


class System:
    """A linear system sum_u col_u * v_u = 0 with named unknown blocks."""

    def __init__(self, cols, layout):
        self.layout = layout
        nrows = max((len(c.coeffs) for c in cols), default=0)
        rows = [[c.coeff(i) for c in cols] for i in range(nrows)]
        self.matrix = MatT.from_rows(rows, len(cols)) if rows else MatT(0, len(cols), [])

    @property
    def dims(self):
        return (self.matrix.rows, self.matrix.cols)

    def alpha_cols(self):
        return self.layout["alpha"]


def _clear(cols, mult, optimize):
    """Multiply rational columns by d^k (or by the exact lcm of their
    denominators when optimizing) and return polynomial columns."""
    if optimize:
        from .field import gcd_x
        L = PolyX([1])
        for c in cols:
            den = c.den
            L = (L * den).exquo(gcd_x(L, den))
        W = RatX.from_polyx(L)
    else:
        W = RatX.from_polyx(mult)
    out = []
    for c in cols:
        v = W * c
        if not v.is_poly():
            raise ArithmeticError("clearing multiplier does not clear the ansatz")
        out.append(v.to_polyx())
    return out


def _x_pow(j):
    return RatX.x() ** j


# ---------------------------------------------------------------- rational telescopers


@dataclass
class RationalData:
    eta: RatX
    d: PolyX
    n: int
    M: int
    s: int


def rational_data(eta):
    eta = as_ratx(eta)
    d, n = squarefree_kernel(eta.den)
    return RationalData(eta, d, n, d.deg if not d.is_const() else 0,
                        polypart(eta).deg)


def rational_system(data, N, optimize=False):
    """(H_N): dx(f_N) - L_N(eta) cleared by d^(n+N)."""
    eta, d, n, M, s = data.eta, data.d, data.n, data.M, data.s
    dr = RatX.from_polyx(d)
    cols, layout = [], {"alpha": [], "beta": [], "xi": {}}
    der = eta
    for i in range(N + 1):
        if i:
            der = der.dt()
        layout["alpha"].append(len(cols))
        cols.append(-der)
    for j in range(s + 2):
        layout["beta"].append(len(cols))
        cols.append(RatX(j) * _x_pow(j - 1) if j else RatX())
    for k in range(1, n + N):
        for l in range(M):
            layout["xi"][(k, l)] = len(cols)
            cols.append((_x_pow(l) / dr ** k).dx())
    return System(_clear(cols, d ** (n + N), optimize), layout)


def _rational_witness(data, sysm, v):
    f = RatX()
    for j, c in enumerate(sysm.layout["beta"]):
        if not v[c].is_zero():
            f = f + RatX.from_ratt(v[c]) * _x_pow(j)
    dr = RatX.from_polyx(data.d)
    for (k, l), c in sysm.layout["xi"].items():
        if not v[c].is_zero():
            f = f + RatX.from_ratt(v[c]) * _x_pow(l) / dr ** k
    return f


def primitive_of_rational(eta, optimize=False):
    eta = as_ratx(eta)
    trace = SearchTrace()
    if eta.is_zero():
        return RationalCert(OpT.one(), RatX(), eta, trace)
    data = rational_data(eta)
    for N in range(data.M + 1):
        sysm = rational_system(data, N, optimize)
        trace.N_tried.append(N)
        trace.system_dims.append(sysm.dims)
        alpha = sysm.alpha_cols()
        v = solve_with_unit_pivot(sysm.matrix, alpha[N])
        if v is None:
            continue
        L = OpT([v[c] for c in alpha])
        f = _rational_witness(data, sysm, v)
        return RationalCert(L, f, eta, trace)
    raise RuntimeError("no telescoper found up to the order cap")


def alpha_feasible(sysm):
    """True iff the system has a kernel vector with some nonzero alpha."""
    alpha = sysm.alpha_cols()
    return any(any(not vec[c].is_zero() for c in alpha) for vec in nullspace(sysm.matrix))


def verify_rational(cert, eta=None):
    eta = cert.eta if eta is None else as_ratx(eta)
    if cert.L.is_zero():
        return False
    return apply_t(cert.L, eta) == cert.f.dx()


# ---------------------------------------------------------------- hyperexponential telescopers


def r_sequence(q, N):
    q = as_ratx(q)
    out = [RatX(1)]
    for _ in range(N):
        prev = out[-1]
        out.append(prev.dt() + q * prev)
    return out


def check_integrable(p, q):
    if as_ratx(p).dt() != as_ratx(q).dx():
        raise ValueError("p,q not integrable")


@dataclass
class ExponentialData:
    p: RatX
    q: RatX
    d: PolyX
    nu: int
    m: int
    n: int
    M: int
    p0: PolyX
    simple_residue_roots: list
    infinity_resonance: int


def exponential_data(p, q):
    p, q = as_ratx(p), as_ratx(q)
    check_integrable(p, q)
    d, _ = squarefree_kernel(p.den * q.den)
    nu = max(pole_order(p, d), pole_order(q, d))
    m = d.deg if not d.is_const() else 0
    p0, q0 = polypart(p), polypart(q)
    n = max(p0.deg, q0.deg, nu)
    M = m * n + n + 1
    roots = integer_roots(residue_resultant(p), nonneg=True)
    # x -> oo: h ~ x^S meets p ~ w/x; the leading terms cancel when S = -w
    res_inf = None
    if p0.is_zero() and not p.is_zero():
        num, den = p.num, p.den
        if len(num.coeffs) == len(den.coeffs) - 1:
            w = num.lc() / den.lc()
            if w.is_const():
                wv = w.const_value()
                if wv.q == 1 and wv <= 0:
                    res_inf = int(-wv.p)
    return ExponentialData(p, q, d, nu, m, n, M, p0, roots, res_inf)


def _bounds(data, R):
    d = data.d
    mult = max(pole_order(Ri, d) for Ri in R)
    T = max([0, mult - 1] + list(data.simple_residue_roots))
    St = max(polypart(Ri).deg for Ri in R)
    if not data.p0.is_zero():
        S = max(St - data.p0.deg, 0)
    else:
        S = St + 1
        if data.infinity_resonance is not None:
            S = max(S, data.infinity_resonance)
    return Bounds(S, T)


def bounds_exponential(p, q, N):
    data = exponential_data(p, q)
    return _bounds(data, r_sequence(data.q, N))


def exponential_system(data, N, bounds=None, R=None, optimize=False):
    """(I_N): dx(h_N) + p*h_N - sum alpha_i R_i, cleared by d^(T_N+n)."""
    if R is None:
        R = r_sequence(data.q, N)
    if bounds is None:
        bounds = _bounds(data, R)
    p = data.p
    dr = RatX.from_polyx(data.d)
    cols, layout = [], {"alpha": [], "beta": [], "xi": {}}
    for i in range(N + 1):
        layout["alpha"].append(len(cols))
        cols.append(-R[i])
    for j in range(bounds.S + 1):
        layout["beta"].append(len(cols))
        xj = _x_pow(j)
        cols.append(xj.dx() + p * xj)
    for k in range(1, bounds.T + 1):
        for l in range(data.m):
            layout["xi"][(k, l)] = len(cols)
            b = _x_pow(l) / dr ** k
            cols.append(b.dx() + p * b)
    mult = data.d ** (bounds.T + data.n)
    return System(_clear(cols, mult, optimize), layout), bounds


def primitive_of_exponential(p, q, optimize=False):
    data = exponential_data(p, q)
    trace = SearchTrace()
    R = [RatX(1)]
    for N in range(data.M + 1):
        if N:
            R.append(R[-1].dt() + data.q * R[-1])
        sysm, bounds = exponential_system(data, N, R=R, optimize=optimize)
        trace.N_tried.append(N)
        trace.system_dims.append(sysm.dims)
        trace.bounds.append({"N": N, "S": bounds.S, "T": bounds.T})
        alpha = sysm.alpha_cols()
        v = solve_with_unit_pivot(sysm.matrix, alpha[N])
        if v is None:
            continue
        L = OpT([v[c] for c in alpha])
        h = _rational_witness(data, sysm, v)
        return ExponentialCert(L, h, data.p, data.q, trace)
    raise RuntimeError("bound cap violated")


def verify_exponential(cert):
    p, q = cert.p, cert.q
    if cert.L.is_zero() or p.dt() != q.dx():
        return False
    R = r_sequence(q, cert.L.order)
    lhs = RatX()
    for a, Ri in zip(cert.L.coeffs, R):
        if not a.is_zero():
            lhs = lhs + RatX.from_ratt(a) * Ri
    return lhs == cert.h.dx() + p * cert.h


def verify_cert(cert, eta=None):
    if isinstance(cert, RationalCert):
        return verify_rational(cert, eta)
    if isinstance(cert, ExponentialCert):
        return verify_exponential(cert)
    raise TypeError("unknown certificate type")
