"""Intersection of the fields generated by two primitives.

Given eta1, eta2 in Q(t)(x), find the least omega for which
L1'(eta1) - L2'(eta2) = dx(f) has a solution with L1' of order omega, and
the quotient L'' with L1 = L'' o L1'.  The intersection of the two PPV
fields has group Ga(K0; L'').
"""
from dataclasses import dataclass

from .field import PolyX, RatX, as_ratx, polypart, squarefree_kernel
from .linalg import nullspace, solve_with_unit_pivot
from .ore import OpT, apply_t, mul_t, right_divide_t
from .telescope import (RationalCert, SearchTrace, System, _clear, _x_pow,
                        primitive_of_rational)


@dataclass
class IntersectionResult:
    eta1: RatX
    eta2: RatX
    L1: OpT
    L2: OpT
    L1p: OpT
    L2p: OpT
    Lpp: OpT
    witness: RatX
    omega: int
    swapped: bool
    cert1: RationalCert
    cert2: RationalCert
    trace: SearchTrace

    @property
    def nu(self):
        return self.L1.order - self.L2.order

    def trivial(self):
        return self.Lpp.is_one()

    def projections(self):
        """(pi for the caller's first input, pi for the second)."""
        if self.swapped:
            return self.L2p, self.L1p
        return self.L1p, self.L2p


def intersection_system(eta1, eta2, d, n, s, nu, N, optimize=False):
    """(J_N): dx(f_N) - L1_N(eta1) + L2_N(eta2), cleared by d^(n+N)."""
    M = d.deg if not d.is_const() else 0
    dr = RatX.from_polyx(d)
    cols, layout = [], {"alpha": [], "beta": [], "gamma": [], "xi": {}}
    der = eta1
    for i in range(N + 1):
        if i:
            der = der.dt()
        layout["alpha"].append(len(cols))
        cols.append(-der)
    der = eta2
    for j in range(N - nu + 1):
        if j:
            der = der.dt()
        layout["beta"].append(len(cols))
        cols.append(der)
    for j in range(s + 2):
        layout["gamma"].append(len(cols))
        cols.append(RatX(j) * _x_pow(j - 1) if j else RatX())
    for k in range(1, n + N):
        for l in range(M):
            layout["xi"][(k, l)] = len(cols)
            cols.append((_x_pow(l) / dr ** k).dx())
    return System(_clear(cols, d ** (n + N), optimize), layout)


def _witness(sysm, v, d):
    f = RatX()
    for j, c in enumerate(sysm.layout["gamma"]):
        if not v[c].is_zero():
            f = f + RatX.from_ratt(v[c]) * _x_pow(j)
    dr = RatX.from_polyx(d)
    for (k, l), c in sysm.layout["xi"].items():
        if not v[c].is_zero():
            f = f + RatX.from_ratt(v[c]) * _x_pow(l) / dr ** k
    return f


def intersect(eta1, eta2, optimize=False):
    eta1, eta2 = as_ratx(eta1), as_ratx(eta2)
    c1 = primitive_of_rational(eta1, optimize)
    c2 = primitive_of_rational(eta2, optimize)
    swapped = c1.order < c2.order
    if swapped:
        eta1, eta2, c1, c2 = eta2, eta1, c2, c1
    L1, L2 = c1.L, c2.L
    l1, l2 = L1.order, L2.order
    nu = l1 - l2
    d, _ = squarefree_kernel(eta1.den * eta2.den)
    n = 0
    acc = PolyX([1])
    while not ((acc % eta1.den).is_zero() and (acc % eta2.den).is_zero()):
        acc = acc * d
        n += 1
    s = max(polypart(eta1).deg, polypart(eta2).deg)
    trace = SearchTrace()
    for N in range(nu, l1 + 1):
        sysm = intersection_system(eta1, eta2, d, n, s, nu, N, optimize)
        trace.N_tried.append(N)
        trace.system_dims.append(sysm.dims)
        alpha = sysm.layout["alpha"]
        if not any(any(not vec[c].is_zero() for c in alpha)
                   for vec in nullspace(sysm.matrix)):
            continue
        if N == l1:
            break
        v = solve_with_unit_pivot(sysm.matrix, alpha[N])
        if v is None:
            raise ArithmeticError("alpha-nontrivial solution without unit pivot")
        L1p = OpT([v[c] for c in alpha])
        L2p = OpT([v[c] for c in sysm.layout["beta"]])
        f = _witness(sysm, v, d)
        Lpp, R = right_divide_t(L1, L1p)
        if not R.is_zero():
            raise ArithmeticError("reduced operator does not right-divide L1")
        return IntersectionResult(eta1, eta2, L1, L2, L1p, L2p, Lpp, f, N,
                                  swapped, c1, c2, trace)
    return IntersectionResult(eta1, eta2, L1, L2, L1, L2, OpT.one(), c1.f - c2.f,
                              l1, swapped, c1, c2, trace)


def verify_intersection(res):
    """Re-check the three defining identities with fresh arithmetic."""
    if mul_t(res.Lpp, res.L1p) != res.L1 or not res.Lpp.is_monic():
        return False
    lhs = apply_t(res.L1p, res.eta1) - apply_t(res.L2p, res.eta2)
    if lhs != res.witness.dx():
        return False
    if res.L1p.order - res.L2p.order != res.L1.order - res.L2.order:
        return False
    return (apply_t(res.L1, res.eta1) == res.cert1.f.dx()
            and apply_t(res.L2, res.eta2) == res.cert2.f.dx())
