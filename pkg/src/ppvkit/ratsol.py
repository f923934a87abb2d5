"""Rational solutions of D(Y) = rhs for D in Q(t)(x)[dx] of order <= 3.

The denominator is bounded block by block: the candidate poles (zeros of the
leading coefficient, poles of rhs) are split, without factoring, into
squarefree blocks on which every coefficient has a constant valuation; on
each block the indicial polynomial is packed into a resultant in the pole
order T.  The numerator degree comes from the indicial equation at infinity.
"""
from math import comb

from .field import (PolyX, RatT, RatX, as_ratx, gcd_x, integer_roots,
                    squarefree_kernel, zpencil_resultant)
from .linalg import MatT, nullspace, solve_with_unit_pivot
from .ore import OpX

MAX_ORDER = 3


def _lcm(a, b):
    return (a * b).exquo(gcd_x(a, b)).monic()


def _valuation_split(B, c):
    """Split squarefree B into (block, v) with v the multiplicity in c of
    every root of block.  c = 0 gives v = None."""
    if c.is_zero():
        return [(B, None)]
    out, v = [], 0
    while not B.is_const():
        g = gcd_x(B, c)
        part = B.exquo(g)
        if not part.is_const():
            out.append((part.monic(), v))
        B = g
        c = c.exquo(g)
        v += 1
    return out


def _rising(j):
    """Coefficients (in T) of (-1)^j T(T+1)...(T+j-1)."""
    poly = [1]
    for i in range(j):
        # multiply by (T + i)
        nxt = [0] * (len(poly) + 1)
        for k, a in enumerate(poly):
            nxt[k] += a * i
            nxt[k + 1] += a
        poly = nxt
    sign = -1 if j % 2 else 1
    return [sign * a for a in poly]


def _falling(j):
    """Coefficients (in S) of S(S-1)...(S-j+1)."""
    poly = [1]
    for i in range(j):
        nxt = [0] * (len(poly) + 1)
        for k, a in enumerate(poly):
            nxt[k] -= a * i
            nxt[k + 1] += a
        poly = nxt
    return poly


def _pole_bound(B, vals, vg, cs):
    """Largest possible pole order of a solution along block B."""
    live = [(j, v) for j, v in enumerate(vals) if v is not None]
    mu = min(v - j for j, v in live)
    Bp = B.deriv_x()
    parts = []
    for j, v in live:
        if v - j != mu:
            continue
        P = cs[j].exquo(B ** v) * Bp ** j % B
        parts.append((P, _rising(j)))
    R = zpencil_resultant(B, parts)
    roots = integer_roots(R, nonneg=True)
    return max([0, mu + vg] + roots)


def _poly_cols(D, rhs):
    """Clear D and rhs to polynomial coefficients."""
    L = PolyX([1])
    for c in D.coeffs:
        L = _lcm(L, c.den)
    Lr = RatX.from_polyx(L)
    return [(c * Lr).to_polyx() for c in D.coeffs], rhs * Lr


def denominator_bound(D, rhs):
    cs, g = _poly_cols(D, rhs)
    k = len(cs) - 1
    cand = cs[k] * g.den
    if cand.is_const():
        return PolyX([1])
    B0, _ = squarefree_kernel(cand)
    blocks = [(B0, ())]
    for c in cs + [g.den]:
        nxt = []
        for B, vs in blocks:
            for part, v in _valuation_split(B, c):
                nxt.append((part, vs + (v,)))
        blocks = nxt
    U = PolyX([1])
    for B, vs in blocks:
        T = _pole_bound(B, vs[:-1], vs[-1], cs)
        if T:
            U = U * B ** T
    return U


def _degree_bound(es, G):
    live = [(i, e) for i, e in enumerate(es) if not e.is_zero()]
    delta = max(e.deg - i for i, e in live)
    ind = [RatT(0)] * (len(es) + 1)
    for i, e in live:
        if e.deg - i == delta:
            for k, a in enumerate(_falling(i)):
                ind[k] = ind[k] + e.lc() * a
    roots = integer_roots(PolyX(ind), nonneg=True)
    cands = list(roots)
    if not G.is_zero():
        cands.append(G.deg - delta)
    return max(cands, default=-1)


def rational_solutions(D, rhs):
    """[particular, kernel basis...] of D(Y) = rhs over Q(t)(x); [] if none."""
    if not isinstance(D, OpX):
        D = OpX(D)
    rhs = as_ratx(rhs)
    if D.is_zero():
        raise ValueError("zero operator")
    if D.order > MAX_ORDER:
        raise ValueError(f"order above {MAX_ORDER} not supported")
    U = denominator_bound(D, rhs)
    Ur = RatX.from_polyx(U)
    inv = Ur.inv()
    k = D.order
    ders = [inv]
    for _ in range(k):
        ders.append(ders[-1].dx())
    # D(P/U) = sum_i e_i P^(i)
    es = []
    for i in range(k + 1):
        e = RatX()
        for j in range(i, k + 1):
            e = e + D.coeff(j) * ders[j - i] * comb(j, i)
        es.append(e)
    L = PolyX([1])
    for e in es + [rhs]:
        L = _lcm(L, e.den)
    Lr = RatX.from_polyx(L)
    es = [(e * Lr).to_polyx() for e in es]
    G = (rhs * Lr).to_polyx()
    S = _degree_bound(es, G)
    if S < 0:
        return [RatX()] if G.is_zero() else []
    cols = []
    for s in range(S + 1):
        mono = PolyX([0] * s + [1])
        acc = PolyX()
        cur = mono
        for i, e in enumerate(es):
            if i:
                cur = cur.deriv_x()
            if not e.is_zero() and not cur.is_zero():
                acc = acc + e * cur
        cols.append(acc)
    cols.append(-G)
    nrows = max((len(c.coeffs) for c in cols), default=0)
    A = MatT.from_rows([[c.coeff(r) for c in cols] for r in range(nrows)], len(cols)) \
        if nrows else MatT(0, len(cols), [])
    lam = S + 1

    def build(v):
        P = PolyX(v[:S + 1])
        return RatX.from_polyx(P) / Ur

    part = solve_with_unit_pivot(A, lam)
    if part is None:
        return []
    out = [build(part)]
    for vec in nullspace(A.select_cols(range(S + 1))):
        out.append(build(vec))
    return out
