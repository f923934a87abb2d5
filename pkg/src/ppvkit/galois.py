"""Computing PPV groups of dx^2 + r1*dx + r2 over Q(t)(x).

The equation is first made unimodular, dx^2 - r.  A Riccati solution u
(reducible case), the coefficient phi of a quadratic Riccati polynomial
(imprimitive case), a finite-group label, or the SL2 verdict must be
supplied: detecting which of those applies is not done here.
"""
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .field import (PolyX, RatT, RatX, as_ratx, base_d_expand, gcd_x, polypart,
                    pencil_resultant, rational_root_multiset, residue_resultant,
                    squarefree_kernel, CTX, _mp_degx)
from .groups import (AddGroupDesc, Additive, Dihedral, FiniteClassical, HomDesc,
                     MultGroupDesc, Multiplicative, Recovered, SL2ConstantConjugate,
                     SL2Full, Trivial, UT)
from .intersect import intersect
from .ore import OpT, OpX
from .ratsol import rational_solutions
from .telescope import primitive_of_exponential, primitive_of_rational


@dataclass
class Options:
    nmax: int = 12
    mmax: int = 8
    optimize_squarefree: bool = False


@dataclass
class RiccatiData:
    """What the caller knows about dx^2 - r: exactly one of the fields."""
    u: RatX = None
    phi: RatX = None
    finite: FiniteClassical = None
    sl2: bool = False

    def kind(self):
        got = [k for k in ("u", "phi", "finite") if getattr(self, k) is not None]
        if self.sl2:
            got.append("sl2")
        if len(got) != 1:
            raise ValueError("riccati data must name exactly one of u, phi, finite, sl2")
        return got[0]


def change_of_variables(r1, r2):
    r1, r2 = as_ratx(r1), as_ratx(r2)
    return r1 * r1 / 4 + r1.dx() / 2 - r2


def riccati_residual(u, r):
    u = as_ratx(u)
    return u.dx() + u * u - as_ratx(r)


# ------------------------------------------------------------ SL2


def dreyfus_operator(r):
    r = as_ratx(r)
    return OpX([-2 * r.dx(), -4 * r, RatX(), RatX(1)]), -2 * r.dt()


def dreyfus_witness(r):
    D, rhs = dreyfus_operator(r)
    sols = rational_solutions(D, rhs)
    return sols[0] if sols else None


def dreyfus_test(r):
    return dreyfus_witness(r) is not None


def sl2_group(r):
    w = dreyfus_witness(r)
    if w is None:
        return SL2Full()
    return SL2ConstantConjugate(witness=w, certs=(aux_cert("dreyfus", r=r, Y=w),))


def aux_cert(kind, **vals):
    """Certificate record for an identity checked outside the telescopers."""
    out = {"type": kind}
    for k, v in vals.items():
        out[k] = v if isinstance(v, (int, str)) else str(v)
    return out


# ------------------------------------------------------------ Kummer data


def _simple_and_proper(u):
    if not polypart(u).is_zero():
        return False
    den = u.den
    return den.is_const() or gcd_x(den, den.deriv_x()).is_const()


def log_derivative_test(u, nmax=12):
    """Least n <= nmax with n*u = dx(g)/g, as (n, g); None if there is none."""
    u = as_ratx(u)
    if u.is_zero():
        return 1, RatX(1)
    if not _simple_and_proper(u):
        return None
    roots = rational_root_multiset(residue_resultant(u))
    if roots is None:
        return None
    n = lcm(*[c.denominator for c, _ in roots])
    if n > nmax:
        return None
    num, den = u.num, u.den
    dp = den.deriv_x()
    g = RatX(1)
    for c, _ in roots:
        Dc = gcd_x(den, num - dp * PolyX([RatT(c.numerator, c.denominator)]))
        e = int(n * c)
        P = RatX.from_polyx(Dc)
        g = g * P ** e if e >= 0 else g / P ** -e
    if g.dx() != n * u * g:
        raise ArithmeticError("residue data does not reassemble a log-derivative")
    return n, g


def classical_B_solution(u):
    u = as_ratx(u)
    sols = rational_solutions(OpX([-2 * u, RatX(1)]), RatX(1))
    return sols[0] if sols else None


def classical_B_trivial(u):
    return classical_B_solution(u) is not None


def lth_power_test(g, l):
    """h with h^l = c*g for some c in Q(t), or None."""
    g = as_ratx(g)
    if g.is_zero():
        raise ValueError("power test of zero")
    if l < 1:
        raise ValueError("l must be positive")
    parts = []
    for P in (g.N, g.D):
        _, facs = P.factor_squarefree()
        root = CTX.from_dict({(0, 0): 1})
        for f, e in facs:
            if _mp_degx(f) == 0:
                continue
            if e % l:
                return None
            root = root * f ** (e // l)
        parts.append(root)
    return RatX(parts[0], parts[1])


# ------------------------------------------------------------ upper triangular


def upper_triangular_group(u, r=None, nmax=12, optimize=False):
    u = as_ratx(u)
    r = u.dx() + u * u if r is None else as_ratx(r)
    if not riccati_residual(u, r).is_zero():
        raise ValueError("u is not a Riccati solution")
    certs = [aux_cert("riccati", u=u, r=r)]
    ld = log_derivative_test(u, nmax)
    c_eta = primitive_of_rational(u.dt(), optimize)
    certs.append(c_eta)
    if ld is not None:
        n, g = ld
        A = MultGroupDesc.mu(n)
        kummer = (n, g)
        certs.append(aux_cert("log_derivative", u=u, n=n, g=g))
    else:
        A = MultGroupDesc.logderiv(c_eta.L)
        kummer = None
        if not c_eta.L.is_one():
            h = classical_B_solution(u)
            if h is None:
                return UT(A, AddGroupDesc.full(), kummer, tuple(certs))
            certs.append(aux_cert("classical_B", u=u, h=h))
            return UT(A, AddGroupDesc.proper(OpT.one()), kummer, tuple(certs))
    v = c_eta.f
    if ld is not None and ld[0] <= 2:
        n, g = ld
        g2 = g * g if n == 1 else g
        cb = primitive_of_rational(g2.inv(), optimize)
    else:
        cb = primitive_of_exponential(-2 * u, -2 * v, optimize)
    certs.append(cb)
    return UT(A, AddGroupDesc.proper(cb.L), kummer, tuple(certs))


# ------------------------------------------------------------ dihedral


def dihedral_discriminant(r, phi):
    """(w, sign) with w = 4r -/+ 2 dx(phi) - phi^2 satisfying dx(w) = 2 phi w."""
    r, phi = as_ratx(r), as_ratx(phi)
    for sign, s in (("+", 1), ("-", -1)):
        w = 4 * r + s * 2 * phi.dx() - phi * phi
        if not w.is_zero() and w.dx() == 2 * phi * w:
            return w, sign
    raise ValueError("φ inconsistent with r")


def dihedral_group(r, phi, optimize=False):
    w, sign = dihedral_discriminant(r, phi)
    certs = (aux_cert("dihedral_discriminant", r=r, phi=phi, w=w, sign=sign),)
    wt = w.dt()
    if wt.is_zero():
        return Dihedral(MultGroupDesc.logderiv(OpT.one()), w, sign, certs)
    p = wt.dx() / wt - w.dx() / (2 * w)
    q = wt.dt() / wt - wt / (2 * w)
    cert = primitive_of_exponential(p, q, optimize)
    return Dihedral(MultGroupDesc.logderiv(cert.L), w, sign, certs + (cert,))


# ------------------------------------------------------------ integer relations


@dataclass
class RelationCert:
    """m1*u - (m2/2)*r1 = dx(f)/f."""
    m1: int
    m2: int
    f: RatX
    u: RatX
    r1: RatX


def verify_relation(c):
    lhs = c.m1 * as_ratx(c.u) - c.m2 * as_ratx(c.r1) / 2
    return not c.f.is_zero() and lhs * c.f == c.f.dx()


def _inv_mod(a, d):
    """a^-1 mod d in Q(t)[x] (d squarefree, gcd(a, d) = 1)."""
    r0, r1 = d, a % d
    s0, s1 = PolyX(), PolyX([1])
    while not r1.is_zero():
        qt, rr = divmod(r0, r1)
        r0, r1 = r1, rr
        s0, s1 = s1, s0 - qt * s1
    if not r0.is_const():
        raise ArithmeticError("not invertible modulo d")
    return (s0 * PolyX([r0.lc().inv()])) % d


class _ResidueData:
    """Linear data of F = m1*A + m2*B that a log-derivative must kill,
    plus the residue polynomial rho (residue at d(alpha) = 0 is rho(alpha))."""

    def __init__(self, f, d, dinv):
        if d.is_const():
            self.high, self.rho = [polypart(f)], PolyX()
            return
        e = base_d_expand(f, d)
        self.high = [e.polypart] + [e.layer(k) for k in range(2, e.order() + 1)]
        self.rho = (e.layer(1) * dinv) % d


def _vec(polys, length):
    out = []
    for P in polys:
        out.extend(P.coeff(i) for i in range(length))
    return out


def _ratio(a, b):
    """lam with a + lam*b = 0 coordinatewise; 'free' if a = b = 0; None if no
    rational constant works."""
    lam = None
    for x, y in zip(a, b):
        if y.is_zero():
            if not x.is_zero():
                return None
            continue
        c = -x / y
        if not c.is_const():
            return None
        if lam is None:
            lam = c.const_value()
        elif lam != c.const_value():
            return None
    if lam is None:
        return "free"
    return Fraction(int(lam.p), int(lam.q))


def _residue_pairs(ra, rb, d):
    """[(a, b)] rational residue pairs, one per block of roots of d; None if a
    residue is not a rational constant."""
    A = rational_root_multiset(pencil_resultant(d, ra, PolyX([1])))
    if A is None:
        return None
    out = []
    for a, _ in A:
        Da = gcd_x(d, ra - PolyX([RatT(a.numerator, a.denominator)]))
        Bs = rational_root_multiset(pencil_resultant(Da, rb % Da, PolyX([1])))
        if Bs is None:
            return None
        out.extend((a, b) for b, _ in Bs)
    return out


def _m2_candidates(mmax):
    yield 0
    for k in range(1, mmax * mmax + 1):
        yield -k
        yield k


def _dt_residue(rho, d, dxinv):
    """Residue polynomial of the t-derivative of the residues."""
    return (rho.deriv_t() - rho.deriv_x() * d.deriv_t() * dxinv) % d


def integer_relation(u, r1, mmax=8):
    """(m1, m2, f) with m1 > 0 least and m1*u - (m2/2)*r1 = dx(f)/f."""
    A, B = as_ratx(u), -as_ratx(r1) / 2
    d, _ = squarefree_kernel(A.den * B.den)
    dinv = _inv_mod(d.deriv_x(), d) if not d.is_const() else PolyX()
    da, db = _ResidueData(A, d, dinv), _ResidueData(B, d, dinv)
    width = max([len(P.coeffs) for P in da.high + db.high] + [1])
    nh = max(len(da.high), len(db.high))
    pad = lambda h: h + [PolyX()] * (nh - len(h))
    lam = _ratio(_vec(pad(da.high), width), _vec(pad(db.high), width))
    if lam is None:
        return None
    m = max(d.deg, 1)
    pairs = None
    if lam == "free" and not d.is_const():
        dxi = dinv
        lam = _ratio(_vec([_dt_residue(da.rho, d, dxi)], m),
                     _vec([_dt_residue(db.rho, d, dxi)], m))
        if lam is None:
            return None
        if lam == "free":
            pairs = _residue_pairs(da.rho, db.rho, d)
    for m1 in range(1, mmax + 1):
        if lam != "free":
            m2 = lam * m1
            cands = [int(m2)] if m2.denominator == 1 else []
        elif pairs is not None:
            per = lcm(*[Fraction(b).denominator for _, b in pairs]) if pairs else 1
            cands = [k for k in sorted(range(-(per // 2), per - per // 2), key=lambda k: (abs(k), k > 0))
                     if all((m1 * a + k * b).denominator == 1 for a, b in pairs)]
        else:
            cands = _m2_candidates(mmax)
        for m2 in cands:
            ld = log_derivative_test(m1 * A + m2 * B, 1)
            if ld is not None:
                return m1, m2, ld[1]
    return None


# ------------------------------------------------------------ recovery


def _mu_lambda(l, phi, psi):
    if l == 1:
        return Trivial(), HomDesc.trivial(), HomDesc.trivial()
    return Multiplicative(MultGroupDesc.mu(l)), phi, psi


def finite_lambda(D, m, W):
    """Lambda and the two surjections when Gal(E) = Mu(m) with w^m = W."""
    W = as_ratx(W)
    if isinstance(D, (SL2Full, SL2ConstantConjugate, Trivial)):
        return _mu_lambda(1, None, None)
    if isinstance(D, UT):
        if not D.A.is_finite():
            return _mu_lambda(1, None, None)
        n, g = D.kummer
        return _cyclic_lambda(n, g, m, W)
    if isinstance(D, Dihedral):
        return _kummer_lambda(2, D.radicand, m, W)
    if isinstance(D, FiniteClassical):
        if D.label == "A5":
            return _mu_lambda(1, None, None)
        if D.label in ("D2n", "S4"):
            return _kummer_lambda(2, D.radicand, m, W)
        if D.label == "A4":
            return _kummer_lambda(3, D.radicand, m, W)
        # cyclic or finite upper triangular: y1^n = radicand
        return _cyclic_lambda(D.order, D.radicand, m, W)
    raise ValueError(f"unknown group label {getattr(D, 'kind', D)!r}")


def _kummer_lambda(l, a, m, W):
    """The unique order-l cyclic subfield K(a^(1/l)) against K(w^(m/l))."""
    if m % l or a is None:
        return _mu_lambda(1, None, None)
    for j in range(1, l):
        if gcd(j, l) == 1 and lth_power_test(a / W ** j, l) is not None:
            return _mu_lambda(l, HomDesc.kummer(l, a), HomDesc.power(j * m // l))
    return _mu_lambda(1, None, None)


def _cyclic_lambda(n, g, m, W):
    for l in sorted((k for k in range(2, gcd(m, n) + 1) if gcd(m, n) % k == 0), reverse=True):
        for j in range(1, l):
            if gcd(j, l) == 1 and lth_power_test(g / W ** j, l) is not None:
                return _mu_lambda(l, HomDesc.power(n // l), HomDesc.power(j * m // l))
    return _mu_lambda(1, None, None)


def group_of_D(r, riccati, opts):
    kind = riccati.kind()
    if kind == "u":
        return upper_triangular_group(riccati.u, r, opts.nmax, opts.optimize_squarefree)
    if kind == "phi":
        return dihedral_group(r, riccati.phi, opts.optimize_squarefree)
    if kind == "finite":
        return riccati.finite
    return sl2_group(r)


def recover_original(r1, r2, riccati, opts=None):
    opts = opts or Options()
    r1, r2 = as_ratx(r1), as_ratx(r2)
    r = change_of_variables(r1, r2)
    D = group_of_D(r, riccati, opts)
    certs = [aux_cert("change_of_variables", r1=r1, r2=r2, r=r)] + D.certificates()
    half = -r1 / 2
    ldE = log_derivative_test(half, opts.nmax)
    if ldE is not None:
        m, W = ldE
        certs.append(aux_cert("log_derivative", u=half, n=m, g=W))
        E = MultGroupDesc.mu(m)
        nu = 1 if m % 2 else 2
        lam, phi, psi = finite_lambda(D, m, W)
        return Recovered(D, E, lam, phi, psi, nu, tuple(certs))
    cE = primitive_of_rational(half.dt(), opts.optimize_squarefree)
    certs.append(cE)
    E = MultGroupDesc.logderiv(cE.L)
    nu = 2
    if not isinstance(D, UT):
        lam, phi, psi = _mu_lambda(1, None, None)
        return Recovered(D, E, lam, phi, psi, nu, tuple(certs))
    u = as_ratx(riccati.u)
    if D.A.is_finite() and D.A.n <= 2:
        n, g = D.kummer
        g2 = g * g if n == 1 else g
        res = intersect(g2.inv(), half.dt(), opts.optimize_squarefree)
        certs.append(res)
        p1, p2 = res.projections()
        return Recovered(D, E, Additive(AddGroupDesc.proper(res.Lpp)),
                         HomDesc.op_on_additive(p1), HomDesc.op_on_logderiv(p2),
                         nu, tuple(certs))
    if D.A.is_finite():
        lam, phi, psi = _mu_lambda(1, None, None)
        return Recovered(D, E, lam, phi, psi, nu, tuple(certs))
    rel = integer_relation(u, r1, opts.mmax)
    if rel is not None:
        m1, m2, f = rel
        return Recovered(D, E, Multiplicative(D.A), HomDesc.power(m1),
                         HomDesc.power(m2), nu, tuple(certs) + (RelationCert(m1, m2, f, u, r1),))
    res = intersect(u.dt(), half.dt(), opts.optimize_squarefree)
    certs.append(res)
    p1, p2 = res.projections()
    return Recovered(D, E, Additive(AddGroupDesc.proper(res.Lpp)),
                     HomDesc.op_on_logderiv(p1), HomDesc.op_on_logderiv(p2),
                     nu, tuple(certs))
