"""Independent re-check of a result document.

Only the certificate section is trusted as data: every identity is
re-derived from the stored strings with fresh arithmetic, and the traces are
ignored.
"""
from .field import RatX
from .ore import OpT, OpX, apply_t, apply_x, mul_t
from .parse import parse_expr
from .telescope import r_sequence


class MalformedDocument(ValueError):
    pass


def _rx(c, key):
    try:
        return parse_expr(c[key])
    except KeyError:
        raise MalformedDocument(f"certificate missing {key!r}") from None


def _op(c, key):
    try:
        coeffs = [parse_expr(s) for s in c[key]["coeffs"]]
    except (KeyError, TypeError):
        raise MalformedDocument(f"certificate missing operator {key!r}") from None
    if not all(v.is_x_free() for v in coeffs):
        raise MalformedDocument(f"operator {key!r} has x in a coefficient")
    return OpT([v.to_ratt() for v in coeffs])


def check_rational(c):
    L, eta, f = _op(c, "L"), _rx(c, "eta"), _rx(c, "f")
    return L.is_monic() and apply_t(L, eta) == f.dx()


def check_exponential(c):
    L, p, q, h = _op(c, "L"), _rx(c, "p"), _rx(c, "q"), _rx(c, "h")
    if not L.is_monic() or p.dt() != q.dx():
        return False
    lhs = RatX()
    for a, Ri in zip(L.coeffs, r_sequence(q, L.order)):
        lhs = lhs + RatX.from_ratt(a) * Ri
    return lhs == h.dx() + p * h


def check_intersection(c):
    L1, L2 = _op(c, "L1"), _op(c, "L2")
    L1p, L2p, Lpp = _op(c, "L1p"), _op(c, "L2p"), _op(c, "Lpp")
    e1, e2, w = _rx(c, "eta1"), _rx(c, "eta2"), _rx(c, "witness")
    f1, f2 = _rx(c, "f1"), _rx(c, "f2")
    return (Lpp.is_monic() and mul_t(Lpp, L1p) == L1
            and apply_t(L1p, e1) - apply_t(L2p, e2) == w.dx()
            and L1p.order - L2p.order == L1.order - L2.order
            and apply_t(L1, e1) == f1.dx() and apply_t(L2, e2) == f2.dx())


def check_relation(c):
    u, r1, f = _rx(c, "u"), _rx(c, "r1"), _rx(c, "f")
    m1, m2 = int(c["m1"]), int(c["m2"])
    return not f.is_zero() and (m1 * u - m2 * r1 / 2) * f == f.dx()


def check_riccati(c):
    u, r = _rx(c, "u"), _rx(c, "r")
    return u.dx() + u * u == r


def check_change_of_variables(c):
    r1, r2, r = _rx(c, "r1"), _rx(c, "r2"), _rx(c, "r")
    return r1 * r1 / 4 + r1.dx() / 2 - r2 == r


def check_dreyfus(c):
    r, Y = _rx(c, "r"), _rx(c, "Y")
    D = OpX([-2 * r.dx(), -4 * r, RatX(), RatX(1)])
    return apply_x(D, Y) == -2 * r.dt()


def check_log_derivative(c):
    u, g, n = _rx(c, "u"), _rx(c, "g"), int(c["n"])
    return not g.is_zero() and n * u * g == g.dx()


def check_classical_B(c):
    u, h = _rx(c, "u"), _rx(c, "h")
    return h.dx() - 2 * u * h == 1


def check_dihedral(c):
    r, phi, w = _rx(c, "r"), _rx(c, "phi"), _rx(c, "w")
    s = 1 if c.get("sign", "+") == "+" else -1
    return (not w.is_zero() and w == 4 * r + s * 2 * phi.dx() - phi * phi
            and w.dx() == 2 * phi * w)


CHECKS = {
    "rational": check_rational,
    "exponential": check_exponential,
    "intersection": check_intersection,
    "relation": check_relation,
    "riccati": check_riccati,
    "change_of_variables": check_change_of_variables,
    "dreyfus": check_dreyfus,
    "log_derivative": check_log_derivative,
    "classical_B": check_classical_B,
    "dihedral_discriminant": check_dihedral,
}


def verify_document(doc):
    """{'verified': bool, 'checked': n, 'failures': [...], 'warnings': [...]}."""
    if not isinstance(doc, dict) or "certificates" not in doc:
        raise MalformedDocument("document has no certificate list")
    certs = doc["certificates"]
    if not isinstance(certs, list):
        raise MalformedDocument("certificates must be a list")
    warnings, failures = [], []
    if not certs:
        warnings.append("empty certificate list: verified vacuously")
    for i, c in enumerate(certs):
        kind = c.get("type") if isinstance(c, dict) else None
        if kind not in CHECKS:
            raise MalformedDocument(f"certificate {i} has unknown type {kind!r}")
        if not CHECKS[kind](c):
            failures.append({"index": i, "type": kind})
    return {"verified": not failures, "checked": len(certs),
            "failures": failures, "warnings": warnings}


def verify(doc):
    return verify_document(doc)["verified"]


def verify_certificates(certs):
    """Serialize in-memory certificates and re-check them from the strings."""
    from .serialize import cert_dict
    return verify_document({"certificates": [cert_dict(c) for c in certs]})["verified"]
