"""Independent re-checks shared by unit and acceptance tests."""
from ppvkit.intersect import intersection_system
from ppvkit.field import PolyX, polypart, squarefree_kernel
from ppvkit.telescope import (alpha_feasible, exponential_data, exponential_system,
                              rational_data, rational_system, verify_cert)


def rational_lower_infeasible(cert):
    """No kernel vector with nonzero alpha at any k < ord(L)."""
    if cert.eta.is_zero():
        return True
    data = rational_data(cert.eta)
    return not any(alpha_feasible(rational_system(data, k)) for k in range(cert.order))


def exponential_lower_infeasible(cert):
    data = exponential_data(cert.p, cert.q)
    return not any(alpha_feasible(exponential_system(data, k)[0]) for k in range(cert.order))


def intersection_lower_infeasible(res):
    e1, e2 = res.eta1, res.eta2
    d, _ = squarefree_kernel(e1.den * e2.den)
    n, acc = 0, PolyX([1])
    while not ((acc % e1.den).is_zero() and (acc % e2.den).is_zero()):
        acc, n = acc * d, n + 1
    s = max(polypart(e1).deg, polypart(e2).deg)
    return not any(alpha_feasible(intersection_system(e1, e2, d, n, s, res.nu, N))
                   for N in range(res.nu, res.omega))


def certified_minimal(cert):
    from ppvkit.telescope import ExponentialCert
    if not verify_cert(cert):
        return False
    if isinstance(cert, ExponentialCert):
        return exponential_lower_infeasible(cert)
    return rational_lower_infeasible(cert)
