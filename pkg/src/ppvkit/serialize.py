"""JSON documents for results and their certificates.

Every value is written as a canonical string; operators carry both the
rendered form and the list of coefficient strings (lowest order first) so
they can be rebuilt without parsing the rendered form.
"""
import json

from .galois import RelationCert
from .groups import GroupDesc
from .intersect import IntersectionResult
from .telescope import ExponentialCert, RationalCert

SCHEMA = "1"


def op_dict(L):
    return {"operator": str(L), "coeffs": [str(c) for c in L.coeffs]}


def cert_dict(c):
    if isinstance(c, RationalCert):
        return {"type": "rational", "eta": str(c.eta), "L": op_dict(c.L), "f": str(c.f)}
    if isinstance(c, ExponentialCert):
        return {"type": "exponential", "p": str(c.p), "q": str(c.q),
                "L": op_dict(c.L), "h": str(c.h)}
    if isinstance(c, IntersectionResult):
        return {"type": "intersection", "eta1": str(c.eta1), "eta2": str(c.eta2),
                "L1": op_dict(c.L1), "L2": op_dict(c.L2), "L1p": op_dict(c.L1p),
                "L2p": op_dict(c.L2p), "Lpp": op_dict(c.Lpp), "witness": str(c.witness),
                "f1": str(c.cert1.f), "f2": str(c.cert2.f)}
    if isinstance(c, RelationCert):
        return {"type": "relation", "m1": c.m1, "m2": c.m2, "f": str(c.f),
                "u": str(c.u), "r1": str(c.r1)}
    if isinstance(c, dict):
        return c
    raise TypeError(f"cannot serialize certificate {type(c).__name__}")


def trace_of(certs):
    """The search trace of the first telescoper, plus one entry per search."""
    searches = []
    for c in certs:
        tr = getattr(c, "trace", None)
        if tr is not None:
            searches.append(tr.as_dict())
    head = searches[0] if searches else {"N_tried": [], "system_dims": [], "bounds": []}
    return {**head, "searches": searches}


def group_result(g):
    return {"group": g.to_dict(), "group_str": str(g)}


def document(mode, inputs, result, certs):
    return {"schema": SCHEMA, "mode": mode,
            "inputs": {k: str(v) for k, v in inputs.items()},
            "result": result,
            "certificates": [cert_dict(c) for c in certs],
            "trace": trace_of([c for c in certs if not isinstance(c, dict)])}


def dumps(doc):
    return json.dumps(doc, sort_keys=True, ensure_ascii=False, indent=2) + "\n"


def error_document(code, message, position=None, mode=None):
    err = {"code": code, "message": message}
    if position is not None:
        err["position"] = position
    out = {"schema": SCHEMA, "error": err}
    if mode is not None:
        out["mode"] = mode
    return out


__all__ = ["SCHEMA", "op_dict", "cert_dict", "document", "dumps", "error_document",
           "group_result", "GroupDesc"]
