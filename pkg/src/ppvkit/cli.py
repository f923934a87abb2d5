"""Command line: one subcommand per mode, JSON documents out.

    ppvkit telescope-rational --expr "eta=2*t/(x^2+t)"
    ppvkit verify --input result.json

Exit status: 0 success, 2 verification failure, 1 any error.
"""
import argparse
import json
import sys
from dataclasses import dataclass, field

from .galois import (Options, RiccatiData, dihedral_group, dreyfus_witness,
                     aux_cert, recover_original, upper_triangular_group)
from .groups import AddGroupDesc, Additive, FiniteClassical
from .intersect import intersect
from .parse import ParseError, parse_expr
from .serialize import document, dumps, error_document, group_result, op_dict
from .telescope import (_bounds, exponential_data, primitive_of_exponential,
                        primitive_of_rational, r_sequence)
from .verify import MalformedDocument, verify_document

MODES = {
    "telescope-rational": (("eta",), ()),
    "telescope-exponential": (("p", "q"), ()),
    "intersect": (("eta1", "eta2"), ()),
    "group-ut": (("u",), ("r",)),
    "group-dihedral": (("r", "phi"), ()),
    "group-recover": (("r1", "r2"), ("u", "phi", "radicand")),
    "dreyfus": (("r",), ()),
}


class InputError(ValueError):
    def __init__(self, msg, code="invalid_input", position=None):
        super().__init__(msg)
        self.code, self.position = code, position


@dataclass
class ProblemSpec:
    mode: str
    expressions: dict = field(default_factory=dict)
    riccati: dict = field(default_factory=dict)
    options: Options = field(default_factory=Options)

    def parsed(self):
        req, opt = MODES[self.mode]
        missing = [k for k in req if k not in self.expressions]
        if missing:
            raise InputError(f"mode {self.mode} needs expression(s) {', '.join(missing)}")
        out = {}
        for k, s in self.expressions.items():
            if k not in req + opt:
                raise InputError(f"mode {self.mode} does not take expression {k!r}")
            try:
                out[k] = parse_expr(s)
            except ParseError as e:
                raise InputError(f"{k}: {e}", "parse_error", e.pos) from None
        return out


def _telescope_rational(spec, v):
    c = primitive_of_rational(v["eta"], spec.options.optimize_squarefree)
    res = {"L": op_dict(c.L), "order": c.order, "f": str(c.f)}
    return res, [c]


def _telescope_exponential(spec, v):
    c = primitive_of_exponential(v["p"], v["q"], spec.options.optimize_squarefree)
    b = _bounds(exponential_data(v["p"], v["q"]), r_sequence(v["q"], c.order))
    res = {"L": op_dict(c.L), "order": c.order, "h": str(c.h),
           "bounds": {"S": b.S, "T": b.T}}
    return res, [c]


def _intersect(spec, v):
    r = intersect(v["eta1"], v["eta2"], spec.options.optimize_squarefree)
    p1, p2 = r.projections()
    res = {"omega": r.omega, "swapped": r.swapped, "L1": op_dict(r.L1), "L2": op_dict(r.L2),
           "L1p": op_dict(r.L1p), "L2p": op_dict(r.L2p), "Lpp": op_dict(r.Lpp),
           "pi1": op_dict(p1), "pi2": op_dict(p2), "witness": str(r.witness),
           **group_result(Additive(AddGroupDesc.proper(r.Lpp)))}
    return res, [r.cert1, r.cert2, r]


def _group_ut(spec, v):
    g = upper_triangular_group(v["u"], v.get("r"), spec.options.nmax,
                               spec.options.optimize_squarefree)
    return group_result(g), g.certificates()


def _group_dihedral(spec, v):
    g = dihedral_group(v["r"], v["phi"], spec.options.optimize_squarefree)
    return group_result(g), g.certificates()


def _riccati(spec, v):
    rc = spec.riccati
    kinds = [k for k in ("u", "phi") if k in v] + [k for k in ("label", "sl2") if rc.get(k)]
    if len(kinds) != 1:
        raise InputError("group-recover needs exactly one of u, phi, label, sl2")
    if "u" in v:
        return RiccatiData(u=v["u"])
    if "phi" in v:
        return RiccatiData(phi=v["phi"])
    if rc.get("sl2"):
        return RiccatiData(sl2=True)
    try:
        fin = FiniteClassical(rc["label"], rc.get("order"), v.get("radicand"))
    except ValueError as e:
        raise InputError(str(e)) from None
    return RiccatiData(finite=fin)


def _group_recover(spec, v):
    g = recover_original(v["r1"], v["r2"], _riccati(spec, v), spec.options)
    return group_result(g), g.certificates()


def _dreyfus(spec, v):
    w = dreyfus_witness(v["r"])
    res = {"sl2_constant_conjugate": w is not None, "witness": None if w is None else str(w)}
    return res, [] if w is None else [aux_cert("dreyfus", r=v["r"], Y=w)]


RUNNERS = {
    "telescope-rational": _telescope_rational,
    "telescope-exponential": _telescope_exponential,
    "intersect": _intersect,
    "group-ut": _group_ut,
    "group-dihedral": _group_dihedral,
    "group-recover": _group_recover,
    "dreyfus": _dreyfus,
}

_ERROR_CODES = [
    ("p,q not integrable", "not_integrable"),
    ("u is not a Riccati solution", "not_riccati"),
    ("φ inconsistent with r", "phi_inconsistent"),
    ("bound cap violated", "bound_cap"),
]


def run(spec):
    """Execute a ProblemSpec and return its result document."""
    if spec.mode not in RUNNERS:
        raise InputError(f"unknown mode {spec.mode!r}")
    vals = spec.parsed()
    result, certs = RUNNERS[spec.mode](spec, vals)
    return document(spec.mode, vals, result, certs)


def run_safe(spec):
    """(document, exit code); module errors become structured diagnostics."""
    try:
        return run(spec), 0
    except InputError as e:
        return error_document(e.code, str(e), e.position, spec.mode), 1
    except (ValueError, RuntimeError, ArithmeticError) as e:
        msg = str(e)
        code = next((c for k, c in _ERROR_CODES if k in msg), "computation_error")
        return error_document(code, msg, mode=spec.mode), 1


# ------------------------------------------------------------ argv


def _load_json(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}", "io_error") from None
    except json.JSONDecodeError as e:
        raise InputError(f"{path}: invalid JSON ({e.msg})", "json_error", e.pos) from None


def spec_from_args(mode, args):
    exprs, riccati, opts = {}, {}, {}
    if args.input:
        data = _load_json(args.input)
        if data.get("mode", mode) != mode:
            raise InputError(f"problem file is for mode {data['mode']!r}, not {mode!r}")
        exprs.update(data.get("expressions", {}))
        riccati.update(data.get("riccati", {}))
        opts.update(data.get("options", {}))
    for item in args.expr or []:
        name, sep, text = item.partition("=")
        if not sep or not name.strip():
            raise InputError(f"--expr expects NAME=STRING, got {item!r}")
        exprs[name.strip()] = text
    if getattr(args, "label", None):
        riccati["label"] = args.label
    if getattr(args, "order", None) is not None:
        riccati["order"] = args.order
    if getattr(args, "sl2", False):
        riccati["sl2"] = True
    if "radicand" in riccati:
        exprs.setdefault("radicand", riccati.pop("radicand"))
    for k in ("u", "phi"):
        if k in riccati:
            exprs.setdefault(k, riccati.pop(k))
    o = Options(nmax=int(opts.get("nmax", 12)), mmax=int(opts.get("mmax", 8)),
                optimize_squarefree=bool(opts.get("optimize_squarefree", False)))
    if args.nmax is not None:
        o.nmax = args.nmax
    if args.mmax is not None:
        o.mmax = args.mmax
    if args.optimize_squarefree:
        o.optimize_squarefree = True
    return ProblemSpec(mode, exprs, riccati, o)


def build_parser():
    ap = argparse.ArgumentParser(prog="ppvkit", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="mode", required=True)
    for mode in list(MODES) + ["verify"]:
        sp = sub.add_parser(mode)
        sp.add_argument("--input", metavar="FILE")
        sp.add_argument("--output", metavar="FILE")
        if mode == "verify":
            continue
        sp.add_argument("--expr", action="append", metavar="NAME=STRING")
        sp.add_argument("--nmax", type=int)
        sp.add_argument("--mmax", type=int)
        sp.add_argument("--optimize-squarefree", action="store_true")
        if mode == "group-recover":
            sp.add_argument("--label", help="finite group label for the reduced equation")
            sp.add_argument("--order", type=int)
            sp.add_argument("--sl2", action="store_true")
    return ap


def _emit(doc, path):
    text = dumps(doc)
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None):
    args = build_parser().parse_args(argv)
    if args.mode == "verify":
        try:
            if not args.input:
                raise InputError("verify needs --input FILE")
            rep = verify_document(_load_json(args.input))
        except InputError as e:
            _emit(error_document(e.code, str(e), e.position, "verify"), args.output)
            return 1
        except MalformedDocument as e:
            _emit(error_document("malformed_document", str(e), mode="verify"), args.output)
            return 1
        except ParseError as e:
            _emit(error_document("parse_error", str(e), e.pos, "verify"), args.output)
            return 1
        for w in rep["warnings"]:
            print(f"warning: {w}", file=sys.stderr)
        _emit(rep, args.output)
        return 0 if rep["verified"] else 2
    try:
        spec = spec_from_args(args.mode, args)
    except InputError as e:
        _emit(error_document(e.code, str(e), e.position, args.mode), args.output)
        return 1
    doc, code = run_safe(spec)
    _emit(doc, args.output)
    return code


if __name__ == "__main__":
    sys.exit(main())
