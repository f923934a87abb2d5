import json

import pytest

from ppvkit.cli import ProblemSpec, main, run, run_safe
from ppvkit.field import RatX
from ppvkit.galois import Options
from ppvkit.parse import parse_expr
from ppvkit.serialize import dumps
from ppvkit.verify import MalformedDocument, verify, verify_document

CASES = [
    ("telescope-rational", {"eta": "2*t/(x^2+t)"}, {}),
    ("telescope-rational", {"eta": "(x^2+t^2*x+t)/(x^3+t*x)"}, {}),
    ("telescope-exponential", {"p": "-(1/2)*(1/x + 1/(x-1) + 1/(x-t))", "q": "1/(2*(x-t))"}, {}),
    ("telescope-exponential", {"p": "-1/(2*x)", "q": "0"}, {}),
    ("intersect", {"eta1": "(x^2+t^2*x+t)/(x^3+t*x)", "eta2": "2*t/(x^2+t)"}, {}),
    ("group-ut", {"u": "t/x"}, {}),
    ("group-ut", {"u": "1/(6*x)"}, {}),
    ("group-dihedral", {"r": "t/(4*x) - 3/(16*x^2)", "phi": "-1/(2*x)"}, {}),
    ("group-recover", {"r1": "-2*t/x", "r2": "2*t/x^2", "u": "t/x"}, {}),
    ("group-recover", {"r1": "-1/x", "r2": "3/(4*x^2) - x + t"}, {"sl2": True}),
    ("group-recover", {"r1": "-2*t/x", "r2": "t^2/x^2", "radicand": "x"},
     {"label": "A4", "order": 12}),
    ("dreyfus", {"r": "x - t"}, {}),
    ("dreyfus", {"r": "x^3 - t"}, {}),
]


def _run(mode, exprs, ric=None, **opts):
    return run(ProblemSpec(mode, exprs, ric or {}, Options(**opts)))


def test_rational_document():
    doc = _run("telescope-rational", {"eta": "2*t/(x^2+t)"})
    assert doc["schema"] == "1" and doc["mode"] == "telescope-rational"
    assert doc["result"]["L"]["operator"] == "∂t - 1/(2*t)"
    assert doc["result"]["f"] == "-x/(x^2+t)"
    assert doc["inputs"] == {"eta": "2*t/(x^2+t)"}
    assert doc["trace"]["N_tried"] == [0, 1]
    assert verify(doc)


def test_exponential_document_has_bounds():
    doc = _run("telescope-exponential",
               {"p": "-(1/2)*(1/x + 1/(x-1) + 1/(x-t))", "q": "1/(2*(x-t))"})
    assert doc["result"]["bounds"] == {"S": 1, "T": 1}
    assert doc["result"]["order"] == 2


def test_dreyfus_document():
    doc = _run("dreyfus", {"r": "x - t"})
    assert doc["result"] == {"sl2_constant_conjugate": True, "witness": "-1"}
    doc = _run("dreyfus", {"r": "x^3 - t"})
    assert doc["result"] == {"sl2_constant_conjugate": False, "witness": None}


def test_recover_document():
    doc = _run("group-recover", {"r1": "-2*t/x", "r2": "2*t/x^2", "u": "t/x"})
    g = doc["result"]["group"]
    assert g["phi"] == {"kind": "Power", "m": 1}
    assert g["psi"] == {"kind": "Power", "m": -1}
    assert g["nu"] == 2


@pytest.mark.parametrize("mode, exprs, ric", CASES)
def test_every_output_verifies(mode, exprs, ric):
    doc = _run(mode, exprs, ric)
    rep = verify_document(doc)
    assert rep["verified"], rep


@pytest.mark.parametrize("mode, exprs, ric", CASES[:6])
def test_deterministic_bytes(mode, exprs, ric):
    assert dumps(_run(mode, exprs, ric)) == dumps(_run(mode, exprs, ric))


def test_no_floats_in_output():
    def walk(v):
        if isinstance(v, dict):
            for w in v.values():
                walk(w)
        elif isinstance(v, list):
            for w in v:
                walk(w)
        else:
            assert not isinstance(v, float)
    for mode, exprs, ric in CASES:
        walk(_run(mode, exprs, ric))


def test_perturbed_certificate_fails():
    doc = _run("telescope-rational", {"eta": "2*t/(x^2+t)"})
    c = doc["certificates"][0]
    c["f"] = str(parse_expr(c["f"]) + 1 / RatX.x())
    assert not verify(doc)
    assert verify_document(doc)["failures"] == [{"index": 0, "type": "rational"}]


def test_verify_ignores_trace():
    doc = _run("telescope-rational", {"eta": "2*t/(x^2+t)"})
    doc["trace"] = {"N_tried": "garbage"}
    assert verify(doc)


def test_empty_certificates_warn():
    rep = verify_document({"certificates": []})
    assert rep["verified"] and rep["warnings"]


@pytest.mark.parametrize("doc", [[], {}, {"certificates": {}},
                                 {"certificates": [{"type": "nope"}]},
                                 {"certificates": [{"type": "rational", "eta": "x"}]}])
def test_malformed(doc):
    with pytest.raises(MalformedDocument):
        verify_document(doc)


@pytest.mark.parametrize("mode, exprs, ric, code", [
    ("telescope-rational", {"eta": "x^(-1)"}, {}, "parse_error"),
    ("telescope-rational", {}, {}, "invalid_input"),
    ("telescope-rational", {"eta": "x", "zeta": "t"}, {}, "invalid_input"),
    ("telescope-exponential", {"p": "t/x", "q": "1/x"}, {}, "not_integrable"),
    ("group-ut", {"u": "t/x", "r": "1/x^2"}, {}, "not_riccati"),
    ("group-dihedral", {"r": "t/(4*x) - 3/(16*x^2)", "phi": "1/x"}, {}, "phi_inconsistent"),
    ("group-recover", {"r1": "x", "r2": "x"}, {}, "invalid_input"),
    ("group-recover", {"r1": "x", "r2": "x"}, {"label": "Q8"}, "invalid_input"),
    ("nonsense", {}, {}, "invalid_input"),
])
def test_structured_errors(mode, exprs, ric, code):
    doc, rc = run_safe(ProblemSpec(mode, exprs, ric))
    assert rc == 1 and doc["error"]["code"] == code
    assert doc["error"]["message"]


def test_parse_error_position():
    doc, _ = run_safe(ProblemSpec("telescope-rational", {"eta": "x + y"}))
    assert doc["error"]["position"] == 4


# ---- argv level

def test_main_roundtrip(tmp_path, capsys):
    out = tmp_path / "doc.json"
    assert main(["telescope-rational", "--expr", "eta=2*t/(x^2+t)", "--output", str(out)]) == 0
    assert main(["verify", "--input", str(out)]) == 0
    assert json.loads(capsys.readouterr().out)["verified"] is True
    doc = json.loads(out.read_text())
    doc["certificates"][0]["f"] = "-x/(x^2+t) + 1/x"
    out.write_text(json.dumps(doc))
    assert main(["verify", "--input", str(out)]) == 2


def test_main_stdout(capsys):
    assert main(["dreyfus", "--expr", "r=x - t"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["result"]["witness"] == "-1"


def test_main_problem_file(tmp_path, capsys):
    prob = tmp_path / "p.json"
    prob.write_text(json.dumps({"mode": "group-recover",
                                "expressions": {"r1": "-2*t/x", "r2": "2*t/x^2"},
                                "riccati": {"u": "t/x"}, "options": {"mmax": 4}}))
    assert main(["group-recover", "--input", str(prob)]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["result"]["group"]["nu"] == 2


def test_main_flags(capsys):
    assert main(["group-recover", "--expr", "r1=-1/x", "--expr", "r2=3/(4*x^2) - x + t",
                 "--sl2", "--mmax", "3"]) == 0
    assert "SL2ConstantConjugate" in capsys.readouterr().out
    assert main(["telescope-rational", "--expr", "eta=1/(x^2-t)^2",
                 "--optimize-squarefree"]) == 0


def test_main_errors(tmp_path, capsys):
    assert main(["telescope-rational", "--expr", "eta=x^(-1)"]) == 1
    err = json.loads(capsys.readouterr().out)["error"]
    assert err["code"] == "parse_error" and err["position"] == 2
    assert main(["telescope-rational", "--expr", "eta"]) == 1
    assert main(["verify"]) == 1
    assert main(["verify", "--input", str(tmp_path / "missing.json")]) == 1
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert main(["verify", "--input", str(bad)]) == 1
    bad.write_text(json.dumps({"certificates": [{"type": "zzz"}]}))
    assert main(["verify", "--input", str(bad)]) == 1
    prob = tmp_path / "p.json"
    prob.write_text(json.dumps({"mode": "dreyfus"}))
    assert main(["intersect", "--input", str(prob)]) == 1


def test_main_empty_certificates(tmp_path, capsys):
    f = tmp_path / "e.json"
    f.write_text(json.dumps({"certificates": []}))
    assert main(["verify", "--input", str(f)]) == 0
    assert "vacuously" in capsys.readouterr().err
