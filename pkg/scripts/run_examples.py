"""Run every problem file in scripts/problems through the CLI, then verify
each result document.

    python3 scripts/run_examples.py [--out DIR]
"""
import argparse
import json
import sys
from pathlib import Path

from ppvkit.cli import main

HERE = Path(__file__).parent


def run_one(prob, out_dir):
    mode = json.loads(prob.read_text())["mode"]
    doc = out_dir / f"{prob.stem}.result.json"
    code = main([mode, "--input", str(prob), "--output", str(doc)])
    if code:
        return code, None
    res = json.loads(doc.read_text())["result"]
    vcode = main(["verify", "--input", str(doc), "--output", str(out_dir / f"{prob.stem}.verify.json")])
    return vcode, res


def summary(res):
    if "group_str" in res:
        return res["group_str"]
    if "L" in res:
        return f"L = {res['L']['operator']}"
    if "Lpp" in res:
        return f"L'' = {res['Lpp']['operator']}"
    return json.dumps(res, sort_keys=True)


def cli():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default=str(HERE / "out"))
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    worst = 0
    for prob in sorted((HERE / "problems").glob("*.json")):
        code, res = run_one(prob, out)
        worst = max(worst, code)
        status = "ok" if code == 0 else f"exit {code}"
        print(f"{prob.stem:20s} {status:8s} {summary(res) if res else ''}")
    return worst


if __name__ == "__main__":
    sys.exit(cli())
