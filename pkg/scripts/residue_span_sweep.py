"""Compare telescoper orders with residue span dimensions on random
eta = sum c_i/(x - e_i).

    python3 scripts/residue_span_sweep.py --count 100 --seed 1

For such eta the minimal telescoper annihilates each residue, so its order
is the dimension of the Q-span of the c_i.  The span is computed here by
exact Gaussian elimination over Q on the cleared numerators.
"""
import argparse
import random
import time
from fractions import Fraction

from ppvkit import RatX, primitive_of_rational

X, T = RatX.x(), RatX.t()
BASIS = [RatX(1), T, T ** 2, 1 / (T + 1), T ** 3, T / (T + 1)]


def instance(rng, terms):
    k = rng.randint(1, terms)
    es = set()
    while len(es) < k:
        es.add((rng.randint(-3, 3), rng.randint(-2, 2)))
    es = [a + b * T for a, b in sorted(es)]
    base = rng.sample(BASIS, rng.randint(1, k))
    cs = []
    for _ in range(k):
        co = [rng.randint(-3, 3) for _ in base]
        if not any(co):
            co[0] = 1
        cs.append(sum((a * b for a, b in zip(co, base)), RatX()))
    return es, cs


def q_span_dim(cs):
    vals = [c.to_ratt() for c in cs]
    den = vals[0].den
    for v in vals[1:]:
        den = den * v.den // den.gcd(v.den)
    rows = []
    for v in vals:
        p = v.num * (den // v.den)
        rows.append([Fraction(int(c.p), int(c.q)) for c in p.coeffs()])
    width = max(len(r) for r in rows)
    rows = [r + [Fraction(0)] * (width - len(r)) for r in rows]
    rank = 0
    for col in range(width):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                f = rows[i][col] / rows[rank][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=100)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--terms", type=int, default=4)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    hist, bad = {}, 0
    t0 = time.time()
    for _ in range(args.count):
        es, cs = instance(rng, args.terms)
        eta = sum((c / (X - e) for c, e in zip(cs, es)), RatX())
        order, dim = primitive_of_rational(eta).order, q_span_dim(cs)
        hist[dim] = hist.get(dim, 0) + 1
        if order != dim:
            bad += 1
            print(f"mismatch: order {order}, span {dim}: {eta}")
    print(f"{args.count - bad}/{args.count} agree in {time.time() - t0:.1f}s; "
          f"span dimensions {dict(sorted(hist.items()))}")
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
