"""Exact kernels of dense matrices over Q(t).

Rows are cleared to Q[t] and eliminated fraction-free by Bareiss steps.
Columns are scanned left to right and pivot rows are picked by degree, then
index, so identical inputs always give identical outputs.
"""
from flint import fmpq_poly

from .field import RatT, as_ratt, ratt_lcm_den

_P1 = fmpq_poly([1])


class MatT:
    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows, cols, entries):
        entries = [as_ratt(e) for e in entries]
        if len(entries) != rows * cols:
            raise ValueError("entries length must equal rows*cols")
        self.rows, self.cols, self.entries = rows, cols, entries

    @classmethod
    def from_rows(cls, rows, cols=None):
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        flat = [e for r in rows for e in r]
        return cls(len(rows), cols, flat)

    def row(self, i):
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def mul_vec(self, v):
        out = []
        for i in range(self.rows):
            acc = RatT(0)
            for a, b in zip(self.row(i), v):
                if not a.is_zero() and not b.is_zero():
                    acc = acc + a * b
            out.append(acc)
        return out

    def select_cols(self, idx):
        idx = list(idx)
        return MatT.from_rows([[self[i, j] for j in idx] for i in range(self.rows)], len(idx))


def _strip(row):
    g = None
    for e in row:
        if not e.is_zero():
            g = e if g is None else g.gcd(e)
            if g.degree() == 0:
                break
    if g is None:
        return None
    if g.degree() > 0:
        row = [e // g for e in row]
    lead = next(e for e in row if not e.is_zero()).leading_coefficient()
    if lead != 1:
        row = [e / lead for e in row]
    return row


def _poly_rows(rows):
    out = []
    for r in rows:
        L = ratt_lcm_den(r)
        pr = _strip([e.num * (L // e.den) for e in r])
        if pr is not None:
            out.append(pr)
    return out


def rref_poly(rows, ncols):
    """Fraction-free reduced echelon form; returns (rows, pivot columns).

    Bareiss-Jordan: every row other than the pivot row r becomes
    (a*row_i - b*row_r) / prev, with a the new pivot and prev the one
    before.  The division is exact, so no gcds are taken, and on exit every
    pivot entry equals the last pivot.  Among the rows able to pivot a column
    the one of lowest degree is used.
    """
    rows = [list(r) for r in rows]
    pivots = []
    prev = _P1
    r = 0
    for c in range(ncols):
        cand = [i for i in range(r, len(rows)) if not rows[i][c].is_zero()]
        if not cand:
            continue
        p = min(cand, key=lambda i: (rows[i][c].degree(), i))
        rows[r], rows[p] = rows[p], rows[r]
        pr = rows[r]
        a = pr[c]
        for i in range(len(rows)):
            if i == r:
                continue
            b, ri = rows[i][c], rows[i]
            if b.is_zero():
                rows[i] = [_exquo(a * u, prev) for u in ri]
            else:
                rows[i] = [_exquo(a * u - b * v, prev) for u, v in zip(ri, pr)]
        prev = a
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def _exquo(u, d):
    if u.is_zero() or d == _P1:
        return u
    q, rem = divmod(u, d)
    if not rem.is_zero():
        raise ArithmeticError("inexact division in fraction-free elimination")
    return q


def _reduce(A, extra=None):
    rows = [list(A.row(i)) for i in range(A.rows)]
    if extra is not None:
        rows = [r + [as_ratt(b)] for r, b in zip(rows, extra)]
    pr = _poly_rows(rows)
    return rref_poly(pr, A.cols + (extra is not None))


def rank(A):
    return len(_reduce(A)[1])


def nullspace(A):
    """Basis of {v : A v = 0}; free variables run over unit vectors."""
    red, piv = _reduce(A)
    pset = set(piv)
    basis = []
    for f in range(A.cols):
        if f in pset:
            continue
        v = [RatT(0)] * A.cols
        v[f] = RatT(1)
        for row, pc in zip(red, piv):
            if not row[f].is_zero():
                v[pc] = RatT(-row[f], row[pc])
        basis.append(v)
    return basis


def solve(A, b):
    """One solution of A v = b with free variables zero, or None."""
    n = A.cols
    red, piv = _reduce(A, b)
    if piv and piv[-1] == n:
        return None
    v = [RatT(0)] * n
    for row, pc in zip(red, piv):
        if not row[n].is_zero():
            v[pc] = RatT(row[n], row[pc])
    return v


def solve_with_unit_pivot(A, pivot, zero_cols=()):
    """Kernel vector with v[pivot] = 1 and v[j] = 0 for j in zero_cols."""
    if not 0 <= pivot < A.cols:
        raise IndexError("pivot column out of range")
    zero = set(zero_cols)
    zero.discard(pivot)
    keep = [j for j in range(A.cols) if j != pivot and j not in zero]
    sub = A.select_cols(keep)
    rhs = [-A[i, pivot] for i in range(A.rows)]
    w = solve(sub, rhs)
    if w is None:
        return None
    v = [RatT(0)] * A.cols
    v[pivot] = RatT(1)
    for j, val in zip(keep, w):
        v[j] = val
    return v
