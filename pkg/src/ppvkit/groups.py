"""Group descriptors for the parameterized Picard-Vessiot groups the
algorithms output.

Subgroups of Ga(K0) and Gm(K0) are described by a monic operator in
Q(t)[dt]; subgroups of SL2 and the recovered group of the original
equation are built from those.  Certificates ride along on each
descriptor but take no part in equality.
"""
from dataclasses import dataclass, field as dc_field

from .ore import OpT


def _op(L):
    return {"operator": str(L), "coeffs": [str(c) for c in L.coeffs]}


# ------------------------------------------------------------ Gm and Ga


@dataclass(frozen=True)
class MultGroupDesc:
    """Full Gm(K0), the roots of unity Mu(n), or {a : L(dt a / a) = 0}."""
    kind: str
    n: int = None
    L: OpT = None

    @classmethod
    def full(cls):
        return cls("Full")

    @classmethod
    def mu(cls, n):
        if n < 1:
            raise ValueError("Mu(n) needs n >= 1")
        return cls("Mu", n=n)

    @classmethod
    def logderiv(cls, L):
        if L.is_zero() or not L.is_monic():
            raise ValueError("LogDeriv needs a monic nonzero operator")
        return cls("LogDeriv", L=L)

    def is_finite(self):
        return self.kind == "Mu"

    def to_dict(self):
        if self.kind == "Mu":
            return {"kind": "Mu", "n": self.n}
        if self.kind == "LogDeriv":
            return {"kind": "LogDeriv", **_op(self.L)}
        return {"kind": "Full"}

    def __str__(self):
        if self.kind == "Mu":
            return f"Mu({self.n})"
        if self.kind == "LogDeriv":
            return f"LogDeriv({self.L})"
        return "Full"


@dataclass(frozen=True)
class AddGroupDesc:
    """Full Ga(K0) or {b : L(b) = 0}; Proper(1) is the trivial group."""
    kind: str
    L: OpT = None

    @classmethod
    def full(cls):
        return cls("Full")

    @classmethod
    def proper(cls, L):
        if L.is_zero() or not L.is_monic():
            raise ValueError("Proper needs a monic nonzero operator")
        return cls("Proper", L=L)

    def is_trivial(self):
        return self.kind == "Proper" and self.L.is_one()

    def to_dict(self):
        if self.kind == "Proper":
            return {"kind": "Proper", **_op(self.L)}
        return {"kind": "Full"}

    def __str__(self):
        return f"Proper({self.L})" if self.kind == "Proper" else "Full"


# ------------------------------------------------------------ morphisms


@dataclass(frozen=True)
class HomDesc:
    """Trivial | Power(m): s -> s^m | OpOnAdditive(L): b -> L(b) |
    OpOnLogDeriv(L): s -> L(dt s / s) | KummerCharacter(l, radicand):
    s -> s(a^(1/l)) / a^(1/l)."""
    kind: str
    m: int = None
    L: OpT = None
    l: int = None
    radicand: object = None

    @classmethod
    def trivial(cls):
        return cls("Trivial")

    @classmethod
    def power(cls, m):
        return cls("Power", m=m)

    @classmethod
    def op_on_additive(cls, L):
        return cls("OpOnAdditive", L=L)

    @classmethod
    def op_on_logderiv(cls, L):
        return cls("OpOnLogDeriv", L=L)

    @classmethod
    def kummer(cls, l, radicand):
        return cls("KummerCharacter", l=l, radicand=radicand)

    def to_dict(self):
        if self.kind == "Power":
            return {"kind": "Power", "m": self.m}
        if self.kind in ("OpOnAdditive", "OpOnLogDeriv"):
            return {"kind": self.kind, **_op(self.L)}
        if self.kind == "KummerCharacter":
            return {"kind": self.kind, "l": self.l, "radicand": str(self.radicand)}
        return {"kind": "Trivial"}

    def __str__(self):
        if self.kind == "Power":
            return f"Power({self.m})"
        if self.kind in ("OpOnAdditive", "OpOnLogDeriv"):
            return f"{self.kind}({self.L})"
        if self.kind == "KummerCharacter":
            return f"KummerCharacter({self.l}, {self.radicand})"
        return "Trivial"


# ------------------------------------------------------------ groups


class GroupDesc:
    kind = None

    def to_dict(self):
        raise NotImplementedError

    def certificates(self):
        return list(getattr(self, "certs", ()))


@dataclass(frozen=True)
class Additive(GroupDesc):
    group: AddGroupDesc
    kind = "Additive"

    def to_dict(self):
        return {"kind": self.kind, "group": self.group.to_dict()}

    def __str__(self):
        return f"Additive({self.group})"


@dataclass(frozen=True)
class Multiplicative(GroupDesc):
    group: MultGroupDesc
    kind = "Multiplicative"

    def to_dict(self):
        return {"kind": self.kind, "group": self.group.to_dict()}

    def __str__(self):
        return f"Multiplicative({self.group})"


@dataclass(frozen=True)
class Trivial(GroupDesc):
    kind = "Trivial"

    def to_dict(self):
        return {"kind": self.kind}

    def __str__(self):
        return "Trivial"


@dataclass(frozen=True)
class UT(GroupDesc):
    """{[[a, b], [0, 1/a]] : a in A, b in B}.

    ``kummer`` is (n, g) with y1^n = g when A = Mu(n).
    """
    A: MultGroupDesc
    B: AddGroupDesc
    kummer: tuple = dc_field(default=None, compare=False)
    certs: tuple = dc_field(default=(), compare=False)
    kind = "UT"

    def to_dict(self):
        return {"kind": self.kind, "A": self.A.to_dict(), "B": self.B.to_dict()}

    def __str__(self):
        return f"UT({self.A}, {self.B})"


@dataclass(frozen=True)
class Dihedral(GroupDesc):
    """Infinite dihedral group over A; ``radicand`` generates the quadratic
    subfield, ``sign`` records which discriminant candidate validated."""
    A: MultGroupDesc
    radicand: object = dc_field(default=None, compare=False)
    sign: str = dc_field(default=None, compare=False)
    certs: tuple = dc_field(default=(), compare=False)
    kind = "Dihedral"

    def to_dict(self):
        return {"kind": self.kind, "A": self.A.to_dict(),
                "radicand": str(self.radicand), "sign": self.sign}

    def __str__(self):
        return f"Dihedral({self.A})"


@dataclass(frozen=True)
class SL2Full(GroupDesc):
    kind = "SL2Full"

    def to_dict(self):
        return {"kind": self.kind}

    def __str__(self):
        return "SL2Full"


@dataclass(frozen=True)
class SL2ConstantConjugate(GroupDesc):
    witness: object = dc_field(default=None, compare=False)
    certs: tuple = dc_field(default=(), compare=False)
    kind = "SL2ConstantConjugate"

    def to_dict(self):
        return {"kind": self.kind, "witness": str(self.witness)}

    def __str__(self):
        return "SL2ConstantConjugate"


FINITE_LABELS = ("A4", "S4", "A5", "D2n", "C", "UTFinite")


@dataclass(frozen=True)
class FiniteClassical(GroupDesc):
    """A finite group handed over by the caller; ``radicand`` is the Kummer
    generator of its cyclic subfield (quadratic for D2n/S4, cubic for A4,
    y1^n = radicand for a cyclic group of order n)."""
    label: str
    order: int = None
    radicand: object = dc_field(default=None, compare=False)
    kind = "FiniteClassical"

    def __post_init__(self):
        if self.label not in FINITE_LABELS:
            raise ValueError(f"unknown finite group label {self.label!r}")

    def to_dict(self):
        out = {"kind": self.kind, "label": self.label}
        if self.order is not None:
            out["order"] = self.order
        if self.radicand is not None:
            out["radicand"] = str(self.radicand)
        return out

    def __str__(self):
        return f"FiniteClassical({self.label})"


@dataclass(frozen=True)
class Recovered(GroupDesc):
    """Gal(D) x_Lambda Gal(E) along phi, psi, modulo mu_nu."""
    D: GroupDesc
    E: MultGroupDesc
    lam: GroupDesc
    phi: HomDesc
    psi: HomDesc
    nu: int
    certs: tuple = dc_field(default=(), compare=False)
    kind = "Recovered"

    def to_dict(self):
        return {"kind": self.kind, "D": self.D.to_dict(), "E": self.E.to_dict(),
                "lambda": self.lam.to_dict(), "phi": self.phi.to_dict(),
                "psi": self.psi.to_dict(), "nu": self.nu}

    def __str__(self):
        return (f"Recovered(D={self.D}, E={self.E}, lambda={self.lam}, "
                f"phi={self.phi}, psi={self.psi}, nu={self.nu})")


def well_formed(g):
    """Structural check: every operator is monic and nonzero, Mu(n) has n >= 1."""
    def add_ok(a):
        return a.kind == "Full" or (a.kind == "Proper" and a.L.is_monic())

    def mult_ok(a):
        if a.kind == "Mu":
            return a.n >= 1
        if a.kind == "LogDeriv":
            return a.L.is_monic()
        return a.kind == "Full"

    if isinstance(g, Additive):
        return add_ok(g.group)
    if isinstance(g, Multiplicative):
        return mult_ok(g.group)
    if isinstance(g, UT):
        return mult_ok(g.A) and add_ok(g.B)
    if isinstance(g, Dihedral):
        return mult_ok(g.A)
    if isinstance(g, Recovered):
        return well_formed(g.D) and mult_ok(g.E) and well_formed(g.lam) and g.nu in (1, 2)
    return isinstance(g, (Trivial, SL2Full, SL2ConstantConjugate, FiniteClassical))
