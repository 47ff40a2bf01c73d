"""Polarized surfaces and their numerical invariants.

A polarized surface bundles a lattice, a polarization class h, the discrete
invariants p_g and q, a family tag, and asserted cohomological flags.  All
derived quantities (Euler characteristic of the structure sheaf, sectional
genus, embedding dimension, Riemann-Roch values, Chern twists) are computed
by exact rational arithmetic with explicit integrality checks.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Optional

from .errors import (
    MissingHypothesis,
    NonIntegralChi,
    NonIntegralGenus,
    ValidationError,
)
from .lattice import DivisorClass, DivisorLike, IntersectionLattice, as_divisor

__all__ = [
    "SurfaceKind",
    "HypothesisFlags",
    "PolarizedSurface",
    "DerivedInvariants",
    "ChernData",
    "SanityCheck",
    "SanityReport",
    "chi_structure",
    "derived_invariants",
    "riemann_roch_chi",
    "chern_twist",
    "embedding_sanity",
]

# Tri-state hypothesis value: True / False / None (unknown).
Flag = Optional[bool]

KIND_NAMES = ("p2", "hirzebruch", "blowup_p2", "enriques", "abstract")


@dataclass(frozen=True)
class SurfaceKind:
    """Family tag of a surface, with its integer parameters.

    ``anticanonical`` records that |-K| is known non-empty for this family,
    which unlocks the auto-derived cohomological facts in classify.
    """

    name: str
    params: tuple[int, ...] = ()
    anticanonical: bool = False

    def __post_init__(self):
        if self.name not in KIND_NAMES:
            raise ValidationError("kind", f"unknown kind {self.name!r}")
        object.__setattr__(self, "params", tuple(int(p) for p in self.params))

    @staticmethod
    def p2(lam: int) -> "SurfaceKind":
        return SurfaceKind("p2", (lam,), anticanonical=True)

    @staticmethod
    def hirzebruch(e: int, a: int, b: int) -> "SurfaceKind":
        return SurfaceKind("hirzebruch", (e, a, b), anticanonical=True)

    @staticmethod
    def blowup_p2(anticanonical: bool = False) -> "SurfaceKind":
        return SurfaceKind("blowup_p2", (), anticanonical=anticanonical)

    @staticmethod
    def enriques() -> "SurfaceKind":
        return SurfaceKind("enriques")

    @staticmethod
    def abstract() -> "SurfaceKind":
        return SurfaceKind("abstract")

    def to_string(self) -> str:
        parts = self.name
        if self.params:
            parts += ":" + ",".join(str(p) for p in self.params)
        if self.anticanonical and self.name not in ("p2", "hirzebruch"):
            parts += ":anticanonical"
        return parts

    @staticmethod
    def from_string(text: str) -> "SurfaceKind":
        pieces = text.split(":")
        name = pieces[0]
        anticanonical = False
        params: tuple[int, ...] = ()
        for piece in pieces[1:]:
            if piece == "anticanonical":
                anticanonical = True
            else:
                try:
                    params = tuple(int(p) for p in piece.split(","))
                except ValueError:
                    raise ValidationError("kind", f"bad parameters in {text!r}")
        if name in ("p2", "hirzebruch"):
            anticanonical = True
        return SurfaceKind(name, params, anticanonical=anticanonical)


@dataclass(frozen=True)
class HypothesisFlags:
    """Asserted cohomological facts; None means unknown.

    * very_ample: O_S(h) is very ample.
    * non_special: h^1(O_S(h)) = 0.
    * h0_2K_minus_h_zero: h^0(O_S(2K - h)) = 0.
    * h0_h_minus_K_zero: h^0(O_S(h - K)) = 0.
    """

    very_ample: Flag = None
    non_special: Flag = None
    h0_2K_minus_h_zero: Flag = None
    h0_h_minus_K_zero: Flag = None


@dataclass(frozen=True)
class PolarizedSurface:
    lattice: IntersectionLattice
    h: DivisorClass
    pg: int = 0
    q: int = 0
    kind: SurfaceKind = field(default_factory=SurfaceKind.abstract)
    flags: HypothesisFlags = field(default_factory=HypothesisFlags)
    name: str = ""
    provenance: str = ""

    def __post_init__(self):
        object.__setattr__(self, "h", as_divisor(self.h))
        self.lattice.check_dimension(self.h)
        if self.pg < 0 or self.q < 0:
            raise ValidationError("pg/q", "must be non-negative")
        if self.lattice.pair(self.h, self.h) <= 0:
            raise ValidationError("h", "a very ample class must have h^2 > 0")

    @property
    def K(self) -> DivisorClass:
        return self.lattice.canonical

    @property
    def h2(self) -> int:
        return self.lattice.pair(self.h, self.h)

    @property
    def hK(self) -> int:
        return self.lattice.pair(self.h, self.K)

    @property
    def K2(self) -> int:
        return self.lattice.pair(self.K, self.K)

    @property
    def chi(self) -> int:
        return chi_structure(self.pg, self.q)

    @property
    def pi(self) -> int:
        """Sectional genus (h^2 + h.K)/2 + 1."""
        num = self.h2 + self.hK
        if num % 2 != 0:
            raise NonIntegralGenus("h^2 + h.K is odd")
        return num // 2 + 1

    def pair(self, D: DivisorLike, E: DivisorLike) -> int:
        return self.lattice.pair(D, E)


@dataclass(frozen=True)
class ChernData:
    """Numeric shadow of a vector bundle: (rank, c_1, c_2)."""

    rank: int
    c1: DivisorClass
    c2: int

    def __post_init__(self):
        if self.rank < 1:
            raise ValidationError("rank", "must be a positive integer")
        object.__setattr__(self, "c1", as_divisor(self.c1))
        object.__setattr__(self, "c2", int(self.c2))


@dataclass(frozen=True)
class DerivedInvariants:
    h2: int
    hK: int
    K2: int
    chi: int
    pi: int
    N: Optional[int]
    h0_h: Optional[int]
    degZ: Optional[int]
    h0_h_plus_K: Optional[int]

    def to_dict(self) -> dict:
        return {
            "h2": self.h2,
            "hK": self.hK,
            "K2": self.K2,
            "chi": self.chi,
            "pi": self.pi,
            "N": self.N,
            "h0_h": self.h0_h,
            "degZ": self.degZ,
            "h0_h_plus_K": self.h0_h_plus_K,
        }


def chi_structure(pg: int, q: int) -> int:
    """chi(O_S) = 1 - q + p_g."""
    if pg < 0 or q < 0:
        raise ValidationError("pg/q", "must be non-negative")
    return 1 - q + pg


def derived_invariants(S: PolarizedSurface) -> DerivedInvariants:
    """All numerical invariants derivable from the lattice data.

    N (and with it h^0(h) = N + 1 and deg Z = N + 2) is only computed when
    pg = q = 0 and non_special is asserted true; otherwise those fields are
    None rather than guessed.  h^0(h + K) is the sectional genus when it is
    at least 1 (Kodaira vanishing range), absent otherwise.
    """
    h2 = S.h2
    hK = S.hK
    pi = S.pi
    embedded = S.pg == 0 and S.q == 0 and S.flags.non_special is True
    if embedded:
        half = h2 - hK
        if half % 2 != 0:
            raise NonIntegralGenus("h^2 - h.K is odd")
        N = half // 2
        h0_h = N + 1
        degZ = N + 2
    else:
        N = h0_h = degZ = None
    return DerivedInvariants(
        h2=h2,
        hK=hK,
        K2=S.K2,
        chi=S.chi,
        pi=pi,
        N=N,
        h0_h=h0_h,
        degZ=degZ,
        h0_h_plus_K=pi if pi >= 1 else None,
    )


def riemann_roch_chi(S: PolarizedSurface, F: ChernData) -> int:
    """chi(F) = rank . chi(O_S) + c1.(c1 - K)/2 - c2, exactly."""
    c1 = S.lattice.check_dimension(F.c1)
    half = Fraction(S.pair(c1, c1) - S.pair(c1, S.K), 2)
    value = F.rank * S.chi + half - F.c2
    if value.denominator != 1:
        raise NonIntegralChi("c1.(c1 - K) is odd")
    return int(value)


def chern_twist(S: PolarizedSurface, F: ChernData, t: int) -> ChernData:
    """Chern data of F(t h): the standard twist formulas for c1 and c2."""
    c1 = S.lattice.check_dimension(F.c1)
    new_c1 = c1 + (F.rank * t) * S.h
    new_c2 = (
        F.c2
        + (F.rank - 1) * t * S.pair(c1, S.h)
        + comb(F.rank, 2) * t * t * S.h2
    )
    return ChernData(F.rank, new_c1, new_c2)


@dataclass(frozen=True)
class SanityCheck:
    name: str
    ok: bool
    detail: str


@dataclass(frozen=True)
class SanityReport:
    checks: tuple[SanityCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "checks": [
                {"name": c.name, "ok": c.ok, "detail": c.detail}
                for c in self.checks
            ],
        }


def embedding_sanity(S: PolarizedSurface) -> SanityReport:
    """Degree/dimension inequalities forced by the projective embedding.

    Requires pg = q = 0 and non_special = true (the hypotheses under which
    N is defined).  Each inequality is reported individually; clauses with
    unmet preconditions are recorded as vacuously passing.
    """
    inv = derived_invariants(S)
    if inv.N is None:
        raise MissingHypothesis(
            "embedding sanity needs pg = q = 0 and non_special = true"
        )
    h2, hK, N = inv.h2, inv.hK, inv.N
    checks = [
        SanityCheck("h2 = hK + 2N", h2 == hK + 2 * N, f"{h2} vs {hK + 2 * N}"),
        SanityCheck("h2 >= hK + 4", h2 >= hK + 4, f"{h2} >= {hK + 4}"),
    ]
    if h2 >= 2:
        checks.append(SanityCheck("h2 >= 2 => N >= 3", N >= 3, f"N = {N}"))
        checks.append(
            SanityCheck("h2 >= 2 => h2 >= hK + 6", h2 >= hK + 6, f"{h2} >= {hK + 6}")
        )
    else:
        checks.append(SanityCheck("h2 >= 2 => N >= 3", True, "vacuous"))
        checks.append(SanityCheck("h2 >= 2 => h2 >= hK + 6", True, "vacuous"))
    if h2 >= 4:
        checks.append(SanityCheck("h2 >= 4 => N >= 4", N >= 4, f"N = {N}"))
        checks.append(
            SanityCheck("h2 >= 4 => h2 >= hK + 8", h2 >= hK + 8, f"{h2} >= {hK + 8}")
        )
    else:
        checks.append(SanityCheck("h2 >= 4 => N >= 4", True, "vacuous"))
        checks.append(SanityCheck("h2 >= 4 => h2 >= hK + 8", True, "vacuous"))
    return SanityReport(tuple(checks))
