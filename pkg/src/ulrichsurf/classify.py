"""Decision procedures: existence, stability, wildness, moduli dimensions.

Verdicts are tri-state (true / false / unknown): the theorems being decided
are conditional on cohomological hypotheses which are asserted flags, never
silently assumed.  For well-studied families (Enriques surfaces and
anticanonical rational surfaces) some hypotheses are auto-derived.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .errors import MissingHypothesis
from .invariants import Flag, PolarizedSurface, derived_invariants

__all__ = [
    "Verdict",
    "ModuliDims",
    "ClassificationReport",
    "special_rank2_exists",
    "stable_special_exists",
    "is_ulrich_wild",
    "wild_via_lemma",
    "moduli_dims",
    "classify",
]


class Verdict(str, Enum):
    TRUE = "true"
    FALSE = "false"
    UNKNOWN = "unknown"

    def __bool__(self):
        raise TypeError("Verdict is tri-state; compare explicitly")


def effective_non_special(S: PolarizedSurface) -> Flag:
    """non_special flag, auto-derived for families where it is a theorem:
    Enriques surfaces and anticanonical rational surfaces."""
    if S.flags.non_special is not None:
        return S.flags.non_special
    if S.kind.name == "enriques" or S.kind.anticanonical:
        return True
    return None


def effective_h0_2K_minus_h_zero(S: PolarizedSurface) -> Flag:
    """h^0(2K - h) = 0 flag, auto-derived when it is a theorem: on an
    Enriques surface 2K = 0 and h is ample; on an anticanonical surface
    h - K is effective, which forces the vanishing."""
    if S.flags.h0_2K_minus_h_zero is not None:
        return S.flags.h0_2K_minus_h_zero
    if S.kind.name == "enriques" or S.kind.anticanonical:
        return True
    return None


def special_rank2_exists(S: PolarizedSurface) -> Verdict:
    """Existence of a special rank-2 Ulrich bundle.

    True under pg = q = 0 with very ample non-special polarization;
    unknown whenever a hypothesis is unknown.  Never false: no
    nonexistence statement is available.
    """
    if S.pg != 0 or S.q != 0:
        return Verdict.UNKNOWN
    if S.flags.very_ample is True and effective_non_special(S) is True:
        return Verdict.TRUE
    return Verdict.UNKNOWN


def stable_special_exists(S: PolarizedSurface) -> Verdict:
    """Stability of the general special rank-2 Ulrich bundle.

    False exactly for the known exceptions (rational scroll embeddings of
    Hirzebruch surfaces, i.e. a = 1, and the plane with lambda = 1); true
    for every other tagged family, including lambda = 2 and all sectional
    genus >= 1 surfaces; unknown for untagged minimal-degree data, where
    the numbers cannot distinguish a scroll from the Veronese surface.
    """
    if special_rank2_exists(S) is not Verdict.TRUE:
        raise MissingHypothesis(
            "stability decision needs special_rank2_exists = true"
        )
    kind = S.kind
    if kind.name == "hirzebruch":
        _, a, _ = kind.params
        return Verdict.FALSE if a == 1 else Verdict.TRUE
    if kind.name == "p2":
        (lam,) = kind.params
        return Verdict.FALSE if lam == 1 else Verdict.TRUE
    if kind.name == "abstract" and S.pi == 0:
        return Verdict.UNKNOWN
    return Verdict.TRUE


def is_ulrich_wild(S: PolarizedSurface) -> Verdict:
    """Ulrich-wildness: true iff pi >= 1, or pi = 0 and h^2 >= 5.

    Unknown when the pg = q = 0 non-special hypotheses are not asserted.
    """
    if S.pg != 0 or S.q != 0 or effective_non_special(S) is not True:
        return Verdict.UNKNOWN
    if S.pi >= 1 or S.h2 >= 5:
        return Verdict.TRUE
    return Verdict.FALSE


def wild_via_lemma(S: PolarizedSurface) -> bool:
    """The sufficient criterion pi >= 1 and h^2 + 1 >= K^2."""
    return S.pi >= 1 and S.h2 + 1 >= S.K2


@dataclass(frozen=True)
class ModuliDims:
    lower_chern: int
    lower_injective: Optional[int]
    smooth: Optional[int]


def moduli_dims(S: PolarizedSurface) -> ModuliDims:
    """Dimension bounds for the moduli of stable special Ulrich bundles.

    * lower_chern: h^2 - K^2 + 5, always.
    * lower_injective: 2(N + 2), only when h^0(h - K) = 0 is asserted.
    * smooth: equal to lower_chern, only when h^0(2K - h) = 0 holds, in
      which case the moduli component is generically smooth of exactly
      that dimension.
    """
    if stable_special_exists(S) is not Verdict.TRUE:
        raise MissingHypothesis("moduli dimensions need a stable bundle")
    inv = derived_invariants(S)
    lower_chern = S.h2 - S.K2 + 5
    lower_injective = None
    if S.flags.h0_h_minus_K_zero is True and inv.N is not None:
        lower_injective = 2 * (inv.N + 2)
    smooth = lower_chern if effective_h0_2K_minus_h_zero(S) is True else None
    return ModuliDims(lower_chern, lower_injective, smooth)


@dataclass(frozen=True)
class ClassificationReport:
    special_rank2_exists: Verdict
    stable_special_exists: Verdict
    ulrich_wild: Verdict
    wild_via_lemma: bool
    minimal_degree: bool
    moduli_dim_lower_chern: int
    moduli_dim_lower_injective: Optional[int]
    moduli_dim_smooth: Optional[int]
    notes: tuple[str, ...]

    def to_dict(self) -> dict:
        return {
            "special_rank2_exists": self.special_rank2_exists.value,
            "stable_special_exists": self.stable_special_exists.value,
            "ulrich_wild": self.ulrich_wild.value,
            "wild_via_lemma": self.wild_via_lemma,
            "minimal_degree": self.minimal_degree,
            "moduli_dim_lower_chern": self.moduli_dim_lower_chern,
            "moduli_dim_lower_injective": self.moduli_dim_lower_injective,
            "moduli_dim_smooth": self.moduli_dim_smooth,
            "notes": list(self.notes),
        }


def classify(S: PolarizedSurface) -> ClassificationReport:
    """Full verdict sheet for a polarized surface."""
    special = special_rank2_exists(S)
    if special is Verdict.TRUE:
        stable = stable_special_exists(S)
    else:
        stable = Verdict.UNKNOWN
    wild = is_ulrich_wild(S)
    lemma = wild_via_lemma(S)
    lower_chern = S.h2 - S.K2 + 5
    lower_injective = None
    smooth = None
    if stable is Verdict.TRUE:
        dims = moduli_dims(S)
        lower_injective = dims.lower_injective
        smooth = dims.smooth
    notes = []
    if S.kind.anticanonical and S.kind.name == "blowup_p2" and S.pi >= 1:
        notes.append(
            "moduli space irreducible rational smooth of dimension h2 - K2 + 5"
        )
    if S.kind.anticanonical:
        notes.append(
            "anticanonical wildness threshold h2 >= 4 has exceptions at "
            "sectional genus 0; the general criterion is used instead"
        )
    if S.pg == 0 and S.q == 0 and S.K2 > 9:
        notes.append(
            "K2 > 9 violates the minimal-surface bound K2 <= 9; "
            "data cannot come from a minimal surface with pg = q = 0"
        )
    return ClassificationReport(
        special_rank2_exists=special,
        stable_special_exists=stable,
        ulrich_wild=wild,
        wild_via_lemma=lemma,
        minimal_degree=S.pi == 0,
        moduli_dim_lower_chern=lower_chern,
        moduli_dim_lower_injective=lower_injective,
        moduli_dim_smooth=smooth,
        notes=tuple(notes),
    )
