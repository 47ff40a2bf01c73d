"""Built-in verified surfaces and the surface-document JSON format.

Families: the projective plane, Hirzebruch surfaces, the seven linearly
normal non-special rational surfaces in P^4, del Pezzo surfaces in their
anticanonical embedding, numeric carriers for Enriques surfaces, and the
blow-ups of the plane at points on a cubic.  Also the Clifford-index
report for the latter family, and lossless (de)serialization of surfaces.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass

from .errors import (
    InvalidDegree,
    InvalidPolarization,
    OutOfRange,
    ParseError,
    UlrichSurfError,
    UnknownBuiltin,
    ValidationError,
)
from .invariants import (
    HypothesisFlags,
    PolarizedSurface,
    SurfaceKind,
    derived_invariants,
)
from .lattice import (
    DivisorClass,
    blowup_p2_lattice,
    hirzebruch_lattice,
    make_lattice,
)

__all__ = [
    "p2_surface",
    "hirzebruch_surface",
    "p1xp1_surface",
    "table1",
    "table1_row",
    "table1_row2_printed",
    "verify_table1",
    "Table1RowCheck",
    "Table1Report",
    "del_pezzo",
    "enriques_numeric",
    "kim_cubic",
    "CliffordReport",
    "clifford_report",
    "parse_surface",
    "serialize_surface",
    "builtin_surface",
    "builtin_names",
]


# ---------------------------------------------------------------------------
# Plane and Hirzebruch surfaces


def p2_surface(lam: int) -> PolarizedSurface:
    """The plane polarized by O(lambda)."""
    if lam < 1:
        raise InvalidPolarization(f"lambda must be >= 1, got {lam}")
    lattice = make_lattice([[1]], [-3], ["l"])
    return PolarizedSurface(
        lattice=lattice,
        h=DivisorClass((lam,)),
        kind=SurfaceKind.p2(lam),
        flags=HypothesisFlags(
            very_ample=True,
            non_special=True,
            h0_2K_minus_h_zero=True,
            h0_h_minus_K_zero=False,
        ),
        name=f"p2-{lam}",
        provenance=f"plane with h = {lam}l",
    )


def hirzebruch_surface(e: int, a: int, b: int) -> PolarizedSurface:
    """Hirzebruch surface with h = a xi + b f.

    Very-ampleness window: a >= 1 and b >= a e + 1 (which reads b >= 1
    when e = 0).
    """
    if e < 0:
        raise InvalidPolarization(f"e must be >= 0, got {e}")
    if a < 1 or b < a * e + 1:
        raise InvalidPolarization(
            f"(a, b) = ({a}, {b}) outside the very-ample window for e = {e}"
        )
    name = f"p1xp1-{a}-{b}" if e == 0 else f"hirzebruch-e{e}-a{a}-b{b}"
    return PolarizedSurface(
        lattice=hirzebruch_lattice(e),
        h=DivisorClass((a, b)),
        kind=SurfaceKind.hirzebruch(e, a, b),
        flags=HypothesisFlags(
            very_ample=True,
            non_special=True,
            h0_2K_minus_h_zero=True,
            h0_h_minus_K_zero=False,
        ),
        name=name,
        provenance=f"Hirzebruch e={e} with h = {a}xi + {b}f",
    )


def p1xp1_surface(a: int, b: int) -> PolarizedSurface:
    return hirzebruch_surface(0, a, b)


# ---------------------------------------------------------------------------
# The seven linearly normal non-special rational surfaces in P^4
#
# Each row: degree of the plane model and (multiplicity, point count)
# groups; points of multiplicity >= 2 get f labels, simple points get e
# labels.  Row 2 is shipped with five simple points: linear normality in
# P^4 (N = 4) and the recorded K^2 = 4 both force the fifth point.

_TABLE1_ROWS = {
    1: (2, ((1, 1),)),
    2: (3, ((1, 5),)),
    3: (4, ((2, 1), (1, 7))),
    4: (4, ((1, 10),)),
    5: (6, ((2, 6), (1, 5))),
    6: (7, ((2, 10), (1, 1))),
    7: (13, ((4, 10),)),
}


def _blowup_mixed(deg: int, groups, name: str, provenance: str,
                  anticanonical: bool) -> PolarizedSurface:
    labels = ["l"]
    coeffs = [deg]
    for mult, count in groups:
        prefix = "e" if mult == 1 else "f"
        labels.extend(f"{prefix}{i}" for i in range(1, count + 1))
        coeffs.extend([-mult] * count)
    lattice = blowup_p2_lattice(len(coeffs) - 1, labels=labels)
    return PolarizedSurface(
        lattice=lattice,
        h=DivisorClass(tuple(coeffs)),
        kind=SurfaceKind.blowup_p2(anticanonical=anticanonical),
        flags=HypothesisFlags(very_ample=True, non_special=True),
        name=name,
        provenance=provenance,
    )


def table1_row(n: int) -> PolarizedSurface:
    """Row n of the list of linearly normal non-special rational surfaces
    in P^4 (degrees 3 through 9)."""
    if n not in _TABLE1_ROWS:
        raise OutOfRange(f"row must be 1..7, got {n}")
    deg, groups = _TABLE1_ROWS[n]
    # Degree up to 5 in P^4 makes the surface anticanonical.
    return _blowup_mixed(
        deg,
        groups,
        name=f"table1-row-{n}",
        provenance=f"linearly normal rational surface in P4, degree {n + 2}",
        anticanonical=n <= 3,
    )


def table1() -> list[PolarizedSurface]:
    return [table1_row(n) for n in range(1, 8)]


def table1_row2_printed() -> PolarizedSurface:
    """Row 2 with only four of the five points subtracted from h, kept as
    a regression fixture: it fails linear normality with N = 5."""
    lattice = blowup_p2_lattice(5)
    return PolarizedSurface(
        lattice=lattice,
        h=DivisorClass((3, -1, -1, -1, -1, 0)),
        kind=SurfaceKind.blowup_p2(anticanonical=True),
        flags=HypothesisFlags(very_ample=True, non_special=True),
        name="table1-row-2-printed",
        provenance="row 2 variant with four subtracted points; inconsistent",
    )


@dataclass(frozen=True)
class Table1RowCheck:
    row: int
    h2: int
    hK: int
    K2: int
    N: int
    expected: tuple[int, int, int, int]
    ok: bool

    def to_dict(self) -> dict:
        return {
            "row": self.row,
            "h2": self.h2,
            "hK": self.hK,
            "K2": self.K2,
            "N": self.N,
            "expected_h2_hK_K2_N": list(self.expected),
            "ok": self.ok,
        }


@dataclass(frozen=True)
class Table1Report:
    rows: tuple[Table1RowCheck, ...]

    @property
    def passed(self) -> bool:
        return all(r.ok for r in self.rows)

    def to_dict(self) -> dict:
        return {"passed": self.passed, "rows": [r.to_dict() for r in self.rows]}


_TABLE1_EXPECTED = {
    1: (3, -5, 8, 4),
    2: (4, -4, 4, 4),
    3: (5, -3, 1, 4),
    4: (6, -2, -1, 4),
    5: (7, -1, -2, 4),
    6: (8, 0, -2, 4),
    7: (9, 1, -1, 4),
}


def verify_table1() -> Table1Report:
    """Recompute h^2, h.K, K^2 and N for each row and compare with the
    recorded values (degrees 3..9, N = 4 throughout)."""
    checks = []
    for n in range(1, 8):
        S = table1_row(n)
        inv = derived_invariants(S)
        got = (inv.h2, inv.hK, inv.K2, inv.N)
        expected = _TABLE1_EXPECTED[n]
        checks.append(
            Table1RowCheck(
                row=n,
                h2=inv.h2,
                hK=inv.hK,
                K2=inv.K2,
                N=inv.N,
                expected=expected,
                ok=got == expected,
            )
        )
    return Table1Report(tuple(checks))


# ---------------------------------------------------------------------------
# del Pezzo, Enriques, cubic-points families


def del_pezzo(d: int) -> PolarizedSurface:
    """Anticanonically embedded del Pezzo surface of degree d (3 <= d <= 9):
    the plane blown up at 9 - d points with h = -K."""
    if not 3 <= d <= 9:
        raise InvalidDegree(f"degree must be 3..9, got {d}")
    m = 9 - d
    lattice = blowup_p2_lattice(m)
    return PolarizedSurface(
        lattice=lattice,
        h=-lattice.canonical,
        kind=SurfaceKind.blowup_p2(anticanonical=True),
        flags=HypothesisFlags(
            very_ample=True,
            non_special=True,
            h0_2K_minus_h_zero=True,
            h0_h_minus_K_zero=False,
        ),
        name=f"del-pezzo-{d}",
        provenance=f"del Pezzo surface of degree {d}, anticanonical embedding",
    )


def enriques_numeric(h2: int) -> PolarizedSurface:
    """Numeric carrier for an Enriques surface with a polarization of
    degree h2: a rank-2 hyperbolic lattice encoding h^2 = h2, h.K = 0,
    K^2 = 0.  Needs h2 >= 8 and even (h.K = 0 forces both)."""
    if h2 % 2 != 0 or h2 < 8:
        raise InvalidDegree(f"Enriques polarization degree must be even >= 8, got {h2}")
    lattice = make_lattice([[0, 1], [1, 0]], [0, 0], ["u", "v"])
    return PolarizedSurface(
        lattice=lattice,
        h=DivisorClass((1, h2 // 2)),
        kind=SurfaceKind.enriques(),
        flags=HypothesisFlags(
            very_ample=True,
            non_special=True,
            h0_2K_minus_h_zero=True,
            h0_h_minus_K_zero=False,
        ),
        name=f"enriques-{h2}",
        provenance=f"Enriques surface numeric carrier, h^2 = {h2}",
    )


def kim_cubic(a: int, m: int) -> PolarizedSurface:
    """Blow-up of the plane at m general points on a cubic curve, with
    h = a l - sum e_i.  Very ample for a >= 4 and 2 <= m <= 9."""
    if a < 4 or not 2 <= m <= 9:
        raise OutOfRange(f"need a >= 4 and 2 <= m <= 9, got ({a}, {m})")
    lattice = blowup_p2_lattice(m)
    return PolarizedSurface(
        lattice=lattice,
        h=DivisorClass((a,) + (-1,) * m),
        kind=SurfaceKind.blowup_p2(anticanonical=True),
        flags=HypothesisFlags(
            very_ample=True,
            non_special=True,
            h0_2K_minus_h_zero=True,
            h0_h_minus_K_zero=False,
        ),
        name=f"kim-{a}-{m}",
        provenance=f"blow-up of the plane at {m} points on a cubic, h = {a}l - sum e_i",
    )


@dataclass(frozen=True)
class CliffordReport:
    """Clifford-index data for the curve C in |3h + K| on kim_cubic(a, m).

    deg_L and h0_L refer to the restriction of O(h + K) = O((a-3)l) to C;
    the pencil bound comes from the degree-(3a-5) pencil cut out by lines
    through a blown-up point.
    """

    a: int
    m: int
    pi: int
    g: int
    deg_L: int
    h0_L: int
    cliff_L: int
    pencil_bound: int
    kim_hypothesis_plausible: bool

    def to_dict(self) -> dict:
        return {
            "a": self.a,
            "m": self.m,
            "pi": self.pi,
            "g": self.g,
            "deg_L": self.deg_L,
            "h0_L": self.h0_L,
            "cliff_L": self.cliff_L,
            "pencil_bound": self.pencil_bound,
            "kim_hypothesis_plausible": self.kim_hypothesis_plausible,
        }


def clifford_report(a: int, m: int) -> CliffordReport:
    if a < 4 or not 2 <= m <= 9:
        raise OutOfRange(f"need a >= 4 and 2 <= m <= 9, got ({a}, {m})")
    pi = (a - 1) * (a - 2) // 2
    g = (3 * a - 4) * (3 * a - 5) // 2 - m
    deg_L = 3 * (a - 1) * (a - 3)
    h0_L = (a - 1) * (a - 2) // 2
    cliff_L = (2 * a - 3) * (a - 3)
    pencil_bound = 3 * a - 7
    assert cliff_L == deg_L - 2 * h0_L + 2
    return CliffordReport(
        a=a,
        m=m,
        pi=pi,
        g=g,
        deg_L=deg_L,
        h0_L=h0_L,
        cliff_L=cliff_L,
        pencil_bound=pencil_bound,
        kim_hypothesis_plausible=cliff_L <= pencil_bound,
    )


# ---------------------------------------------------------------------------
# Surface documents (canonical JSON)

_DOC_KEYS = ("name", "basis", "gram", "K", "h", "pg", "q", "kind", "flags", "provenance")
_FLAG_KEYS = ("very_ample", "non_special", "h0_2K_minus_h_zero", "h0_h_minus_K_zero")
_TRISTATE = {"true": True, "false": False, "unknown": None}


def _flag_to_text(value) -> str:
    if value is True:
        return "true"
    if value is False:
        return "false"
    return "unknown"


def serialize_surface(S: PolarizedSurface) -> str:
    """Canonical JSON document for a surface; fixed key order, flags as
    "true"/"false"/"unknown", trailing newline."""
    doc = {
        "name": S.name,
        "basis": list(S.lattice.basis_labels),
        "gram": [list(row) for row in S.lattice.gram],
        "K": list(S.lattice.canonical.coeffs),
        "h": list(S.h.coeffs),
        "pg": S.pg,
        "q": S.q,
        "kind": S.kind.to_string(),
        "flags": {
            key: _flag_to_text(getattr(S.flags, key)) for key in _FLAG_KEYS
        },
        "provenance": S.provenance,
    }
    return json.dumps(doc, indent=2) + "\n"


def _expect(doc: dict, key: str, types, default=None, required=False):
    if key not in doc:
        if required:
            raise ValidationError(key, "missing required field")
        return default
    value = doc[key]
    if not isinstance(value, types):
        raise ValidationError(key, f"expected {types}, got {type(value).__name__}")
    return value


def _int_vector(doc: dict, key: str) -> list[int]:
    value = _expect(doc, key, list, required=True)
    for i, entry in enumerate(value):
        if not isinstance(entry, int) or isinstance(entry, bool):
            raise ValidationError(f"{key}[{i}]", "expected an integer")
    return value


def parse_surface(text: str) -> PolarizedSurface:
    """Parse and validate a surface document; inverse of serialize_surface."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ParseError("document must be a JSON object")
    for key in doc:
        if key not in _DOC_KEYS:
            raise ValidationError(key, "unknown field")
    name = _expect(doc, "name", str, default="")
    provenance = _expect(doc, "provenance", str, default="")
    gram_raw = _expect(doc, "gram", list, required=True)
    for i, row in enumerate(gram_raw):
        if not isinstance(row, list):
            raise ValidationError(f"gram[{i}]", "expected a list of integers")
        for j, entry in enumerate(row):
            if not isinstance(entry, int) or isinstance(entry, bool):
                raise ValidationError(f"gram[{i}][{j}]", "expected an integer")
    K = _int_vector(doc, "K")
    h = _int_vector(doc, "h")
    basis = _expect(doc, "basis", list, default=None)
    if basis is None:
        basis = [f"b{i}" for i in range(len(gram_raw))]
    else:
        for i, label in enumerate(basis):
            if not isinstance(label, str):
                raise ValidationError(f"basis[{i}]", "expected a string")
    pg = _expect(doc, "pg", int, default=0)
    q = _expect(doc, "q", int, default=0)
    kind_text = _expect(doc, "kind", str, default="abstract")
    flags_raw = _expect(doc, "flags", dict, default={})
    flag_values = {}
    for key, value in flags_raw.items():
        if key not in _FLAG_KEYS:
            raise ValidationError(f"flags.{key}", "unknown flag")
        if value not in _TRISTATE:
            raise ValidationError(
                f"flags.{key}", 'expected "true", "false" or "unknown"'
            )
        flag_values[key] = _TRISTATE[value]
    try:
        lattice = make_lattice(gram_raw, K, basis)
    except UlrichSurfError as exc:
        raise ValidationError("gram", str(exc)) from exc
    try:
        surface = PolarizedSurface(
            lattice=lattice,
            h=DivisorClass(tuple(h)),
            pg=pg,
            q=q,
            kind=SurfaceKind.from_string(kind_text),
            flags=HypothesisFlags(**flag_values),
            name=name,
            provenance=provenance,
        )
    except ValidationError:
        raise
    except UlrichSurfError as exc:
        raise ValidationError("h", str(exc)) from exc
    return surface


# ---------------------------------------------------------------------------
# Builtin registry

_BUILTIN_PATTERNS = (
    ("p2-L", "plane with h = L * line, L >= 1"),
    ("p1xp1-A-B", "quadric surface with h = A xi + B f, A, B >= 1"),
    ("hirzebruch-eE-aA-bB", "Hirzebruch surface, A >= 1, B >= A*E + 1"),
    ("table1-row-N", "rational surface in P4, rows 1..7"),
    ("bordiga", "alias for table1-row-4"),
    ("table1-row-2-printed", "inconsistent row-2 variant (regression fixture)"),
    ("del-pezzo-D", "del Pezzo surface, 3 <= D <= 9, h = -K"),
    ("enriques-H", "Enriques numeric carrier, h^2 = H even >= 8"),
    ("kim-A-M", "plane blown up at M points on a cubic, h = A l - sum e_i"),
)


def builtin_names() -> list[tuple[str, str]]:
    """(pattern, description) pairs for every builtin family."""
    return list(_BUILTIN_PATTERNS)


def builtin_surface(name: str) -> PolarizedSurface:
    """Resolve a builtin surface name like del-pezzo-3 or p1xp1-2-3."""
    if name == "bordiga":
        return table1_row(4)
    if name == "table1-row-2-printed":
        return table1_row2_printed()
    patterns = (
        (r"p2-(\d+)$", lambda m: p2_surface(int(m[1]))),
        (r"p1xp1-(\d+)-(\d+)$", lambda m: p1xp1_surface(int(m[1]), int(m[2]))),
        (
            r"hirzebruch-e(\d+)-a(\d+)-b(\d+)$",
            lambda m: hirzebruch_surface(int(m[1]), int(m[2]), int(m[3])),
        ),
        (r"table1-row-(\d+)$", lambda m: table1_row(int(m[1]))),
        (r"del-pezzo-(\d+)$", lambda m: del_pezzo(int(m[1]))),
        (r"enriques-(\d+)$", lambda m: enriques_numeric(int(m[1]))),
        (r"kim-(\d+)-(\d+)$", lambda m: kim_cubic(int(m[1]), int(m[2]))),
    )
    for pattern, build in patterns:
        match = re.match(pattern, name)
        if match:
            return build(match)
    raise UnknownBuiltin(f"no builtin surface named {name!r}")
