import pytest
from hypothesis import given, strategies as st

from ulrichsurf.catalog import (
    del_pezzo,
    p1xp1_surface,
    p2_surface,
    table1_row,
)
from ulrichsurf.errors import MissingHypothesis
from ulrichsurf.invariants import (
    ChernData,
    HypothesisFlags,
    PolarizedSurface,
    SurfaceKind,
    chern_twist,
    chi_structure,
    derived_invariants,
    embedding_sanity,
    riemann_roch_chi,
)
from ulrichsurf.lattice import DivisorClass, make_lattice


def test_chi_structure():
    assert chi_structure(0, 0) == 1
    assert chi_structure(1, 0) == 2
    assert chi_structure(0, 2) == -1


def test_derived_del_pezzo_cubic():
    inv = derived_invariants(del_pezzo(3))
    assert (inv.h2, inv.hK, inv.pi, inv.N, inv.degZ) == (3, -3, 1, 3, 5)


def test_derived_bordiga():
    inv = derived_invariants(table1_row(4))
    assert (inv.h2, inv.hK, inv.K2, inv.pi, inv.N, inv.degZ) == (6, -2, -1, 3, 4, 6)


def test_derived_quadric_scroll():
    inv = derived_invariants(p1xp1_surface(1, 2))
    assert (inv.h2, inv.hK, inv.pi, inv.N) == (4, -6, 0, 5)
    assert inv.h0_h_plus_K is None


def test_n_unavailable_without_hypotheses():
    S = PolarizedSurface(
        lattice=make_lattice([[1]], [-3], ["l"]),
        h=DivisorClass((1,)),
    )
    inv = derived_invariants(S)
    assert inv.N is None and inv.h0_h is None and inv.degZ is None


def test_riemann_roch_examples():
    S = del_pezzo(3)
    assert riemann_roch_chi(S, ChernData(1, DivisorClass.zero(7), 0)) == 1
    bordiga = table1_row(4)
    assert riemann_roch_chi(bordiga, ChernData(1, bordiga.h, 0)) == 5
    F = ChernData(2, 3 * S.h + S.K, 5)
    assert riemann_roch_chi(S, F) == 6


def test_chern_twist_examples():
    S = del_pezzo(3)
    F = ChernData(2, 3 * S.h + S.K, 5)
    assert chern_twist(S, F, 0) == F
    F1 = chern_twist(S, F, -1)
    assert F1.c1 == S.h + S.K and F1.c2 == 2
    assert riemann_roch_chi(S, F1) == 0
    F2 = chern_twist(S, F, -2)
    assert F2.c2 == 5
    assert riemann_roch_chi(S, F2) == 0


SURFACES = [
    p2_surface(1),
    p2_surface(2),
    p1xp1_surface(2, 3),
    del_pezzo(3),
    table1_row(4),
]


@st.composite
def surface_and_chern(draw):
    S = draw(st.sampled_from(SURFACES))
    rank = draw(st.integers(1, 4))
    c1 = DivisorClass(
        tuple(
            draw(st.integers(-10, 10)) for _ in range(S.lattice.rank)
        )
    )
    c2 = draw(st.integers(-100, 100))
    return S, ChernData(rank, c1, c2)


@given(surface_and_chern(), st.integers(-5, 5))
def test_twist_inverse(data, t):
    S, F = data
    assert chern_twist(S, chern_twist(S, F, t), -t) == F


@given(surface_and_chern(), st.integers(-4, 4))
def test_riemann_roch_quadratic_in_twist(data, t):
    # second difference of t -> chi(F(th)) equals rank * h^2
    S, F = data
    values = [riemann_roch_chi(S, chern_twist(S, F, t + k)) for k in range(3)]
    assert values[2] - 2 * values[1] + values[0] == F.rank * S.h2


def test_embedding_sanity_bordiga():
    assert embedding_sanity(table1_row(4)).passed


def test_embedding_sanity_p2_boundary():
    report = embedding_sanity(p2_surface(1))
    assert report.passed
    # h2 = 1: the later clauses are vacuous
    assert any(c.detail == "vacuous" for c in report.checks)


def test_embedding_sanity_violation():
    S = PolarizedSurface(
        lattice=make_lattice([[0, 1], [1, 0]], [0, -2], ["u", "v"]),
        h=DivisorClass((1, 2)),
        flags=HypothesisFlags(non_special=True),
    )
    assert S.h2 == 4 and S.hK == -2
    report = embedding_sanity(S)
    assert not report.passed
    failing = [c.name for c in report.checks if not c.ok]
    assert "h2 >= 4 => N >= 4" in failing


def test_embedding_sanity_requires_hypotheses():
    S = PolarizedSurface(
        lattice=make_lattice([[1]], [-3], ["l"]),
        h=DivisorClass((2,)),
    )
    with pytest.raises(MissingHypothesis):
        embedding_sanity(S)


def test_kind_string_round_trip():
    kinds = [
        SurfaceKind.p2(2),
        SurfaceKind.hirzebruch(2, 1, 3),
        SurfaceKind.blowup_p2(),
        SurfaceKind.blowup_p2(anticanonical=True),
        SurfaceKind.enriques(),
        SurfaceKind.abstract(),
    ]
    for kind in kinds:
        assert SurfaceKind.from_string(kind.to_string()) == kind
