import pytest

from ulrichsurf.catalog import (
    builtin_surface,
    clifford_report,
    del_pezzo,
    enriques_numeric,
    kim_cubic,
    p2_surface,
    parse_surface,
    serialize_surface,
    table1,
    table1_row,
    table1_row2_printed,
    verify_table1,
)
from ulrichsurf.errors import (
    InvalidDegree,
    OutOfRange,
    ParseError,
    UnknownBuiltin,
    ValidationError,
)
from ulrichsurf.invariants import derived_invariants, embedding_sanity
from ulrichsurf.ulrich import special_rank2_chern


def test_verify_table1_passes():
    report = verify_table1()
    assert report.passed
    degrees = [r.h2 for r in report.rows]
    assert degrees == [3, 4, 5, 6, 7, 8, 9]
    assert [r.hK for r in report.rows] == [-5, -4, -3, -2, -1, 0, 1]
    assert [r.K2 for r in report.rows] == [8, 4, 1, -1, -2, -2, -1]
    assert all(r.N == 4 for r in report.rows)


def test_printed_row2_variant_fails_linear_normality():
    S = table1_row2_printed()
    inv = derived_invariants(S)
    assert inv.N == 5
    assert inv.h2 == 5


def test_table1_row_bounds():
    with pytest.raises(OutOfRange):
        table1_row(0)
    with pytest.raises(OutOfRange):
        table1_row(8)


def test_table1_labels():
    row3 = table1_row(3)
    assert row3.lattice.basis_labels[:2] == ("l", "f1")
    row7 = table1_row(7)
    assert row7.h.coeffs == (13,) + (-4,) * 10


def test_catalog_surfaces_pass_sanity():
    for S in table1() + [del_pezzo(d) for d in (3, 6, 9)] + [
        enriques_numeric(8),
        kim_cubic(4, 9),
        kim_cubic(5, 2),
    ]:
        assert embedding_sanity(S).passed


def test_del_pezzo():
    S = del_pezzo(3)
    inv = derived_invariants(S)
    assert (inv.h2, inv.pi, inv.N) == (3, 1, 3)
    assert derived_invariants(del_pezzo(9)).h2 == 9
    inv4 = derived_invariants(del_pezzo(4))
    assert (inv4.h2, inv4.N, inv4.degZ) == (4, 4, 6)
    with pytest.raises(InvalidDegree):
        del_pezzo(2)
    with pytest.raises(InvalidDegree):
        del_pezzo(10)


def test_del_pezzo_special_c2():
    for d in range(3, 10):
        assert special_rank2_chern(del_pezzo(d)).c2 == d + 2


def test_enriques_numeric():
    S = enriques_numeric(10)
    assert (S.h2, S.hK, S.K2, S.pi) == (10, 0, 0, 6)
    assert enriques_numeric(8).pi == 5
    for bad in (6, 9):
        with pytest.raises(InvalidDegree):
            enriques_numeric(bad)


def test_kim_cubic():
    S = kim_cubic(4, 9)
    assert (S.h2, S.pi) == (7, 3)
    assert kim_cubic(5, 2).h2 == 23
    assert kim_cubic(4, 2).h2 == 14 and kim_cubic(4, 2).hK == -10
    for a, m in [(3, 5), (4, 1), (4, 10)]:
        with pytest.raises(OutOfRange):
            kim_cubic(a, m)


def test_clifford_reports():
    report = clifford_report(4, 9)
    assert (report.pi, report.g, report.deg_L, report.h0_L) == (3, 19, 9, 3)
    assert report.cliff_L == report.pencil_bound == 5
    assert report.kim_hypothesis_plausible
    report = clifford_report(5, 9)
    assert report.cliff_L == 14 and report.pencil_bound == 8
    assert not report.kim_hypothesis_plausible
    report = clifford_report(6, 2)
    assert report.cliff_L == 27 and report.pencil_bound == 11


def test_clifford_identities_in_range():
    for a in range(4, 12):
        for m in range(2, 10):
            report = clifford_report(a, m)
            assert report.cliff_L == report.deg_L - 2 * report.h0_L + 2
            S = kim_cubic(a, m)
            deg_from_lattice = 3 * S.h2 + 4 * S.hK + S.K2
            assert deg_from_lattice == 3 * (a - 1) * (a - 3) == report.deg_L


def test_serialize_round_trip():
    for S in table1() + [
        p2_surface(2),
        del_pezzo(5),
        enriques_numeric(8),
        kim_cubic(4, 3),
        builtin_surface("p1xp1-2-3"),
    ]:
        text = serialize_surface(S)
        again = serialize_surface(parse_surface(text))
        assert text == again


def test_parse_rejects_asymmetric_gram():
    text = '{"gram": [[0, 1], [2, 0]], "K": [-2, -2], "h": [1, 1]}'
    with pytest.raises(ValidationError) as info:
        parse_surface(text)
    assert info.value.path == "gram"


def test_parse_defaults_flags_to_unknown():
    text = '{"gram": [[0, 1], [1, 0]], "K": [-2, -2], "h": [1, 1]}'
    S = parse_surface(text)
    assert S.flags.very_ample is None
    assert S.flags.non_special is None
    assert S.kind.name == "abstract"


def test_parse_rejects_garbage():
    with pytest.raises(ParseError):
        parse_surface("not json")
    with pytest.raises(ParseError):
        parse_surface("[1, 2]")
    with pytest.raises(ValidationError):
        parse_surface('{"gram": [[1]], "K": [-3], "h": [1], "bogus": 1}')
    with pytest.raises(ValidationError):
        parse_surface(
            '{"gram": [[1]], "K": [-3], "h": [1], "flags": {"very_ample": "yes"}}'
        )


def test_builtin_names_resolve():
    names = [
        "p2-1",
        "p2-2",
        "p1xp1-2-3",
        "hirzebruch-e2-a1-b3",
        "table1-row-1",
        "bordiga",
        "table1-row-2-printed",
        "del-pezzo-3",
        "enriques-10",
        "kim-4-9",
    ]
    for name in names:
        S = builtin_surface(name)
        assert S.h2 > 0
    assert builtin_surface("bordiga").name == "table1-row-4"
    with pytest.raises(UnknownBuiltin):
        builtin_surface("veronese")
