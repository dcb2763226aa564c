import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from vlk.alexander import (
    alexander_matrix,
    alexander_polynomial,
    alexander_polynomial_mod_p,
    alexander_record,
    arcs,
    check_classical_alexander_skein,
    fox_derivative,
    ideal_generators,
    ideal_generators_direct,
    wirtinger,
)
from vlk.conway import skein_triple
from vlk.diagram import mirror, parse_vld, random_code, reorder_crossings, smooth_crossing, switch_crossing
from vlk.fixtures import CLASSICAL, FIG8, FIG8_PLANAR, HOPF, KINK, R2PAIR, TREF, VH, VT, fixture
from vlk.laurent import LPoly1, reduce_mod_p, unit_normalize

T = LPoly1.gen("t")
ONE = LPoly1.one()

codes = st.builds(random_code, st.integers(1, 5), st.integers(0, 2**32))


def test_arcs():
    assert sorted(map(set, arcs(VT)), key=min) == [{"e1", "e2", "e4"}, {"e3"}]
    assert len(arcs(HOPF)) == 2
    free = parse_vld("O u")
    assert arcs(free) == [("u",)]
    pres = wirtinger(free)
    assert len(pres.generators) == 1 and pres.relators == ()


def test_fox_identities():
    a, b = 0, 1
    commutator = ((b, 1), (a, 1), (b, -1), (a, -1))
    assert fox_derivative(commutator, b) == ONE - T
    assert fox_derivative(commutator, a) == T - ONE
    assert fox_derivative(((a, 1),), a) == ONE


def test_presentation_sizes():
    for code in (VT, VH, HOPF, TREF, FIG8):
        assert len(wirtinger(code).relators) == len(code.crossings)
    assert len(wirtinger(HOPF).generators) == 2


def test_virtual_hopf_matrix_row():
    mat = alexander_matrix(VH)
    assert mat.nrows == 1 and mat.ncols == 2
    row = mat.rows[0]
    assert {row[0], row[1]} == {T - ONE, ONE - T}
    assert sorted(ideal_generators(VH), key=str) == sorted([T - ONE, ONE - T], key=str)


@settings(max_examples=60, deadline=None)
@given(codes)
def test_rows_vanish_at_one(code):
    for row in alexander_matrix(code).rows:
        assert sum(e.evaluate(1) for e in row) == 0


@settings(max_examples=40, deadline=None)
@given(codes)
def test_minor_shortcut_matches_direct_minors(code):
    assert ideal_generators(code) == ideal_generators_direct(code)


@pytest.mark.parametrize(
    "code, expected",
    [
        (KINK, ONE),
        (HOPF, T - ONE),
        (R2PAIR, LPoly1.zero()),
        (VH, T - ONE),
        (switch_crossing(VH, 0), T - ONE),
        (smooth_crossing(VH, 0), ONE),
        (TREF, T * T - T + ONE),
        (FIG8_PLANAR, T * T - T.scale(3) + ONE),
    ],
)
def test_alexander_values(code, expected):
    assert alexander_polynomial(code) == expected


def test_degenerate_sizes():
    assert ideal_generators(parse_vld("O u")) == [ONE]
    assert ideal_generators(smooth_crossing(VH, 0)) == [ONE]
    assert alexander_polynomial(parse_vld("O u\nO v")) == LPoly1.zero()


def test_mirror_invariance_on_classical_knots():
    assert alexander_polynomial(mirror(TREF)) == alexander_polynomial(TREF)


@settings(max_examples=30, deadline=None)
@given(codes, st.randoms(use_true_random=False))
def test_reorder_invariance(code, rnd):
    perm = list(range(len(code.crossings)))
    rnd.shuffle(perm)
    assert alexander_polynomial(reorder_crossings(code, perm)) == alexander_polynomial(code)


def test_mod_p():
    assert alexander_polynomial_mod_p(HOPF, 3) == T + ONE.scale(2)
    assert alexander_polynomial_mod_p(KINK, 2) == ONE
    with pytest.raises(ValueError):
        alexander_polynomial_mod_p(HOPF, 4)
    for name in CLASSICAL:
        code = fixture(name)
        for p in (2, 3, 5):
            assert alexander_polynomial_mod_p(code, p) == reduce_mod_p(alexander_polynomial(code), p)


def test_alexander_skein_check():
    for code in (HOPF, KINK, TREF):
        for i in range(len(code.crossings)):
            assert check_classical_alexander_skein(skein_triple(code, i))
    assert not check_classical_alexander_skein(skein_triple(VH, 0))


def test_record_shape():
    rec = alexander_record(HOPF)
    assert rec["alexander"] == "-1 + 1*t"
    assert set(rec["alex_mod_p"]) == {"2", "3", "5"}
    assert rec["relators"] and all(0 not in r for r in rec["relators"])
    assert unit_normalize(T - ONE).to_canonical_string() == rec["alexander"]
