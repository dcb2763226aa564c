import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from vlk.conway import (
    assign_lr,
    build_mp,
    conway_record,
    crossing_switch_invariant,
    local_matrix,
    skein_residual,
    skein_triple,
    z_normalized,
    z_polynomial,
    z_prime,
)
from vlk.diagram import DiagramError, disjoint_union, inverse, mirror, random_code, parse_vld, switch_crossing
from vlk.fixtures import FIG8, FIG8_PLANAR, HOPF, KINK, R2PAIR, TREF, VH, VT
from vlk.laurent import LPoly1, LPoly2, eval_y_minus_1, eval_y_minus_x
from vlk.matrix import RingMatrix, determinant, determinant_oracle

X = LPoly2.gen("x")
Y = LPoly2.gen("y")
ONE = LPoly2.one()
ZERO = LPoly2.zero()
XI = LPoly2.monomial((-1, 0))
YI = LPoly2.monomial((0, -1))
TY = ("t", "y")

Z_VT = X * X + X * X * YI + X * Y - X * YI - Y - ONE
VT_MATRIX = RingMatrix([
    [ONE - X, -Y, ZERO, -ONE],
    [-X * YI, ZERO, -ONE, ZERO],
    [-ONE, ZERO, ONE - X, -Y],
    [ZERO, -ONE, -X * YI, ZERO],
])

codes = st.builds(random_code, st.integers(1, 6), st.integers(0, 2**32))


def ty(terms):
    return LPoly2(terms, TY)


def test_local_matrices():
    assert local_matrix(1) == [[ONE - X, -Y], [-X * YI, ZERO]]
    assert local_matrix(-1) == [[ZERO, -XI * Y], [-YI, ONE - XI]]
    with pytest.raises(ValueError):
        local_matrix(0)


def test_virtual_trefoil_matrix_and_polynomial():
    m, p = build_mp(VT)
    assert m - p == VT_MATRIX
    assert z_polynomial(VT) == Z_VT


def test_transposed_permutation_breaks_the_anchor():
    m, p = build_mp(VT)
    assert m - p.transpose() != VT_MATRIX


def test_other_slot_convention_fails_classical_vanishing():
    # VT has only positive crossings, so both conventions reproduce its matrix;
    # the mixed-sign unlink R2PAIR separates them.
    m, p = build_mp(VT, convention="B")
    assert m - p == VT_MATRIX
    assert not z_polynomial(R2PAIR, convention="B").is_zero()
    assert z_polynomial(R2PAIR, convention="A").is_zero()


def test_slot_assignment():
    pos, neg = VH.crossings[0], switch_crossing(VH, 0).crossings[0]
    assert assign_lr(pos) == {"over_in": "l", "over_out": "r", "under_in": "r", "under_out": "l"}
    assert assign_lr(neg) == {"over_in": "r", "over_out": "l", "under_in": "l", "under_out": "r"}
    with pytest.raises(ValueError):
        assign_lr(pos, "C")


def test_virtual_hopf():
    assert z_polynomial(VH) == X + Y + X * YI + ONE
    assert z_normalized(VH) == z_polynomial(VH)
    assert crossing_switch_invariant(VH) == LPoly1({(0,): 2, (1,): 1, (-1,): 1}, ("y",))


@pytest.mark.parametrize("code", [TREF, HOPF, inverse(HOPF), FIG8, FIG8_PLANAR, R2PAIR, KINK])
def test_classical_fixtures_vanish(code):
    assert z_polynomial(code).is_zero()
    assert z_prime(code).is_zero()


def test_normalized_and_tform_of_vt():
    assert z_normalized(VT) == Z_VT
    t2 = {(2, 0): 1, (2, -1): 1, (0, 1): 1, (0, -1): -1, (-2, 1): -1, (-2, 0): -1}
    assert z_prime(VT) == ty(t2)


def test_free_loops_and_empty_codes_give_zero():
    assert z_polynomial(parse_vld("O u")).is_zero()
    assert z_polynomial(parse_vld("X + a a b b\nO u")).is_zero()
    with pytest.raises(DiagramError):
        build_mp(parse_vld("O u"))


def test_mirror_changes_z_of_vt():
    assert z_normalized(mirror(VT)) != z_normalized(VT)
    assert crossing_switch_invariant(mirror(VT)) == crossing_switch_invariant(VT)


@settings(max_examples=100, deadline=None)
@given(codes)
def test_bareiss_matches_oracle_on_diagram_matrices(code):
    m, p = build_mp(code)
    assert determinant(m - p) == determinant_oracle(m - p)


@settings(max_examples=100, deadline=None)
@given(codes)
def test_vanishing_at_special_lines(code):
    z = z_polynomial(code)
    assert eval_y_minus_x(z).is_zero()
    assert eval_y_minus_1(z).is_zero()


@settings(max_examples=50, deadline=None)
@given(codes, codes)
def test_disjoint_union_multiplies(a, b):
    assert z_polynomial(disjoint_union(a, b)) == z_polynomial(a) * z_polynomial(b)


def test_inverse_inverse_same_z():
    for seed in range(20):
        c = random_code(4, seed)
        assert z_polynomial(inverse(inverse(c))) == z_polynomial(c)


def test_skein_triple_shape():
    tr = skein_triple(VH, 0)
    assert tr.d_plus == VH
    assert tr.d_minus == switch_crossing(VH, 0)
    assert tr.d_zero.crossings == ()
    with pytest.raises(IndexError):
        skein_triple(VH, 3)


def test_skein_residual_vanishes_when_smoothing_term_is_zero():
    assert skein_residual(skein_triple(VH, 0)).is_zero()


@settings(max_examples=100, deadline=None)
@given(codes, st.data())
def test_skein_relation_with_writhe_sign(code, data):
    i = data.draw(st.integers(0, len(code.crossings) - 1))
    assert skein_residual(skein_triple(code, i), sign=-1).is_zero()


def test_record_fields():
    rec = conway_record(VT)
    assert rec["writhe"] == 2 and rec["components"] == 1
    assert LPoly2.from_json(rec["conway"]) == Z_VT
    assert rec["flags"] == {"vanishes_y_eq_minus_x": True, "vanishes_y_eq_minus_1": True}
    assert all(isinstance(row[-1], str) for row in rec["conway"])
