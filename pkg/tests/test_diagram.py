import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from vlk.conway import z_normalized, z_polynomial
from vlk.diagram import (
    Crossing,
    DiagramCode,
    DiagramError,
    canonical,
    carter_genus,
    component_count,
    components,
    connected_sum,
    disjoint_union,
    inverse,
    mirror,
    parse_gauss,
    parse_vld,
    passes,
    random_code,
    reorder_crossings,
    same_up_to_relabeling,
    serialize_vld,
    smooth_crossing,
    switch_crossing,
    validate,
    virtualize_crossing,
    writhe,
)
from vlk.fixtures import FIG8, FIG8_PLANAR, HOPF, KINK, R2PAIR, TREF, VH, VLD_TEXT, VT, all_fixtures

codes = st.builds(random_code, st.integers(1, 6), st.integers(0, 2**32))


def test_vld_round_trip_of_fixture_text():
    for text in VLD_TEXT.values():
        assert serialize_vld(parse_vld(text)) == text


def test_free_loop_serialized():
    code = parse_vld("O u1\nX + a a b b")
    assert "O u1" in serialize_vld(code).splitlines()
    assert parse_vld(serialize_vld(code)) == code


def test_comments_and_blank_lines():
    text = "# virtual Hopf\n\nX + a a b b   # one crossing\n"
    assert parse_vld(text) == VH


@pytest.mark.parametrize(
    "text, message, line, column",
    [
        ("X + e4 e1 e2 e3\nX + e1 e2", "arity", 2, 1),
        ("X * a a b b", "sign", 1, 3),
        ("Y + a a b b", "unknown token", 1, 1),
        ("X + a a b b\nX + a c d d", "duplicate-head", 2, 5),
        ("X + a$ a b b", "invalid edge label", 1, 5),
        ("O u\nO u", "duplicate free loop", 2, 3),
    ],
)
def test_parse_errors_carry_position(text, message, line, column):
    with pytest.raises(DiagramError) as info:
        parse_vld(text)
    assert message in info.value.message
    assert (info.value.line, info.value.column) == (line, column)


def test_empty_file_is_an_error():
    with pytest.raises(DiagramError):
        parse_vld("# nothing\n\n")


def test_missing_tail_detected():
    with pytest.raises(DiagramError, match="missing"):
        parse_vld("X + a b c d")


def test_gauss_conversions():
    assert same_up_to_relabeling(parse_gauss("O1+U1+"), KINK)
    vt_gauss = parse_gauss("O1+O2+U1+U2+")
    assert z_polynomial(vt_gauss) == z_polynomial(VT)
    assert len(TREF.crossings) == 3 and writhe(TREF) == 3
    kink = parse_gauss("O1+U1+")
    assert kink.crossings[0] == Crossing(1, "g2", "g1", "g1", "g2")


@pytest.mark.parametrize("bad", ["O1+U2+", "O1+O1+", "O1+U1-", "O1+X2", ""])
def test_gauss_errors(bad):
    with pytest.raises(DiagramError):
        parse_gauss(bad)


def test_validate_reports_violations():
    assert validate(VT) == []
    two_heads = DiagramCode((Crossing(1, "a", "b", "a", "c"), Crossing(1, "b", "a", "c", "b")))
    assert 'duplicate-head "a"' in validate(two_heads)
    clash = DiagramCode(VH.crossings, frozenset({"a"}))
    assert any(p.startswith("label-collision") for p in validate(clash))


def test_writhe_values():
    assert writhe(VT) == 2
    assert writhe(VH) == 1
    assert writhe(DiagramCode((), frozenset({"u"}))) == 0
    assert writhe(mirror(VT)) == -2


def test_components():
    assert components(VT) == [("e1", "e2", "e3", "e4")]
    assert components(VH) == [("a",), ("b",)]
    assert component_count(parse_vld("O u1")) == 1
    assert component_count(HOPF) == 2


def test_each_crossing_passed_once_over_and_once_under():
    for code in all_fixtures().values():
        seen = [p for comp in passes(code) for _, p in comp]
        assert sorted(seen) == sorted((i, r) for i in range(len(code.crossings)) for r in ("over", "under"))


@given(codes)
def test_involutions(code):
    assert mirror(mirror(code)) == code
    assert inverse(inverse(code)) == code
    for i in range(len(code.crossings)):
        assert switch_crossing(switch_crossing(code, i), i) == code
    everything = code
    for i in range(len(code.crossings)):
        everything = switch_crossing(everything, i)
    assert everything == mirror(code)


def test_inverse_keeps_signs_and_validity():
    assert writhe(inverse(VT)) == 2
    assert validate(inverse(VH)) == [] and component_count(inverse(VH)) == 2


def test_mirror_of_kink():
    m = mirror(KINK)
    assert len(m.crossings) == 1 and m.crossings[0].sign == -1


def test_smoothing():
    s = smooth_crossing(VH, 0)
    assert s.crossings == () and component_count(s) == 1
    k = smooth_crossing(KINK, 0)
    assert k.crossings == () and component_count(k) == 2


def test_virtualize():
    v = virtualize_crossing(VH, 0)
    assert v.crossings == () and component_count(v) == 2
    vt_like = virtualize_crossing(TREF, 2)
    assert len(vt_like.crossings) == 2
    assert z_normalized(vt_like) == z_normalized(VT)


@given(codes, st.data())
def test_smooth_and_virtualize_drop_one_crossing(code, data):
    i = data.draw(st.integers(0, len(code.crossings) - 1))
    for op in (smooth_crossing, virtualize_crossing):
        out = op(code, i)
        assert len(out.crossings) == len(code.crossings) - 1
        assert validate(out) == []


def test_index_errors():
    with pytest.raises(IndexError):
        switch_crossing(VH, 1)
    with pytest.raises(IndexError):
        smooth_crossing(VH, -1)


def test_disjoint_union():
    u = disjoint_union(VT, VH)
    assert len(u.crossings) == 3 and component_count(u) == 3
    renamed = disjoint_union(VT, VT)
    assert validate(renamed) == [] and len(renamed.crossings) == 4
    assert same_up_to_relabeling(disjoint_union(VT, DiagramCode(())), VT)


def test_connected_sum():
    circle = parse_vld("O u")
    assert z_polynomial(connected_sum(VT, "e1", circle, "u")) == z_polynomial(VT)
    s = connected_sum(VT, "e1", TREF, "g1")
    assert len(s.crossings) == 5 and component_count(s) == 1 and validate(s) == []
    with pytest.raises(DiagramError):
        connected_sum(VT, "nope", TREF, "g1")


def test_connected_sum_depends_on_the_cut():
    # Different cut points of the same two diagrams give different Z.
    values = {z_normalized(connected_sum(VT, e, VT, f)) for e in VT.labels() for f in VT.labels()}
    assert len(values) > 1


def test_reorder():
    assert reorder_crossings(VT, [0, 1]) == VT
    assert z_polynomial(reorder_crossings(VT, [1, 0])) == z_polynomial(VT)
    perm = [2, 0, 1]
    back = [perm.index(k) for k in range(3)]
    assert reorder_crossings(reorder_crossings(TREF, perm), back) == TREF
    with pytest.raises(ValueError):
        reorder_crossings(TREF, [0, 0, 1])


def test_random_code_is_deterministic_and_valid():
    assert random_code(4, 7) == random_code(4, 7)
    assert random_code(4, 7) != random_code(4, 8)
    for seed in range(50):
        assert validate(random_code(1 + seed % 6, seed)) == []
    with pytest.raises(ValueError):
        random_code(0, 1)


def test_one_crossing_random_codes_are_kinks_or_hopf_type():
    shapes = set()
    for seed in range(40):
        c = random_code(1, seed)
        shapes.add(component_count(c))
    assert shapes == {1, 2}


@settings(max_examples=50)
@given(codes, st.randoms(use_true_random=False))
def test_components_invariant_under_reorder_and_relabel(code, rnd):
    perm = list(range(len(code.crossings)))
    rnd.shuffle(perm)
    assert component_count(reorder_crossings(code, perm)) == component_count(code)
    assert component_count(canonical(code)) == component_count(code)


def test_carter_genus():
    for code in (KINK, HOPF, R2PAIR, TREF, FIG8_PLANAR, mirror(TREF)):
        assert carter_genus(code) == 0
    for code in (VT, VH, FIG8):
        assert carter_genus(code) == 1
    assert carter_genus(disjoint_union(VT, VT)) == 2
