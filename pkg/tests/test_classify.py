import pytest

from holflag.classify import (
    FINITE,
    INFINITE,
    REGISTRY,
    REGISTRY_NODE_PATTERNS,
    TRIVIAL,
    UNDETERMINED,
    HolResult,
    classify_hol,
    classify_product,
    complexify_descriptor,
)
from holflag.homcheck import sweep_exceptions
from holflag.parabolic import parabolic_from_nodes, parabolic_from_vector
from holflag.realform import lookup_real_form
from holflag.rootsys import build_root_system

from oracles import all_node_sets, validate_certificate


def hol(name, t, phi):
    return classify_hol(lookup_real_form(name), parabolic_from_nodes(build_root_system(t), phi))


@pytest.mark.parametrize("name,t,phi,kind,group,source", [
    ("so(2,3)", "B2", {2}, FINITE, "SO_e(2,4)/Z2", "table_1_1"),
    ("sp(2,R)", "C2", {1}, FINITE, "SU(2,2)/Z_4", "table_1_1"),
    ("sp(2,R)", "C2", {1, 2}, INFINITE, None, "prop_2_3"),
    ("sp(2,R)", "C2", {2}, FINITE, "G₀ (adjoint)", "prop_2_2_hermitian"),
    ("su(2,2)", "A3", {1}, FINITE, "su(2,2)", "thm_2_9"),
    ("g2-compact", "G2", {1}, FINITE, "SO(7,C)", "table_1_1"),
    ("sl(3,R)", "A2", {1}, UNDETERMINED, None, "measurability_gate"),
    ("sp(1,2)", "C3", {1}, FINITE, "SU(2,4)/Z_6", "table_1_1"),
])
def test_classify_examples(name, t, phi, kind, group, source):
    r = hol(name, t, phi)
    assert (r.kind, r.group, r.source) == (kind, group, source)


def test_infinite_note():
    assert "D ≅ B × K₀·z₀" in hol("sp(2,R)", "C2", {1, 2}).notes


def test_trivial():
    r = hol("so(2,3)", "B2", set())
    assert r.kind == TRIVIAL and r.group is None


def test_compact_generic_and_registry():
    r = hol("so(7)", "B3", {1})
    assert r.group == "G = B3(C) (mod center)" and r.source == "thm_3_2_chain"
    assert hol("su(4)", "A3", {2}).group == "G = A3(C) (mod center)"
    assert hol("compact(E8)", "E8", {8}).source == "thm_2_9"
    assert hol("compact(B3)", "B3", {3}).group == "SO(8,C)/Z2"
    assert hol("sp(2)", "C2", {1}).group == "SL(4,C)/Z_4"


def test_chain_verdict_carries_sound_certificate():
    r = hol("so(4,3)", "B3", {1})
    assert r.kind == FINITE and r.group == "so(4,3)" and r.source == "thm_3_2_chain"
    assert validate_certificate("B", 3, {1}, r.certificate.betas, r.certificate.endpoint) == []


def test_full_flag_passes_measurability_gate():
    r = hol("sl(3,R)", "A2", {1, 2})
    assert r.kind == FINITE and r.source == "thm_2_9"


def test_type_mismatch():
    with pytest.raises(ValueError):
        hol("sp(2,R)", "B2", {1})


def test_result_invariants():
    with pytest.raises(AssertionError):
        HolResult(FINITE)
    with pytest.raises(AssertionError):
        HolResult(INFINITE, source="thm_2_9")
    with pytest.raises(AssertionError):
        HolResult(FINITE, "x", "thm_3_2_chain")


@pytest.mark.parametrize("name", ["su(1,1)", "su(1,2)", "su(2,2)", "su(1,3)", "su(2,3)",
                                  "sp(2,R)", "sp(3,R)", "sp(4,R)", "so(2,3)", "so(2,5)",
                                  "so(2,7)", "so(2,6)"])
def test_hermitian_gate_on_node_input(name):
    rf = lookup_real_form(name)
    rs = build_root_system(rf.complex_type)
    h = rf.hermitian_node
    for phi in all_node_sets(rs.rank):
        r = classify_hol(rf, parabolic_from_nodes(rs, phi))
        if phi == {h}:
            assert r.source == "prop_2_2_hermitian"
        elif h in phi:
            assert r.kind == INFINITE
        else:
            assert r.source not in ("prop_2_2_hermitian", "prop_2_3")


def test_hermitian_gate_is_orientation_sensitive():
    rf = lookup_real_form("sp(2,R)")
    rs = build_root_system("C2")
    # lambda0 = -(lambda_1 + lambda_2): the nilradicals swap, p+ lies in ubar
    r = classify_hol(rf, parabolic_from_vector(rs, (-1, -1)))
    assert r.kind == INFINITE
    # a chamber where neither nilradical contains p+
    v = rs.reflect_weight((1, 1), 2)
    p = parabolic_from_vector(rs, v)
    pplus = {(0, 1), (1, 1), (2, 1)}
    assert not pplus <= p.u_roots and not pplus <= p.ubar_roots
    assert classify_hol(rf, p).kind == FINITE


def test_determinism():
    a = hol("g2-split", "G2", {2})
    b = hol("g2-split", "G2", {2})
    assert a == b and a.to_dict() == b.to_dict()


@pytest.mark.parametrize("t", [f"B{n}" for n in range(2, 7)] + [f"C{n}" for n in range(2, 7)]
                         + ["G2", "F4"])
def test_registry_matches_sweep(t):
    rs = build_root_system(t)
    family, n = rs.simple_type.family, rs.simple_type.rank
    pattern = REGISTRY_NODE_PATTERNS.get(family)
    expected = set() if pattern is None else {frozenset({n if pattern == "last" else 1})}
    assert sweep_exceptions(rs) == expected
    for entry in REGISTRY:
        if entry.family == family:
            assert entry.node_set(n) in sweep_exceptions(rs)


def test_registry_duality():
    assert complexify_descriptor("SO_e(2,4)/Z2") == "SO(6,C)/Z2"
    assert complexify_descriptor("SU(3,3)/Z_6") == "SL(6,C)/Z_6"
    assert complexify_descriptor("SU(2,4)/Z_6") == "SL(6,C)/Z_6"
    assert complexify_descriptor("SO_e(3,4)") == "SO(7,C)"
    for n in range(2, 6):
        for p in range(1, n + 1):
            nc = hol(f"so({2 * p},{2 * (n - p) + 1})", f"B{n}", {n}).group
            c = hol(f"so({2 * n + 1})", f"B{n}", {n}).group
            assert complexify_descriptor(nc) == c
        assert complexify_descriptor(hol(f"sp({n},R)", f"C{n}", {1}).group) == \
            hol(f"sp({n})", f"C{n}", {1}).group


def test_every_noncompact_two_length_orbit_is_determined():
    names = ["so(2,3)", "so(4,1)", "so(2,5)", "so(4,3)", "so(6,1)", "sp(2,R)", "sp(3,R)",
             "sp(1,1)", "sp(1,2)", "g2-split", "so(5)", "sp(3)", "g2-compact"]
    for name in names:
        rf = lookup_real_form(name)
        rs = build_root_system(rf.complex_type)
        for phi in all_node_sets(rs.rank):
            assert classify_hol(rf, parabolic_from_nodes(rs, phi)).kind != UNDETERMINED


def _factor(name, t, phi):
    return lookup_real_form(name), parabolic_from_nodes(build_root_system(t), phi)


def test_product_rule():
    r = classify_product([_factor("so(2,3)", "B2", {2}), _factor("su(2,2)", "A3", {1})])
    assert (r.kind, r.group, r.source) == (FINITE, "SO_e(2,4)/Z2 × su(2,2)", "prop_3_11")


def test_product_infinite():
    r = classify_product([_factor("sp(2,R)", "C2", {1, 2}), _factor("su(2,2)", "A3", {1})])
    assert r.kind == INFINITE


def test_product_hermitian_factor_undetermined():
    r = classify_product([_factor("sp(2,R)", "C2", {2}), _factor("su(2,2)", "A3", {1})])
    assert r.kind == UNDETERMINED


def test_product_undetermined_factor():
    r = classify_product([_factor("sl(3,R)", "A2", {1}), _factor("su(2,2)", "A3", {1})])
    assert r.kind == UNDETERMINED


def test_single_factor_product():
    f = _factor("g2-split", "G2", {1})
    assert classify_product([f]) == classify_hol(*f)


def test_empty_product():
    with pytest.raises(ValueError):
        classify_product([])
