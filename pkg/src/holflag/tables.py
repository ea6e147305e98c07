"""Self-check suites backing ``holflag verify --tables``.

Each check returns ``{"name", "ok", "detail"}``. The expected descriptor
strings below are the published ones and are compared verbatim.
"""
from __future__ import annotations

from .classify import REGISTRY, REGISTRY_NODE_PATTERNS, classify_hol, complexify_descriptor
from .homcheck import sweep_exceptions
from .parabolic import parabolic_from_nodes
from .realform import lookup_real_form
from .repthy import enlargement_pair, verify_branching, verify_enlargement
from .rootsys import SimpleType, build_root_system

TWO_LENGTH_TYPES = (
    [f"B{n}" for n in range(2, 7)] + [f"C{n}" for n in range(2, 7)] + ["G2", "F4"]
)

EXCEPTIONAL_ORBITS = [
    # (real form, type, nodes, expected Hol(D))
    ("so(2,3)", "B2", {2}, "SO_e(2,4)/Z2"),
    ("so(4,3)", "B3", {3}, "SO_e(4,4)/Z2"),
    ("so(7)", "B3", {3}, "SO(8,C)/Z2"),
    ("sp(2,R)", "C2", {1}, "SU(2,2)/Z_4"),
    ("sp(1,2)", "C3", {1}, "SU(2,4)/Z_6"),
    ("sp(2)", "C2", {1}, "SL(4,C)/Z_4"),
    ("g2-split", "G2", {1}, "SO_e(3,4)"),
    ("g2-compact", "G2", {1}, "SO(7,C)"),
]


def _check(name, ok, detail):
    return {"name": name, "ok": bool(ok), "detail": detail}


def exceptional_orbit_checks():
    out = []
    for rf_name, t, nodes, expected in EXCEPTIONAL_ORBITS:
        res = classify_hol(lookup_real_form(rf_name), parabolic_from_nodes(build_root_system(t), nodes))
        out.append(_check(
            f"exceptional orbit {rf_name} {t} {sorted(nodes)}",
            res.group == expected and res.source == "table_1_1",
            f"got {res.group!r} via {res.source}, expected {expected!r}",
        ))
    return out


def registry_sweep_checks():
    out = []
    for t in TWO_LENGTH_TYPES:
        st = SimpleType.parse(t)
        found = sweep_exceptions(build_root_system(st))
        pattern = REGISTRY_NODE_PATTERNS.get(st.family)
        if pattern is None:
            expected = frozenset()
        else:
            expected = frozenset({frozenset({st.rank if pattern == "last" else 1})})
        out.append(_check(
            f"chain sweep {t}",
            found == expected,
            f"no-chain node sets {sorted(map(sorted, found))}",
        ))
    return out


def registry_duality_checks():
    out = []
    pairs = [("so(2,5)", "so(7)"), ("sp(3,R)", "sp(3)"), ("sp(1,2)", "sp(3)"),
             ("g2-split", "g2-compact")]
    for noncompact, compact in pairs:
        rf_n, rf_c = lookup_real_form(noncompact), lookup_real_form(compact)
        rank = rf_n.complex_type.rank
        nodes = next(e.node_set(rank) for e in REGISTRY if e.family == rf_n.complex_type.family)
        d_n = next(e.describe(rf_n) for e in REGISTRY if e.matches(rf_n, nodes))
        d_c = next(e.describe(rf_c) for e in REGISTRY if e.matches(rf_c, nodes))
        out.append(_check(
            f"registry duality {noncompact} / {compact}",
            complexify_descriptor(d_n) == d_c,
            f"{d_n} complexifies to {complexify_descriptor(d_n)}; compact entry {d_c}",
        ))
    return out


def enlargement_checks():
    out = []
    for t in TWO_LENGTH_TYPES:
        rep = verify_enlargement(enlargement_pair(t))
        out.append(_check(
            f"enlargement {rep['pair']}",
            rep["ok"],
            f"{rep['dim_enlarged']} = {rep['dim_base']} + {rep['dim_E_gamma_s']}",
        ))
    return out


def branching_checks(a_values=(1, 2, 3, 4)):
    out = []
    types = ["B2", "B3", "B4", "C2", "C3", "C4", "G2"]
    for t in types:
        pair = enlargement_pair(t)
        for a in a_values:
            rep = verify_branching(pair, a)
            out.append(_check(
                f"restriction {rep['pair']} a={a}",
                rep["equal"],
                f"{rep['dim_enlarged_rep']} vs {rep['dim_base_rep']}",
            ))
    return out


def run_all_tables():
    return (
        exceptional_orbit_checks()
        + registry_sweep_checks()
        + registry_duality_checks()
        + enlargement_checks()
        + branching_checks()
    )
