"""Decision procedure for the identity component of Hol(D).

``classify_hol`` takes a real form and a parabolic (the isotropy of a base
point of the open orbit D) and walks a fixed decision order:

0. trivial parabolic: Z is a point;
1. compact real form: D = Z and the complex group acts, unless the orbit is
   one of the exceptional enlargements;
2. measurability cannot be guaranteed: undetermined;
3. hermitian real form whose ``p+`` sits inside one nilradical: the bounded
   symmetric domain itself (equality) or a holomorphic fibration over it
   (proper inclusion, infinite-dimensional);
4. single root length: Hol(D) is the real form;
5. two root lengths with a killing chain: Hol(D) is the real form;
6. no chain: look the orbit up in the exceptional registry, otherwise
   undetermined.

Source identifiers in :class:`HolResult` are part of the report format and
name the rule that produced the verdict.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

from .homcheck import ChainCertificate, find_killing_chain
from .parabolic import Parabolic
from .realform import Measurability, RealForm, measurability_status, pplus_roots

INFINITE = "infinite_dimensional"
FINITE = "finite"
UNDETERMINED = "undetermined"
TRIVIAL = "trivial"

SOURCES = (
    "prop_2_3",
    "prop_2_2_hermitian",
    "thm_2_9",
    "thm_3_2_chain",
    "table_1_1",
    "prop_3_11",
    "measurability_gate",
)

ISOMETRY_NONCOMPACT = (
    "The group of holomorphic isometries of the invariant hermitian metric is Hol(D) itself."
)
ISOMETRY_COMPACT = (
    "The group of holomorphic isometries of the invariant hermitian metric is a "
    "compact real form of Hol(D)."
)


@dataclass(frozen=True)
class HolResult:
    kind: str
    group: str | None = None
    source: str | None = None
    certificate: ChainCertificate | None = None
    notes: tuple[str, ...] = field(default=())
    isometry_note: str | None = None

    def __post_init__(self):
        assert (self.kind == FINITE) == (self.group is not None)
        if self.kind == INFINITE:
            assert self.source == "prop_2_3"
        if self.source == "thm_3_2_chain":
            assert self.certificate is not None
        assert self.source is None or self.source in SOURCES

    @property
    def determinate(self) -> bool:
        return self.kind != UNDETERMINED

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "group": self.group,
            "source": self.source,
            "certificate": None if self.certificate is None else self.certificate.to_dict(),
            "notes": list(self.notes),
            "isometry_note": self.isometry_note,
        }


# -- exceptional registry ---------------------------------------------------

@dataclass(frozen=True)
class RegistryEntry:
    family: str
    nodes: str  # "last" or "first"
    series: str
    describe: Callable[[RealForm], str]
    condition: Callable[[RealForm], bool] = lambda rf: True

    def node_set(self, rank: int) -> frozenset[int]:
        return frozenset({rank if self.nodes == "last" else 1})

    def matches(self, rf: RealForm, nodes: frozenset[int]) -> bool:
        t = rf.complex_type
        if t.family != self.family or nodes != self.node_set(t.rank):
            return False
        series = "compact" if rf.is_compact else rf.series
        return series == self.series and self.condition(rf)


def _b_noncompact(rf):
    even, odd = rf.params
    return f"SO_e({even},{odd + 1})/Z2"


def _b_compact(rf):
    n = rf.complex_type.rank
    return f"SO({2 * n + 2},C)/Z2"


def _c_split(rf):
    (n,) = rf.params
    return f"SU({n},{n})/Z_{2 * n}"


def _c_pq(rf):
    p, q = rf.params
    return f"SU({2 * p},{2 * q})/Z_{2 * p + 2 * q}"


def _c_compact(rf):
    n = rf.complex_type.rank
    return f"SL({2 * n},C)/Z_{2 * n}"


REGISTRY: tuple[RegistryEntry, ...] = (
    RegistryEntry("B", "last", "so", _b_noncompact, lambda rf: rf.params[0] >= 2),
    RegistryEntry("B", "last", "compact", _b_compact),
    RegistryEntry("C", "first", "sp_R", _c_split),
    RegistryEntry("C", "first", "sp_pq", _c_pq, lambda rf: rf.params[0] * rf.params[1] != 0),
    RegistryEntry("C", "first", "compact", _c_compact),
    RegistryEntry("G", "first", "g2_split", lambda rf: "SO_e(3,4)"),
    RegistryEntry("G", "first", "compact", lambda rf: "SO(7,C)"),
)

REGISTRY_NODE_PATTERNS = {"B": "last", "C": "first", "G": "first"}


def registry_lookup(rf: RealForm, nodes: frozenset[int]) -> str | None:
    for entry in REGISTRY:
        if entry.matches(rf, nodes):
            return entry.describe(rf)
    return None


def complexify_descriptor(desc: str) -> str:
    """Map a noncompact registry descriptor to its complex counterpart.

    ``SO_e(a,b)`` becomes ``SO(a+b,C)`` and ``SU(a,b)`` becomes ``SL(a+b,C)``;
    any center quotient is kept.
    """
    head, _, quotient = desc.partition("/")
    name, args = head[:-1].split("(")
    a, b = (int(x) for x in args.split(","))
    new = {"SO_e": "SO", "SU": "SL"}[name]
    out = f"{new}({a + b},C)"
    return f"{out}/{quotient}" if quotient else out


# -- decision procedure -----------------------------------------------------

def _finite(group, source, rf, *, certificate=None, notes=()):
    iso = ISOMETRY_COMPACT if rf.is_compact else ISOMETRY_NONCOMPACT
    return HolResult(FINITE, group, source, certificate, tuple(notes), iso)


def _check_types(rf: RealForm, p: Parabolic) -> None:
    if rf.complex_type != p.rs.simple_type:
        raise ValueError(
            f"real form {rf.name} has complex type {rf.complex_type}, "
            f"but the parabolic lives in {p.rs.simple_type}"
        )


def _chain_or_registry(rf, p, default_group):
    rs = p.rs
    cert = find_killing_chain(p)
    if cert is not None:
        return _finite(default_group, "thm_3_2_chain", rf, certificate=cert)
    desc = registry_lookup(rf, p.nodes)
    if desc is not None:
        return _finite(desc, "table_1_1", rf, notes=(
            "no killing chain exists; Hol(D) is the enlarged group of the exceptional registry",
        ))
    return HolResult(UNDETERMINED, source="table_1_1", notes=(
        f"no killing chain exists for nodes {sorted(p.nodes)} of {rs.simple_type} "
        f"and {rf.name} has no exceptional-registry entry; chain nonexistence alone "
        "does not prove an enlargement",
    ))


def classify_hol(rf: RealForm, p: Parabolic) -> HolResult:
    _check_types(rf, p)
    rs = p.rs

    if p.is_trivial:
        return HolResult(TRIVIAL, notes=("Z is a point; Hol(D) is trivial",))

    if rf.is_compact:
        group = f"G = {rs.simple_type}(C) (mod center)"
        desc = registry_lookup(rf, p.nodes)
        if desc is not None:
            return _finite(desc, "table_1_1", rf, notes=("compact form: D = Z",))
        if rs.simply_laced:
            return _finite(group, "thm_2_9", rf, notes=("compact form: D = Z",))
        return _chain_or_registry(rf, p, group)

    status = measurability_status(rf, p)
    if status is Measurability.UNKNOWN:
        return HolResult(UNDETERMINED, source="measurability_gate", notes=(
            f"{rf.name} has no compact Cartan subgroup and Q is not a Borel subgroup; "
            "measurability of D cannot be decided from the root data",
        ))

    notes = []
    if status is Measurability.FULL_FLAG and not rf.has_compact_cartan:
        notes.append("measurable because Z is the full flag manifold")

    if rf.is_hermitian:
        pplus = pplus_roots(rf, rs)
        if pplus == p.u_roots or pplus == p.ubar_roots:
            return _finite("G₀ (adjoint)", "prop_2_2_hermitian", rf, notes=notes + [
                "D is the bounded hermitian symmetric domain itself; its automorphism "
                "group is finite-dimensional and reported here as the adjoint group of G₀",
            ])
        if pplus < p.u_roots or pplus < p.ubar_roots:
            return HolResult(INFINITE, source="prop_2_3", notes=tuple(notes) + (
                "D ≅ B × K₀·z₀",
                "D fibers holomorphically over the bounded symmetric domain B of "
                f"{rf.name}",
            ))

    if rs.simply_laced:
        return _finite(rf.name, "thm_2_9", rf, notes=notes)

    return _chain_or_registry(rf, p, rf.name)


def classify_product(factors: Sequence[tuple[RealForm, Parabolic]]) -> HolResult:
    factors = list(factors)
    if not factors:
        raise ValueError("classify_product needs at least one factor")
    results = [classify_hol(rf, p) for rf, p in factors]
    if len(results) == 1:
        return results[0]
    if any(r.kind == INFINITE for r in results):
        return HolResult(INFINITE, source="prop_2_3", notes=(
            "at least one factor fibers over its bounded symmetric domain",
        ))
    if any(r.source == "prop_2_2_hermitian" for r in results):
        return HolResult(UNDETERMINED, source="prop_3_11", notes=(
            "the product rule does not cover hermitian symmetric factors",
        ))
    if any(r.kind == UNDETERMINED for r in results):
        return HolResult(UNDETERMINED, source="prop_3_11", notes=(
            "at least one factor is undetermined",
        ))
    groups = [r.group for r in results if r.kind == FINITE]
    if not groups:
        return HolResult(TRIVIAL, notes=("every factor is a point",))
    compact = all(rf.is_compact for rf, _ in factors)
    return HolResult(
        FINITE, " × ".join(groups), "prop_3_11",
        notes=tuple(f"factor {k + 1}: {r.group or 'trivial'} ({r.source or r.kind})"
                    for k, r in enumerate(results)),
        isometry_note=ISOMETRY_COMPACT if compact else ISOMETRY_NONCOMPACT,
    )
