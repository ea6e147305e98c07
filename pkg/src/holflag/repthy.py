"""Dimension-level checks around the enlarged groups and Dolbeault degrees.

The checks here are exact integer identities. They are necessary conditions
for the module isomorphisms and restriction statements they shadow, not
proofs of them.
"""
from __future__ import annotations

from dataclasses import dataclass

from .parabolic import Parabolic
from .realform import RealForm, compact_roots, pplus_roots
from .rootsys import SimpleType, build_root_system, dominant_root, weyl_dim


@dataclass(frozen=True)
class EnlargementPair:
    base: SimpleType
    enlarged: SimpleType
    # (base fundamental-weight node, enlarged fundamental-weight node); None if
    # there is no restriction row for this pair
    hw_map: tuple[int, int] | None

    def __str__(self):
        return f"{self.base}->{self.enlarged}"


def enlargement_pair(base: SimpleType | str) -> EnlargementPair:
    """Look up the enlargement ``g ⊂ g¹`` for a two-length simple type.

    ``B2 -> D3`` is realized as ``B2 -> A3`` (D3 = A3, with the D3 half-spin
    weight going to the A3 weight ``lambda_1``).
    """
    if isinstance(base, str):
        base = SimpleType.parse(base)
    f, n = base.family, base.rank
    if f == "B":
        if n == 2:
            return EnlargementPair(base, SimpleType("A", 3), (2, 1))
        return EnlargementPair(base, SimpleType("D", n + 1), (n, n + 1))
    if f == "C":
        return EnlargementPair(base, SimpleType("A", 2 * n - 1), (1, 1))
    if f == "G":
        return EnlargementPair(base, SimpleType("B", 3), (1, 1))
    if f == "F":
        return EnlargementPair(base, SimpleType("E", 6), None)
    raise ValueError(f"{base} has a single root length; no enlargement pair")


def _adjoint_dim(t: SimpleType) -> int:
    rs = build_root_system(t)
    return len(rs.roots) + rs.rank


def verify_enlargement(pair: EnlargementPair) -> dict:
    expected = enlargement_pair(pair.base)
    if pair != expected:
        raise ValueError(f"{pair} is not a registered enlargement pair")
    rs = build_root_system(pair.base)
    gamma_s = dominant_root(rs, "short")
    dim_base = _adjoint_dim(pair.base)
    dim_enlarged = _adjoint_dim(pair.enlarged)
    dim_e = weyl_dim(rs, rs.to_weight(gamma_s))
    return {
        "pair": str(pair),
        "dim_base": dim_base,
        "dim_enlarged": dim_enlarged,
        "dim_E_gamma_s": dim_e,
        "ok": dim_enlarged == dim_base + dim_e,
    }


def _multiple_of_fundamental(t: SimpleType, node: int, a: int):
    return tuple(a if k == node - 1 else 0 for k in range(t.rank))


def verify_branching(pair: EnlargementPair, a: int) -> dict:
    if pair.hw_map is None:
        raise ValueError(f"{pair}: no restriction row for this pair")
    if a < 1:
        raise ValueError("a must be a positive integer")
    base_node, enl_node = pair.hw_map
    d_base = weyl_dim(build_root_system(pair.base),
                      _multiple_of_fundamental(pair.base, base_node, a))
    d_enl = weyl_dim(build_root_system(pair.enlarged),
                     _multiple_of_fundamental(pair.enlarged, enl_node, a))
    return {
        "pair": str(pair),
        "a": a,
        "dim_base_rep": d_base,
        "dim_enlarged_rep": d_enl,
        "equal": d_base == d_enl,
    }


def vanishing_condition(p: Parabolic, chi) -> bool:
    """True iff ``(chi + rho, beta) < 0`` for every root ``beta`` of ``u``."""
    rs = p.rs
    chi = tuple(chi)
    if len(chi) != rs.rank:
        raise ValueError(f"chi {chi} has length {len(chi)}, expected rank {rs.rank}")
    shifted = tuple(c + 1 for c in chi)
    return all(rs.form(shifted, b) < 0 for b in p.u_roots)


def s_dimension(rf: RealForm, p: Parabolic) -> int:
    """Complex dimension of the compact base cycle ``K0 . z0``."""
    return len(p.u_roots & compact_roots(rf, p.rs))


def hermitian_dim(rf: RealForm) -> int:
    """Complex dimension of the hermitian symmetric space of ``rf``."""
    return len(pplus_roots(rf, build_root_system(rf.complex_type)))
