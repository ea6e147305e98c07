"""Parabolic subalgebras containing the fixed Cartan, given by a defining weight.

A weight ``v`` splits the roots by the sign of ``(v, alpha)``: zero gives the
Levi factor, positive gives ``u_roots`` and negative gives ``ubar_roots``.
The parabolic itself is spanned by the Levi roots and ``ubar_roots``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .rootsys import Root, RootSystem, Weight


@dataclass(frozen=True)
class Parabolic:
    rs: RootSystem
    lambda0: Weight
    nodes: frozenset[int]
    levi_roots: frozenset[Root]
    u_roots: frozenset[Root]
    ubar_roots: frozenset[Root]

    @property
    def is_borel(self) -> bool:
        return not self.levi_roots

    @property
    def is_trivial(self) -> bool:
        return not self.nodes

    @property
    def dim_flag(self) -> int:
        """Complex dimension of the flag manifold G/Q."""
        return len(self.u_roots)

    def canonical(self) -> "Parabolic":
        """The standard-position parabolic conjugate to this one."""
        return parabolic_from_nodes(self.rs, self.nodes)


def _partition(rs: RootSystem, v: Weight):
    levi, u, ubar = [], [], []
    for r in rs.roots:
        s = rs.form(v, r)
        (levi if s == 0 else u if s > 0 else ubar).append(r)
    return frozenset(levi), frozenset(u), frozenset(ubar)


def parabolic_from_nodes(rs: RootSystem, phi: Iterable[int]) -> Parabolic:
    phi = frozenset(phi)
    for node in phi:
        rs.check_node(node)
    lam = tuple(int(k + 1 in phi) for k in range(rs.rank))
    return Parabolic(rs, lam, phi, *_partition(rs, lam))


def parabolic_from_vector(rs: RootSystem, v: Iterable[int]) -> Parabolic:
    v = tuple(int(c) for c in v)
    if len(v) != rs.rank:
        raise ValueError(f"vector {v} has length {len(v)}, expected rank {rs.rank}")
    dom = rs.dominant_representative(v)
    nodes = frozenset(k + 1 for k, c in enumerate(dom) if c != 0)
    return Parabolic(rs, v, nodes, *_partition(rs, v))
