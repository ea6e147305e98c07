"""Chain search certifying that ``E_{gamma_s}`` does not map into ``g/q``.

A killing chain is a sequence of positive roots ``beta_1, ..., beta_m`` such
that every partial difference ``gamma_s - (beta_1 + ... + beta_k)`` is a root
and the final one is a long root of ``u``. Such a chain rules out a nonzero
``q``-map from the module with highest weight ``gamma_s`` (the dominant short
root) to ``g/q``.

The search is a breadth-first search over the finite root set, so a ``None``
answer proves that no chain exists at all.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations

from .parabolic import Parabolic, parabolic_from_nodes
from .rootsys import Root, RootSystem, dominant_root, sub


@dataclass(frozen=True)
class ChainCertificate:
    betas: tuple[Root, ...]
    endpoint: Root
    start: Root

    def partial_differences(self) -> list[Root]:
        out, cur = [], self.start
        for b in self.betas:
            cur = sub(cur, b)
            out.append(cur)
        return out

    def to_dict(self) -> dict:
        return {
            "betas": [list(b) for b in self.betas],
            "endpoint": list(self.endpoint),
        }


def _require_two_lengths(rs: RootSystem) -> None:
    if rs.simply_laced:
        raise ValueError(
            f"{rs.simple_type} has a single root length: no short dominant root "
            "(the single-length rule applies instead)"
        )


def find_killing_chain(p: Parabolic) -> ChainCertificate | None:
    rs = p.rs
    _require_two_lengths(rs)
    if not p.nodes:
        raise ValueError("the trivial parabolic has no nilradical to reach")
    # Hom vanishing is a conjugation invariant, so search in standard position.
    u = parabolic_from_nodes(rs, p.nodes).u_roots
    gamma_s = dominant_root(rs, "short")

    def is_target(r):
        return r in u and rs.is_long(r)

    parent: dict[Root, tuple[Root, Root] | None] = {gamma_s: None}
    queue = deque([gamma_s])
    hit = gamma_s if is_target(gamma_s) else None
    while queue and hit is None:
        nu = queue.popleft()
        for beta in rs.positives:
            nxt = sub(nu, beta)
            if nxt in parent or nxt not in rs:
                continue
            # gamma_s - nxt is a sum of positive roots
            assert all(c >= 0 for c in sub(gamma_s, nxt))
            parent[nxt] = (nu, beta)
            if is_target(nxt):
                hit = nxt
                break
            queue.append(nxt)
    if hit is None:
        return None
    betas = []
    cur = hit
    while parent[cur] is not None:
        cur, beta = parent[cur]
        betas.append(beta)
    return ChainCertificate(tuple(reversed(betas)), hit, gamma_s)


@dataclass(frozen=True)
class SweepReport:
    simple_type: str
    results: tuple[tuple[frozenset[int], ChainCertificate | None], ...]
    notes: tuple[str, ...] = field(default=())

    @property
    def exceptions(self) -> frozenset[frozenset[int]]:
        return frozenset(phi for phi, cert in self.results if cert is None)


def nonempty_node_sets(rank: int):
    """All nonempty subsets of 1..rank, by size then lexicographically."""
    nodes = range(1, rank + 1)
    for k in range(1, rank + 1):
        for c in combinations(nodes, k):
            yield frozenset(c)


def sweep(rs: RootSystem) -> SweepReport:
    if rs.simply_laced:
        return SweepReport(
            str(rs.simple_type), (),
            ("single root length: every parabolic is covered by the single-length rule",),
        )
    results = tuple(
        (phi, find_killing_chain(parabolic_from_nodes(rs, phi)))
        for phi in nonempty_node_sets(rs.rank)
    )
    return SweepReport(str(rs.simple_type), results)


def sweep_exceptions(rs: RootSystem) -> frozenset[frozenset[int]]:
    return sweep(rs).exceptions
