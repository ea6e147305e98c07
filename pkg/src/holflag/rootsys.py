"""Finite crystallographic root systems in exact integer coordinates.

Roots are integer tuples in the simple-root basis; weights are integer tuples
in the fundamental-weight basis. Simple roots are numbered 1..n, so node ``j``
lives at tuple index ``j - 1``.

Numbering (agrees with Bourbaki except for F4, which is reversed)::

    B_n   alpha_n short
    C_n   alpha_n long
    G_2   alpha_1 short, alpha_2 long
    F_4   alpha_1, alpha_2 short; alpha_3, alpha_4 long

The invariant form is normalized so that short roots have squared length 2;
``root_lengths[i]`` is then ``(alpha_i, alpha_i) / 2`` and
``(lambda_i, alpha_j) = delta_ij * root_lengths[j]``.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property, lru_cache
from math import prod
from typing import Iterable

Root = tuple[int, ...]
Weight = tuple[int, ...]

ADMISSIBLE_RANKS = {
    "A": "n >= 1",
    "B": "n >= 2",
    "C": "n >= 2",
    "D": "n >= 4",
    "E": "n in {6, 7, 8}",
    "F": "n = 4",
    "G": "n = 2",
}


def _rank_ok(family: str, n: int) -> bool:
    if family == "A":
        return n >= 1
    if family in "BC":
        return n >= 2
    if family == "D":
        return n >= 4
    if family == "E":
        return n in (6, 7, 8)
    if family == "F":
        return n == 4
    if family == "G":
        return n == 2
    return False


@dataclass(frozen=True, order=True)
class SimpleType:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in ADMISSIBLE_RANKS:
            raise ValueError(
                f"unknown family {self.family!r}; expected one of A, B, C, D, E, F, G"
            )
        if not isinstance(self.rank, int) or not _rank_ok(self.family, self.rank):
            raise ValueError(
                f"inadmissible rank {self.rank} for type {self.family}: "
                f"admissible range is {ADMISSIBLE_RANKS[self.family]}"
            )

    @classmethod
    def parse(cls, text: str) -> "SimpleType":
        text = text.strip().upper()
        if len(text) < 2 or not text[1:].isdigit():
            raise ValueError(f"cannot parse simple type {text!r} (expected e.g. 'B3')")
        return cls(text[0], int(text[1:]))

    def __str__(self):
        return f"{self.family}{self.rank}"


def _dynkin(t: SimpleType) -> tuple[list[int], list[tuple[int, int]]]:
    """Squared-length scales and (0-based) edges of the Dynkin diagram."""
    n = t.rank
    chain = [(i, i + 1) for i in range(n - 1)]
    f = t.family
    if f == "A":
        return [1] * n, chain
    if f == "B":
        return [2] * (n - 1) + [1], chain
    if f == "C":
        return [1] * (n - 1) + [2], chain
    if f == "D":
        return [1] * n, [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
    if f == "E":
        # 1-3-4-5-...-n with 2 attached to 4
        return [1] * n, [(0, 2), (1, 3)] + [(i, i + 1) for i in range(2, n - 1)]
    if f == "F":
        return [1, 1, 2, 2], chain
    return [1, 3], chain  # G2


def cartan_matrix(t: SimpleType) -> tuple[tuple[int, ...], ...]:
    """``cartan[i][j] = <alpha_j, alpha_i^vee>``; column j is alpha_j in weight coordinates."""
    d, edges = _dynkin(t)
    n = t.rank
    gram = [[0] * n for _ in range(n)]
    for i in range(n):
        gram[i][i] = 2 * d[i]
    for i, j in edges:
        gram[i][j] = gram[j][i] = -max(d[i], d[j])
    return tuple(tuple(gram[i][j] // d[i] for j in range(n)) for i in range(n))


class RootSystem:
    """Complete root system of a simple type; immutable after construction.

    Use :func:`build_root_system` rather than instantiating directly, so that
    instances are shared.
    """

    def __init__(self, simple_type: SimpleType):
        self.simple_type = simple_type
        self.rank = simple_type.rank
        self.cartan = cartan_matrix(simple_type)
        self.root_lengths = tuple(_dynkin(simple_type)[0])
        self.positives = _generate_positive_roots(self.cartan)
        self.roots = self.positives + tuple(neg(r) for r in self.positives)
        self._index = {r: k for k, r in enumerate(self.roots)}

    def __repr__(self):
        return f"RootSystem({self.simple_type})"

    def __eq__(self, other):
        return isinstance(other, RootSystem) and other.simple_type == self.simple_type

    def __hash__(self):
        return hash(("RootSystem", self.simple_type))

    def __contains__(self, r) -> bool:
        return tuple(r) in self._index

    def index(self, r: Root) -> int:
        return self._index[r]

    def simple_root(self, node: int) -> Root:
        self.check_node(node)
        return tuple(int(k == node - 1) for k in range(self.rank))

    def check_node(self, node: int) -> None:
        if not 1 <= node <= self.rank:
            raise ValueError(f"node {node} out of range 1..{self.rank} for {self.simple_type}")

    @property
    def rho(self) -> Weight:
        return (1,) * self.rank

    @cached_property
    def long_sq(self) -> int:
        return max(self.sq_length(r) for r in self.positives)

    @cached_property
    def short_sq(self) -> int:
        return min(self.sq_length(r) for r in self.positives)

    @property
    def simply_laced(self) -> bool:
        return self.long_sq == self.short_sq

    # -- arithmetic -------------------------------------------------------

    def to_weight(self, r: Root) -> Weight:
        """Express a root-lattice vector in fundamental-weight coordinates."""
        return tuple(sum(row[j] * r[j] for j in range(self.rank)) for row in self.cartan)

    def form(self, w: Weight, r: Root) -> int:
        """The invariant form ``(w, r)`` of a weight against a root-lattice vector."""
        return sum(wi * di * ci for wi, di, ci in zip(w, self.root_lengths, r))

    def sq_length(self, r: Root) -> int:
        return self.form(self.to_weight(r), r)

    def is_long(self, r: Root) -> bool:
        return self.sq_length(r) == self.long_sq

    def reflect_root(self, r: Root, node: int) -> Root:
        i = node - 1
        k = sum(self.cartan[i][j] * r[j] for j in range(self.rank))
        return r[:i] + (r[i] - k,) + r[i + 1:]

    def reflect_weight(self, w: Weight, node: int) -> Weight:
        i = node - 1
        wi = w[i]
        return tuple(w[k] - wi * self.cartan[k][i] for k in range(self.rank))

    def dominant_representative(self, w: Weight) -> Weight:
        """Reflect at negative coordinates until the weight is dominant."""
        w = tuple(w)
        while True:
            for k, c in enumerate(w):
                if c < 0:
                    w = self.reflect_weight(w, k + 1)
                    break
            else:
                return w

    def height(self, r: Root) -> int:
        return sum(r)


def neg(v: Iterable[int]) -> tuple[int, ...]:
    return tuple(-c for c in v)


def add(a: Iterable[int], b: Iterable[int]) -> tuple[int, ...]:
    return tuple(x + y for x, y in zip(a, b))


def sub(a: Iterable[int], b: Iterable[int]) -> tuple[int, ...]:
    return tuple(x - y for x, y in zip(a, b))


def scale(k: int, a: Iterable[int]) -> tuple[int, ...]:
    return tuple(k * x for x in a)


def _generate_positive_roots(cartan) -> tuple[Root, ...]:
    # Height-ascending closure via alpha-strings: beta + alpha_i is a root iff
    # q - <beta, alpha_i^vee> > 0, q being how far beta - k alpha_i stays a root.
    n = len(cartan)
    simple = [tuple(int(k == i) for k in range(n)) for i in range(n)]
    found = set(simple)
    level = list(simple)
    while level:
        nxt = set()
        for beta in level:
            for i in range(n):
                if beta == simple[i]:
                    continue
                q = 0
                lower = beta
                while True:
                    lower = lower[:i] + (lower[i] - 1,) + lower[i + 1:]
                    if lower in found:
                        q += 1
                    else:
                        break
                p = q - sum(cartan[i][j] * beta[j] for j in range(n))
                if p > 0:
                    nxt.add(beta[:i] + (beta[i] + 1,) + beta[i + 1:])
        found |= nxt
        level = sorted(nxt)
    return tuple(sorted(found, key=lambda r: (sum(r), neg(r))))


@lru_cache(maxsize=None)
def build_root_system(t: SimpleType | str) -> RootSystem:
    if isinstance(t, str):
        t = SimpleType.parse(t)
    return RootSystem(t)


def _check_weight(rs: RootSystem, w) -> Weight:
    w = tuple(w)
    if len(w) != rs.rank:
        raise ValueError(f"weight {w} has length {len(w)}, expected rank {rs.rank}")
    return w


def pair(rs: RootSystem, w: Weight, r: Root) -> tuple[int, int]:
    """Return ``(<w, r^vee>, (w, r))`` for a weight and a root.

    The two agree in sign; the first is the second divided by the
    squared-length scale of ``r``.
    """
    w = _check_weight(rs, w)
    r = tuple(r)
    if len(r) != rs.rank:
        raise ValueError(f"root {r} has length {len(r)}, expected rank {rs.rank}")
    if r not in rs:
        raise ValueError(f"{r} is not a root of {rs.simple_type}")
    value = rs.form(w, r)
    d_r = rs.sq_length(r) // 2
    coroot, rem = divmod(value, d_r)
    assert rem == 0
    return coroot, value


def dominant_root(rs: RootSystem, cls: str) -> Root:
    if cls not in ("long", "short"):
        raise ValueError(f"length class must be 'long' or 'short', got {cls!r}")
    if cls == "short" and rs.simply_laced:
        raise ValueError(f"{rs.simple_type} has a single root length; no short dominant root")
    target = rs.long_sq if cls == "long" else rs.short_sq
    found = [
        r for r in rs.positives
        if rs.sq_length(r) == target and all(c >= 0 for c in rs.to_weight(r))
    ]
    assert len(found) == 1, found
    return found[0]


def weyl_orbit(rs: RootSystem, r: Root) -> frozenset[Root]:
    r = tuple(r)
    if r not in rs:
        raise ValueError(f"{r} is not a root of {rs.simple_type}")
    seen = {r}
    queue = deque([r])
    while queue:
        x = queue.popleft()
        for node in range(1, rs.rank + 1):
            y = rs.reflect_root(x, node)
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return frozenset(seen)


def _check_dominant(rs: RootSystem, hw) -> Weight:
    hw = _check_weight(rs, hw)
    if any(c < 0 for c in hw):
        raise ValueError(f"highest weight {hw} is not dominant")
    return hw


def weyl_dim(rs: RootSystem, hw: Weight) -> int:
    """Dimension of the irreducible module with highest weight ``hw``."""
    hw = _check_dominant(rs, hw)
    shifted = add(hw, rs.rho)
    num = prod(rs.form(shifted, a) for a in rs.positives)
    den = prod(rs.form(rs.rho, a) for a in rs.positives)
    q, rem = divmod(num, den)
    assert rem == 0
    return q


@lru_cache(maxsize=256)
def weight_system(rs: RootSystem, hw: Weight) -> dict[Weight, int]:
    """All weights of the irreducible module ``V(hw)`` with multiplicities.

    Weights are generated by unbroken alpha-strings and multiplicities by
    Freudenthal's recursion, ordered by depth below ``hw``. Every weight is
    stored as ``hw - beta`` with ``beta`` in the positive root cone, which
    keeps the norm differences integral.
    """
    hw = _check_dominant(rs, hw)
    n = rs.rank
    depth: dict[Weight, Root] = {hw: (0,) * n}
    levels: list[list[Weight]] = [[hw]]
    h = 0
    while h < len(levels):
        for mu in levels[h]:
            beta = depth[mu]
            for i in range(n):
                col = [rs.cartan[k][i] for k in range(n)]
                p = 0
                up = mu
                while True:
                    up = tuple(up[k] + col[k] for k in range(n))
                    if up in depth:
                        p += 1
                    else:
                        break
                down = mu
                for k in range(1, p + mu[i] + 1):
                    down = tuple(down[j] - col[j] for j in range(n))
                    if down not in depth:
                        depth[down] = beta[:i] + (beta[i] + k,) + beta[i + 1:]
                        hk = h + k
                        while len(levels) <= hk:
                            levels.append([])
                        levels[hk].append(down)
        h += 1

    lam_rho2 = add(add(hw, rs.rho), rs.rho)
    pos_as_weights = [(a, rs.to_weight(a)) for a in rs.positives]
    mult: dict[Weight, int] = {hw: 1}
    for level in levels[1:]:
        for mu in level:
            num = 0
            for a, aw in pos_as_weights:
                nu = add(mu, aw)
                while nu in mult:
                    num += mult[nu] * rs.form(nu, a)
                    nu = add(nu, aw)
            den = rs.form(add(lam_rho2, mu), depth[mu])
            m, rem = divmod(2 * num, den)
            assert rem == 0 and m > 0, (mu, num, den)
            mult[mu] = m
    return mult


def weight_multiplicity(rs: RootSystem, hw: Weight, mu: Weight) -> int:
    return weight_system(rs, tuple(hw)).get(_check_weight(rs, mu), 0)
