"""Registry of real forms of the simple complex Lie algebras.

Inner forms are described by a Vogan painting: a set of painted (noncompact)
simple nodes. With respect to the standard positive system a root is compact
exactly when its coefficients on the painted nodes add up to an even number.

Accepted names::

    so(p,q)  so(n)  sp(n,R)  sp(p,q)  sp(n)  su(p,q)  su(n)  sl(n,R)
    g2-split  g2-compact  compact(<type><rank>)

Names are normalized (``so`` puts the even argument first, ``su``/``sp``
order the signature ascending) and the normalized spelling is stored on the
returned :class:`RealForm`.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from .parabolic import Parabolic
from .rootsys import Root, RootSystem, SimpleType, build_root_system, dominant_root

GRAMMAR = (
    'so(p,q) | so(n) | sp(n,R) | sp(p,q) | sp(n) | su(p,q) | su(n) | sl(n,R) | '
    'g2-split | g2-compact | compact(<type><rank>)'
)


class Measurability(str, Enum):
    COMPACT_CARTAN = "guaranteed_compact_cartan"
    FULL_FLAG = "guaranteed_full_flag"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class RealForm:
    name: str
    complex_type: SimpleType
    painted: frozenset[int]
    is_compact: bool
    is_hermitian: bool
    hermitian_node: int | None
    has_compact_cartan: bool
    inner: bool
    # family tag and signature, used by the exceptional-case registry
    series: str = ""
    params: tuple[int, ...] = ()

    def __str__(self):
        return self.name


def _inner(name, t, painted, *, series, params=(), hermitian_node=None):
    return RealForm(
        name=name,
        complex_type=t,
        painted=frozenset(painted),
        is_compact=not painted,
        is_hermitian=hermitian_node is not None,
        hermitian_node=hermitian_node,
        has_compact_cartan=True,
        inner=True,
        series=series,
        params=params,
    )


def _compact(name, t):
    return _inner(name, t, (), series="compact")


def _reject(name, why=""):
    msg = f"unknown or invalid real form {name!r}"
    if why:
        msg += f" ({why})"
    raise ValueError(f"{msg}; grammar: {GRAMMAR}")


_CALL = re.compile(r"^([a-z0-9]+)\((.*)\)$")


def _ints(args, name):
    try:
        return [int(a) for a in args]
    except ValueError:
        _reject(name, "arguments must be integers")


def _so(p, q, name):
    if p < 0 or q < 0:
        _reject(name, "negative signature")
    n_total = p + q
    if min(p, q) == 0:
        return _so_compact(n_total, name)
    if n_total % 2:
        even, odd = (p, q) if p % 2 == 0 else (q, p)
        a, n = even // 2, (n_total - 1) // 2
        t = _type("B", n, name)
        return _inner(
            f"so({even},{odd})", t, {a}, series="so", params=(even, odd),
            hermitian_node=1 if even == 2 else None,
        )
    p, q = sorted((p, q))
    n = n_total // 2
    t = _type("D", n, name)
    if p % 2:
        # so(odd, odd): outer form, no compact Cartan subgroup
        return RealForm(
            name=f"so({p},{q})", complex_type=t, painted=frozenset(), is_compact=False,
            is_hermitian=False, hermitian_node=None, has_compact_cartan=False,
            inner=False, series="so", params=(p, q),
        )
    return _inner(
        f"so({p},{q})", t, {p // 2}, series="so", params=(p, q),
        hermitian_node=1 if p == 2 else None,
    )


def _so_compact(n_total, name):
    if n_total % 2:
        t = _type("B", (n_total - 1) // 2, name)
    else:
        t = _type("D", n_total // 2, name)
    return _compact(f"so({n_total})", t)


def _type(family, rank, name):
    try:
        return SimpleType(family, rank)
    except ValueError as exc:
        _reject(name, str(exc))


@lru_cache(maxsize=None)
def lookup_real_form(name: str) -> RealForm:
    raw = name
    s = re.sub(r"\s+", "", name)
    low = s.lower()
    if low == "g2-split":
        return _inner("g2-split", SimpleType("G", 2), {1}, series="g2_split")
    if low == "g2-compact":
        return _compact("g2-compact", SimpleType("G", 2))
    m = _CALL.match(low)
    if not m:
        _reject(raw)
    head, args = m.group(1), [a for a in m.group(2).split(",")]
    if head == "compact":
        if len(args) != 1:
            _reject(raw)
        try:
            t = SimpleType.parse(args[0])
        except ValueError as exc:
            _reject(raw, str(exc))
        return _compact(f"compact({t})", t)

    real = len(args) == 2 and args[1] == "r"
    if real:
        (n,) = _ints(args[:1], raw)
        if head == "sp":
            if n == 1:
                return _inner("sp(1,R)", SimpleType("A", 1), {1}, series="sp_R",
                              params=(1,), hermitian_node=1)
            t = _type("C", n, raw)
            return _inner(f"sp({n},R)", t, {n}, series="sp_R", params=(n,), hermitian_node=n)
        if head == "sl":
            t = _type("A", n - 1, raw)
            if n == 2:
                return _inner("sl(2,R)", t, {1}, series="sl_R", params=(2,), hermitian_node=1)
            return RealForm(
                name=f"sl({n},R)", complex_type=t, painted=frozenset(), is_compact=False,
                is_hermitian=False, hermitian_node=None, has_compact_cartan=False,
                inner=False, series="sl_R", params=(n,),
            )
        _reject(raw)

    nums = _ints(args, raw)
    if len(nums) == 1:
        (n,) = nums
        if head == "so":
            return _so_compact(n, raw)
        if head == "su":
            return _compact(f"su({n})", _type("A", n - 1, raw))
        if head == "sp":
            if n == 1:
                return _compact("sp(1)", SimpleType("A", 1))
            return _compact(f"sp({n})", _type("C", n, raw))
        _reject(raw)
    if len(nums) != 2:
        _reject(raw)
    p, q = nums
    if head == "so":
        return _so(p, q, raw)
    if p < 0 or q < 0:
        _reject(raw, "negative signature")
    p, q = sorted((p, q))
    if head == "su":
        if p == 0:
            return _compact(f"su({q})", _type("A", q - 1, raw))
        t = _type("A", p + q - 1, raw)
        return _inner(f"su({p},{q})", t, {p}, series="su", params=(p, q), hermitian_node=p)
    if head == "sp":
        if p == 0:
            return lookup_real_form(f"sp({q})")
        if p + q == 1:
            _reject(raw)
        t = _type("C", p + q, raw)
        return _inner(f"sp({p},{q})", t, {p}, series="sp_pq", params=(p, q))
    _reject(raw)


def _require_match(rf: RealForm, rs: RootSystem) -> None:
    if rf.complex_type != rs.simple_type:
        raise ValueError(
            f"real form {rf.name} has complex type {rf.complex_type}, "
            f"not {rs.simple_type}"
        )


def measurability_status(rf: RealForm, p: Parabolic) -> Measurability:
    _require_match(rf, p.rs)
    if rf.has_compact_cartan:
        return Measurability.COMPACT_CARTAN
    if p.is_borel:
        return Measurability.FULL_FLAG
    return Measurability.UNKNOWN


def pplus_roots(rf: RealForm, rs: RootSystem) -> frozenset[Root]:
    """Roots of the holomorphic tangent space of the bounded symmetric domain."""
    _require_match(rf, rs)
    if not rf.is_hermitian:
        raise ValueError(f"{rf.name} is not of hermitian type")
    h = rf.hermitian_node - 1
    return frozenset(r for r in rs.positives if r[h] == 1)


def compact_roots(rf: RealForm, rs: RootSystem) -> frozenset[Root]:
    _require_match(rf, rs)
    if not rf.inner:
        raise ValueError(
            f"{rf.name} is an outer form; painting semantics unavailable for compact roots"
        )
    idx = [k - 1 for k in rf.painted]
    return frozenset(r for r in rs.roots if sum(r[k] for k in idx) % 2 == 0)


def is_cominuscule(rs: RootSystem, node: int) -> bool:
    return dominant_root(rs, "long")[node - 1] == 1


def check_real_form(rf: RealForm) -> None:
    """Assert the structural invariants of a registry entry."""
    rs = build_root_system(rf.complex_type)
    if rf.is_compact:
        assert not rf.painted and rf.has_compact_cartan
    if rf.is_hermitian:
        assert is_cominuscule(rs, rf.hermitian_node)
    if rf.inner:
        assert rf.has_compact_cartan
