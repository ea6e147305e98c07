"""Independent reference computations used by the tests.

Nothing here imports holflag: root systems are rebuilt from hand-written Gram
matrices by reflection closure, and certificates are re-checked against that
independent root set.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import comb


def gram_matrix(family: str, n: int) -> list[list[int]]:
    """Invariant form on simple roots, short roots of squared length 2."""
    g = [[0] * n for _ in range(n)]

    def bond(i, j, v):
        g[i - 1][j - 1] = g[j - 1][i - 1] = v

    if family in "ADE":
        for i in range(1, n + 1):
            g[i - 1][i - 1] = 2
        if family == "A":
            for i in range(1, n):
                bond(i, i + 1, -1)
        elif family == "D":
            for i in range(1, n - 1):
                bond(i, i + 1, -1)
            bond(n - 2, n, -1)
        else:
            bond(1, 3, -1)
            bond(2, 4, -1)
            for i in range(3, n):
                bond(i, i + 1, -1)
    elif family == "B":
        for i in range(1, n):
            g[i - 1][i - 1] = 4
        g[n - 1][n - 1] = 2
        for i in range(1, n):
            bond(i, i + 1, -2)
    elif family == "C":
        for i in range(1, n):
            g[i - 1][i - 1] = 2
        g[n - 1][n - 1] = 4
        for i in range(1, n - 1):
            bond(i, i + 1, -1)
        bond(n - 1, n, -2)
    elif family == "F":
        g = [[2, -1, 0, 0], [-1, 2, -2, 0], [0, -2, 4, -2], [0, 0, -2, 4]]
    elif family == "G":
        g = [[2, -3], [-3, 6]]
    return g


def ip(g, x, y):
    n = len(g)
    return sum(x[i] * g[i][j] * y[j] for i in range(n) for j in range(n))


def reflect(g, x, i):
    n = len(g)
    e = [int(k == i) for k in range(n)]
    c = Fraction(2 * ip(g, x, e), g[i][i])
    assert c.denominator == 1
    return tuple(x[k] - int(c) * e[k] for k in range(n))


def closure_roots(family: str, n: int) -> set[tuple[int, ...]]:
    """All roots as the Weyl-reflection closure of the simple roots."""
    g = gram_matrix(family, n)
    todo = [tuple(int(k == i) for k in range(n)) for i in range(n)]
    seen = set(todo)
    while todo:
        x = todo.pop()
        for i in range(n):
            y = reflect(g, x, i)
            if y not in seen:
                seen.add(y)
                todo.append(y)
    return seen


CLASSICAL_ROOT_COUNT = {
    "A": lambda n: n * (n + 1),
    "B": lambda n: 2 * n * n,
    "C": lambda n: 2 * n * n,
    "D": lambda n: 2 * n * (n - 1),
    "E": lambda n: {6: 72, 7: 126, 8: 240}[n],
    "F": lambda n: 48,
    "G": lambda n: 12,
}


def validate_certificate(family, n, nodes, betas, endpoint) -> list[str]:
    """Re-check a killing-chain certificate from scratch; returns the failures."""
    g = gram_matrix(family, n)
    roots = closure_roots(family, n)
    positives = {r for r in roots if all(c >= 0 for c in r)}
    lengths = {ip(g, r, r) for r in roots}
    short, long_ = min(lengths), max(lengths)
    problems = []
    if short == long_:
        problems.append("single root length")
    # dominant short root: positive pairing with no simple coroot is negative
    dominant_short = [
        r for r in positives
        if ip(g, r, r) == short
        and all(ip(g, r, tuple(int(k == i) for k in range(n))) >= 0 for i in range(n))
    ]
    if len(dominant_short) != 1:
        problems.append(f"dominant short root not unique: {dominant_short}")
        return problems
    cur = dominant_short[0]
    for k, b in enumerate(betas):
        b = tuple(b)
        if b not in positives:
            problems.append(f"beta {k} = {b} is not a positive root")
        cur = tuple(x - y for x, y in zip(cur, b))
        if cur not in roots:
            problems.append(f"partial difference {k} = {cur} is not a root")
    if cur != tuple(endpoint):
        problems.append(f"endpoint {endpoint} differs from the final difference {cur}")
    if ip(g, cur, cur) != long_:
        problems.append(f"endpoint {cur} is not long")
    if not any(cur[j - 1] > 0 for j in nodes):
        problems.append(f"endpoint {cur} is not in the nilradical for nodes {sorted(nodes)}")
    return problems


def all_node_sets(n):
    for k in range(1, n + 1):
        for c in combinations(range(1, n + 1), k):
            yield frozenset(c)


def symmetric_power_dim(m: int, a: int) -> int:
    """dim Sym^a(C^m)."""
    return comb(m + a - 1, a)
