"""Isomorph-free generation of connected d-regular graphs by canonical augmentation.

Objects are connected graphs of maximum degree ``d`` that are either trees
on ``t <= n`` vertices or have exactly ``n`` vertices.  The canonical parent
of an object removes one element chosen up to automorphism:

* a graph with a cycle loses a canonical non-bridge edge;
* a tree loses a canonical leaf.

So every connected d-regular graph on ``n`` vertices descends from the
one-vertex tree along a unique chain of canonical parents.  Children of a
parent are produced once per orbit of ``Aut(parent)`` on augmentation sites,
and a child is kept only if the added element lies in the orbit of its own
canonical deletion.  Together these give exactly one graph per
isomorphism class.
"""

from __future__ import annotations

from typing import Iterator

from .canon import _refine, automorphism_group, canonical_key, default_colors
from .graph import Graph, iter_bits


class EnumerationBudgetExceeded(RuntimeError):
    """Generation stopped early; graphs already yielded are a partial stream."""

    def __init__(self, message: str, emitted: int):
        super().__init__(message)
        self.emitted = emitted


def _root_ranks(g: Graph) -> list[int]:
    ranks, _ = _refine([g.neighbors(v) for v in range(g.n)], default_colors(g))
    return ranks


def _bridges(g: Graph) -> set[tuple[int, int]]:
    out = set()
    disc, low = [-1] * g.n, [0] * g.n
    timer = 0

    def dfs(v: int, parent: int):
        nonlocal timer
        disc[v] = low[v] = timer
        timer += 1
        for u in iter_bits(g.adj[v]):
            if disc[u] < 0:
                dfs(u, v)
                low[v] = min(low[v], low[u])
                if low[u] > disc[v]:
                    out.add((min(u, v), max(u, v)))
            elif u != parent:
                low[v] = min(low[v], disc[u])

    for v in range(g.n):
        if disc[v] < 0:
            dfs(v, -1)
    return out


def _orbit_reps(items: list, act, gens) -> list:
    """One representative (the first in ``items`` order) per orbit of ``gens``."""
    index = {x: i for i, x in enumerate(items)}
    seen = [False] * len(items)
    reps = []
    for i, x in enumerate(items):
        if seen[i]:
            continue
        reps.append(x)
        seen[i] = True
        stack = [x]
        while stack:
            y = stack.pop()
            for a in gens:
                z = act(a, y)
                j = index[z]
                if not seen[j]:
                    seen[j] = True
                    stack.append(z)
    return reps


def _accept(child: Graph, added, candidates: list, marks) -> bool:
    """Is ``added`` in the orbit of the canonical deletion among ``candidates``?"""
    if added not in candidates:
        return False
    if len(candidates) == 1:
        return True
    keys = {c: canonical_key(child, marks(c)) for c in candidates}
    return keys[added] == min(keys.values())


def _edge_marks(n: int):
    def marks(e):
        return [1 if v in e else 0 for v in range(n)]

    return marks


def _leaf_marks(n: int):
    def marks(x):
        return [1 if v == x else 0 for v in range(n)]

    return marks


def _tree_child_ok(child: Graph, new_leaf: int) -> bool:
    ranks = _root_ranks(child)
    leaves = [v for v in range(child.n) if child.degree(v) <= 1]
    top = max(ranks[v] for v in leaves)
    cands = [v for v in leaves if ranks[v] == top]
    return _accept(child, new_leaf, cands, _leaf_marks(child.n))


def _edge_child_ok(child: Graph, new_edge: tuple[int, int]) -> bool:
    ranks = _root_ranks(child)
    bridges = _bridges(child)
    scored = {}
    for u, v in child.edges():
        if (u, v) not in bridges:
            scored[(u, v)] = tuple(sorted((ranks[u], ranks[v]), reverse=True))
    top = max(scored.values())
    cands = [e for e, s in scored.items() if s == top]
    return _accept(child, new_edge, cands, _edge_marks(child.n))


def enumerate_regular(d: int, n: int, budget: int | None = None) -> Iterator[Graph]:
    """Yield one representative per isomorphism class of connected d-regular graphs on n vertices.

    ``budget`` caps the number of search nodes; when exceeded,
    :class:`EnumerationBudgetExceeded` is raised after the graphs found so far
    have been yielded.
    """
    if d < 0 or n < 1:
        raise ValueError(f"need d >= 0 and n >= 1, got d={d}, n={n}")
    if d * n % 2 or d >= n and not (d == 0 and n == 1):
        return
    target_edges = d * n // 2
    emitted = 0
    visited = 0
    stack: list[Graph] = [Graph(1, [0])]
    while stack:
        g = stack.pop()
        visited += 1
        if budget is not None and visited > budget:
            raise EnumerationBudgetExceeded(f"enumeration budget of {budget} nodes exceeded", emitted)
        m = g.num_edges()
        if g.n == n and m == target_edges:
            if all(x == d for x in g.degrees()):
                emitted += 1
                yield g
            continue
        children = []
        gens = automorphism_group(g).generators
        if g.n < n and m == g.n - 1:
            sites = [v for v in range(g.n) if g.degree(v) < d]
            for u in _orbit_reps(sites, lambda a, x: a[x], gens):
                rows = list(g.adj) + [1 << u]
                rows[u] |= 1 << g.n
                child = Graph(g.n + 1, rows)
                if _tree_child_ok(child, g.n):
                    children.append(child)
        if g.n == n:
            low = [v for v in range(n) if g.degree(v) < d]
            sites = [(u, v) for i, u in enumerate(low) for v in low[i + 1 :] if not g.has_edge(u, v)]

            def act(a, e):
                x, y = a[e[0]], a[e[1]]
                return (x, y) if x < y else (y, x)

            for e in _orbit_reps(sites, act, gens):
                child = g.with_edges(add=[e])
                if _edge_child_ok(child, e):
                    children.append(child)
        stack.extend(reversed(children))


def count_regular(d: int, n: int) -> int:
    return sum(1 for _ in enumerate_regular(d, n))
