"""Partition refinement and individualization search.

Two searches share the same tree:

* :func:`canonical_form` walks the tree (pruned by node invariants and by
  automorphisms already found) and keeps the leaf with the least
  ``(path invariants, relabeled adjacency)`` key.
* :func:`automorphism_group_order` fixes the first leaf and, level by level
  from the bottom, finds the orbit of the first-path vertex inside the
  pointwise stabiliser of the path prefix.  The group order is the product
  of those orbit sizes.

Vertex colourings passed in are arbitrary hashable values; refinement turns
them into ordered cells.  Refinement is order preserving, so cells of a
finer partition stay inside the position range of the cell they split.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Sequence

from .graph import Graph, iter_bits, layer_sizes

DEFAULT_BUDGET = 2_000_000


class SearchBudgetExceeded(RuntimeError):
    """The search tree grew past the node budget.

    ``partial_order`` is a lower bound on the automorphism group order when
    raised from :func:`automorphism_group_order`.
    """

    def __init__(self, message: str, partial_order: int | None = None):
        super().__init__(message)
        self.partial_order = partial_order


def _refine(nbrs: list[list[int]], colors: list) -> tuple[list[int], tuple]:
    """Equitable refinement.  Returns ranks and an isomorphism-invariant node key."""
    n = len(nbrs)
    keys = sorted(set(colors))
    rank = {c: i for i, c in enumerate(keys)}
    cur = [rank[c] for c in colors]
    ncells = len(keys)
    trace = []
    while ncells < n:
        sig = [(cur[v], tuple(sorted([cur[u] for u in nbrs[v]]))) for v in range(n)]
        skeys = sorted(set(sig))
        trace.append(len(skeys))
        if len(skeys) == ncells:
            trace.append(tuple(skeys))
            break
        rank2 = {s: i for i, s in enumerate(skeys)}
        cur = [rank2[s] for s in sig]
        ncells = len(skeys)
    return cur, tuple(trace)


def _cells(colors: list[int]) -> list[list[int]]:
    out: list[list[int]] = [[] for _ in range(max(colors) + 1)] if colors else []
    for v, c in enumerate(colors):
        out[c].append(v)
    return out


def _target_cell(colors: list[int]) -> list[int] | None:
    best = None
    for cell in _cells(colors):
        if len(cell) > 1 and (best is None or len(cell) < len(best)):
            best = cell
    return best


def _individualize(colors: list[int], v: int) -> list[tuple[int, int]]:
    c = colors[v]
    return [(x, 0 if u == v or x != c else 1) for u, x in enumerate(colors)]


def _leaf_cert(adj: tuple[int, ...], lab: list[int]) -> tuple[int, ...]:
    n = len(adj)
    rows = [0] * n
    for v in range(n):
        r = 0
        for u in iter_bits(adj[v]):
            r |= 1 << lab[u]
        rows[lab[v]] = r
    return tuple(rows[j] & ((1 << j) - 1) for j in range(n))


def default_colors(g: Graph, colors: Sequence[Hashable] | None = None) -> list:
    """Initial colouring: user colour, then degree, then BFS layer-size profile."""
    base = [None] * g.n if colors is None else list(colors)
    return [(repr(base[v]), g.degree(v), tuple(layer_sizes(g, v))) for v in range(g.n)]


class _Tree:
    def __init__(self, g: Graph, colors: Sequence[Hashable] | None, budget: int):
        self.g = g
        self.n = g.n
        self.nbrs = [g.neighbors(v) for v in range(g.n)]
        self.init_colors = default_colors(g, colors)
        self.budget = budget
        self.nodes = 0

    def tick(self):
        self.nodes += 1
        if self.nodes > self.budget:
            raise SearchBudgetExceeded(f"search exceeded {self.budget} nodes")

    def root(self):
        return _refine(self.nbrs, self.init_colors)

    def child(self, colors: list[int], v: int):
        return _refine(self.nbrs, _individualize(colors, v))


@dataclass(frozen=True)
class CanonicalResult:
    labeling: tuple[int, ...]  # vertex -> canonical label
    key: tuple
    automorphisms: tuple[tuple[int, ...], ...]

    def graph(self, g: Graph) -> Graph:
        return g.relabel(list(self.labeling))


def canonical_form(g: Graph, colors: Sequence[Hashable] | None = None, budget: int = DEFAULT_BUDGET) -> CanonicalResult:
    """Canonical labeling of ``g`` (respecting an optional vertex colouring).

    Two coloured graphs are isomorphic iff their ``key`` values are equal, and
    then relabeling each by its ``labeling`` gives identical graphs.
    """
    tree = _Tree(g, colors, budget)
    color_census = tuple(sorted((c, tree.init_colors.count(c)) for c in set(tree.init_colors)))
    if g.n == 0:
        return CanonicalResult((), (color_census, (), ()), ())

    best: dict = {"invs": None, "cert": None, "lab": None}
    autos: list[list[int]] = []

    def explore(colors: list[int], inv: tuple, invs: tuple, prefix: tuple[int, ...]):
        tree.tick()
        invs = invs + (inv,)
        if best["invs"] is not None:
            ref = best["invs"][: len(invs)]
            if invs > ref:
                return
            if invs < ref:
                best["invs"] = None
        cell = _target_cell(colors)
        if cell is None:
            cert = _leaf_cert(g.adj, colors)
            if best["invs"] is None or (invs, cert) < (best["invs"], best["cert"]):
                best.update(invs=invs, cert=cert, lab=colors)
            elif (invs, cert) == (best["invs"], best["cert"]):
                inv_best = [0] * tree.n
                for v, x in enumerate(best["lab"]):
                    inv_best[x] = v
                gamma = [inv_best[x] for x in colors]
                if any(gamma[v] != v for v in range(tree.n)):
                    autos.append(gamma)
            return
        explored: list[int] = []
        for w in cell:
            if explored and _same_orbit(w, explored, autos, prefix):
                continue
            explored.append(w)
            c2, inv2 = tree.child(colors, w)
            explore(c2, inv2, invs, prefix + (w,))

    c0, inv0 = tree.root()
    explore(c0, inv0, (), ())
    key = (color_census, best["invs"], best["cert"])
    return CanonicalResult(tuple(best["lab"]), key, tuple(tuple(a) for a in autos))


def _same_orbit(w: int, explored: list[int], autos: list[list[int]], prefix: tuple[int, ...]) -> bool:
    gens = [a for a in autos if all(a[p] == p for p in prefix)]
    if not gens:
        return False
    seen = {w}
    stack = [w]
    targets = set(explored)
    while stack:
        x = stack.pop()
        if x in targets:
            return True
        for a in gens:
            y = a[x]
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return False


def canonical_key(g: Graph, colors: Sequence[Hashable] | None = None) -> tuple:
    return canonical_form(g, colors).key


def canonical_graph(g: Graph) -> Graph:
    res = canonical_form(g)
    return res.graph(g)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.num_edges() != h.num_edges():
        return False
    return canonical_key(g) == canonical_key(h)


@dataclass(frozen=True)
class AutomorphismGroup:
    order: int
    generators: tuple[tuple[int, ...], ...]
    orbit_sizes: tuple[int, ...]  # per level of the first path; their product is the order


def automorphism_group(g: Graph, colors: Sequence[Hashable] | None = None, budget: int = DEFAULT_BUDGET) -> AutomorphismGroup:
    """Exact automorphism group order with a generating set."""
    tree = _Tree(g, colors, budget)
    if g.n <= 1:
        return AutomorphismGroup(1, (), ())
    try:
        return _search_group(g, tree)
    except SearchBudgetExceeded as exc:
        if exc.partial_order is None:
            exc.partial_order = 1
        raise


def _search_group(g: Graph, tree: "_Tree") -> AutomorphismGroup:
    # first path
    path = []  # (colors, target cell) per internal level
    invs = []
    colors, inv = tree.root()
    invs.append(inv)
    while True:
        tree.tick()
        cell = _target_cell(colors)
        if cell is None:
            break
        path.append((colors, cell))
        colors, inv = tree.child(colors, cell[0])
        invs.append(inv)
    zeta = colors
    zeta_cert = _leaf_cert(g.adj, zeta)

    def find_equivalent(colors: list[int], inv: tuple, depth: int) -> list[int] | None:
        tree.tick()
        if depth >= len(invs) or inv != invs[depth]:
            return None
        cell = _target_cell(colors)
        if cell is None:
            if _leaf_cert(g.adj, colors) != zeta_cert:
                return None
            return colors
        for w in cell:
            c2, inv2 = tree.child(colors, w)
            found = find_equivalent(c2, inv2, depth + 1)
            if found is not None:
                return found
        return None

    gens: list[list[int]] = []
    order = 1
    sizes = []
    try:
        for level in range(len(path) - 1, -1, -1):
            colors, cell = path[level]
            first = cell[0]
            orbit = _orbit(first, gens)
            for w in cell[1:]:
                if w in orbit:
                    continue
                c2, inv2 = tree.child(colors, w)
                lam = find_equivalent(c2, inv2, level + 1)
                if lam is not None:
                    lam_inv = [0] * tree.n
                    for v, x in enumerate(lam):
                        lam_inv[x] = v
                    # carries the first path onto the one through w
                    gens.append([lam_inv[zeta[v]] for v in range(tree.n)])
                    orbit = _orbit(first, gens)
            sizes.append(len(orbit))
            order *= len(orbit)
    except SearchBudgetExceeded as exc:
        raise SearchBudgetExceeded(str(exc), partial_order=order) from None
    return AutomorphismGroup(order, tuple(tuple(a) for a in gens), tuple(reversed(sizes)))


def _orbit(v: int, gens: list[list[int]]) -> set[int]:
    seen = {v}
    stack = [v]
    while stack:
        x = stack.pop()
        for a in gens:
            y = a[x]
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return seen


def automorphism_group_order(g: Graph, colors: Sequence[Hashable] | None = None, budget: int = DEFAULT_BUDGET) -> int:
    return automorphism_group(g, colors, budget).order


def is_automorphism(g: Graph, perm: Sequence[int]) -> bool:
    if sorted(perm) != list(range(g.n)):
        return False
    for v in range(g.n):
        row = 0
        for u in iter_bits(g.adj[v]):
            row |= 1 << perm[u]
        if g.adj[perm[v]] != row:
            return False
    return True
