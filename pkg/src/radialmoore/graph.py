"""Immutable simple graphs backed by per-vertex bitsets.

Vertices are the integers ``0..n-1``; ``adj[v]`` is a Python ``int`` whose
bit ``u`` is set when ``u`` and ``v`` are adjacent.  Everything that depends
on distances assumes a connected graph and raises
:class:`DisconnectedGraphError` otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .bounds import moore_bound


class DisconnectedGraphError(ValueError):
    """Raised when a distance-based quantity is requested on a disconnected graph."""


class NotRadialMooreError(ValueError):
    pass


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Simple undirected graph on ``n`` vertices; immutable after construction."""

    __slots__ = ("n", "adj", "_hash")

    def __init__(self, n: int, adj: Iterable[int]):
        adj = tuple(adj)
        if n < 0 or len(adj) != n:
            raise ValueError(f"expected {n} adjacency rows, got {len(adj)}")
        full = (1 << n) - 1
        for v, row in enumerate(adj):
            if row & ~full:
                raise ValueError(f"vertex {v} has a neighbor outside [0, {n})")
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            for u in iter_bits(row):
                if not adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")
        self.n = n
        self.adj = adj
        self._hash = None

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows)

    # -- basic queries -------------------------------------------------

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [self.degree(v) for v in range(self.n)]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, sorted."""
        out = []
        for u in range(self.n):
            for v in iter_bits(self.adj[u] >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def num_edges(self) -> int:
        return sum(self.degrees()) // 2

    def regular_degree(self) -> int | None:
        """The common degree if the graph is regular, else ``None``."""
        degs = set(self.degrees())
        return degs.pop() if len(degs) == 1 else None

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return sum(m.bit_count() for m in layer_masks(self, 0)) == self.n

    # -- derived graphs ------------------------------------------------

    def relabel(self, perm: list[int]) -> "Graph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        rows = [0] * self.n
        for v in range(self.n):
            row = 0
            for u in iter_bits(self.adj[v]):
                row |= 1 << perm[u]
            rows[perm[v]] = row
        return Graph(self.n, rows)

    def with_edges(self, remove: Iterable[tuple[int, int]] = (), add: Iterable[tuple[int, int]] = ()) -> "Graph":
        rows = list(self.adj)
        for u, v in remove:
            if not rows[u] >> v & 1:
                raise ValueError(f"edge ({u}, {v}) not present")
            rows[u] &= ~(1 << v)
            rows[v] &= ~(1 << u)
        for u, v in add:
            if u == v or rows[u] >> v & 1:
                raise ValueError(f"cannot add edge ({u}, {v})")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return Graph(self.n, rows)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.adj))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges()})"


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, [full & ~(1 << v) for v in range(n)])


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


# -- distances ----------------------------------------------------------


@dataclass(frozen=True)
class DistanceLayers:
    root: int
    layers: tuple[frozenset[int], ...]

    @property
    def eccentricity(self) -> int:
        return len(self.layers) - 1

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(layer) for layer in self.layers)

    def status(self) -> int:
        return sum(i * len(layer) for i, layer in enumerate(self.layers))


def layer_masks(g: Graph, v: int) -> list[int]:
    """BFS layers from ``v`` as bitmasks.  Unreachable vertices are absent."""
    adj = g.adj
    seen = frontier = 1 << v
    out = [frontier]
    while True:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= adj[low.bit_length() - 1]
            f ^= low
        nxt &= ~seen
        if not nxt:
            return out
        seen |= nxt
        out.append(nxt)
        frontier = nxt


def bfs_layers(g: Graph, v: int) -> DistanceLayers:
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range for n={g.n}")
    return DistanceLayers(v, tuple(frozenset(iter_bits(m)) for m in layer_masks(g, v)))


def layer_sizes(g: Graph, v: int) -> list[int]:
    return [m.bit_count() for m in layer_masks(g, v)]


def _connected_sizes(g: Graph, v: int) -> list[int]:
    sizes = layer_sizes(g, v)
    if sum(sizes) != g.n:
        raise DisconnectedGraphError(f"graph is disconnected: infinite status at vertex {v}")
    return sizes


def status(g: Graph, v: int) -> int:
    """Sum of distances from ``v`` to every vertex."""
    return sum(i * s for i, s in enumerate(_connected_sizes(g, v)))


def eccentricities(g: Graph) -> list[int]:
    return [len(_connected_sizes(g, v)) - 1 for v in range(g.n)]


def statuses(g: Graph) -> list[int]:
    return [status(g, v) for v in range(g.n)]


@dataclass(frozen=True)
class StatusVector:
    """Vertex statuses compressed as ``(status, multiplicity)``, status descending."""

    entries: tuple[tuple[int, int], ...]
    total: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "total", sum(s * m for s, m in self.entries))

    @classmethod
    def from_statuses(cls, values: Iterable[int]) -> "StatusVector":
        counts: dict[int, int] = {}
        for s in values:
            counts[s] = counts.get(s, 0) + 1
        return cls(tuple(sorted(counts.items(), reverse=True)))

    def expanded(self) -> tuple[int, ...]:
        return tuple(s for s, m in self.entries for _ in range(m))

    def __str__(self) -> str:
        return ",".join(f"({s},{m})" for s, m in self.entries)


def status_vector(g: Graph) -> StatusVector:
    return StatusVector.from_statuses(statuses(g))


def radius_diameter(g: Graph) -> tuple[int, int]:
    ecc = eccentricities(g)
    return min(ecc), max(ecc)


def wiener_index(g: Graph) -> int:
    """Half the total status, via an explicit pairwise distance sum."""
    total = 0
    for u in range(g.n):
        for i, m in enumerate(layer_masks(g, u)):
            total += i * (m >> (u + 1)).bit_count()
    if not g.is_connected():
        raise DisconnectedGraphError("graph is disconnected")
    return total


def girth(g: Graph) -> int | None:
    """Length of a shortest cycle, or ``None`` for a forest."""
    best = None
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = [root]
        for x in queue:
            for y in iter_bits(g.adj[x]):
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif parent[x] != y:
                    cyc = dist[x] + dist[y] + 1
                    if best is None or cyc < best:
                        best = cyc
    return best


# -- radial Moore checks -------------------------------------------------


@dataclass(frozen=True)
class RadialMooreReport:
    d: int
    k: int
    order_ok: bool
    regular_ok: bool
    connected: bool
    radius: int | None
    diameter: int | None
    central_vertices: frozenset[int]
    noncentral_count: int
    is_radial_moore: bool

    def reason(self) -> str:
        """Human-readable explanation of the first failed condition."""
        if self.is_radial_moore:
            return "radial Moore"
        if not self.order_ok:
            return f"order ≠ {moore_bound(self.d, self.k)}"
        if not self.regular_ok:
            return f"not {self.d}-regular"
        if not self.connected:
            return "disconnected"
        if self.radius != self.k:
            return f"radius {self.radius} ≠ {self.k}"
        return f"diameter {self.diameter} ≠ {self.k + 1}"


def verify_radial_moore(g: Graph, d: int, k: int) -> RadialMooreReport:
    order_ok = g.n == moore_bound(d, k)
    regular_ok = g.n > 0 and all(x == d for x in g.degrees())
    ecc = [len(layer_masks(g, v)) - 1 for v in range(g.n)]
    connected = g.n > 0 and g.is_connected()
    if connected:
        rad, diam = min(ecc), max(ecc)
        central = frozenset(v for v, e in enumerate(ecc) if e == rad)
    else:
        rad = diam = None
        central = frozenset()
    ok = order_ok and regular_ok and connected and rad == k and diam == k + 1
    return RadialMooreReport(
        d=d,
        k=k,
        order_ok=order_ok,
        regular_ok=regular_ok,
        connected=connected,
        radius=rad,
        diameter=diam,
        central_vertices=central,
        noncentral_count=g.n - len(central),
        is_radial_moore=ok,
    )


def check_structural_props(g: Graph, k: int) -> list[str]:
    """Violations of the two non-central neighbourhood constraints.

    (i) a central vertex with a non-central neighbour has at least two of
    them; (ii) every non-central vertex has at least two non-central
    neighbours.  Raises :class:`NotRadialMooreError` unless ``g`` is a radial
    Moore graph of radius ``k`` for its own degree.
    """
    d = g.regular_degree()
    if d is None or not verify_radial_moore(g, d, k).is_radial_moore:
        raise NotRadialMooreError(f"graph is not radial Moore with radius {k}")
    ecc = eccentricities(g)
    noncentral = 0
    for v, e in enumerate(ecc):
        if e != k:
            noncentral |= 1 << v
    out = []
    for v in range(g.n):
        nc = (g.adj[v] & noncentral).bit_count()
        if ecc[v] == k:
            if nc == 1:
                out.append(f"central vertex {v} has exactly one non-central neighbour")
        elif nc < 2:
            out.append(f"non-central vertex {v} has {nc} non-central neighbour(s)")
    return out
