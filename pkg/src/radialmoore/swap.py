"""Hoffman-Singleton graph and the exhaustive two-edge swap experiment."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator

from .bounds import moore_bound
from .graph import Graph

WORKERS_ENV = "RADIALMOORE_WORKERS"


def hoffman_singleton() -> Graph:
    """Pentagon/pentagram construction on 50 vertices.

    Pentagon ``P_h`` has vertices ``5h + j`` joined ``j ~ j±1``; pentagram
    ``Q_i`` has vertices ``25 + 5i + j`` joined ``j ~ j±2``; and
    ``P_h[j] ~ Q_i[h*i + j mod 5]``.
    """
    edges = []
    for h in range(5):
        for j in range(5):
            edges.append((5 * h + j, 5 * h + (j + 1) % 5))
            edges.append((25 + 5 * h + j, 25 + 5 * h + (j + 2) % 5))
    for h in range(5):
        for i in range(5):
            for j in range(5):
                edges.append((5 * h + j, 25 + 5 * i + (h * i + j) % 5))
    return Graph.from_edges(50, edges)


@dataclass(frozen=True)
class SwapResult:
    removed: tuple[tuple[int, int], tuple[int, int]]
    added: tuple[tuple[int, int], tuple[int, int]]
    central_count: int
    is_radial_moore: bool

    def describe(self) -> str:
        (u, v), (x, y) = self.removed
        (a, b), (c, e) = self.added
        return f"-{u}-{v} -{x}-{y} +{a}-{b} +{c}-{e}"


@dataclass(frozen=True)
class SwapSummary:
    d: int
    k: int
    candidates: int
    radial_moore: int
    max_central: int | None
    central_histogram: dict[int, int]
    best: SwapResult | None


def apply_swap(g: Graph, result: SwapResult) -> Graph:
    return g.with_edges(remove=result.removed, add=result.added)


def _ecc_profile(adj: list[int], n: int) -> list[int]:
    out = []
    for v in range(n):
        seen = frontier = 1 << v
        ecc = 0
        while True:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= adj[low.bit_length() - 1]
                f ^= low
            nxt &= ~seen
            if not nxt:
                break
            seen |= nxt
            frontier = nxt
            ecc += 1
        if seen.bit_count() != n:
            return []
        out.append(ecc)
    return out


def _rewirings(g: Graph, i: int, edges: list[tuple[int, int]]):
    u, v = edges[i]
    adj = g.adj
    for x, y in edges[i + 1 :]:
        if len({u, v, x, y}) < 4:
            continue
        for (a, b), (c, e) in (((u, x), (v, y)), ((u, y), (v, x))):
            if adj[a] >> b & 1 or adj[c] >> e & 1:
                continue
            yield (u, v), (x, y), (a, b), (c, e)


def _scan_chunk(args) -> list[SwapResult]:
    g, indices, k = args
    edges = g.edges()
    n = g.n
    out = []
    for i in indices:
        for r1, r2, a1, a2 in _rewirings(g, i, edges):
            adj = list(g.adj)
            for (p, q), on in ((r1, False), (r2, False), (a1, True), (a2, True)):
                if on:
                    adj[p] |= 1 << q
                    adj[q] |= 1 << p
                else:
                    adj[p] &= ~(1 << q)
                    adj[q] &= ~(1 << p)
            ecc = _ecc_profile(adj, n)
            if ecc:
                rad, diam = min(ecc), max(ecc)
                central = ecc.count(rad)
                ok = rad == k and diam == k + 1
            else:
                central, ok = 0, False
            out.append(SwapResult((r1, r2), (a1, a2), central, ok))
    return out


def _workers(workers: int | None) -> int:
    if workers is not None:
        return max(1, workers)
    env = os.environ.get(WORKERS_ENV)
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def edge_swap_experiment(g: Graph, d: int, k: int, workers: int | None = None) -> Iterator[SwapResult]:
    """Every simple, degree-preserving two-edge swap of ``g`` with its radial-Moore status.

    Results come out in a fixed order (by the lower-indexed removed edge,
    then the other edge, then the rewiring) regardless of ``workers``.
    """
    if g.regular_degree() != d:
        raise ValueError(f"input graph is not {d}-regular")
    if g.n != moore_bound(d, k):
        raise ValueError(f"input order {g.n} differs from M({d},{k}) = {moore_bound(d, k)}")
    m = g.num_edges()
    nw = _workers(workers)
    if nw == 1:
        for i in range(m):
            yield from _scan_chunk((g, [i], k))
        return
    chunks = [(g, list(range(i, m, nw * 4)), k) for i in range(nw * 4)]
    with ProcessPoolExecutor(max_workers=nw) as pool:
        parts = list(pool.map(_scan_chunk, chunks))
    merged = [r for part in parts for r in part]
    edge_pos = {e: i for i, e in enumerate(g.edges())}
    merged.sort(key=lambda r: (edge_pos[r.removed[0]], edge_pos[r.removed[1]], r.added))
    yield from merged


def swap_search(g: Graph, d: int, k: int, workers: int | None = None) -> SwapSummary:
    count = radial = 0
    hist: dict[int, int] = {}
    best = None
    for r in edge_swap_experiment(g, d, k, workers):
        count += 1
        if r.is_radial_moore:
            radial += 1
            hist[r.central_count] = hist.get(r.central_count, 0) + 1
            if best is None or r.central_count > best.central_count:
                best = r
    return SwapSummary(d, k, count, radial, best.central_count if best else None, hist, best)
