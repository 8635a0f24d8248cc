"""The family G_d: d cliques K_{d-1}, a 1-factor between them, and a star K_{1,d}.

Vertex numbering is fixed: the centre is 0, spoke ``i`` (1-based) is vertex
``i``, and clique vertices ``(i, j)`` with ``i != j`` follow in
lexicographic order.  Clique ``H_i`` is ``{(i, j) : j != i}``; ``(i, j)`` is
matched with ``(j, i)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from .bounds import moore_bound
from .canon import automorphism_group, is_automorphism
from .graph import Graph, StatusVector, eccentricities, layer_sizes, status_vector


class GdConstructionError(AssertionError):
    pass


@dataclass(frozen=True, order=True)
class GdVertex:
    kind: str  # "center" | "spoke" | "clique"
    i: int = 0
    j: int = 0

    def __str__(self) -> str:
        if self.kind == "center":
            return "0"
        if self.kind == "spoke":
            return str(self.i)
        return f"({self.i},{self.j})"


def gd_labels(d: int) -> list[GdVertex]:
    labels = [GdVertex("center")]
    labels += [GdVertex("spoke", i) for i in range(1, d + 1)]
    labels += [GdVertex("clique", i, j) for i in range(1, d + 1) for j in range(1, d + 1) if i != j]
    return labels


def gd_index(d: int) -> dict[GdVertex, int]:
    return {lab: v for v, lab in enumerate(gd_labels(d))}


def build_gd(d: int) -> Graph:
    if d < 3:
        raise ValueError(f"G_d needs d >= 3, got d={d}")
    idx = gd_index(d)
    spokes = range(1, d + 1)
    edges = []
    for i in spokes:
        edges.append((0, idx[GdVertex("spoke", i)]))
        members = [idx[GdVertex("clique", i, j)] for j in spokes if j != i]
        edges += [(idx[GdVertex("spoke", i)], v) for v in members]
        edges += [(u, v) for a, u in enumerate(members) for v in members[a + 1 :]]
        for j in spokes:
            if i < j:
                edges.append((idx[GdVertex("clique", i, j)], idx[GdVertex("clique", j, i)]))
    return Graph.from_edges(d * d + 1, edges)


def noncentral_status(d: int) -> int:
    return 3 * d * d - 4 * d + 2


def central_status(d: int) -> int:
    return 2 * d * d - d


def expected_status_vector(d: int) -> StatusVector:
    return StatusVector(((noncentral_status(d), d * d), (central_status(d), 1)))


def gd_total_status(d: int) -> int:
    if d < 3:
        raise ValueError(f"G_d needs d >= 3, got d={d}")
    return central_status(d) + d * d * noncentral_status(d)


@dataclass(frozen=True)
class GdReport:
    d: int
    order: int
    regular: bool
    radius: int
    diameter: int
    central_vertices: tuple[int, ...]
    status_vector: StatusVector

    @property
    def ok(self) -> bool:
        return (
            self.order == self.d * self.d + 1
            and self.regular
            and self.radius == 2
            and self.diameter == 3
            and self.central_vertices == (0,)
            and self.status_vector == expected_status_vector(self.d)
        )


def verify_gd(d: int, g: Graph | None = None) -> GdReport:
    """Check G_d; raises :class:`GdConstructionError` if any property fails."""
    g = build_gd(d) if g is None else g
    ecc = eccentricities(g)
    rad = min(ecc)
    report = GdReport(
        d=d,
        order=g.n,
        regular=all(x == d for x in g.degrees()),
        radius=rad,
        diameter=max(ecc),
        central_vertices=tuple(v for v, e in enumerate(ecc) if e == rad),
        status_vector=status_vector(g),
    )
    if not report.ok:
        raise GdConstructionError(f"G_{d} failed verification: {report}")
    assert g.n == moore_bound(d, 2)
    return report


def spoke_clique_profiles_agree(d: int) -> bool:
    """Spoke ``i`` and every vertex of ``H_i`` have identical distance-layer sizes."""
    g = build_gd(d)
    idx = gd_index(d)
    for i in range(1, d + 1):
        ref = layer_sizes(g, idx[GdVertex("spoke", i)])
        for j in range(1, d + 1):
            if j != i and layer_sizes(g, idx[GdVertex("clique", i, j)]) != ref:
                return False
    return True


def transposition_map(d: int, i: int, j: int) -> list[int]:
    """Vertex permutation induced by swapping spoke labels ``i`` and ``j``."""
    if i == j:
        raise ValueError("transposition needs i != j")
    if not (1 <= i <= d and 1 <= j <= d):
        raise ValueError(f"indices must lie in [1, {d}]")
    return permutation_map(d, {i: j, j: i})


def permutation_map(d: int, sigma: dict[int, int]) -> list[int]:
    """Vertex permutation of G_d induced by a permutation of ``1..d`` (identity where unspecified)."""

    def s(x: int) -> int:
        return sigma.get(x, x)

    idx = gd_index(d)
    perm = [0] * (d * d + 1)
    for lab, v in idx.items():
        if lab.kind == "center":
            img = lab
        elif lab.kind == "spoke":
            img = GdVertex("spoke", s(lab.i))
        else:
            img = GdVertex("clique", s(lab.i), s(lab.j))
        perm[v] = idx[img]
    return perm


@dataclass(frozen=True)
class AutomorphismReport:
    d: int
    group_order: int
    generators_verified: int

    @property
    def matches_symmetric_group(self) -> bool:
        return self.group_order == factorial(self.d)


def gd_automorphisms(d: int, budget: int | None = None) -> AutomorphismReport:
    g = build_gd(d)
    verified = 0
    for i in range(1, d + 1):
        for j in range(i + 1, d + 1):
            if not is_automorphism(g, transposition_map(d, i, j)):
                raise GdConstructionError(f"transposition ({i} {j}) is not an automorphism of G_{d}")
            verified += 1
    kwargs = {} if budget is None else {"budget": budget}
    order = automorphism_group(g, **kwargs).order
    return AutomorphismReport(d, order, verified)


def generated_group_size(perms: list[list[int]], limit: int | None = None) -> int:
    """Size of the group generated by ``perms``, by closure (small groups only)."""
    if not perms:
        return 1
    n = len(perms[0])
    ident = tuple(range(n))
    seen = {ident}
    frontier = [ident]
    gens = [tuple(p) for p in perms]
    while frontier:
        nxt = []
        for x in frontier:
            for a in gens:
                y = tuple(a[x[v]] for v in range(n))
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
                    if limit is not None and len(seen) > limit:
                        return len(seen)
        frontier = nxt
    return len(seen)
