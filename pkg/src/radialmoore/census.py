"""Radial Moore census over a population of regular graphs, and status ranking."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Iterable

from .bounds import moore_bound
from .canon import canonical_graph
from .enumerate import enumerate_regular
from .graph import (
    Graph,
    StatusVector,
    check_structural_props,
    eccentricities,
    status_vector,
    verify_radial_moore,
)
from .graph6 import encode_str

# largest order generated internally; beyond it a graph6 stream is required
MAX_INTERNAL_ORDER = 12


class CensusInfeasibleError(ValueError):
    pass


class MixedOrderError(ValueError):
    pass


@dataclass(frozen=True)
class RankedGraph:
    graph6: str  # canonical labeling
    status_vector: StatusVector
    central: int

    @property
    def total(self) -> int:
        return self.status_vector.total


def _rank_key(sv: StatusVector, g6: str):
    return (sv.total, sv.expanded(), g6)


def rank_by_status(graphs: Iterable[Graph]) -> list[RankedGraph]:
    """Sort by total status, then descending status vector, then canonical graph6.

    The first entry has the least status, i.e. is closest to a Moore graph.
    """
    out = []
    order = None
    for g in graphs:
        if order is None:
            order = g.n
        elif g.n != order:
            raise MixedOrderError(f"cannot rank graphs of orders {order} and {g.n} together")
        ecc = eccentricities(g)
        central = ecc.count(min(ecc))
        out.append(RankedGraph(encode_str(canonical_graph(g)), status_vector(g), central))
    out.sort(key=lambda r: _rank_key(r.status_vector, r.graph6))
    return out


@dataclass
class CensusResult:
    d: int
    k: int
    total_regular: int = 0
    radial_moore: int = 0
    max_central: int = 0
    skipped: int = 0
    central_histogram: dict[int, int] = field(default_factory=dict)
    violations: list[tuple[str, list[str]]] = field(default_factory=list)
    status_ranking: list[RankedGraph] = field(default_factory=list)

    def to_json(self) -> str:
        doc = {
            "d": self.d,
            "k": self.k,
            "total_regular": self.total_regular,
            "radial_moore": self.radial_moore,
            "max_central": self.max_central,
            "central_histogram": {str(c): m for c, m in sorted(self.central_histogram.items())},
            "structural_violations": len(self.violations),
            "ranking": [
                {
                    "graph6": r.graph6,
                    "total_status": r.total,
                    "status_vector": [[s, m] for s, m in r.status_vector.entries],
                    "central": r.central,
                }
                for r in self.status_ranking
            ],
        }
        return json.dumps(doc, indent=2)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["rank", "graph6", "total_status", "status_vector", "central"])
        for i, r in enumerate(self.status_ranking, 1):
            w.writerow([i, r.graph6, r.total, str(r.status_vector), r.central])
        return buf.getvalue()


def census(d: int, k: int, graphs: Iterable[Graph] | None = None) -> CensusResult:
    """Filter a population of d-regular graphs of order ``M(d, k)`` to radial Moore ones.

    Without ``graphs`` the population is generated internally, which is only
    supported for small orders.  A supplied stream is assumed isomorph-free;
    graphs of the wrong order or degree are counted in ``skipped``.
    """
    n = moore_bound(d, k)
    if graphs is None:
        if n > MAX_INTERNAL_ORDER:
            raise CensusInfeasibleError(
                f"internal enumeration of {d}-regular graphs on {n} vertices is infeasible; "
                "supply a graph6 stream (--input) instead"
            )
        graphs = enumerate_regular(d, n)
    res = CensusResult(d, k)
    radial = []
    for g in graphs:
        if g.n != n or g.regular_degree() != d:
            res.skipped += 1
            continue
        res.total_regular += 1
        rep = verify_radial_moore(g, d, k)
        if not rep.is_radial_moore:
            continue
        res.radial_moore += 1
        c = len(rep.central_vertices)
        res.central_histogram[c] = res.central_histogram.get(c, 0) + 1
        res.max_central = max(res.max_central, c)
        bad = check_structural_props(g, k)
        if bad:
            res.violations.append((encode_str(g), bad))
        radial.append(g)
    res.status_ranking = rank_by_status(radial)
    return res
