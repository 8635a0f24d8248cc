"""Closed-form order and status bounds for (radial) Moore graphs.

The per-vertex and total status bounds only concern radius 2, i.e. radial
Moore graphs of diameter 3 and order ``d**2 + 1``.  All arithmetic is exact.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from math import isqrt


class UnsupportedDegreeError(ValueError):
    pass


def _require_degree(d: int, low: int = 3) -> None:
    if d < low:
        raise UnsupportedDegreeError(f"unsupported degree d={d}; need d >= {low}")


def moore_bound(d: int, k: int) -> int:
    """Order of the Moore tree: ``1 + d * sum((d-1)**i for i < k)``."""
    if d < 1 or k < 0:
        raise ValueError(f"moore_bound needs d >= 1 and k >= 0, got ({d}, {k})")
    return 1 + d * sum((d - 1) ** i for i in range(k))


def moore_status(d: int, k: int) -> int:
    """Status shared by every vertex of a Moore graph of degree ``d``, diameter ``k``."""
    _require_degree(d)
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    p = (d - 1) ** k
    num = d * (k * (d - 2) * p - p + 1)
    q, r = divmod(num, (d - 2) ** 2)
    assert r == 0, (d, k)
    return q


def g_max(d: int, alpha: int) -> int:
    """Largest admissible number of edges from the clique side to one attachment vertex."""
    _require_degree(d)
    if not 1 <= alpha <= d - 1:
        raise ValueError(f"alpha={alpha} outside [1, {d - 1}]")
    if 2 * alpha < d:
        return d * (alpha - 1) // (d - 2)
    return d - alpha


def min_attach_count(d: int) -> int:
    """Least ``alpha`` with ``alpha * g_max(d, alpha) >= d - 1``."""
    _require_degree(d)
    for alpha in range(1, d):
        if alpha * g_max(d, alpha) >= d - 1:
            return alpha
    raise AssertionError("unreachable: alpha = d-1 always qualifies")


def ceil_root_formula(d: int) -> int:
    """``ceil((1 + sqrt(4d - 3)) / 2)`` in exact integer arithmetic.

    This is the ceiling of the larger root of ``x**2 - x - (d - 1)``, i.e. the
    least positive integer ``x`` with ``x * (x - 1) >= d - 1``.
    """
    s = isqrt(4 * d - 3)
    if s * s == 4 * d - 3:
        return (1 + s) // 2
    # sqrt(4d-3) lies strictly inside (s, s + 1)
    return (s + 3) // 2


def gamma2_lower(d: int, neighbor_of_central: bool = False) -> int:
    """Lower bound on ``|Γ₂(v)|`` in a diameter-3 radial Moore graph with one central vertex."""
    _require_degree(d)
    if neighbor_of_central:
        return d + min_attach_count(d) - 1
    return d


def vertex_status_upper(d: int) -> int:
    _require_degree(d)
    return 3 * d * (d - 1)


def central_neighbor_status_upper(d: int) -> int:
    _require_degree(d)
    return 3 * d * d - 3 * d - min_attach_count(d) + 1


def total_status_upper(d: int, variant: str = "consistent") -> int:
    """Upper bound on the total status, one central vertex, diameter 3.

    ``variant="paper"`` uses the unconditioned ceiling formula for the
    attachment count (596 at d=4); ``"consistent"`` uses
    :func:`min_attach_count`, which agrees with the d=4 per-vertex bound of 35
    (600 at d=4).  The two coincide for every other degree.
    """
    _require_degree(d)
    if variant == "paper":
        attach = ceil_root_formula(d)
    elif variant == "consistent":
        attach = min_attach_count(d)
    else:
        raise ValueError(f"unknown variant {variant!r}")
    return 3 * d**4 - 3 * d**3 + 2 * d**2 - d * attach


@dataclass(frozen=True)
class BoundsReport:
    d: int
    k: int
    moore_bound: int
    moore_status: int
    vertex_status_upper: int
    central_neighbor_status_upper: int
    total_status_upper_paper: int
    total_status_upper_consistent: int
    gamma2_lower: int
    gamma2_lower_central_neighbor: int
    min_attach: int

    @property
    def variants_agree(self) -> bool:
        return self.total_status_upper_paper == self.total_status_upper_consistent

    def as_dict(self) -> dict:
        return asdict(self)


def bounds_report(d: int, k: int) -> BoundsReport:
    _require_degree(d)
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    return BoundsReport(
        d=d,
        k=k,
        moore_bound=moore_bound(d, k),
        moore_status=moore_status(d, k),
        vertex_status_upper=vertex_status_upper(d),
        central_neighbor_status_upper=central_neighbor_status_upper(d),
        total_status_upper_paper=total_status_upper(d, "paper"),
        total_status_upper_consistent=total_status_upper(d, "consistent"),
        gamma2_lower=gamma2_lower(d, False),
        gamma2_lower_central_neighbor=gamma2_lower(d, True),
        min_attach=min_attach_count(d),
    )
