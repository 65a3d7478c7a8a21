"""Checked inequalities and identities for the spectrum of M(alpha).

Every proposition becomes a BoundRecord with a uniform slack/holds convention:
slack >= 0 means the inequality is satisfied with margin, and holds applies a
1e-9 relative tolerance. Records whose preconditions fail are emitted as
skipped markers rather than dropped silently; informational records are
reported but never counted as violations.
"""

import math
from dataclasses import asdict, dataclass, field

import numpy as np

from .combinatorics import (CHROMATIC_DEFAULT_LIMIT, MAXCUT_MAX_VERTICES,
                            chromatic_number, diameter, maxcut)
from .errors import ParameterError, SolverError
from .eigensolver import (Spectrum, distinct_count, eigenvalues_only,
                          extreme_pair, full_spectrum)
from .graphs import Graph, is_connected, walk2_counts
from .matrices import alpha_matrix, assemble, check_alpha, quadratic_form

HOLDS_REL_TOL = 1e-9


@dataclass(frozen=True)
class BoundRecord:
    """One evaluated inequality or identity against the computed spectrum."""

    name: str
    side: str  # "upper_on" | "lower_on" | "identity"
    target: str
    bound_value: float | None
    spectral_value: float | None
    slack: float | None
    holds: bool
    strict: bool = False
    informational: bool = False
    skipped: bool = False
    note: str = ""

    def to_json_obj(self) -> dict:
        return asdict(self)


def _tol(bound: float) -> float:
    return HOLDS_REL_TOL * max(1.0, abs(bound))


def _record(name: str, side: str, target: str, bound: float, spectral: float,
            strict: bool = False, informational: bool = False, note: str = "") -> BoundRecord:
    bound = float(bound)
    spectral = float(spectral)
    if side == "upper_on":
        slack = bound - spectral
        holds = slack >= -_tol(bound)
    elif side == "lower_on":
        slack = spectral - bound
        holds = slack >= -_tol(bound)
    elif side == "identity":
        slack = bound - spectral
        holds = abs(slack) <= _tol(bound)
    else:
        raise ParameterError(f"unknown side {side!r}")
    return BoundRecord(name, side, target, bound, spectral, slack, holds,
                       strict=strict, informational=informational, note=note)


def _skipped(name: str, side: str, target: str, note: str) -> BoundRecord:
    return BoundRecord(name, side, target, None, None, None, True,
                       skipped=True, note=note)


def radius_bounds(g: Graph, alpha: float, s: Spectrum,
                  adjacency_spectrum=None) -> list[BoundRecord]:
    """Bounds on the ordered eigenvalues, chiefly the spectral radius."""
    a = check_alpha(alpha)
    if g.n == 0:
        return []
    if s.n != g.n:
        raise ParameterError("spectrum size does not match graph order")
    lam = s.values
    lam1 = float(lam[0])
    deg = g.degrees
    big = g.max_degree()
    small = g.min_degree()
    deg_sorted = sorted(deg, reverse=True)
    if adjacency_spectrum is None:
        adjacency_spectrum = eigenvalues_only(assemble(g, "adjacency"))
    mu = np.asarray(adjacency_spectrum, dtype=np.float64)
    out = []
    for k in range(1, g.n + 1):
        out.append(_record(f"degree_majorization_k{k}", "upper_on", f"lambda_{k}",
                           deg_sorted[k - 1], lam[k - 1]))
    for k in range(1, g.n + 1):
        out.append(_record(f"weyl_mix_lower_k{k}", "lower_on", f"lambda_{k}",
                           a * small + (1.0 - a) * mu[k - 1], lam[k - 1]))
        out.append(_record(f"weyl_mix_upper_k{k}", "upper_on", f"lambda_{k}",
                           a * big + (1.0 - a) * mu[k - 1], lam[k - 1]))
    if g.m >= 1:
        disc = a * a * (big + 1.0) ** 2 + 4.0 * big * (1.0 - 2.0 * a)
        star_bound = 0.5 * (a * (big + 1.0) + math.sqrt(disc))
        out.append(_record("lovasz_star_lower", "lower_on", "lambda_1",
                           star_bound, lam1,
                           note="equality iff connected and the star on max_degree+1 vertices"))
        if a <= 0.5:
            out.append(_record("affine_degree_lower", "lower_on", "lambda_1",
                               a * (big + 1.0), lam1))
        else:
            # the printed two-branch simplification claims alpha*max_degree
            # + 1 - alpha on this range, but that line sits above the tight
            # star bound strictly inside (1/2, 1); the defensible affine
            # floor here is alpha*max_degree
            out.append(_record("affine_degree_lower", "lower_on", "lambda_1",
                               a * big, lam1))
            if a < 1.0:
                out.append(_record(
                    "affine_degree_lower_literal", "lower_on", "lambda_1",
                    a * big + 1.0 - a, lam1, informational=True,
                    note="fails on stars for alpha above one half; "
                         "kept for reference only"))
    else:
        out.append(_skipped("lovasz_star_lower", "lower_on", "lambda_1", "no edges"))
    out.append(_record("adjacency_lower", "lower_on", "lambda_1", mu[0], lam1))
    out.append(_record("adjacency_mix_upper", "upper_on", "lambda_1",
                       a * big + (1.0 - a) * mu[0], lam1,
                       note="equality iff some component is max_degree-regular"))
    out.append(_record("mean_degree_lower", "lower_on", "lambda_1",
                       2.0 * g.m / g.n, lam1))
    out.append(_record("rms_degree_lower", "lower_on", "lambda_1",
                       math.sqrt(sum(d * d for d in deg) / g.n), lam1))
    walks = walk2_counts(g)
    if small >= 1:
        rowsums = [a * deg[u] + (1.0 - a) * walks[u] / deg[u] for u in range(g.n)]
        out.append(_record("rowsum_similarity_upper", "upper_on", "lambda_1",
                           max(rowsums), lam1,
                           note="equality for regular graphs at every alpha"))
        out.append(_record("rowsum_similarity_lower", "lower_on", "lambda_1",
                           min(rowsums), lam1))
    else:
        why = "isolated vertex present" if g.m else "no edges"
        out.append(_skipped("rowsum_similarity_upper", "upper_on", "lambda_1", why))
        out.append(_skipped("rowsum_similarity_lower", "lower_on", "lambda_1", why))
    if g.m >= 1:
        per_edge = [(a * deg[u] + (1.0 - a) * deg[v],
                     a * deg[v] + (1.0 - a) * deg[u]) for u, v in g.edges]
        out.append(_record("edge_degree_upper", "upper_on", "lambda_1",
                           max(max(p) for p in per_edge), lam1,
                           note="orientation maximum taken on each edge"))
        out.append(_record("edge_degree_lower", "lower_on", "lambda_1",
                           min(min(p) for p in per_edge), lam1,
                           note="orientation minimum taken on each edge"))
    else:
        out.append(_skipped("edge_degree_upper", "upper_on", "lambda_1", "no edges"))
        out.append(_skipped("edge_degree_lower", "lower_on", "lambda_1", "no edges"))
    squares = [a * deg[u] * deg[u] + (1.0 - a) * walks[u] for u in range(g.n)]
    out.append(_record("walk_square_upper", "upper_on", "lambda_1_squared",
                       max(squares), lam1 * lam1))
    out.append(_record("walk_square_lower", "lower_on", "lambda_1_squared",
                       min(squares), lam1 * lam1))
    return out


def lambda_min_bounds(g: Graph, alpha: float, s: Spectrum,
                      maxcut_value: int | None = None,
                      chromatic: int | None = None) -> list[BoundRecord]:
    """Bounds on the smallest eigenvalue."""
    a = check_alpha(alpha)
    if g.n == 0:
        return []
    if s.n != g.n:
        raise ParameterError("spectrum size does not match graph order")
    lam_min = float(s.values[-1])
    small = g.min_degree()
    out = [_record("min_degree_upper", "upper_on", "lambda_min",
                   a * small, lam_min,
                   strict=(a < 1.0 and small >= 1),
                   note="strict whenever alpha < 1 and there is no isolated vertex")]
    if g.n <= MAXCUT_MAX_VERTICES:
        cut = maxcut(g) if maxcut_value is None else int(maxcut_value)
        out.append(_record("maxcut_mix_upper", "upper_on", "lambda_min",
                           2.0 * g.m / g.n - 4.0 * (1.0 - a) * cut / g.n, lam_min))
        out.append(_record("maxcut_mix_upper_literal", "upper_on", "lambda_min",
                           2.0 * a * g.m / g.n - 2.0 * (1.0 - a) * cut / g.n, lam_min,
                           informational=True,
                           note="uncorrected variant, recorded for reference only"))
    else:
        out.append(_skipped("maxcut_mix_upper", "upper_on", "lambda_min",
                            f"maxcut limited to n <= {MAXCUT_MAX_VERTICES}"))
    if g.is_regular() and g.m >= 1:
        if chromatic is None and g.n <= CHROMATIC_DEFAULT_LIMIT:
            chromatic = chromatic_number(g)
        if chromatic is None:
            out.append(_skipped("hoffman_regular_upper", "upper_on", "lambda_min",
                                f"chromatic number limited to n <= {CHROMATIC_DEFAULT_LIMIT}"))
        elif a < 1.0 / chromatic:
            d = g.max_degree()
            bound = (a - 1.0 / chromatic) * chromatic * d / (chromatic - 1.0)
            out.append(_record("hoffman_regular_upper", "upper_on", "lambda_min",
                               bound, lam_min, strict=False,
                               note="regular graph below its coloring threshold"))
        else:
            out.append(_skipped("hoffman_regular_upper", "upper_on", "lambda_min",
                                "inactive: alpha >= 1/chromatic"))
    return out


def global_identities(g: Graph, alpha: float, s: Spectrum) -> list[BoundRecord]:
    """Trace identities, the second-eigenvalue cap, and the diameter count bound."""
    a = check_alpha(alpha)
    if g.n == 0:
        return []
    if s.n != g.n:
        raise ParameterError("spectrum size does not match graph order")
    lam = s.values
    deg2 = sum(d * d for d in g.degrees)
    out = [
        _record("trace_linear", "identity", "sum_lambda",
                2.0 * a * g.m, float(lam.sum())),
        _record("trace_square", "identity", "sum_lambda_squared",
                2.0 * (1.0 - a) ** 2 * g.m + a * a * deg2,
                float((lam * lam).sum())),
    ]
    if g.n >= 2:
        if a >= 0.5:
            out.append(_record("second_eigenvalue_upper", "upper_on", "lambda_2",
                               a * g.n - 1.0, float(lam[1])))
        else:
            out.append(_record("second_eigenvalue_upper", "upper_on", "lambda_2",
                               g.n / 2.0 - 1.0, float(lam[1]),
                               note="equality for two disjoint cliques on n/2 vertices"))
    diam = diameter(g)
    if diam is None:
        out.append(_skipped("distinct_diameter_lower", "lower_on", "distinct_count",
                            "graph is disconnected"))
    elif a == 1.0:
        # the walk-positivity argument behind this count needs nonzero
        # off-diagonal entries, which vanish at the right endpoint
        out.append(_skipped("distinct_diameter_lower", "lower_on", "distinct_count",
                            "matrix is diagonal at alpha = 1"))
    else:
        out.append(_record("distinct_diameter_lower", "lower_on", "distinct_count",
                           diam + 1.0, float(distinct_count(s))))
    return out


@dataclass(frozen=True)
class BoundReport:
    graph_id: str
    alpha: float
    records: tuple[BoundRecord, ...] = field(repr=False)

    @property
    def violations(self) -> tuple[str, ...]:
        return tuple(r.name for r in self.records
                     if not r.holds and not r.skipped and not r.informational)

    def to_json_obj(self) -> dict:
        return {
            "graph": self.graph_id,
            "alpha": self.alpha,
            "records": [r.to_json_obj() for r in self.records],
            "violations": list(self.violations),
        }


def bound_report(g: Graph, alpha: float, s: Spectrum | None = None,
                 graph_id: str | None = None,
                 adjacency_spectrum=None,
                 maxcut_value: int | None = None,
                 chromatic: int | None = None) -> BoundReport:
    """Evaluate every applicable record family at one alpha."""
    a = check_alpha(alpha)
    if s is None:
        s = full_spectrum(alpha_matrix(g, a))
    if graph_id is None:
        graph_id = f"graph-n{g.n}-m{g.m}"
    if adjacency_spectrum is None and g.n:
        adjacency_spectrum = eigenvalues_only(assemble(g, "adjacency"))
    records = []
    records.extend(radius_bounds(g, a, s, adjacency_spectrum=adjacency_spectrum))
    records.extend(lambda_min_bounds(g, a, s, maxcut_value=maxcut_value,
                                     chromatic=chromatic))
    records.extend(global_identities(g, a, s))
    return BoundReport(graph_id, a, tuple(records))


def rotation_test(g: Graph, alpha: float, u: int, v: int, w: int) -> bool:
    """Edge-rotation comparison: move edge {u,v} to {u,w} and compare radii.

    Evaluates the top eigenvector's quadratic form on the rotated graph; when
    it does not decrease, the spectral radius must strictly increase, and that
    consequence is verified numerically before returning True.
    """
    a = check_alpha(alpha)
    if a >= 1.0:
        raise ParameterError("rotation comparison needs alpha < 1")
    for x in (u, v, w):
        if not 0 <= x < g.n:
            raise IndexError(f"vertex {x} out of range for n={g.n}")
    if not g.has_edge(u, v):
        raise ParameterError(f"edge {{{u},{v}}} not present")
    if u == w or g.has_edge(u, w):
        raise ParameterError(f"target pair {{{u},{w}}} must be a non-edge")
    if not is_connected(g):
        raise ParameterError("rotation comparison needs a connected graph")
    pair = extreme_pair(alpha_matrix(g, a), "largest")
    x = pair.vector
    removed = (min(u, v), max(u, v))
    edges = tuple(e for e in g.edges if e != removed) + ((min(u, w), max(u, w)),)
    h = Graph(g.n, edges)
    q_before = quadratic_form(g, a, x)
    q_after = quadratic_form(h, a, x)
    if q_after < q_before - 1e-12 * max(1.0, abs(q_before)):
        return False
    lam_h = float(eigenvalues_only(alpha_matrix(h, a))[0])
    if not lam_h > pair.value + 1e-10:
        raise SolverError("rotation failed to increase the radius",
                          before=pair.value, after=lam_h)
    return True
