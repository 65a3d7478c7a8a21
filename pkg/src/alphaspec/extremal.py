"""Brute-force extremal verification: scan a graph class exhaustively, find the
spectral-radius maximizers of M(alpha), and compare against the predicted
extremal families.

Enumerative classes scan every labeled graph by edge bitmask with vectorized
class filters and a batched eigenvalue kernel; the complete-multipartite class
searches integer partitions with the closed-form radius instead. Chunked scans
merge deterministically, and chunks can optionally run in worker processes.
"""

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .closed_forms import multipartite_radius
from .combinatorics import (are_isomorphic, chromatic_number,
                            clique_edge_masks, complete_multipartite_mask,
                            is_clique_free, set_partitions)
from .eigensolver import eigenvalues_only, eigvalsh_batch, full_spectrum
from .errors import CapacityError, ParameterError, SolverError
from .graphs import (Graph, complete_multipartite, components, edge_order,
                     is_connected, split, turan, turan_part_sizes)
from .matrices import alpha_matrix, check_alpha

ENUMERATIVE_MAX_VERTICES = 7
PARTITION_MAX_VERTICES = 60
DEFAULT_TIE_TOL = 1e-9
TURAN_BOUNDARY_EPS = 1e-12
_SCAN_CHUNK = 1 << 16

CLASS_TAGS = ("clique_free", "r_chromatic", "complete_multipartite")


def default_workers() -> int:
    """Worker process count for chunked scans (ALPHASPEC_WORKERS, default 1)."""
    raw = os.environ.get("ALPHASPEC_WORKERS", "")
    try:
        w = int(raw) if raw else 1
    except ValueError:
        w = 1
    return max(w, 1)


@dataclass(frozen=True)
class ExtremalResult:
    """Outcome of one exhaustive maximization over a graph class."""

    class_tag: str
    n: int
    r: int
    alpha: float
    max_radius: float
    maximizers: tuple[int, ...]  # edge bitmasks of every graph within tie_tol
    maximizer_reps: tuple[Graph, ...] = field(repr=False)  # one per isomorphism class
    candidates_examined: int
    elapsed_seconds: float


def _edge_arrays(n: int) -> tuple[np.ndarray, np.ndarray]:
    pairs = edge_order(n)
    us = np.array([u for u, _ in pairs], dtype=np.int64)
    vs = np.array([v for _, v in pairs], dtype=np.int64)
    return us, vs


def class_member_masks(n: int, r: int, class_tag: str) -> np.ndarray:
    """Edge bitmasks of every labeled class member on n vertices, ascending."""
    nbits = n * (n - 1) // 2
    masks = np.arange(1 << nbits, dtype=np.int64)
    if class_tag == "clique_free":
        keep = np.ones(masks.shape, dtype=bool)
        for cm in clique_edge_masks(n, r + 1):
            keep &= (masks & cm) != cm
        return masks[keep]
    if class_tag == "r_chromatic":
        keep = np.zeros(masks.shape, dtype=bool)
        for blocks in set_partitions(n, r):
            pm = complete_multipartite_mask(n, blocks)
            keep |= (masks & pm) == masks
        return masks[keep]
    raise ParameterError(f"no mask enumeration for class {class_tag!r}")


def _batch_alpha_matrices(masks: np.ndarray, n: int, alpha: float,
                          us: np.ndarray, vs: np.ndarray) -> np.ndarray:
    b = masks.size
    bits = ((masks[:, np.newaxis] >> np.arange(us.size)[np.newaxis, :]) & 1
            ).astype(np.float64)
    adj = np.zeros((b, n, n))
    adj[:, us, vs] = bits
    adj[:, vs, us] = bits
    deg = adj.sum(axis=2)
    out = (1.0 - alpha) * adj
    idx = np.arange(n)
    out[:, idx, idx] = alpha * deg
    return out


def _scan_chunk(args) -> tuple[float, list[tuple[int, float]]]:
    """Top-eigenvalue scan of one mask chunk; keeps candidates near the chunk max."""
    masks, n, alpha, tie_tol = args
    us, vs = _edge_arrays(n)
    best = -np.inf
    near: list[tuple[int, float]] = []
    for start in range(0, masks.size, _SCAN_CHUNK):
        part = masks[start:start + _SCAN_CHUNK]
        mats = _batch_alpha_matrices(part, n, alpha, us, vs)
        tops = eigvalsh_batch(mats)[:, 0]
        cmax = float(tops.max())
        if cmax > best:
            best = cmax
            near = [(m, v) for m, v in near if v >= best - tie_tol]
        sel = tops >= best - tie_tol
        near.extend(zip((int(m) for m in part[sel]), (float(v) for v in tops[sel])))
    return best, near


def _membership_check(g: Graph, r: int, class_tag: str) -> bool:
    if class_tag == "clique_free":
        return is_clique_free(g, r + 1)
    if class_tag == "r_chromatic":
        return chromatic_number(g) <= r
    parts = sorted((len(vs) for _, vs in _cocomponents(g)), reverse=True)
    return len(parts) <= max(r, 1) and are_isomorphic(g, complete_multipartite(parts))


def _cocomponents(g: Graph):
    comp = Graph(g.n, tuple(p for p in edge_order(g.n) if not g.has_edge(*p)))
    return components(comp)


def _fingerprint(g: Graph, alpha: float) -> tuple:
    vals = eigenvalues_only(alpha_matrix(g, alpha))
    return (tuple(sorted(g.degrees, reverse=True)),
            tuple(round(float(v), 8) for v in vals))


def _dedupe_isomorphic(graphs: list[Graph], alpha: float) -> list[Graph]:
    reps: list[tuple[tuple, Graph]] = []
    for g in graphs:
        fp = _fingerprint(g, alpha)
        if not any(fp == rfp and are_isomorphic(g, rep) for rfp, rep in reps):
            reps.append((fp, g))
    return [g for _, g in reps]


def maximize_over_class(n: int, r: int, alpha: float, class_tag: str,
                        tie_tol: float = DEFAULT_TIE_TOL,
                        workers: int | None = None) -> ExtremalResult:
    """Exhaustive spectral-radius maximization of M(alpha) over one graph class.

    clique_free(r): graphs with no complete subgraph on r+1 vertices.
    r_chromatic(r): graphs colorable with r colors.
    complete_multipartite(r): complete multipartite graphs with at most r parts,
    searched through integer partitions with the closed-form radius.
    """
    a = check_alpha(alpha)
    if class_tag not in CLASS_TAGS:
        raise ParameterError(f"unknown class {class_tag!r}")
    if r < 1:
        raise ParameterError("class parameter r must be >= 1")
    if n < 1:
        raise ParameterError("class maximization needs n >= 1")
    t0 = time.perf_counter()
    if class_tag == "complete_multipartite":
        if n > PARTITION_MAX_VERTICES:
            raise CapacityError(
                f"partition search limited to n <= {PARTITION_MAX_VERTICES}, got n={n}")
        if a == 1.0:
            raise ParameterError("partition search needs alpha < 1")
        from .combinatorics import integer_partitions
        best = -np.inf
        near: list[tuple[tuple[int, ...], float]] = []
        examined = 0
        for parts in integer_partitions(n, r):
            examined += 1
            val = multipartite_radius(parts, a) if len(parts) >= 2 else 0.0
            if val > best:
                best = val
                near = [(p, v) for p, v in near if v >= best - tie_tol]
            if val >= best - tie_tol:
                near.append((parts, val))
        graphs = [complete_multipartite(p) for p, _ in near]
        masks = sorted(g.edge_mask() for g in graphs)
        reps = _dedupe_isomorphic(graphs, a)
    else:
        if n > ENUMERATIVE_MAX_VERTICES:
            raise CapacityError(
                f"enumerative scan limited to n <= {ENUMERATIVE_MAX_VERTICES}, got n={n}")
        members = class_member_masks(n, r, class_tag)
        examined = int(members.size)
        nworkers = default_workers() if workers is None else max(int(workers), 1)
        if nworkers > 1 and members.size > 4 * _SCAN_CHUNK:
            splits = np.array_split(members, nworkers)
            with ProcessPoolExecutor(max_workers=nworkers) as pool:
                results = list(pool.map(
                    _scan_chunk, [(part, n, a, tie_tol) for part in splits]))
        else:
            results = [_scan_chunk((members, n, a, tie_tol))]
        best = max(b for b, _ in results)
        ties = [(m, v) for _, cand in results for m, v in cand
                if v >= best - tie_tol]
        ties.sort()
        masks = [m for m, _ in ties]
        graphs = [Graph.from_edge_mask(n, m) for m in masks]
        reps = _dedupe_isomorphic(graphs, a)
    for g in graphs:
        if not _membership_check(g, r, class_tag):
            raise SolverError("scan produced a maximizer outside the class",
                              n=n, r=r, alpha=a, mask=g.edge_mask())
    elapsed = time.perf_counter() - t0
    return ExtremalResult(class_tag, n, r, float(a), float(best),
                          tuple(int(m) for m in masks), tuple(reps),
                          examined, elapsed)


@dataclass(frozen=True)
class TuranCheck:
    """One alpha's comparison between the scan result and the predicted maximizer."""

    alpha: float
    status: str  # "ok" | "counterexample"
    regime: str  # "turan" | "split" | "tie"
    max_radius: float
    expected_radius: float
    maximizer_edge_lists: tuple[tuple[tuple[int, int], ...], ...]
    examined: int
    elapsed_ms: float
    detail: str = ""

    def to_json_obj(self, n: int, r: int) -> dict:
        return {
            "class": f"clique_free({r + 1})",
            "n": n,
            "r": r,
            "alpha": self.alpha,
            "regime": self.regime,
            "max_radius": self.max_radius,
            "expected_radius": self.expected_radius,
            "maximizer_edge_lists": [[list(e) for e in el]
                                     for el in self.maximizer_edge_lists],
            "examined": self.examined,
            "elapsed_ms": self.elapsed_ms,
            "status": self.status,
            "detail": self.detail,
        }


@dataclass(frozen=True)
class TuranVerification:
    n: int
    r: int
    checks: tuple[TuranCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.status == "ok" for c in self.checks)

    def to_json_obj(self) -> dict:
        return {"n": self.n, "r": self.r, "ok": self.ok,
                "checks": [c.to_json_obj(self.n, self.r) for c in self.checks]}


def _all_multipartite_masks(n: int, r: int) -> set[int]:
    """Masks of every labeled complete multipartite graph with exactly r parts."""
    out = set()
    for blocks in set_partitions(n, r):
        if len(blocks) == r:
            out.add(complete_multipartite_mask(n, blocks))
    return out


def verify_turan(n: int, r: int, alphas, tie_tol: float = DEFAULT_TIE_TOL,
                 workers: int | None = None) -> TuranVerification:
    """Check the predicted clique-free maximizers against exhaustive scans.

    Below the boundary alpha = 1 - 1/r the balanced complete r-partite graph
    must be the unique maximizer up to isomorphism; above it, the split graph
    (clique on r-1 vertices joined to the rest); within 1e-12 of the boundary
    every complete r-partite graph must tie at (1 - 1/r) * n.
    """
    if not 2 <= r:
        raise ParameterError("need r >= 2")
    if n < r + 1:
        raise ParameterError("need n > r so the class constraint binds")
    checks = []
    boundary = 1.0 - 1.0 / r
    for alpha in alphas:
        a = check_alpha(alpha)
        if a == 1.0:
            raise ParameterError("verification needs alpha < 1")
        res = maximize_over_class(n, r, a, "clique_free",
                                  tie_tol=tie_tol, workers=workers)
        problems = []
        if abs(a - boundary) <= TURAN_BOUNDARY_EPS:
            regime = "tie"
            expected_radius = boundary * n
            if abs(res.max_radius - expected_radius) > 1e-9:
                problems.append(
                    f"max {res.max_radius!r} differs from {expected_radius!r}")
            expect_masks = _all_multipartite_masks(n, r)
            got_masks = set(res.maximizers)
            if got_masks != expect_masks:
                missing = sorted(expect_masks - got_masks)[:4]
                extra = sorted(got_masks - expect_masks)[:4]
                problems.append(
                    f"tie set mismatch: missing {missing}, extra {extra}")
        else:
            if a < boundary:
                regime = "turan"
                expected = turan(n, r)
                expected_radius = multipartite_radius(turan_part_sizes(n, r), a)
            else:
                regime = "split"
                expected = split(n, r - 1)
                expected_radius = multipartite_radius(
                    [1] * (r - 1) + [n - r + 1], a)
            if abs(res.max_radius - expected_radius) > 1e-8:
                problems.append(
                    f"max {res.max_radius!r} differs from closed form {expected_radius!r}")
            bad = [g for g in res.maximizer_reps if not are_isomorphic(g, expected)]
            if bad:
                problems.append(
                    f"{len(bad)} maximizer class(es) differ from the predicted graph")
        checks.append(TuranCheck(
            alpha=float(a),
            status="ok" if not problems else "counterexample",
            regime=regime,
            max_radius=res.max_radius,
            expected_radius=float(expected_radius),
            maximizer_edge_lists=tuple(g.edges for g in res.maximizer_reps),
            examined=res.candidates_examined,
            elapsed_ms=res.elapsed_seconds * 1000.0,
            detail="; ".join(problems),
        ))
    return TuranVerification(n, r, tuple(checks))


@dataclass(frozen=True)
class MonotonicityReport:
    graph_id: str
    grid: tuple[float, ...]
    ok: bool
    violations: tuple[str, ...]
    strict_margin: float | None  # smallest step increase, connected non-regular only


def monotonicity_check(g: Graph, grid) -> MonotonicityReport:
    """Grid checks of eigenvalue behavior in alpha: monotone, Lipschitz(n),
    top convex, bottom concave, strict growth for connected irregular graphs."""
    alphas = tuple(float(x) for x in grid)
    if len(alphas) < 2:
        raise ParameterError("grid needs at least two alphas")
    if any(b <= a for a, b in zip(alphas, alphas[1:])):
        raise ParameterError("grid must be strictly increasing")
    for a in alphas:
        check_alpha(a)
    tab = np.array([full_spectrum(alpha_matrix(g, a)).values for a in alphas])
    steps = np.diff(np.array(alphas))
    problems = []
    diffs = np.diff(tab, axis=0)
    for i in range(diffs.shape[0]):
        for k in range(g.n):
            d = diffs[i, k]
            if d < -1e-9:
                problems.append(
                    f"lambda_{k + 1} decreased by {-d:.3e} on step {i}")
            excess = abs(d) - steps[i] * g.n
            if excess > 1e-9:
                problems.append(
                    f"lambda_{k + 1} step {i} exceeds the Lipschitz rate by {excess:.3e}")
    if g.n >= 1 and len(alphas) >= 3:
        slopes = diffs / steps[:, np.newaxis]
        hmin = np.minimum(steps[:-1], steps[1:])
        top_curve = (slopes[1:, 0] - slopes[:-1, 0]) * hmin
        bot_curve = (slopes[1:, g.n - 1] - slopes[:-1, g.n - 1]) * hmin
        for i, c in enumerate(top_curve):
            if c < -1e-8:
                problems.append(f"lambda_1 convexity defect {c:.3e} at knot {i + 1}")
        for i, c in enumerate(bot_curve):
            if c > 1e-8:
                problems.append(f"lambda_n concavity defect {c:.3e} at knot {i + 1}")
    margin = None
    if g.n >= 1 and is_connected(g):
        if not g.is_regular():
            margin = float(diffs.min())
            if margin <= 1e-10:
                problems.append(
                    f"irregular connected graph grew by only {margin:.3e}")
        else:
            d = g.max_degree()
            flat = float(np.abs(tab[:, 0] - d).max())
            if flat > 1e-9:
                problems.append(
                    f"regular graph's top eigenvalue moved by {flat:.3e}")
    return MonotonicityReport(
        graph_id=f"graph-n{g.n}-m{g.m}",
        grid=alphas,
        ok=not problems,
        violations=tuple(problems),
        strict_margin=margin,
    )
