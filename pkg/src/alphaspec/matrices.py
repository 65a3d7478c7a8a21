"""Dense symmetric matrix assembly for a graph: adjacency, degree, Laplacians,
and the convex interpolation family M(alpha) = alpha*D + (1-alpha)*A.

Matrices are numpy float64 arrays written symmetrically entry by entry, so
entries (i, j) and (j, i) are always bit-identical.
"""

import json

import numpy as np

from .errors import DimensionError, ParameterError
from .graphs import Graph

MATRIX_KINDS = ("adjacency", "degree", "laplacian", "signless", "alpha")


def check_alpha(alpha: float) -> float:
    alpha = float(alpha)
    if not 0.0 <= alpha <= 1.0:
        raise ParameterError(f"alpha must lie in [0, 1], got {alpha}")
    return alpha


def assemble(g: Graph, kind: str, alpha: float | None = None) -> np.ndarray:
    """Assemble the requested matrix of g as an exactly symmetric float64 array."""
    if kind not in MATRIX_KINDS:
        raise ParameterError(f"unknown matrix kind {kind!r}")
    n = g.n
    mat = np.zeros((n, n))
    deg = g.degrees
    if kind == "adjacency":
        for u, v in g.edges:
            mat[u, v] = mat[v, u] = 1.0
    elif kind == "degree":
        for v in range(n):
            mat[v, v] = float(deg[v])
    elif kind == "laplacian":
        for v in range(n):
            mat[v, v] = float(deg[v])
        for u, v in g.edges:
            mat[u, v] = mat[v, u] = -1.0
    elif kind == "signless":
        for v in range(n):
            mat[v, v] = float(deg[v])
        for u, v in g.edges:
            mat[u, v] = mat[v, u] = 1.0
    else:
        if alpha is None:
            raise ParameterError("kind 'alpha' requires the alpha parameter")
        a = check_alpha(alpha)
        off = 1.0 - a
        for v in range(n):
            mat[v, v] = a * deg[v]
        for u, v in g.edges:
            mat[u, v] = mat[v, u] = off
    return mat


def alpha_matrix(g: Graph, alpha: float) -> np.ndarray:
    return assemble(g, "alpha", alpha)


def identity_residual(g: Graph, alpha: float, beta: float) -> float:
    """Max absolute entry of M(alpha) - M(beta) - (alpha-beta)*L; 0 in exact arithmetic."""
    a = check_alpha(alpha)
    b = check_alpha(beta)
    diff = alpha_matrix(g, a) - alpha_matrix(g, b) - (a - b) * assemble(g, "laplacian")
    return float(np.abs(diff).max()) if g.n else 0.0


def _check_vector(g: Graph, x) -> np.ndarray:
    x = np.asarray(x, dtype=np.float64)
    if x.shape != (g.n,):
        raise DimensionError(f"vector has shape {x.shape}, expected ({g.n},)")
    return x


def quadratic_form(g: Graph, alpha: float, x) -> float:
    """Evaluate x^T M(alpha) x three algebraically equal ways and return the edge form.

    The three routes (per-edge expansion, cut-style regrouping, degree plus
    product split) must agree to roundoff; disagreement means corrupted
    assembly and raises.
    """
    a = check_alpha(alpha)
    x = _check_vector(g, x)
    deg = g.degrees
    q_edge = 0.0
    prodved = 0.0
    square = 0.0
    for u, v in g.edges:
        xu, xv = x[u], x[v]
        q_edge += a * (xu * xu + xv * xv) + 2.0 * (1.0 - a) * xu * xv
        prod = xu * xv
        prodved += prod
        s = xu + xv
        square += s * s
    wdeg = sum(x[v] * x[v] * deg[v] for v in range(g.n))
    q_cut = (2.0 * a - 1.0) * wdeg + (1.0 - a) * square
    q_split = a * wdeg + 2.0 * (1.0 - a) * prodved
    scale = 1e-12 * max(1.0, float(x @ x)) * max(1, g.max_degree())
    if abs(q_edge - q_cut) > scale or abs(q_edge - q_split) > scale:
        raise ArithmeticError(
            f"quadratic form routes disagree: {q_edge}, {q_cut}, {q_split}")
    return q_edge


def vertex_score(g: Graph, alpha: float, x, v: int) -> float:
    """Row v of M(alpha) applied to x: alpha*deg(v)*x_v + (1-alpha)*sum over neighbors."""
    a = check_alpha(alpha)
    x = _check_vector(g, x)
    if not 0 <= v < g.n:
        raise IndexError(f"vertex {v} out of range for n={g.n}")
    return float(a * g.degrees[v] * x[v] + (1.0 - a) * sum(x[w] for w in g.neighbors[v]))


def matrix_to_json(mat: np.ndarray) -> str:
    """Serialize a square matrix as JSON {"n": ..., "rows": [...]}, 17 significant digits."""
    mat = np.asarray(mat, dtype=np.float64)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {mat.shape}")
    n = mat.shape[0]
    rows = ",\n    ".join(
        "[" + ", ".join(format(x, ".17g") for x in row) + "]" for row in mat)
    if n == 0:
        return '{"n": 0, "rows": []}'
    return '{"n": %d, "rows": [\n    %s\n]}' % (n, rows)


def matrix_from_json(text: str) -> np.ndarray:
    doc = json.loads(text)
    n = int(doc["n"])
    mat = np.array(doc["rows"], dtype=np.float64).reshape(n, n)
    return mat
