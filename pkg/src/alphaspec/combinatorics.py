"""Exact combinatorial subroutines at desk scale: cliques, coloring, cuts,
distances, orbits, isomorphism, and labeled graph enumeration.

Everything here is exhaustive and deterministic; documented size caps raise
CapacityError instead of silently degrading.
"""

import itertools

import numpy as np

from .errors import CapacityError, ParameterError
from .graphs import Graph, edge_order

ENUMERATION_MAX_VERTICES = 8
MAXCUT_MAX_VERTICES = 24
ORBITS_MAX_VERTICES = 10
CHROMATIC_DEFAULT_LIMIT = 16


def has_clique(g: Graph, k: int) -> bool:
    """Exact test for a complete subgraph on k vertices (backtracking on bitsets)."""
    if k <= 0:
        return True
    if k == 1:
        return g.n >= 1
    if k > g.n:
        return False
    adj = g.adjacency_bits
    order = sorted(range(g.n), key=lambda v: g.degrees[v], reverse=True)

    def extend(size: int, cand: int) -> bool:
        if size == k:
            return True
        # not enough candidates left to finish the clique
        if size + bin(cand).count("1") < k:
            return False
        while cand:
            v = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            if extend(size + 1, cand & adj[v]):
                return True
        return False

    full = 0
    for v in order:
        if g.degrees[v] >= k - 1:
            full |= 1 << v
    for v in order:
        if g.degrees[v] < k - 1:
            continue
        if extend(1, adj[v] & full & ~((1 << (v + 1)) - 1)):
            return True
    return False


def is_clique_free(g: Graph, clique_size: int) -> bool:
    """True when g contains no complete subgraph on clique_size vertices."""
    if clique_size < 2:
        raise ParameterError("clique size must be at least 2")
    return not has_clique(g, clique_size)


def max_clique_size(g: Graph) -> int:
    k = 0
    while k < g.n and has_clique(g, k + 1):
        k += 1
    return k


def _colorable(g: Graph, k: int) -> bool:
    if k >= g.n:
        return True
    order = sorted(range(g.n), key=lambda v: g.degrees[v], reverse=True)
    color = {}

    def assign(i: int, used: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        banned = {color[w] for w in g.neighbors[v] if w in color}
        # allowing one fresh color per step breaks color-permutation symmetry
        for c in range(min(used + 1, k)):
            if c in banned:
                continue
            color[v] = c
            if assign(i + 1, max(used, c + 1)):
                return True
            del color[v]
        return False

    return assign(0, 0)


def chromatic_number(g: Graph, limit: int = CHROMATIC_DEFAULT_LIMIT) -> int:
    """Exact chromatic number by branch and bound from a clique lower bound."""
    if g.n > limit:
        raise CapacityError(f"chromatic number limited to n <= {limit}, got n={g.n}")
    if g.n == 0:
        return 0
    k = max_clique_size(g)
    while not _colorable(g, k):
        k += 1
    return k


def maxcut(g: Graph) -> int:
    """Maximum number of crossing edges over all vertex bipartitions (exact)."""
    if g.n > MAXCUT_MAX_VERTICES:
        raise CapacityError(f"maxcut limited to n <= {MAXCUT_MAX_VERTICES}, got n={g.n}")
    if g.n <= 1 or g.m == 0:
        return 0
    # vertex n-1 pinned to one side; scan assignments of the rest in chunks
    total = 1 << (g.n - 1)
    best = 0
    chunk = 1 << 20
    for start in range(0, total, chunk):
        masks = np.arange(start, min(start + chunk, total), dtype=np.int64)
        cuts = np.zeros(masks.shape, dtype=np.int32)
        for u, v in g.edges:
            cuts += ((masks >> u ^ masks >> v) & 1).astype(np.int32)
        best = max(best, int(cuts.max()))
    return best


def diameter(g: Graph):
    """Largest BFS eccentricity, or None when g is disconnected (n >= 2)."""
    if g.n <= 1:
        return 0
    far = 0
    for src in range(g.n):
        dist = [-1] * g.n
        dist[src] = 0
        queue = [src]
        head = 0
        while head < len(queue):
            u = queue[head]
            head += 1
            for w in g.neighbors[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        if len(queue) < g.n:
            return None
        far = max(far, max(dist))
    return far


def _find_automorphism(g: Graph, pin_from: int, pin_to: int):
    """Backtracking search for an automorphism mapping pin_from to pin_to."""
    n = g.n
    deg = g.degrees
    if deg[pin_from] != deg[pin_to]:
        return None
    order = [pin_from] + [v for v in range(n) if v != pin_from]
    image = [-1] * n
    used = [False] * n

    def consistent(v: int, w: int) -> bool:
        for u in range(n):
            if image[u] >= 0 and g.has_edge(u, v) != g.has_edge(image[u], w):
                return False
        return True

    def place(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        candidates = [pin_to] if v == pin_from else range(n)
        for w in candidates:
            if used[w] or deg[w] != deg[v] or not consistent(v, w):
                continue
            image[v] = w
            used[w] = True
            if place(i + 1):
                return True
            image[v] = -1
            used[w] = False
        return False

    return tuple(image) if place(0) else None


def vertex_orbits(g: Graph) -> tuple[tuple[int, ...], ...]:
    """Automorphism orbits of the vertex set, each sorted, ordered by minimum."""
    if g.n > ORBITS_MAX_VERTICES:
        raise CapacityError(f"orbits limited to n <= {ORBITS_MAX_VERTICES}, got n={g.n}")
    parent = list(range(g.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u in range(g.n):
        for v in range(u + 1, g.n):
            if find(u) == find(v):
                continue
            if _find_automorphism(g, u, v) is not None:
                parent[find(v)] = find(u)
    groups = {}
    for v in range(g.n):
        groups.setdefault(find(v), []).append(v)
    return tuple(tuple(sorted(vs)) for _, vs in sorted(groups.items()))


def are_isomorphic(g: Graph, h: Graph) -> bool:
    """Exact isomorphism test by backtracking (intended for small n)."""
    if g.n != h.n or g.m != h.m:
        return False
    if sorted(g.degrees) != sorted(h.degrees):
        return False
    n = g.n
    if n == 0:
        return True
    degg, degh = g.degrees, h.degrees
    order = sorted(range(n), key=lambda v: degg[v], reverse=True)
    image = [-1] * n
    used = [False] * n

    def place(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        for w in range(n):
            if used[w] or degh[w] != degg[v]:
                continue
            ok = True
            for j in range(i):
                u = order[j]
                if g.has_edge(u, v) != h.has_edge(image[u], w):
                    ok = False
                    break
            if not ok:
                continue
            image[v] = w
            used[w] = True
            if place(i + 1):
                return True
            image[v] = -1
            used[w] = False
        return False

    return place(0)


def enumerate_graphs(n: int, predicate=None, start: int = 0, stop=None):
    """Yield every labeled graph on n vertices in edge-bitmask order.

    The bitmask interval [start, stop) supports range splitting for parallel
    scans. An optional predicate filters the yielded graphs (it does not
    shrink the scan, so the n <= 8 cap applies regardless).
    """
    if n > ENUMERATION_MAX_VERTICES:
        raise CapacityError(
            f"enumeration limited to n <= {ENUMERATION_MAX_VERTICES}, got n={n}")
    if n < 0:
        raise ParameterError("vertex count must be nonnegative")
    order = edge_order(n)
    total = 1 << len(order)
    if stop is None:
        stop = total
    if not (0 <= start <= stop <= total):
        raise ParameterError("bad bitmask range")
    nbits = len(order)
    for mask in range(start, stop):
        edges = tuple(order[i] for i in range(nbits) if mask >> i & 1)
        g = Graph(n, edges)
        if predicate is None or predicate(g):
            yield g


def clique_edge_masks(n: int, k: int) -> list[int]:
    """Edge bitmask of every k-vertex clique on 0..n-1, in subset order."""
    index = {pair: i for i, pair in enumerate(edge_order(n))}
    out = []
    for sub in itertools.combinations(range(n), k):
        mask = 0
        for pair in itertools.combinations(sub, 2):
            mask |= 1 << index[pair]
        out.append(mask)
    return out


def complete_multipartite_mask(n: int, blocks) -> int:
    """Edge bitmask of the complete multipartite graph with the given vertex blocks."""
    index = {pair: i for i, pair in enumerate(edge_order(n))}
    block_of = {}
    for b, vs in enumerate(blocks):
        for v in vs:
            block_of[v] = b
    mask = 0
    for (u, v), i in index.items():
        if block_of[u] != block_of[v]:
            mask |= 1 << i
    return mask


def set_partitions(n: int, max_blocks: int):
    """Partitions of 0..n-1 into at most max_blocks nonempty blocks.

    Deterministic order; blocks are tuples sorted by first element.
    """
    if n == 0:
        yield ()
        return

    def rec(i: int, blocks: list[list[int]]):
        if i == n:
            yield tuple(tuple(b) for b in blocks)
            return
        for b in blocks:
            b.append(i)
            yield from rec(i + 1, blocks)
            b.pop()
        if len(blocks) < max_blocks:
            blocks.append([i])
            yield from rec(i + 1, blocks)
            blocks.pop()

    yield from rec(0, [])


def integer_partitions(n: int, max_parts: int):
    """Partitions of n into at most max_parts parts, each >= 1, weakly decreasing."""

    def rec(remaining: int, cap: int, parts: list[int]):
        if remaining == 0:
            yield tuple(parts)
            return
        if len(parts) == max_parts:
            return
        for p in range(min(cap, remaining), 0, -1):
            parts.append(p)
            yield from rec(remaining - p, p, parts)
            parts.pop()

    yield from rec(n, n, [])
