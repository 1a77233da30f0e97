"""Exact k-coloring, 5-criticality, and collapsibility checks.

The solver is a saturation-first backtracking search over bitmask color
domains.  Completeness is the whole point: a ``None`` answer is a proof
that no proper k-coloring exists, and everything downstream (criticality,
identifiable pairs, collapsibility, critical extensions) leans on that.

Symmetry is broken two ways, both sound for the decision problem: a
greedily found clique is precolored with distinct colors, and a fresh
color may only be introduced as the lowest unused one.  Vertex choice is
smallest remaining domain (equivalently largest saturation), ties to the
lowest index, so runs are deterministic.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache

from .graph_core import (
    Graph,
    InvariantViolation,
    bits,
    connected_components,
    delete_vertices,
    identify_vertices,
    induced_subgraph,
    mask_of,
    with_edge,
    without_edge,
)


def _greedy_clique(g: Graph) -> list[int]:
    # Seed at a lowest-index vertex of maximum degree, grow by maximum
    # degree inside the common neighborhood.  Any deterministic clique works.
    if g.n == 0:
        return []
    start = max(range(g.n), key=lambda v: (g.degree(v), -v))
    clique = [start]
    cand = g.adj[start]
    while cand:
        u = max(bits(cand), key=lambda v: ((g.adj[v] & cand).bit_count(), -v))
        clique.append(u)
        cand &= g.adj[u]
    return clique


def _solve_component(g: Graph, k: int) -> list[int] | None:
    n = g.n
    clique = _greedy_clique(g)
    if len(clique) > k:
        return None
    full = (1 << k) - 1
    domain = [full] * n
    color = [0] * n
    uncolored = (1 << n) - 1

    def assign(v: int, c: int, touched: list[int]) -> bool:
        nonlocal uncolored
        color[v] = c
        uncolored &= ~(1 << v)
        bit = 1 << (c - 1)
        for u in bits(g.adj[v] & uncolored):
            if domain[u] & bit:
                domain[u] &= ~bit
                touched.append(u)
                if not domain[u]:
                    return False
        return True

    def undo(v: int, touched: list[int], c: int):
        nonlocal uncolored
        color[v] = 0
        uncolored |= 1 << v
        bit = 1 << (c - 1)
        for u in touched:
            domain[u] |= bit

    used = 0
    for i, v in enumerate(clique):
        touched: list[int] = []
        if not assign(v, i + 1, touched):
            return None
        used = i + 1

    def dfs(used: int) -> bool:
        if not uncolored:
            return True
        best_v, best_size = -1, k + 1
        for v in bits(uncolored):
            size = domain[v].bit_count()
            if size == 0:
                return False
            if size < best_size:
                best_v, best_size = v, size
        cap = (1 << min(used + 1, k)) - 1
        avail = domain[best_v] & cap
        while avail:
            low = avail & -avail
            avail ^= low
            c = low.bit_length()
            touched: list[int] = []
            ok = assign(best_v, c, touched)
            if ok and dfs(max(used, c)):
                return True
            undo(best_v, touched, c)
        return False

    if not dfs(used):
        return None
    return color


@lru_cache(maxsize=1 << 15)
def is_k_colorable(G: Graph, k: int) -> tuple[int, ...] | None:
    """A proper k-coloring as a tuple of colors 1..k, or None.

    ``None`` is an exhaustive-search verdict, not a heuristic one.  Every
    returned coloring is re-checked for properness before leaving.
    """
    if k < 1:
        raise ValueError("k must be positive")
    colors = [0] * G.n
    for comp in connected_components(G):
        sub = induced_subgraph(G, comp)
        res = _solve_component(sub, k)
        if res is None:
            return None
        for i, v in enumerate(sorted(comp)):
            colors[v] = res[i]
    out = tuple(colors)
    _check_proper(G, out, k)
    return out


def _check_proper(G: Graph, colors: tuple[int, ...], k: int):
    for v in range(G.n):
        if not 1 <= colors[v] <= k:
            raise InvariantViolation("solver produced an out-of-range color")
        for u in bits(G.adj[v]):
            if colors[u] == colors[v]:
                raise InvariantViolation("solver produced an improper coloring")


def seeded_coloring(G: Graph, k: int, rng: random.Random) -> tuple[int, ...] | None:
    """Some proper k-coloring, chosen by a seeded shuffle of the search.

    Used to sample varied colorings for extension fuzzing; same rng state,
    same answer.  Complete: returns None only when no coloring exists.
    """
    order = list(range(G.n))
    rng.shuffle(order)
    color = [0] * G.n

    def dfs(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        forbidden = {color[u] for u in bits(G.adj[v]) if color[u]}
        cs = [c for c in range(1, k + 1) if c not in forbidden]
        rng.shuffle(cs)
        for c in cs:
            color[v] = c
            if dfs(i + 1):
                return True
        color[v] = 0
        return False

    if not dfs(0):
        return None
    out = tuple(color)
    _check_proper(G, out, k)
    return out


def is_5_critical(G: Graph) -> bool:
    """Not 4-colorable, and every single-edge deletion is 4-colorable.

    Together with the absence of isolated vertices this is equivalent to
    "every proper subgraph is 4-colorable": a subgraph missing an edge e
    sits inside G - e, and a subgraph missing only vertices misses an
    isolated vertex.  Vertices of degree 1..3 cannot occur in a 5-critical
    graph (their removal plus greedy extension would 4-color G), so the
    degree prefilter below is a sound fast path.
    """
    if G.n < 5:
        return False
    if any(G.degree(v) < 4 for v in range(G.n)):
        return False
    if is_k_colorable(G, 4) is not None:
        return False
    for u, v in G.edges():
        if is_k_colorable(without_edge(G, u, v), 4) is None:
            return False
    return True


def extract_5_critical(G: Graph) -> Graph:
    """A 5-critical subgraph of a non-4-colorable graph.

    Scans edges once in descending index order, deleting any edge whose
    removal keeps the graph non-4-colorable; colorability of a subgraph is
    monotone under further deletion, so one pass reaches an edge-minimal
    non-4-colorable graph.  Isolated vertices are dropped at the end.  The
    result's labels point back at G's vertices.
    """
    if is_k_colorable(G, 4) is not None:
        raise ValueError("graph is 4-colorable; nothing to extract")
    cur = G if G.labels is not None else Graph(G.n, G.adj, tuple(range(G.n)))
    for u, v in reversed(cur.edges()):
        attempt = without_edge(cur, u, v)
        if is_k_colorable(attempt, 4) is None:
            cur = attempt
    keep = [v for v in range(cur.n) if cur.degree(v) > 0]
    cur = induced_subgraph(cur, keep)
    if not is_5_critical(cur):
        raise InvariantViolation("extraction failed to produce a 5-critical graph")
    return cur


def identifiable_pairs(G: Graph, R) -> list[tuple[int, int]]:
    """Nonadjacent pairs in R whose identification is not 4-colorable.

    A pair u,v is identifiable in R when G[R] + uv has no proper
    4-coloring, i.e. every 4-coloring of G[R] gives u and v one color.
    R must be a proper subset of the vertices.
    """
    R = sorted(set(R))
    if len(R) >= G.n:
        raise ValueError("R must be a proper subset of the vertices")
    sub = induced_subgraph(G, R)
    pos = {v: i for i, v in enumerate(R)}
    out = []
    for i, u in enumerate(R):
        for v in R[i + 1 :]:
            if G.has_edge(u, v):
                continue
            if is_k_colorable(with_edge(sub, pos[u], pos[v]), 4) is None:
                out.append((u, v))
    return out


def boundary(G: Graph, R) -> tuple[int, ...]:
    """Vertices of R with at least one neighbor outside R."""
    rmask = mask_of(R)
    return tuple(v for v in sorted(set(R)) if G.adj[v] & ~rmask)


@dataclass(frozen=True)
class CollapseReport:
    collapsible: bool
    boundary: tuple[int, ...]
    splitting_coloring: dict[int, int] | None
    checked_pairs: tuple[tuple[int, int], ...]
    tight: bool | None


def is_collapsible(G: Graph, R) -> CollapseReport:
    """Does every 4-coloring of G[R] color the boundary monochromatically?

    Equivalent formulation, and the one actually checked: the boundary is
    independent and every boundary pair is identifiable in R.  A negative
    answer carries a witness coloring splitting some boundary pair; a
    single-vertex boundary is collapsible by convention.  The ``tight``
    flag records whether each G[R] + uv is itself 5-critical; it is
    computed for positive answers and not consumed anywhere yet.
    """
    R = sorted(set(R))
    if len(R) < 5:
        raise ValueError("R must have at least 5 vertices")
    if len(R) >= G.n:
        raise ValueError("R must be a proper subset of the vertices")
    sub = induced_subgraph(G, R)
    base = is_k_colorable(sub, 4)
    if base is None:
        raise ValueError("G[R] must be 4-colorable")
    bnd = boundary(G, R)
    if not bnd:
        raise ValueError("R has empty boundary")
    pos = {v: i for i, v in enumerate(R)}
    if len(bnd) == 1:
        return CollapseReport(True, bnd, None, (), True)
    checked = []
    for i, u in enumerate(bnd):
        for v in bnd[i + 1 :]:
            if G.has_edge(u, v):
                # adjacent boundary vertices always split
                witness = {w: base[pos[w]] for w in R}
                return CollapseReport(False, bnd, witness, tuple(checked), None)
            split = is_k_colorable(with_edge(sub, pos[u], pos[v]), 4)
            if split is not None:
                witness = {w: split[pos[w]] for w in R}
                return CollapseReport(False, bnd, witness, tuple(checked), None)
            checked.append((u, v))
    tight = all(
        is_5_critical(with_edge(sub, pos[u], pos[v])) for u, v in checked
    )
    return CollapseReport(True, bnd, None, tuple(checked), tight)


def critical_complement(G: Graph, R) -> tuple[Graph, int]:
    """Identify a collapsible set's boundary to one vertex, drop the rest.

    The returned graph W keeps G's labels outside R; the merged special
    vertex sits at index 0 with label -1.  For 5-critical G the complement
    is itself 5-critical, and that is verified here.
    """
    rep = is_collapsible(G, R)
    if not rep.collapsible:
        raise ValueError("R is not collapsible")
    R = sorted(set(R))
    rmask = mask_of(R)
    outside = [v for v in range(G.n) if not rmask >> v & 1]
    attach = 0
    for v in rep.boundary:
        attach |= G.adj[v] & ~rmask
    pos = {v: i + 1 for i, v in enumerate(outside)}
    edges = []
    for v in outside:
        if attach >> v & 1:
            edges.append((0, pos[v]))
        for u in bits(G.adj[v] & ~rmask):
            if u > v:
                edges.append((pos[v], pos[u]))
    labels = (-1,) + tuple(G.label(v) for v in outside)
    W = Graph.from_edges(len(outside) + 1, edges, labels)
    if not is_5_critical(W):
        raise InvariantViolation(
            "complement of a collapsible set in a 5-critical graph "
            "must be 5-critical"
        )
    return W, 0
