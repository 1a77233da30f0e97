"""Small simple graphs on at most 64 vertices, with bitset adjacency.

A :class:`Graph` is an immutable value: vertex ``i``'s neighborhood is an
``int`` bitmask, so neighborhood algebra is single-word arithmetic.  All of
the higher machinery (exact coloring, clique packing, composition search,
potential audits) builds on the operations here: induced subgraphs, vertex
identification, the structure of degree-four vertices, a "smaller"
comparison used to order graphs, and an exact canonical form used to
deduplicate isomorphism classes.

Canonical forms are computed by equitable partition refinement plus
backtracking over individualization choices, minimizing the lower-triangle
adjacency certificate.  Exactness is the contract; speed only has to be
good enough for graphs of desk scale (n <= 24 or so).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache

MAX_VERTICES = 64


class InvariantViolation(RuntimeError):
    """A structural fact that is supposed to be impossible failed to hold.

    This is a panic-level error: it means either corrupted input or an
    implementation bug, never a routine precondition failure.
    """


def mask_of(vertices) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits(mask: int) -> list[int]:
    """Set bits of ``mask``, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; ``adj[v]`` is the neighbor bitmask of ``v``.

    ``labels`` carries optional provenance (original vertex ids of a parent
    graph, or synthetic markers); it is ignored by equality and hashing, so
    two graphs with the same structure compare equal regardless of history.
    """

    n: int
    adj: tuple[int, ...]
    labels: tuple | None = field(default=None, compare=False)

    @staticmethod
    def from_edges(n: int, edges, labels=None) -> "Graph":
        if not 1 <= n <= MAX_VERTICES:
            raise ValueError(f"vertex count {n} outside 1..{MAX_VERTICES}")
        rows = [0] * n
        seen = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ValueError(f"duplicate edge ({u},{v})")
            seen.add(key)
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return Graph(n, tuple(rows), tuple(labels) if labels is not None else None)

    def __post_init__(self):
        if not 1 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count {self.n} outside 1..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length differs from vertex count")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"adjacency row {v} references missing vertices")
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")
        if self.labels is not None and len(self.labels) != self.n:
            raise ValueError("labels length differs from vertex count")

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return bits(self.adj[v])

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            row = self.adj[u] >> (u + 1)
            for off in bits(row):
                out.append((u, u + 1 + off))
        return out

    def label(self, v: int):
        return self.labels[v] if self.labels is not None else v

    def vertex_set(self) -> frozenset:
        return frozenset(range(self.n))


def with_edge(G: Graph, u: int, v: int) -> Graph:
    if u == v:
        raise ValueError("loop")
    if G.has_edge(u, v):
        raise ValueError(f"edge ({u},{v}) already present")
    rows = list(G.adj)
    rows[u] |= 1 << v
    rows[v] |= 1 << u
    return Graph(G.n, tuple(rows), G.labels)


def without_edge(G: Graph, u: int, v: int) -> Graph:
    if not G.has_edge(u, v):
        raise ValueError(f"edge ({u},{v}) not present")
    rows = list(G.adj)
    rows[u] &= ~(1 << v)
    rows[v] &= ~(1 << u)
    return Graph(G.n, tuple(rows), G.labels)


def induced_subgraph(G: Graph, R) -> Graph:
    """The subgraph induced on vertex set ``R``.

    Vertices are renumbered compactly in ascending order of their old index;
    the result's ``labels`` carry the original labels so callers can map
    back.
    """
    R = sorted(set(R))
    if not R:
        raise ValueError("empty vertex set")
    if R[0] < 0 or R[-1] >= G.n:
        raise ValueError("vertex set not contained in the graph")
    pos = {v: i for i, v in enumerate(R)}
    rows = [0] * len(R)
    rmask = mask_of(R)
    for v in R:
        for u in bits(G.adj[v] & rmask):
            rows[pos[v]] |= 1 << pos[u]
    return Graph(len(R), tuple(rows), tuple(G.label(v) for v in R))


def delete_vertices(G: Graph, S) -> Graph:
    keep = sorted(set(range(G.n)) - set(S))
    if not keep:
        raise ValueError("cannot delete every vertex")
    return induced_subgraph(G, keep)


def identify_vertices(G: Graph, S) -> Graph:
    """Merge the vertices of ``S`` into one, dropping parallel edges.

    Identification is only defined for pairwise nonadjacent sets (merging
    adjacent vertices would create a loop); adjacency inside ``S`` is an
    error.  The merged vertex takes the position of ``min(S)`` and keeps its
    label.
    """
    G2, _ = identify_vertices_with_map(G, S)
    return G2


def identify_vertices_with_map(G: Graph, S) -> tuple[Graph, dict[int, int]]:
    S = sorted(set(S))
    if not S:
        raise ValueError("empty vertex set")
    if S[0] < 0 or S[-1] >= G.n:
        raise ValueError("vertex set not contained in the graph")
    smask = mask_of(S)
    for v in S:
        if G.adj[v] & smask:
            raise ValueError("identifying adjacent vertices")
    target = S[0]
    keep = [v for v in range(G.n) if v == target or not smask >> v & 1]
    pos = {v: i for i, v in enumerate(keep)}
    merged = 0
    for v in S:
        merged |= G.adj[v]
    merged &= ~smask
    rows = [0] * len(keep)
    for v in keep:
        row = merged if v == target else G.adj[v]
        for u in bits(row):
            new_u = pos[target] if smask >> u & 1 else pos[u]
            if new_u != pos[v]:
                rows[pos[v]] |= 1 << new_u
                rows[new_u] |= 1 << pos[v]
    mapping = {v: pos[target] if smask >> v & 1 else pos[v] for v in range(G.n)}
    return Graph(len(keep), tuple(rows), tuple(G.label(v) for v in keep)), mapping


def connected_components(G: Graph, within=None) -> list[frozenset[int]]:
    todo = mask_of(within) if within is not None else (1 << G.n) - 1
    comps = []
    while todo:
        start = todo & -todo
        comp = start
        frontier = start
        while frontier:
            grow = 0
            for v in bits(frontier):
                grow |= G.adj[v]
            frontier = grow & todo & ~comp
            comp |= frontier
        comps.append(frozenset(bits(comp)))
        todo &= ~comp
    return comps


def is_connected(G: Graph) -> bool:
    return len(connected_components(G)) == 1


@dataclass(frozen=True)
class D4Report:
    """Connected components of the subgraph induced by degree-four vertices.

    ``singles`` and ``pairs`` count the components of size one and two; the
    discharging arithmetic consumes exactly those two numbers.
    """

    components: tuple[frozenset[int], ...]
    singles: int
    pairs: int


def d4_components(G: Graph) -> D4Report:
    d4 = [v for v in range(G.n) if G.degree(v) == 4]
    if not d4:
        return D4Report((), 0, 0)
    comps = connected_components(G, within=d4)
    comps = tuple(sorted(comps, key=lambda c: (len(c), min(c))))
    singles = sum(1 for c in comps if len(c) == 1)
    pairs = sum(1 for c in comps if len(c) == 2)
    return D4Report(comps, singles, pairs)


@dataclass(frozen=True)
class Cluster:
    vertices: frozenset[int]
    closed_neighborhood: frozenset[int]


def clusters(G: Graph) -> list[Cluster]:
    """Maximal sets of degree-four vertices sharing a closed neighborhood.

    Only degree-four vertices belong to clusters; a graph without them has
    no clusters at all.  Grouping by the closed-neighborhood bitmask makes
    maximality automatic.
    """
    groups: dict[int, list[int]] = {}
    for v in range(G.n):
        if G.degree(v) == 4:
            groups.setdefault(G.adj[v] | 1 << v, []).append(v)
    out = [
        Cluster(frozenset(vs), frozenset(bits(closed)))
        for closed, vs in groups.items()
    ]
    out.sort(key=lambda c: (-len(c.vertices), min(c.vertices)))
    return out


class Ordering(Enum):
    H_SMALLER = "H_smaller"
    G_SMALLER = "G_smaller"
    EQUAL_RANK = "equal_rank"


def cluster_size_sequence(G: Graph) -> tuple[int, ...]:
    return tuple(sorted((len(c.vertices) for c in clusters(G)), reverse=True))


def compare_smaller(G: Graph, H: Graph) -> Ordering:
    """Order two graphs: fewer vertices, then MORE edges, then cluster sizes.

    The tie on cluster sizes compares the sequences sorted in decreasing
    order, lexicographically, padding the shorter sequence with zeros; the
    zero-padding convention is ours and is exercised by the tests.
    """
    if H.n != G.n:
        return Ordering.H_SMALLER if H.n < G.n else Ordering.G_SMALLER
    if H.m != G.m:
        return Ordering.H_SMALLER if H.m > G.m else Ordering.G_SMALLER
    sg, sh = cluster_size_sequence(G), cluster_size_sequence(H)
    width = max(len(sg), len(sh))
    sg = sg + (0,) * (width - len(sg))
    sh = sh + (0,) * (width - len(sh))
    if sh < sg:
        return Ordering.H_SMALLER
    if sg < sh:
        return Ordering.G_SMALLER
    return Ordering.EQUAL_RANK


# ---------------------------------------------------------------------------
# Canonical form
# ---------------------------------------------------------------------------


def _refine(adj: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    """Equitable refinement of an ordered partition, deterministically.

    Cells split by the vector of neighbor counts into every current cell;
    sub-cells are ordered by that vector, so the refined partition depends
    only on the input partition and the graph, never on list order quirks.
    """
    while True:
        masks = [mask_of(c) for c in cells]
        new_cells: list[list[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            by_sig: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                sig = tuple((adj[v] & m).bit_count() for m in masks)
                by_sig.setdefault(sig, []).append(v)
            if len(by_sig) > 1:
                changed = True
            for sig in sorted(by_sig):
                new_cells.append(by_sig[sig])
        cells = new_cells
        if not changed:
            return cells


def _is_homogeneous(adj: tuple[int, ...], cells: list[list[int]]) -> bool:
    # For an equitable partition, per-cell neighbor counts are uniform, so a
    # single representative per cell decides complete-or-empty structure.
    masks = [mask_of(c) for c in cells]
    for i, c in enumerate(cells):
        if len(c) == 1:
            continue
        v = c[0]
        k = (adj[v] & masks[i]).bit_count()
        if k not in (0, len(c) - 1):
            return False
        for j, d in enumerate(cells):
            if i == j or len(d) == 1:
                continue
            k = (adj[v] & masks[j]).bit_count()
            if k not in (0, len(d)):
                return False
    return True


def _cert_rows(adj: tuple[int, ...], perm: list[int]) -> tuple[int, ...]:
    rows = []
    for i, v in enumerate(perm):
        r = 0
        row = adj[v]
        for j in range(i):
            r = (r << 1) | (row >> perm[j] & 1)
        rows.append(r)
    return tuple(rows)


@lru_cache(maxsize=1 << 16)
def canonical_form(G: Graph) -> tuple[bytes, tuple[int, ...]]:
    """Canonical key plus a witnessing vertex order.

    Returns ``(key, order)`` where ``order[i]`` is the original vertex
    placed at canonical position ``i``.  Keys of two graphs are equal
    exactly when the graphs are isomorphic; composing the orders of two
    graphs with equal keys yields an explicit isomorphism.
    """
    adj = G.adj
    n = G.n
    best: list = [None, None]  # cert rows, perm

    def search(cells: list[list[int]]):
        cells = _refine(adj, cells)
        prefix: list[int] = []
        for c in cells:
            if len(c) != 1:
                break
            prefix.append(c[0])
        pref = _cert_rows(adj, prefix)
        if best[0] is not None and pref > best[0][: len(pref)]:
            return
        if len(prefix) == n:
            if best[0] is None or pref < best[0]:
                best[0], best[1] = pref, prefix
            return
        if _is_homogeneous(adj, cells):
            perm = list(itertools.chain.from_iterable(cells))
            cert = _cert_rows(adj, perm)
            if best[0] is None or cert < best[0]:
                best[0], best[1] = cert, perm
            return
        idx = next(i for i, c in enumerate(cells) if len(c) > 1)
        cell = cells[idx]
        for v in cell:
            rest = [w for w in cell if w != v]
            search(cells[:idx] + [[v], rest] + cells[idx + 1 :])

    search([list(range(n))])
    cert, perm = best
    blob = bytearray([n])
    for i, r in enumerate(cert):
        if i:
            blob += r.to_bytes((i + 7) // 8, "big")
    return bytes(blob), tuple(perm)


def canonical_key(G: Graph) -> bytes:
    return canonical_form(G)[0]


def isomorphism_from_canonical(G: Graph, H: Graph) -> dict[int, int] | None:
    """An explicit isomorphism G -> H if their canonical keys agree."""
    kg, og = canonical_form(G)
    kh, oh = canonical_form(H)
    if kg != kh:
        return None
    inv = {v: i for i, v in enumerate(og)}
    return {v: oh[inv[v]] for v in range(G.n)}


# ---------------------------------------------------------------------------
# Text formats
# ---------------------------------------------------------------------------


def graph_to_text(G: Graph) -> str:
    """Bit-exact text format: ``n m`` then one ``u v`` line per edge.

    Edges are listed with u < v, ascending lexicographically, so the output
    of a given graph is unique.
    """
    lines = [f"{G.n} {G.m}"]
    lines += [f"{u} {v}" for u, v in G.edges()]
    return "\n".join(lines) + "\n"


def graph_from_text(text: str) -> Graph:
    lines = text.splitlines()
    if not lines:
        raise ValueError("empty graph text")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError("line 1: expected 'n m'")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise ValueError("line 1: expected two integers") from None
    edges = []
    for i, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {i}: expected 'u v'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ValueError(f"line {i}: expected two integers") from None
        if not u < v:
            raise ValueError(f"line {i}: edges must satisfy u < v")
        if edges and (u, v) <= edges[-1]:
            raise ValueError(f"line {i}: edges out of order")
        edges.append((u, v))
    if len(edges) != m:
        raise ValueError(f"declared {m} edges, found {len(edges)}")
    return Graph.from_edges(n, edges)


def graph_to_graph6(G: Graph) -> str:
    if G.n <= 62:
        head = chr(G.n + 63)
    else:
        head = "~" + "".join(
            chr(((G.n >> s) & 63) + 63) for s in (12, 6, 0)
        )
    bits_out = []
    for v in range(1, G.n):
        for u in range(v):
            bits_out.append(G.adj[u] >> v & 1)
    while len(bits_out) % 6:
        bits_out.append(0)
    chars = []
    for i in range(0, len(bits_out), 6):
        val = 0
        for b in bits_out[i : i + 6]:
            val = val << 1 | b
        chars.append(chr(val + 63))
    return head + "".join(chars)


def graph_from_graph6(line: str) -> Graph:
    s = line.strip()
    if s.startswith(">>graph6<<"):
        s = s[10:]
    if not s:
        raise ValueError("empty graph6 string")
    if s[0] == "~":
        if len(s) < 4:
            raise ValueError("truncated graph6 header")
        n = 0
        for ch in s[1:4]:
            n = n << 6 | (ord(ch) - 63)
        body = s[4:]
    else:
        n = ord(s[0]) - 63
        body = s[1:]
    if not 1 <= n <= MAX_VERTICES:
        raise ValueError(f"graph6 order {n} outside 1..{MAX_VERTICES}")
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise ValueError(f"graph6 body has {len(body)} chars, expected {need}")
    stream = []
    for ch in body:
        val = ord(ch) - 63
        if not 0 <= val <= 63:
            raise ValueError(f"invalid graph6 character {ch!r}")
        stream += [(val >> s) & 1 for s in (5, 4, 3, 2, 1, 0)]
    edges = []
    i = 0
    for v in range(1, n):
        for u in range(v):
            if stream[i]:
                edges.append((u, v))
            i += 1
    return Graph.from_edges(n, edges)
