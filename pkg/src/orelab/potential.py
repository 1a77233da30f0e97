"""Exact potential arithmetic and the extension machinery.

Two potentials drive everything.  The classical one is p_ky = 9n - 4m.
The refined one perturbs it by eps = 1/21 per vertex and charges delta =
8/21 per unit of clique-packing weight:

    p = (9 + eps) n - 4 m - delta T.

Every constant in sight is an integer multiple of 1/21, so values are
carried as plain integer numerators over a fixed denominator of 21
(:class:`Rat21`); there is no floating point anywhere.

The identification construction takes a proper subset R and a proper
4-coloring phi of G[R], contracts each color class to a single vertex,
adds a K4 on the four class vertices, and keeps the rest of G.  For a
5-critical G the identified graph is never 4-colorable, so it contains a
5-critical subgraph W; the pair (W, core = W's class vertices) is a
critical extension of R, and the inequalities relating the potentials of
R, W, and the expanded set R' are what the fuzzing campaigns check.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass
from math import comb

from . import coloring as col
from . import ore
from . import packing
from .graph_core import (
    Graph,
    InvariantViolation,
    bits,
    canonical_key,
    induced_subgraph,
    mask_of,
)
from .report import Report


@dataclass(frozen=True, order=True)
class Rat21:
    """An exact rational with fixed denominator 21."""

    num: int

    def __add__(self, other: "Rat21") -> "Rat21":
        return Rat21(self.num + other.num)

    def __sub__(self, other: "Rat21") -> "Rat21":
        return Rat21(self.num - other.num)

    def __neg__(self) -> "Rat21":
        return Rat21(-self.num)

    def __mul__(self, k: int) -> "Rat21":
        if not isinstance(k, int):
            return NotImplemented
        return Rat21(self.num * k)

    __rmul__ = __mul__

    def __str__(self) -> str:
        return f"{self.num}/21"

    @staticmethod
    def whole(k: int) -> "Rat21":
        return Rat21(21 * k)


EPS = Rat21(1)        # 1/21
DELTA = Rat21(8)      # 8 * eps
P_GAP = Rat21(48)     # 6 * delta
Q_GAP = Rat21(8)      # delta


def short_key(G: Graph) -> str:
    """A filename-safe fingerprint of the isomorphism class."""
    return hashlib.sha256(canonical_key(G)).hexdigest()[:16]


def p_ky(G: Graph) -> int:
    """The classical potential 9n - 4m (an integer)."""
    return 9 * G.n - 4 * G.m


def p_ky_set(G: Graph, R) -> int:
    return p_ky(induced_subgraph(G, R))


def potential(G: Graph) -> Rat21:
    """(9 + eps) n - 4 m - delta T(G), exactly."""
    t, _ = packing.t_number(G)
    return Rat21(190 * G.n - 84 * G.m - 8 * t)


def potential_set(G: Graph, R) -> Rat21:
    return potential(induced_subgraph(G, R))


def f_core(x: int) -> Rat21:
    """Cost charged for a core of size x: 9x - 4*C(x,2) + x*eps."""
    if not 1 <= x <= 4:
        raise ValueError("core size must be between 1 and 4")
    return Rat21(190 * x - 84 * comb(x, 2))


KY_CORE_COST = {1: 9, 2: 14, 3: 15, 4: 12}


def phi_identify(G: Graph, R, phi: dict[int, int]) -> tuple[Graph, tuple[int, int, int, int]]:
    """Contract phi's color classes over R and add a K4 on them.

    The class vertices occupy indices 0..3 (labels -1..-4); the remaining
    vertices of G follow in ascending order, labeled with their original
    ids.  All four class vertices are materialized even when a class is
    empty; an empty class yields a degree-3 vertex seeing only the K4 and
    can never participate in a 5-critical subgraph.
    """
    R = sorted(set(R))
    if len(R) < 5:
        raise ValueError("R must have at least 5 vertices")
    if len(R) >= G.n:
        raise ValueError("R must be a proper subset of the vertices")
    if set(phi) != set(R):
        raise ValueError("phi must color exactly the vertices of R")
    for v in R:
        if phi[v] not in (1, 2, 3, 4):
            raise ValueError(f"color {phi[v]} of vertex {v} outside 1..4")
        for u in bits(G.adj[v]):
            if u in phi and phi[u] == phi[v]:
                raise ValueError(f"phi is not proper on G[R]: edge ({u},{v})")
    class_mask = [0, 0, 0, 0]
    for v in R:
        class_mask[phi[v] - 1] |= 1 << v
    outside = [v for v in range(G.n) if v not in phi]
    pos = {v: 4 + i for i, v in enumerate(outside)}
    edges = [(i, j) for i in range(4) for j in range(i + 1, 4)]
    for v in outside:
        for i in range(4):
            if G.adj[v] & class_mask[i]:
                edges.append((i, pos[v]))
        for u in bits(G.adj[v]):
            if u in pos and u > v:
                edges.append((pos[v], pos[u]))
    # labels refer back to the host: -1..-4 for the class vertices, the
    # host vertex index for everything kept
    labels = (-1, -2, -3, -4) + tuple(outside)
    H = Graph.from_edges(4 + len(outside), sorted(edges), labels)
    if H.n != G.n - len(R) + 4:
        raise InvariantViolation("identified graph has the wrong order")
    return H, (0, 1, 2, 3)


@dataclass(frozen=True)
class ExtensionRecord:
    """One critical extension: who extended, with what, and how cleanly.

    ``extender`` is a 5-critical subgraph of the identified graph; its
    labels are the identified graph's labels (-1..-4 for class vertices,
    original ids otherwise).  ``core_classes`` lists the colors whose
    class vertices survived into the extender.
    """

    host: Graph
    subset: frozenset[int]
    phi: tuple[tuple[int, int], ...]
    identified: Graph
    extender: Graph
    core_classes: tuple[int, ...]
    expanded: frozenset[int]
    complete: bool
    spanning: bool
    empty_classes: tuple[int, ...]

    @property
    def core_size(self) -> int:
        return len(self.core_classes)

    @property
    def total(self) -> bool:
        return self.complete and self.spanning


def critical_extension(G: Graph, R, phi: dict[int, int]) -> ExtensionRecord:
    """Extract a critical extension of R along phi.

    The identified graph of a proper subset of a 5-critical graph is never
    4-colorable; a 4-coloring here would be a structural impossibility and
    raises :class:`InvariantViolation` rather than returning.
    """
    R = frozenset(R)
    H, _ = phi_identify(G, R, phi)
    if col.is_k_colorable(H, 4) is not None:
        raise InvariantViolation(
            "identified graph of a proper subset is 4-colorable; "
            "the host graph cannot be 5-critical"
        )
    W = col.extract_5_critical(H)
    core_classes = tuple(sorted(-lab for lab in W.labels if lab < 0))
    real = [v for v in range(W.n) if W.labels[v] >= 0]
    expanded = frozenset(W.labels[v] for v in real) | R
    class_mask = [0, 0, 0, 0]
    for v, c in phi.items():
        class_mask[c - 1] |= 1 << v
    empty = tuple(i + 1 for i in range(4) if not class_mask[i])
    core_pos = {-W.labels[v]: v for v in range(W.n) if W.labels[v] < 0}
    complete = True
    # a kept vertex must spend one extender-core edge per host neighbor in R
    for v in real:
        orig = W.labels[v]
        in_r = (G.adj[orig] & mask_of(R)).bit_count()
        in_core = sum(1 for c in core_classes if W.has_edge(v, core_pos[c]))
        if in_r > in_core:
            complete = False
    # no host edge between kept vertices may be dropped by the extender
    for i, v in enumerate(real):
        for u in real[i + 1 :]:
            if G.has_edge(W.labels[v], W.labels[u]) and not W.has_edge(v, u):
                complete = False
    # the surviving class vertices must form a clique in the extender
    for i, c in enumerate(core_classes):
        for d in core_classes[i + 1 :]:
            if not W.has_edge(core_pos[c], core_pos[d]):
                complete = False
    spanning = expanded == G.vertex_set()
    return ExtensionRecord(
        host=G,
        subset=R,
        phi=tuple(sorted(phi.items())),
        identified=H,
        extender=W,
        core_classes=core_classes,
        expanded=expanded,
        complete=complete,
        spanning=spanning,
        empty_classes=empty,
    )


def verify_extension_inequalities(rec: ExtensionRecord) -> Report:
    """Exact slack of the three extension inequalities for one record.

    With x = core size, R' = expanded set, W = extender:

      ky-extension:     p_ky(R') <= p_ky(R) + p_ky(W) - {9,14,15,12}[x]
      refined-extension: p(R') <= p(R) + p(W) - f(x) + delta (T(W) - T(W - core))
      coarse-extension:  p(R') <= p(R) + p(W) - 9 - eps + delta
    """
    G = rec.host
    key = short_key(G)
    rep = Report()
    x = rec.core_size
    if x == 0:
        raise InvariantViolation("extension with empty core")
    W = rec.extender
    ky_r = p_ky_set(G, rec.subset)
    ky_rp = p_ky_set(G, rec.expanded)
    ky_w = p_ky(W)
    slack_ky = (ky_r + ky_w - KY_CORE_COST[x]) - ky_rp
    rep.add("ky-extension", key, slack_ky >= 0, 21 * slack_ky)
    p_r = potential_set(G, rec.subset)
    p_rp = potential_set(G, rec.expanded)
    p_w = potential(W)
    t_w, _ = packing.t_number(W)
    core_idx = [v for v in range(W.n) if W.labels[v] < 0]
    if len(core_idx) == W.n:
        raise InvariantViolation("extender contains only class vertices")
    w_minus_core = induced_subgraph(W, [v for v in range(W.n) if W.labels[v] >= 0])
    t_wc, _ = packing.t_number(w_minus_core)
    rhs = p_r + p_w - f_core(x) + DELTA * (t_w - t_wc)
    slack_ref = rhs - p_rp
    rep.add("refined-extension", key, slack_ref.num >= 0, slack_ref.num)
    rhs2 = p_r + p_w - Rat21.whole(9) - EPS + DELTA
    slack_coarse = rhs2 - p_rp
    rep.add("coarse-extension", key, slack_coarse.num >= 0, slack_coarse.num)
    return rep


def random_extension(G: Graph, rng: random.Random) -> ExtensionRecord:
    """A seeded random extension record of a 5-critical graph.

    Picks a proper subset of size >= 5 and a random proper 4-coloring of it
    (always exists: proper subgraphs of a 5-critical graph are 4-colorable).
    """
    if G.n < 6:
        raise ValueError("graph too small to have a proper subset of size 5")
    size = rng.randint(5, G.n - 1)
    R = sorted(rng.sample(range(G.n), size))
    sub = induced_subgraph(G, R)
    colors = col.seeded_coloring(sub, 4, rng)
    if colors is None:
        raise InvariantViolation("proper subgraph of a 5-critical graph must be 4-colorable")
    phi = {v: colors[i] for i, v in enumerate(R)}
    return critical_extension(G, R, phi)


# ---------------------------------------------------------------------------
# Theorem-shaped verifiers
# ---------------------------------------------------------------------------


def verify_main_theorem(G: Graph) -> Report:
    """Case analysis of the refined potential of a 5-critical graph.

    K5 attains exactly (105 + 5 - 16)/21 = 94/21.  Other 5-Ore graphs obey
    p <= 5 + n eps - (2 + (n-1)/4) delta.  Everything else falls to
    p <= 5 - 48/21.  Triangle-free graphs additionally satisfy the edge
    bound 84 m >= 190 n - 105.
    """
    if not col.is_5_critical(G):
        raise ValueError("main-theorem verifier requires a 5-critical graph")
    key = short_key(G)
    rep = Report()
    p = potential(G)
    recipe = ore.is_5_ore(G)
    if G.n == 5:
        rep.add("main-case-k5", key, p == Rat21(94), p.num - 94)
    elif recipe is not None:
        # 5-Ore orders are 1 mod 4, so the bound is an exact Rat21
        bound = Rat21(105 + G.n) - DELTA * (2 + (G.n - 1) // 4)
        slack = bound - p
        rep.add("main-case-ore", key, slack.num >= 0, slack.num)
    else:
        bound = Rat21.whole(5) - P_GAP
        slack = bound - p
        rep.add("main-case-other", key, slack.num >= 0, slack.num)
    if not packing.triangles(G):
        slack84 = 84 * G.m - (190 * G.n - 105)
        rep.add("triangle-free-edges", key, slack84 >= 0, note=f"slack={slack84}/84")
    return rep


def verify_ore5_bounds(G: Graph, subset_budget: int = 1 << 18) -> Report:
    """Potential bounds around the 5-Ore class for one 5-critical graph.

    Checks p_ky <= 5, and that p_ky >= 3 exactly for 5-Ore graphs.  For
    5-Ore graphs, additionally sweeps proper subsets R with |R| >= 5 (up
    to ``subset_budget`` masks, ascending) and checks that p_ky(R) < 12
    forces R collapsible with p_ky(R) = 9.
    """
    if not col.is_5_critical(G):
        raise ValueError("ore5 verifier requires a 5-critical graph")
    key = short_key(G)
    rep = Report()
    ky = p_ky(G)
    rep.add("ore5-ky-upper", key, ky <= 5, 21 * (5 - ky))
    recipe = ore.is_5_ore(G)
    rep.add(
        "ore5-equivalence",
        key,
        (ky >= 3) == (recipe is not None),
        note="ky>=3-iff-5-ore",
    )
    if recipe is None:
        return rep
    n = G.n
    checked = 0
    sound = True
    worst = None
    full = (1 << n) - 1
    for mask in range(1, full):
        if checked >= subset_budget:
            break
        if mask.bit_count() < 5:
            continue
        checked += 1
        edges2 = 0
        for v in bits(mask):
            edges2 += (G.adj[v] & mask).bit_count()
        kyr = 9 * mask.bit_count() - 2 * edges2
        if kyr >= 12:
            continue
        R = bits(mask)
        report = col.is_collapsible(G, R)
        if not (report.collapsible and kyr == 9):
            sound = False
            worst = R
            break
    note = f"subsets={checked}" + (f" violation={worst}" if worst else "")
    rep.add("ore5-low-ky-collapsible", key, sound, note=note)
    return rep


def structure_lemma_audit(G: Graph) -> list[tuple[str, bool, str]]:
    """Observational truth table of minimum-counterexample predicates.

    These statements are proved for hypothetical minimal counterexamples
    only, so on real graphs they are reported, never asserted.  Rows are
    (predicate, holds, detail).
    """
    from .graph_core import clusters, d4_components

    rows: list[tuple[str, bool, str]] = []
    pair = _identifiable_pair_in_proper_subset(G)
    rows.append(
        (
            "no-identifiable-pair-in-proper-subset",
            pair is None,
            f"pair={pair}" if pair else "",
        )
    )
    cl = clusters(G)
    big = max((len(c.vertices) for c in cl), default=0)
    rows.append(("no-cluster-size-ge-2", big < 2, f"max-cluster={big}"))
    comps = d4_components(G).components
    bigc = max((len(c) for c in comps), default=0)
    rows.append(("d4-components-le-2", bigc <= 2, f"max-component={bigc}"))
    worst = 0
    for v in range(G.n):
        if G.degree(v) != 5:
            continue
        matched = 0
        for u in bits(G.adj[v]):
            if G.degree(u) == 4 and any(
                G.degree(t) == 4 for t in bits(G.adj[u])
            ):
                matched += 1
        worst = max(worst, matched)
    rows.append(("deg5-matched-deg4-le-1", worst <= 1, f"max-matched={worst}"))
    rows.append(("no-k5-minus-e", not _has_k5_minus_e(G), ""))
    gem = ore.gems(G)
    rows.append(
        (
            "ungemmed",
            gem.ungemmed,
            f"diamonds={len(gem.diamonds)} emeralds={len(gem.emeralds)}",
        )
    )
    rows.append(("three-connected", _is_three_connected(G), ""))
    return rows


def _identifiable_pair_in_proper_subset(G: Graph):
    # Colorability is monotone under taking subgraphs, so a pair is
    # identifiable in some proper subset iff it is identifiable in some
    # vertex-deleted subgraph.
    from .graph_core import delete_vertices, with_edge

    for u in range(G.n):
        for v in range(u + 1, G.n):
            if G.has_edge(u, v):
                continue
            for w in range(G.n):
                if w in (u, v):
                    continue
                H = delete_vertices(G, [w])
                uu = u - (1 if w < u else 0)
                vv = v - (1 if w < v else 0)
                if col.is_k_colorable(with_edge(H, uu, vv), 4) is None:
                    return (u, v, w)
    return None


def _has_k5_minus_e(G: Graph) -> bool:
    # five vertices carrying at least 9 of the 10 possible edges: the two
    # endpoints of the (possibly missing) edge plus a common-neighbor triple
    for u in range(G.n):
        for v in range(u + 1, G.n):
            cand = bits(G.adj[u] & G.adj[v])
            for i, a in enumerate(cand):
                for j in range(i + 1, len(cand)):
                    b = cand[j]
                    for c in cand[j + 1 :]:
                        inner = (
                            G.has_edge(a, b) + G.has_edge(a, c) + G.has_edge(b, c)
                        )
                        if G.has_edge(u, v):
                            if inner >= 2:
                                return True
                        elif inner == 3:
                            return True
    return False


def _is_three_connected(G: Graph) -> bool:
    from .graph_core import delete_vertices, is_connected

    if G.n < 4:
        return False
    if not is_connected(G):
        return False
    for u in range(G.n):
        for v in range(u + 1, G.n):
            if not is_connected(delete_vertices(G, [u, v])):
                return False
    return True
