import random

import pytest

from orelab import (
    DELTA,
    EPS,
    KY_CORE_COST,
    P_GAP,
    Q_GAP,
    InvariantViolation,
    Rat21,
    complete_graph,
    critical_complement,
    critical_extension,
    cycle_graph,
    f_core,
    induced_subgraph,
    is_collapsible,
    named_graph,
    ore_collapsible_subsets,
    p_ky,
    p_ky_set,
    phi_identify,
    potential,
    potential_set,
    random_extension,
    seeded_coloring,
    structure_lemma_audit,
    verify_extension_inequalities,
    verify_main_theorem,
    verify_ore5_bounds,
)
from orelab.graph_core import cluster_size_sequence


def one_three(doubles):
    return next(
        (g, r) for g, r in doubles if cluster_size_sequence(g) == (3, 3, 1, 1)
    )


# --- exact arithmetic ---------------------------------------------------------


def test_rat21_arithmetic():
    a, b = Rat21(5), Rat21(-7)
    assert (a + b).num == -2
    assert (a - b).num == 12
    assert (-a).num == -5
    assert (3 * a).num == 15 and (a * 3).num == 15
    assert Rat21.whole(4) == Rat21(84)
    assert str(Rat21(94)) == "94/21"
    assert Rat21(1) < Rat21(2) <= Rat21(2) < Rat21(44)
    assert sorted([Rat21(3), Rat21(-1), Rat21(0)]) == [
        Rat21(-1),
        Rat21(0),
        Rat21(3),
    ]


def test_rat21_rejects_non_integer_factors():
    with pytest.raises(TypeError):
        Rat21(1) * 0.5
    with pytest.raises(TypeError):
        Rat21(1) * Rat21(2)


def test_constants():
    assert (EPS.num, DELTA.num, P_GAP.num, Q_GAP.num) == (1, 8, 48, 8)


def test_f_core_values_and_range():
    assert [f_core(x).num for x in (1, 2, 3, 4)] == [190, 296, 318, 256]
    assert KY_CORE_COST == {1: 9, 2: 14, 3: 15, 4: 12}
    for bad in (0, 5, -1):
        with pytest.raises(ValueError):
            f_core(bad)


# --- potentials ---------------------------------------------------------------


def test_p_ky_values(doubles):
    assert p_ky(complete_graph(5)) == 5
    for g, _ in doubles:
        assert p_ky(g) == 5
    assert p_ky(named_graph("c5_join_k2")) == -1
    assert p_ky(named_graph("k1_join_groetzsch")) == -16
    assert p_ky(named_graph("mycielski_groetzsch")) == -77


def test_potential_values(doubles):
    assert potential(complete_graph(5)) == Rat21(94)
    for g, _ in doubles:
        assert potential(g) == Rat21(82)
    assert potential(named_graph("c5_join_k2")) == Rat21(-30)
    assert potential(named_graph("k1_join_groetzsch")) == Rat21(-332)
    assert potential(named_graph("mycielski_groetzsch")) == Rat21(-1594)


def test_set_potentials_match_induced_subgraph(doubles):
    g, _ = doubles[0]
    for R in ([0, 1, 2, 3, 4], [1, 3, 5, 7, 8], list(range(6))):
        sub = induced_subgraph(g, R)
        assert p_ky_set(g, R) == p_ky(sub)
        assert potential_set(g, R) == potential(sub)


# --- identification -----------------------------------------------------------


def test_phi_identify_shape(doubles):
    g, recipe = one_three(doubles)
    R = list(range(5))
    colors = seeded_coloring(induced_subgraph(g, R), 4, random.Random(0))
    phi = {v: colors[i] for i, v in enumerate(R)}
    H, classes = phi_identify(g, R, phi)
    assert classes == (0, 1, 2, 3)
    assert H.n == g.n - len(R) + 4
    assert H.labels[:4] == (-1, -2, -3, -4)
    assert H.labels[4:] == (5, 6, 7, 8)
    # identifying the filled block forces its boundary pair together
    assert phi[0] == phi[1]
    for i in range(4):
        for j in range(i + 1, 4):
            assert H.has_edge(i, j)


def test_phi_identify_rejects_bad_input(doubles):
    g, _ = doubles[0]
    good_r = list(range(5))
    colors = seeded_coloring(induced_subgraph(g, good_r), 4, random.Random(0))
    phi = {v: colors[i] for i, v in enumerate(good_r)}
    with pytest.raises(ValueError, match="at least 5"):
        phi_identify(g, range(4), {v: 1 for v in range(4)})
    with pytest.raises(ValueError, match="proper subset"):
        phi_identify(g, range(g.n), {v: 1 for v in range(g.n)})
    with pytest.raises(ValueError, match="exactly"):
        phi_identify(g, good_r, {v: phi[v] for v in good_r[:-1]})
    with pytest.raises(ValueError, match="outside 1..4"):
        phi_identify(g, good_r, {**phi, 0: 5})
    bad = dict(phi)
    bad[2] = bad[3]
    with pytest.raises(ValueError, match="not proper"):
        phi_identify(g, good_r, bad)


def test_identification_panics_on_non_critical_host():
    C9 = cycle_graph(9)
    phi = {0: 1, 1: 2, 2: 1, 3: 2, 4: 1}
    with pytest.raises(InvariantViolation):
        critical_extension(C9, range(5), phi)


# --- critical extensions --------------------------------------------------------


def block_extension(g, seed=0):
    R = list(range(5))
    colors = seeded_coloring(induced_subgraph(g, R), 4, random.Random(seed))
    phi = {v: colors[i] for i, v in enumerate(R)}
    return critical_extension(g, R, phi)


def test_edge_block_extension_is_total_with_tiny_core(doubles):
    for g, _ in doubles:
        rec = block_extension(g)
        assert rec.core_size == 1
        assert rec.complete and rec.spanning and rec.total
        assert rec.empty_classes == ()
        assert rec.expanded == g.vertex_set()
        # the extender reassembles the vertex side: merged class vertex
        # plus the four vertices outside the block, i.e. K5 again
        assert rec.extender.n == 5
        from orelab import canonical_key

        assert canonical_key(rec.extender) == canonical_key(complete_graph(5))


def test_extension_inequalities_frozen_slacks(doubles):
    g, _ = one_three(doubles)
    rep = verify_extension_inequalities(block_extension(g))
    assert rep.ok
    by_name = {c.name: c for c in rep.checks}
    assert by_name["ky-extension"].slack21 == 0
    assert by_name["refined-extension"].slack21 == 0
    assert by_name["coarse-extension"].slack21 == 8
    line = rep.lines()[0]
    assert line.startswith("CHECK ky-extension ") and line.endswith(" PASS slack=0/21")


def test_extension_with_empty_class():
    g = named_graph("c5_join_k2")
    phi = {0: 1, 1: 2, 2: 1, 3: 2, 4: 3}  # rim cycle, three colors
    rec = critical_extension(g, range(5), phi)
    assert rec.empty_classes == (4,)
    assert 4 not in rec.core_classes
    assert verify_extension_inequalities(rec).ok


def test_collapsible_subsets_extend_totally(doubles):
    # one direction of the collapsibility/extension correspondence
    for g, _ in doubles:
        for R in ore_collapsible_subsets(g):
            order = sorted(R)
            for seed in range(8):
                colors = seeded_coloring(
                    induced_subgraph(g, order), 4, random.Random(seed)
                )
                phi = {v: colors[i] for i, v in enumerate(order)}
                rec = critical_extension(g, order, phi)
                assert rec.total and rec.core_size == 1


def test_splitting_colorings_break_totality(doubles):
    # and the converse: a coloring splitting the boundary cannot extend
    # to a total extension with a single-class core
    hit = False
    for g, _ in doubles:
        rep = is_collapsible(g, range(6))
        if rep.collapsible:
            continue
        hit = True
        phi = rep.splitting_coloring
        rec = critical_extension(g, range(6), phi)
        assert not (rec.total and rec.core_size == 1)
    assert hit


def test_complement_potential_bound(doubles):
    # exact form of the collapse/complement interplay: for Ore-collapsible
    # R, p(R) >= p(G) - p(W) + 9 + eps - delta with W the complement
    gap = Rat21.whole(9) + EPS - DELTA
    for g, _ in doubles:
        for R in ore_collapsible_subsets(g):
            W, _ = critical_complement(g, R)
            lhs = potential_set(g, R)
            rhs = potential(g) - potential(W) + gap
            assert lhs >= rhs
    g, _ = one_three(doubles)
    R = frozenset(range(5))
    W, _ = critical_complement(g, R)
    assert potential_set(g, R) == Rat21(178)
    assert potential(g) - potential(W) + gap == Rat21(170)


def test_random_extension_fuzz_never_violates(doubles):
    rng = random.Random(1)
    graphs = [g for g, _ in doubles] + [named_graph("c5_join_k2")]
    for g in graphs:
        for _ in range(40):
            rec = random_extension(g, rng)
            assert rec.core_size >= 1
            rep = verify_extension_inequalities(rec)
            assert rep.ok, rep.render()


def test_random_extension_needs_room():
    with pytest.raises(ValueError):
        random_extension(complete_graph(5), random.Random(0))


# --- theorem-shaped verifiers ---------------------------------------------------


def test_main_theorem_on_k5():
    rep = verify_main_theorem(complete_graph(5))
    assert rep.ok
    assert [c.name for c in rep.checks] == ["main-case-k5"]
    assert rep.checks[0].slack21 == 0


def test_main_theorem_on_doubles_is_tight(doubles):
    for g, _ in doubles:
        rep = verify_main_theorem(g)
        assert rep.ok
        assert [c.name for c in rep.checks] == ["main-case-ore"]
        assert rep.checks[0].slack21 == 0


def test_main_theorem_on_non_ore_witnesses():
    for name, slack in (
        ("c5_join_k2", 87),
        ("k1_join_groetzsch", 389),
        ("mycielski_groetzsch", 1651),
    ):
        rep = verify_main_theorem(named_graph(name))
        assert rep.ok
        assert rep.checks[0].name == "main-case-other"
        assert rep.checks[0].slack21 == slack


def test_main_theorem_triangle_free_row():
    rep = verify_main_theorem(named_graph("mycielski_groetzsch"))
    rows = {c.name: c for c in rep.checks}
    assert "triangle-free-edges" in rows
    assert rows["triangle-free-edges"].ok
    assert rows["triangle-free-edges"].note == "slack=1699/84"
    rep2 = verify_main_theorem(named_graph("c5_join_k2"))
    assert all(c.name != "triangle-free-edges" for c in rep2.checks)


def test_main_theorem_rejects_non_critical():
    with pytest.raises(ValueError):
        verify_main_theorem(named_graph("groetzsch"))


def test_ore5_bounds_on_k5():
    rep = verify_ore5_bounds(complete_graph(5))
    by_name = {c.name: c for c in rep.checks}
    assert rep.ok
    assert by_name["ore5-ky-upper"].slack21 == 0
    assert by_name["ore5-low-ky-collapsible"].note == "subsets=0"


def test_ore5_bounds_sweep_on_doubles(doubles):
    for g, _ in doubles:
        rep = verify_ore5_bounds(g)
        by_name = {c.name: c for c in rep.checks}
        assert rep.ok
        assert by_name["ore5-low-ky-collapsible"].note == "subsets=255"


def test_ore5_bounds_budget_caps_the_sweep(doubles):
    g, _ = doubles[0]
    rep = verify_ore5_bounds(g, subset_budget=10)
    by_name = {c.name: c for c in rep.checks}
    assert by_name["ore5-low-ky-collapsible"].note == "subsets=10"


def test_ore5_bounds_on_non_ore_graph():
    rep = verify_ore5_bounds(named_graph("c5_join_k2"))
    assert rep.ok
    assert [c.name for c in rep.checks] == ["ore5-ky-upper", "ore5-equivalence"]
    assert rep.checks[0].slack21 == 126


# --- the observational audit ----------------------------------------------------


def test_structure_audit_rows_on_k5():
    rows = structure_lemma_audit(complete_graph(5))
    names = [name for name, _, _ in rows]
    assert names == [
        "no-identifiable-pair-in-proper-subset",
        "no-cluster-size-ge-2",
        "d4-components-le-2",
        "deg5-matched-deg4-le-1",
        "no-k5-minus-e",
        "ungemmed",
        "three-connected",
    ]
    by_name = {name: ok for name, ok, _ in rows}
    assert by_name["no-identifiable-pair-in-proper-subset"]
    assert not by_name["no-cluster-size-ge-2"]
    assert not by_name["d4-components-le-2"]
    assert by_name["deg5-matched-deg4-le-1"]
    assert not by_name["no-k5-minus-e"]
    assert not by_name["ungemmed"]
    assert by_name["three-connected"]


def test_structure_audit_rows_on_c5_join_k2():
    rows = structure_lemma_audit(named_graph("c5_join_k2"))
    by_name = {name: ok for name, ok, _ in rows}
    assert by_name["ungemmed"]
    # two consecutive rim vertices, the rim vertex between their far
    # neighbors, and both apexes span K5 minus an edge
    assert not by_name["no-k5-minus-e"]
    assert by_name["three-connected"]


def test_structure_audit_double_not_three_connected(doubles):
    g, _ = one_three(doubles)
    by_name = {name: ok for name, ok, _ in structure_lemma_audit(g)}
    assert not by_name["three-connected"]
    assert not by_name["ungemmed"]
