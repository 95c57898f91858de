import pytest

from hlnet import (
    SearchLimits,
    boundary_edges,
    build_component_cut,
    component_edge_connectivity,
    components_after,
    extremal_edge_count,
    g84,
    hypercube,
    isomorphic_small,
    materialize,
    max_induced_edges,
    min_component_edge_cut,
    random_hl,
    save_partition,
)


def naive_min_cut(graph, parts):
    """Unpruned restricted-growth enumeration; the slow cross-check."""
    total = graph.vertex_count
    edges = list(graph.edges())
    best = None
    assign = []

    def rec(i, used):
        nonlocal best
        if total - i < parts - used:
            return
        if i == total:
            if used == parts:
                cost = sum(1 for u, v in edges if assign[u] != assign[v])
                if best is None or cost < best:
                    best = cost
            return
        for b in range(min(used + 1, parts)):
            assign.append(b)
            rec(i + 1, used + 1 if b == used else used)
            assign.pop()

    rec(0, 0)
    return best


# --- max induced edges --------------------------------------------------------


def test_max_edges_q3_half(q3):
    result = max_induced_edges(q3, 4)
    assert result.value == 4
    assert result.status == "complete"
    assert len(result.witness) == 4


def test_max_edges_q4_seven(q4):
    result = max_induced_edges(q4, 7)
    assert result.value == 9
    assert result.status == "complete"


def test_max_edges_degenerate(q3):
    assert max_induced_edges(q3, 1).value == 0
    full = max_induced_edges(q3, 8)
    assert full.value == 12 and full.witness == tuple(range(8))
    with pytest.raises(ValueError):
        max_induced_edges(q3, 0)
    with pytest.raises(ValueError):
        max_induced_edges(q3, 9)


def test_max_edges_witness_attains_value(g84_graph):
    for k in range(1, 9):
        result = max_induced_edges(g84_graph, k)
        inner = sum(
            1
            for u in result.witness
            for v in g84_graph.neighbors(u)
            if v in set(result.witness)
        )
        assert inner // 2 == result.value


def test_max_edges_budget_incomplete(q4):
    result = max_induced_edges(q4, 8, SearchLimits(max_nodes_expanded=3))
    assert result.status == "incomplete"
    assert result.value <= max_induced_edges(q4, 8).value


def test_time_budget_zero_is_exhausted_immediately(q4):
    result = max_induced_edges(q4, 8, SearchLimits(time_budget=0.0))
    assert result.status == "incomplete"
    # the incumbent is still a valid lower bound with a real witness
    assert len(result.witness) == 8


@pytest.mark.parametrize("n", [2, 3])
@pytest.mark.parametrize("seed", [None, 0, 1])
def test_max_edges_equals_formula(n, seed):
    recipe = hypercube(n) if seed is None else random_hl(n, seed)
    graph = materialize(recipe)
    for k in range(1, (1 << n) + 1):
        assert max_induced_edges(graph, k).value == extremal_edge_count(k)


# --- min component edge cut -----------------------------------------------------


def test_min_cut_q3_known_values(q3):
    assert min_component_edge_cut(q3, 2).value == 3
    assert min_component_edge_cut(q3, 3).value == 5


def test_min_cut_degenerate(q3):
    assert min_component_edge_cut(q3, 1).value == 0
    assert min_component_edge_cut(q3, 8).value == 12
    with pytest.raises(ValueError):
        min_component_edge_cut(q3, 9)
    with pytest.raises(ValueError):
        min_component_edge_cut(q3, 0)


@pytest.mark.parametrize(
    "make", [lambda: hypercube(3), g84, lambda: random_hl(3, 5), lambda: random_hl(3, 6)]
)
@pytest.mark.parametrize("parts", [2, 3, 4, 5])
def test_min_cut_matches_naive(make, parts):
    graph = materialize(make())
    assert min_component_edge_cut(graph, parts).value == naive_min_cut(graph, parts)


def test_min_cut_witness_consistent(g84_graph):
    result = min_component_edge_cut(g84_graph, 3)
    blocks = result.witness.blocks
    assert len(blocks) == 3
    flat = sorted(v for b in blocks for v in b)
    assert flat == list(range(8))
    cross = {
        (u, v)
        for u, v in g84_graph.edges()
        if next(i for i, b in enumerate(blocks) if u in b)
        != next(i for i, b in enumerate(blocks) if v in b)
    }
    assert cross == set(result.witness.cross_edges)
    assert len(cross) == result.value


def test_min_cut_below_construction_bound(q3, g84_graph):
    for graph in (q3, g84_graph):
        for g in range(1, 8):
            bound = component_edge_connectivity(3, g, "permissive").value
            assert min_component_edge_cut(graph, g + 1).value <= bound


def test_min_cut_budget_incomplete(q4):
    result = min_component_edge_cut(q4, 4, SearchLimits(max_nodes_expanded=2))
    assert result.status == "incomplete"
    assert result.value >= min_component_edge_cut(q4, 4).value


def test_min_cut_deterministic(q4):
    a = min_component_edge_cut(q4, 3)
    b = min_component_edge_cut(q4, 3)
    assert a == b


def test_oracles_are_label_invariant(q4):
    # scrambling labels ruins the prefix incumbents; answers must not move
    from hlnet.recipes import Graph

    perm = [9, 2, 14, 5, 0, 11, 7, 12, 3, 15, 6, 1, 13, 4, 10, 8]
    adj = [[] for _ in range(16)]
    for u, v in q4.edges():
        adj[perm[u]].append(perm[v])
        adj[perm[v]].append(perm[u])
    scrambled = Graph(4, tuple(tuple(sorted(a)) for a in adj))
    for k in (3, 5, 7, 11):
        assert max_induced_edges(scrambled, k).value == extremal_edge_count(k)
    for parts in (2, 3, 4):
        assert (
            min_component_edge_cut(scrambled, parts).value
            == min_component_edge_cut(q4, parts).value
        )


# --- components after removal ----------------------------------------------------


def test_components_no_removal(q3):
    witness = components_after(q3, set())
    assert witness.blocks == (tuple(range(8)),)
    assert witness.cross_edges == frozenset()


def test_components_star_removal(q3, g84_graph):
    for graph in (q3, g84_graph):
        star = boundary_edges(graph, [0])
        witness = components_after(graph, star)
        assert witness.blocks == ((0,), tuple(range(1, 8)))
        assert witness.cross_edges == frozenset(star)


def test_components_after_built_cut():
    for n, g in ((8, 9), (9, 16), (10, 31)):
        recipe = random_hl(n, n)
        cut = build_component_cut(recipe, g)
        witness = components_after(materialize(recipe), cut)
        singletons = sum(1 for b in witness.blocks if len(b) == 1)
        assert singletons == g
        assert len(witness.blocks) >= g + 1


def test_components_rejects_non_edge(q3):
    with pytest.raises(ValueError, match="not an edge"):
        components_after(q3, {(0, 3)})


def test_removed_edge_inside_component_is_not_cross(q4):
    # drop one 4-cycle face; everything stays connected
    face = {(0, 1), (1, 3), (2, 3), (0, 2)}
    witness = components_after(q4, face)
    assert len(witness.blocks) == 1
    assert witness.cross_edges == frozenset()


# --- isomorphism ------------------------------------------------------------------


def test_iso_identity(q3):
    assert isomorphic_small(q3, q3)


def test_iso_q3_vs_g84(q3, g84_graph):
    assert not isomorphic_small(q3, g84_graph)
    assert not isomorphic_small(g84_graph, q3)


def test_iso_under_relabeling(q3):
    from hlnet.recipes import Graph

    perm = [3, 7, 0, 5, 1, 6, 2, 4]
    adj = [[] for _ in range(8)]
    for u, v in q3.edges():
        adj[perm[u]].append(perm[v])
        adj[perm[v]].append(perm[u])
    shuffled = Graph(3, tuple(tuple(sorted(a)) for a in adj))
    assert isomorphic_small(q3, shuffled)


def test_iso_counts_differ(q3):
    assert not isomorphic_small(q3, materialize(hypercube(2)))


def test_iso_size_limit():
    big = materialize(hypercube(5))
    with pytest.raises(ValueError, match="16"):
        isomorphic_small(big, big)


def test_dim3_classification(q3, g84_graph):
    for seed in range(10):
        graph = materialize(random_hl(3, seed))
        assert isomorphic_small(graph, q3) != isomorphic_small(graph, g84_graph)


# --- witness export -----------------------------------------------------------


def test_partition_export(tmp_path, q3):
    result = min_component_edge_cut(q3, 2)
    path = tmp_path / "partition.txt"
    save_partition(result.witness, path)
    lines = path.read_text().splitlines()
    assert lines[0] == "# partition blocks=2 cross=3"
    assert lines[1] == "0 1 2 3 4 5 6"
    assert lines[2] == "7"
