import io

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hlnet import (
    Recipe,
    RecipeError,
    boundary_edges,
    compose,
    dumps_recipe,
    g84,
    hypercube,
    induced_edge_count,
    isomorphic_small,
    leaf,
    load_graph,
    load_recipe,
    loads_recipe,
    materialize,
    random_hl,
    save_graph,
    save_recipe,
    split,
)

Q4 = materialize(hypercube(4))
G84 = materialize(g84())


def two_color(graph):
    """True iff the graph has no odd cycle."""
    color = [-1] * graph.vertex_count
    for start in range(graph.vertex_count):
        if color[start] >= 0:
            continue
        color[start] = 0
        stack = [start]
        while stack:
            u = stack.pop()
            for w in graph.neighbors(u):
                if color[w] < 0:
                    color[w] = color[u] ^ 1
                    stack.append(w)
                elif color[w] == color[u]:
                    return False
    return True


# --- compose / split ------------------------------------------------------


def test_compose_two_leaves_gives_k2():
    r = compose(leaf(), leaf(), [0])
    assert r.dim == 1
    g = materialize(r)
    assert g.vertex_count == 2 and g.edge_count == 1


def test_compose_identity_c4_halves_gives_q3(q3):
    c4 = hypercube(2)
    g = materialize(compose(c4, c4, [0, 1, 2, 3]))
    assert isomorphic_small(g, q3)


def test_compose_rejects_short_matching():
    c4 = hypercube(2)
    with pytest.raises(RecipeError, match="length 3"):
        compose(c4, c4, [0, 1, 2])


def test_compose_rejects_dim_mismatch():
    with pytest.raises(RecipeError, match="dim"):
        compose(hypercube(2), hypercube(1), [0, 1])


def test_compose_rejects_non_permutation():
    with pytest.raises(RecipeError, match="image 1 duplicated"):
        compose(hypercube(2), hypercube(2), [0, 1, 1, 2])


def test_split_is_inverse_of_compose():
    left = hypercube(2)
    right = compose(hypercube(1), hypercube(1), [1, 0])
    m = (2, 0, 3, 1)
    r = compose(left, right, m)
    assert split(r) == (left, right, m)


def test_split_hypercube_gives_identity_matching():
    l, r, m = split(hypercube(3))
    assert l == hypercube(2) and r == hypercube(2)
    assert m == (0, 1, 2, 3)


def test_split_leaf_raises():
    with pytest.raises(RecipeError, match="leaf"):
        split(leaf())


# --- constructors ---------------------------------------------------------


def test_hypercube_zero_is_single_vertex():
    g = materialize(hypercube(0))
    assert g.vertex_count == 1 and g.edge_count == 0 and g.is_connected()


def test_hypercube_two_is_a_4_cycle():
    g = materialize(hypercube(2))
    assert g.vertex_count == 4 and g.edge_count == 4
    assert all(g.degree(v) == 2 for v in range(4))
    assert g.is_connected()


def test_hypercube_three_counts_and_bipartite(q3):
    assert q3.vertex_count == 8 and q3.edge_count == 12
    assert all(q3.degree(v) == 3 for v in range(8))
    assert two_color(q3)


@pytest.mark.parametrize("n", range(7))
def test_hypercube_edges_are_single_bit_flips(n):
    g = materialize(hypercube(n))
    expected = {
        (u, u ^ (1 << b))
        for u in range(1 << n)
        for b in range(n)
        if u < u ^ (1 << b)
    }
    assert set(g.edges()) == expected


def test_hypercube_guard():
    with pytest.raises(RecipeError, match="guard"):
        hypercube(21)
    hypercube(21, max_dim=21)  # override allowed


def test_g84_counts_and_odd_cycle(q3):
    g = G84
    assert g.vertex_count == 8 and g.edge_count == 12
    assert all(g.degree(v) == 3 for v in range(8))
    assert not two_color(g)
    assert not isomorphic_small(g, q3)


@pytest.mark.parametrize("seed", [0, 1, 7, 123456789])
def test_random_hl_dim3_invariants(seed):
    g = materialize(random_hl(3, seed))
    assert g.vertex_count == 8 and g.edge_count == 12
    assert all(g.degree(v) == 3 for v in range(8))


@pytest.mark.parametrize("seed", range(12))
def test_random_hl_dim3_is_q3_or_g84(q3, seed):
    g = materialize(random_hl(3, seed))
    assert isomorphic_small(g, q3) != isomorphic_small(g, G84)


@given(n=st.integers(0, 5), seed=st.integers(0, 2**64 - 1))
@settings(max_examples=40, deadline=None)
def test_random_hl_is_deterministic(n, seed):
    a, b = random_hl(n, seed), random_hl(n, seed)
    assert a == b
    assert dumps_recipe(a) == dumps_recipe(b)


def test_random_hl_seeds_differ():
    # not guaranteed per pair, but these seeds must not all collide
    recipes = {random_hl(4, s) for s in range(8)}
    assert len(recipes) > 1


# --- materialize ----------------------------------------------------------


@pytest.mark.parametrize("maker", [lambda n: hypercube(n), lambda n: random_hl(n, 5)])
@pytest.mark.parametrize("n", range(9))
def test_materialize_counts(maker, n):
    g = materialize(maker(n))
    assert g.vertex_count == 1 << n
    assert g.edge_count == (n * (1 << (n - 1)) if n else 0)
    assert all(g.degree(v) == n for v in range(1 << n))
    assert g.is_connected()


def test_materialize_random_hl_10_7():
    g = materialize(random_hl(10, 7))
    assert g.vertex_count == 1024 and g.edge_count == 5120
    assert all(g.degree(v) == 10 for v in range(1024))
    assert g.is_connected()


def test_left_half_projects_to_left_recipe():
    left = random_hl(3, 1)
    right = random_hl(3, 2)
    m = tuple(range(8))
    g = materialize(compose(left, right, m))
    half_edges = {(u, v) for u, v in g.edges() if u < 8 and v < 8}
    assert half_edges == set(materialize(left).edges())


def test_materialize_guard():
    r = hypercube(6)
    with pytest.raises(RecipeError, match="guard"):
        materialize(r, max_dim=5)


# --- induced / boundary queries -------------------------------------------


def test_induced_empty_and_singleton(q3):
    assert induced_edge_count(q3, []) == 0
    assert induced_edge_count(q3, [5]) == 0


def test_induced_left_half_of_q3_is_c4(q3):
    assert induced_edge_count(q3, range(4)) == 4


def test_induced_full_set(q3):
    assert induced_edge_count(q3, range(8)) == 12


def test_boundary_single_vertex_degree(q3):
    assert len(boundary_edges(q3, [6])) == 3


def test_boundary_full_set_empty(q3):
    assert boundary_edges(q3, range(8)) == set()


def test_foreign_vertex_rejected(q3):
    with pytest.raises(ValueError, match="vertex 8"):
        induced_edge_count(q3, [8])
    with pytest.raises(ValueError, match="vertex -1"):
        boundary_edges(q3, [-1])


@given(xs=st.sets(st.integers(0, 15)))
def test_regularity_identity(xs):
    assert 4 * len(xs) == len(boundary_edges(Q4, xs)) + 2 * induced_edge_count(Q4, xs)


@given(xs=st.sets(st.integers(0, 7), min_size=1))
def test_boundary_lower_bound(xs):
    from hlnet import extremal_edge_count

    for g in (G84, materialize(random_hl(3, 9))):
        bound = 3 * len(xs) - 2 * extremal_edge_count(len(xs))
        assert len(boundary_edges(g, xs)) >= bound


# --- serialization --------------------------------------------------------


@pytest.mark.parametrize(
    "recipe", [leaf(), hypercube(1), hypercube(4), g84(), random_hl(5, 99)]
)
def test_recipe_round_trip(recipe, tmp_path):
    path = tmp_path / "r.json"
    save_recipe(recipe, path)
    assert load_recipe(path) == recipe


def test_recipe_round_trip_stream():
    buf = io.StringIO()
    save_recipe(g84(), buf)
    assert loads_recipe(buf.getvalue()) == g84()


_K2_DOC = (
    '{"dim": 1, "node": {"left": {"dim": 0, "leaf": true},'
    ' "right": {"dim": 0, "leaf": true}, "matching": [0]}}'
)


def test_load_rejects_duplicate_image():
    doc = f'{{"dim": 2, "node": {{"left": {_K2_DOC}, "right": {_K2_DOC}, "matching": [0, 0]}}}}'
    with pytest.raises(RecipeError, match="image 0 duplicated"):
        loads_recipe(doc)


def test_load_rejects_unequal_halves():
    text = """
    {"dim": 2, "node": {
        "left": {"dim": 1, "node": {"left": {"dim": 0, "leaf": true},
                                     "right": {"dim": 0, "leaf": true},
                                     "matching": [0]}},
        "right": {"dim": 0, "leaf": true},
        "matching": [0, 1]}}
    """
    with pytest.raises(RecipeError, match=r"\$: children of dim 2"):
        loads_recipe(text)


def test_load_rejects_garbage():
    with pytest.raises(RecipeError, match="malformed"):
        loads_recipe("{not json")
    with pytest.raises(RecipeError, match=r"\$.node.left"):
        loads_recipe('{"dim": 1, "node": {"left": 3, "right": {"dim": 0, "leaf": true}, "matching": [0]}}')


def test_direct_recipe_validation():
    with pytest.raises(RecipeError):
        Recipe(1)  # node dim without children
    with pytest.raises(RecipeError):
        Recipe(0, leaf(), leaf(), (0,))  # dim 0 cannot be a node


def test_graph_file_round_trip(tmp_path):
    g = materialize(random_hl(4, 3))
    path = tmp_path / "g.edges"
    save_graph(g, path)
    loaded = load_graph(path)
    assert loaded.n == g.n
    assert list(loaded.edges()) == list(g.edges())
    header = path.read_text().splitlines()[0]
    assert header == "# hl-graph n=4 vertices=16 edges=32"


def test_graph_load_rejects_bad_degree(tmp_path):
    path = tmp_path / "bad.edges"
    path.write_text("# hl-graph n=1 vertices=2 edges=0\n")
    with pytest.raises(ValueError, match="degree"):
        load_graph(path)
