"""Recursive matched-pair network recipes and the graphs they build.

A recipe is a binary construction tree.  A leaf is a single vertex; a node
joins two equal-dimension subnetworks by a perfect matching between their
vertex sets.  Materializing a dim-n recipe yields an n-regular connected
graph on 2^n vertices with n*2^(n-1) edges.  Labels follow the prefix rule:
at every node the left subnetwork occupies the lower half of the label
range (top bit 0), the right subnetwork the upper half.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import IO, Iterable, Iterator

#: Default cap on materializable dimension (2^20 vertices).  Raise it per
#: call if you really want bigger adjacency tables in memory.
MAX_DIM = 20

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


class RecipeError(ValueError):
    """Invalid recipe structure, matching, or recipe document."""


# ---------------------------------------------------------------------------
# recipes


@dataclass(frozen=True)
class Recipe:
    """Construction tree node.  Leaves have dim 0 and no children.

    Instances are immutable values; equal trees compare equal.  Use
    ``leaf()``, ``compose()``, ``hypercube()``, ``random_hl()`` or
    ``load_recipe()`` to build them.
    """

    dim: int
    left: "Recipe | None" = None
    right: "Recipe | None" = None
    matching: "tuple[int, ...] | None" = None

    def __post_init__(self) -> None:
        if self.matching is not None and not isinstance(self.matching, tuple):
            object.__setattr__(self, "matching", tuple(self.matching))
        if self.left is None:
            if self.right is not None or self.matching is not None:
                raise RecipeError("leaf recipe cannot carry a child or matching")
            if self.dim != 0:
                raise RecipeError(f"leaf recipe must have dim 0, got {self.dim}")
            return
        if self.right is None or self.matching is None:
            raise RecipeError("node recipe needs left, right and matching")
        if self.left.dim != self.right.dim:
            raise RecipeError(
                f"subrecipe dimension mismatch: left dim {self.left.dim}, "
                f"right dim {self.right.dim}"
            )
        if self.dim != self.left.dim + 1:
            raise RecipeError(
                f"node dim {self.dim} inconsistent with subrecipe dim {self.left.dim}"
            )
        _check_permutation(self.matching, 1 << self.left.dim)

    @property
    def is_leaf(self) -> bool:
        return self.left is None

    def vertex_count(self) -> int:
        return 1 << self.dim

    def edge_count(self) -> int:
        return self.dim << (self.dim - 1) if self.dim else 0


def _check_permutation(matching: tuple[int, ...], size: int) -> None:
    if len(matching) != size:
        raise RecipeError(
            f"matching length {len(matching)} does not match half size {size}"
        )
    seen = 0
    for v in matching:
        if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < size:
            raise RecipeError(f"matching image {v!r} outside 0..{size - 1}")
        bit = 1 << v
        if seen & bit:
            raise RecipeError(f"matching is not a permutation: image {v} duplicated")
        seen |= bit


_LEAF = Recipe(0)


def leaf() -> Recipe:
    """The dim-0 recipe: a single vertex."""
    return _LEAF


def compose(left: Recipe, right: Recipe, matching: Iterable[int]) -> Recipe:
    """Join two equal-dimension recipes with a perfect matching.

    ``matching[i]`` is the local right-half index matched to local left-half
    index ``i``.  Raises RecipeError on dimension mismatch or when the
    matching is not a permutation of the half's index range.
    """
    if left.dim != right.dim:
        raise RecipeError(
            f"cannot compose recipes of dim {left.dim} and {right.dim}"
        )
    return Recipe(left.dim + 1, left, right, tuple(matching))


def split(recipe: Recipe) -> tuple[Recipe, Recipe, tuple[int, ...]]:
    """Inverse of compose: return (left, right, matching) of a node recipe."""
    if recipe.is_leaf:
        raise RecipeError("cannot split a leaf recipe")
    assert recipe.left is not None and recipe.right is not None
    assert recipe.matching is not None
    return recipe.left, recipe.right, recipe.matching


def _check_dim(n: int, max_dim: int) -> None:
    if n < 0:
        raise RecipeError(f"dimension must be non-negative, got {n}")
    if n > max_dim:
        raise RecipeError(f"dimension {n} exceeds guard max_dim={max_dim}")


def hypercube(n: int, max_dim: int = MAX_DIM) -> Recipe:
    """Recipe for the n-cube: identity matchings at every level.

    The materialization has an edge between u and v iff their labels differ
    in exactly one bit.
    """
    _check_dim(n, max_dim)
    r = _LEAF
    for dim in range(1, n + 1):
        r = Recipe(dim, r, r, tuple(range(1 << (dim - 1))))
    return r


def g84() -> Recipe:
    """The non-cube dim-3 network G(8,4): two 4-cycles under a twisted matching.

    The matching (0, 1, 3, 2) creates an odd cycle, so the result cannot be
    the bipartite 3-cube; the classification of dim-3 networks then pins it
    to G(8,4).  Tests establish the non-isomorphism explicitly.
    """
    c4 = hypercube(2)
    return compose(c4, c4, (0, 1, 3, 2))


# deterministic permutation sampling (fixed 64-bit mixing generator, so the
# same seed gives bit-identical recipes on every platform)


def _mix64(x: int) -> int:
    x &= _MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & _MASK64
    return x ^ (x >> 31)


class _SplitMix64:
    __slots__ = ("_state",)

    def __init__(self, seed: int) -> None:
        self._state = seed & _MASK64

    def next64(self) -> int:
        self._state = (self._state + _GOLDEN) & _MASK64
        return _mix64(self._state)

    def below(self, bound: int) -> int:
        # rejection sampling keeps the draw exactly uniform
        limit = (_MASK64 + 1) - (_MASK64 + 1) % bound
        while True:
            v = self.next64()
            if v < limit:
                return v % bound


def _substream(seed: int, position: int) -> _SplitMix64:
    return _SplitMix64(_mix64(seed & _MASK64) ^ _mix64(position * _GOLDEN))


def _random_permutation(size: int, rng: _SplitMix64) -> tuple[int, ...]:
    perm = list(range(size))
    for i in range(size - 1, 0, -1):
        j = rng.below(i + 1)
        perm[i], perm[j] = perm[j], perm[i]
    return tuple(perm)


def random_hl(n: int, seed: int, max_dim: int = MAX_DIM) -> Recipe:
    """Sample a dim-n recipe with every matching drawn uniformly.

    Each tree node gets its own substream derived from (seed, heap position
    of the node), so the draw is independent per node and reproducible:
    equal arguments give bit-identical recipes.
    """
    _check_dim(n, max_dim)

    def build(dim: int, position: int) -> Recipe:
        if dim == 0:
            return _LEAF
        left = build(dim - 1, 2 * position)
        right = build(dim - 1, 2 * position + 1)
        perm = _random_permutation(1 << (dim - 1), _substream(seed, position))
        return Recipe(dim, left, right, perm)

    return build(n, 1)


# ---------------------------------------------------------------------------
# materialized graphs


class Graph:
    """Immutable graph on labels 0..2^n - 1 with per-vertex neighbor tuples."""

    __slots__ = ("n", "_adj")

    def __init__(self, n: int, adjacency: tuple[tuple[int, ...], ...]) -> None:
        self.n = n
        self._adj = adjacency

    @property
    def vertex_count(self) -> int:
        return len(self._adj)

    @property
    def edge_count(self) -> int:
        return sum(len(nb) for nb in self._adj) // 2

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield edges as (u, v) pairs with u < v, in sorted order."""
        for u, nb in enumerate(self._adj):
            for v in nb:
                if u < v:
                    yield (u, v)

    def neighbor_masks(self) -> list[int]:
        """Adjacency rows as bit masks.  Intended for small graphs only."""
        masks = [0] * len(self._adj)
        for u, nb in enumerate(self._adj):
            m = 0
            for v in nb:
                m |= 1 << v
            masks[u] = m
        return masks

    def is_connected(self) -> bool:
        total = len(self._adj)
        if total == 0:
            return True
        seen = bytearray(total)
        seen[0] = 1
        stack = [0]
        count = 1
        while stack:
            u = stack.pop()
            for v in self._adj[u]:
                if not seen[v]:
                    seen[v] = 1
                    count += 1
                    stack.append(v)
        return count == total

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, vertices={self.vertex_count}, edges={self.edge_count})"


def materialize(recipe: Recipe, max_dim: int = MAX_DIM) -> Graph:
    """Build the labelled graph a recipe describes.

    Left halves take the lower label range at every level; node matchings
    contribute the edges (offset + i, offset + half + matching[i]).
    """
    if recipe.dim > max_dim:
        raise RecipeError(
            f"recipe dim {recipe.dim} exceeds guard max_dim={max_dim}"
        )
    size = 1 << recipe.dim
    neighbors: list[list[int]] = [[] for _ in range(size)]

    def collect(r: Recipe, offset: int) -> None:
        if r.is_leaf:
            return
        half = 1 << (r.dim - 1)
        collect(r.left, offset)  # type: ignore[arg-type]
        collect(r.right, offset + half)  # type: ignore[arg-type]
        for i, m in enumerate(r.matching):  # type: ignore[union-attr]
            u = offset + i
            v = offset + half + m
            neighbors[u].append(v)
            neighbors[v].append(u)

    collect(recipe, 0)
    return Graph(recipe.dim, tuple(tuple(sorted(nb)) for nb in neighbors))


def _check_vertices(graph: Graph, vertices: Iterable[int]) -> set[int]:
    xs = set(vertices)
    total = graph.vertex_count
    for v in xs:
        if not 0 <= v < total:
            raise ValueError(f"vertex {v} not in graph with {total} vertices")
    return xs


def induced_edge_count(graph: Graph, vertices: Iterable[int]) -> int:
    """Number of edges with both endpoints inside the vertex set."""
    xs = _check_vertices(graph, vertices)
    inside = 0
    for v in xs:
        for w in graph.neighbors(v):
            if w in xs:
                inside += 1
    return inside // 2


def boundary_edges(graph: Graph, vertices: Iterable[int]) -> set[tuple[int, int]]:
    """Edges with exactly one endpoint inside the vertex set.

    For an n-regular graph, n*|X| = |boundary| + 2*|induced| always holds.
    """
    xs = _check_vertices(graph, vertices)
    out: set[tuple[int, int]] = set()
    for v in xs:
        for w in graph.neighbors(v):
            if w not in xs:
                out.add((v, w) if v < w else (w, v))
    return out


# ---------------------------------------------------------------------------
# serialization

# Recipe documents are JSON: {"dim": 0, "leaf": true} at leaves and
# {"dim": d, "node": {"left": ..., "right": ..., "matching": [...]}} at
# nodes, matchings given as local right-half indices.


def recipe_to_obj(recipe: Recipe) -> dict:
    if recipe.is_leaf:
        return {"dim": 0, "leaf": True}
    return {
        "dim": recipe.dim,
        "node": {
            "left": recipe_to_obj(recipe.left),  # type: ignore[arg-type]
            "right": recipe_to_obj(recipe.right),  # type: ignore[arg-type]
            "matching": list(recipe.matching),  # type: ignore[arg-type]
        },
    }


def _recipe_from_obj(obj: object, path: str) -> Recipe:
    if not isinstance(obj, dict):
        raise RecipeError(f"{path}: expected an object, got {type(obj).__name__}")
    dim = obj.get("dim")
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 0:
        raise RecipeError(f"{path}: missing or invalid 'dim'")
    if obj.get("leaf"):
        if dim != 0:
            raise RecipeError(f"{path}: leaf must have dim 0, got {dim}")
        return _LEAF
    node = obj.get("node")
    if not isinstance(node, dict):
        raise RecipeError(f"{path}: dim {dim} recipe needs a 'node' object")
    if dim == 0:
        raise RecipeError(f"{path}: dim 0 recipe must be a leaf")
    left = _recipe_from_obj(node.get("left"), path + ".node.left")
    right = _recipe_from_obj(node.get("right"), path + ".node.right")
    if left.dim != dim - 1 or right.dim != dim - 1:
        raise RecipeError(
            f"{path}: children of dim {dim} node must have dim {dim - 1}, "
            f"got {left.dim} and {right.dim}"
        )
    matching = node.get("matching")
    if not isinstance(matching, list):
        raise RecipeError(f"{path}.node.matching: expected an array")
    try:
        return Recipe(dim, left, right, tuple(matching))
    except RecipeError as exc:
        raise RecipeError(f"{path}.node.matching: {exc}") from None


def dumps_recipe(recipe: Recipe) -> str:
    return json.dumps(recipe_to_obj(recipe), indent=2) + "\n"


def loads_recipe(text: str) -> Recipe:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise RecipeError(f"malformed recipe document: {exc}") from None
    return _recipe_from_obj(obj, "$")


def _write_text(text: str, destination: "str | Path | IO[str]") -> None:
    if hasattr(destination, "write"):
        destination.write(text)  # type: ignore[union-attr]
    else:
        Path(destination).write_text(text)  # type: ignore[arg-type]


def _read_text(source: "str | Path | IO[str]") -> str:
    if hasattr(source, "read"):
        return source.read()  # type: ignore[union-attr]
    return Path(source).read_text()  # type: ignore[arg-type]


def save_recipe(recipe: Recipe, destination: "str | Path | IO[str]") -> None:
    _write_text(dumps_recipe(recipe), destination)


def load_recipe(source: "str | Path | IO[str]") -> Recipe:
    return loads_recipe(_read_text(source))


def save_graph(graph: Graph, destination: "str | Path | IO[str]") -> None:
    """Write the plain-text edge list with its counting header."""
    lines = [
        f"# hl-graph n={graph.n} vertices={graph.vertex_count} edges={graph.edge_count}"
    ]
    lines.extend(f"{u} {v}" for u, v in graph.edges())
    _write_text("\n".join(lines) + "\n", destination)


def load_graph(source: "str | Path | IO[str]") -> Graph:
    """Parse an edge-list document written by save_graph."""
    text = _read_text(source)
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("# hl-graph"):
        raise ValueError("graph document must start with an '# hl-graph' header")
    fields = dict(
        part.split("=", 1) for part in lines[0].split() if "=" in part
    )
    try:
        n = int(fields["n"])
        vertices = int(fields["vertices"])
        edges = int(fields["edges"])
    except (KeyError, ValueError):
        raise ValueError("graph header needs integer n=, vertices=, edges=") from None
    if vertices != 1 << n:
        raise ValueError(f"header claims {vertices} vertices for dim {n}")
    neighbors: list[set[int]] = [set() for _ in range(vertices)]
    count = 0
    for ln in lines[1:]:
        if ln.startswith("#"):
            continue
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"malformed edge line: {ln!r}")
        u, v = int(parts[0]), int(parts[1])
        if not (0 <= u < v < vertices):
            raise ValueError(f"edge ({u}, {v}) out of range or unordered")
        if v in neighbors[u]:
            raise ValueError(f"duplicate edge ({u}, {v})")
        neighbors[u].add(v)
        neighbors[v].add(u)
        count += 1
    if count != edges:
        raise ValueError(f"header claims {edges} edges, found {count}")
    for v, nb in enumerate(neighbors):
        if len(nb) != n:
            raise ValueError(f"vertex {v} has degree {len(nb)}, expected {n}")
    return Graph(n, tuple(tuple(sorted(nb)) for nb in neighbors))
