"""Extremal subgraph selection and component edge cuts.

The selection walks the recipe tree once per term of the vertex budget's
binary decomposition: descend into the left child until one level above the
term's dimension, claim the left half of that node, and continue inside the
right half with the next term.  Because left halves hold the lower labels,
each claimed block is a contiguous label range and the whole selection is
the first g labels; the claimed set always induces the extremal edge count.

Cutting every edge that touches the selection isolates its g vertices and
costs exactly n*g - e(g) edges, which is the optimal (g+1)-component cut
wherever that value is exact (and an upper bound everywhere else).
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import IO, Iterable

from .formulas import binary_decomposition, extremal_edge_count
from .recipes import MAX_DIM, Graph, Recipe, materialize, split


@dataclass(frozen=True)
class SelectionBlock:
    """One claimed sub-block: its descent path, dimension, and labels."""

    path: str
    dim: int
    vertices: tuple[int, ...]


@dataclass(frozen=True)
class SelectionTrace:
    network_dim: int
    blocks: tuple[SelectionBlock, ...]

    @property
    def union(self) -> frozenset[int]:
        out: set[int] = set()
        for block in self.blocks:
            out.update(block.vertices)
        return frozenset(out)


def select_extremal_subgraph(recipe: Recipe, g: int) -> SelectionTrace:
    """Pick g vertices whose induced subgraph attains the extremal count.

    One block per binary-decomposition term of g; block i has 2^t_i
    vertices, induces a t_i-dimensional subnetwork, and sends exactly
    2^t_j matching edges to each later block j.  Deterministic: the descent
    always takes the left child, so the trace depends only on (recipe, g).
    """
    if not 1 <= g < (1 << recipe.dim):
        raise ValueError(
            f"g={g} out of range 1..{(1 << recipe.dim) - 1} for dim {recipe.dim}"
        )
    blocks = []
    current = recipe
    path = ""
    offset = 0
    for t in binary_decomposition(g):
        while current.dim > t + 1:
            current = split(current)[0]
            path += "L"
        _, right, _ = split(current)
        blocks.append(
            SelectionBlock(path + "L", t, tuple(range(offset, offset + (1 << t))))
        )
        current = right
        path += "R"
        offset += 1 << t
    return SelectionTrace(recipe.dim, tuple(blocks))


def build_component_cut(
    recipe: Recipe, g: int, max_dim: int = MAX_DIM
) -> set[tuple[int, int]]:
    """Every edge touching the extremal selection: a (g+1)-component cut.

    The cut has size n*g - e(g) and its removal leaves the g selected
    vertices isolated plus at least one more component.
    """
    trace = select_extremal_subgraph(recipe, g)
    graph = materialize(recipe, max_dim=max_dim)
    chosen = trace.union
    cut: set[tuple[int, int]] = set()
    for v in chosen:
        for w in graph.neighbors(v):
            cut.add((v, w) if v < w else (w, v))
    return cut


@dataclass(frozen=True)
class CutReport:
    """Verification record for a candidate component edge cut.

    matches_prediction compares the cut size against n*g - e(g) for the
    requested g; component and isolated counts come from direct traversal.
    """

    cut_size: int
    component_count: int
    isolated_count: int
    predicted_size: int
    matches_prediction: bool


def verify_cut(
    graph: Graph, cut_edges: Iterable[tuple[int, int]], target_g: int
) -> CutReport:
    """Count components and isolated vertices of the graph minus the cut.

    The traversal here is intentionally separate from the oracle module's
    component search so the two can cross-check each other.
    """
    gone = set()
    for u, v in cut_edges:
        e = (u, v) if u < v else (v, u)
        if not graph.has_edge(*e):
            raise ValueError(f"pair ({u}, {v}) is not an edge of the graph")
        gone.add(e)
    total = graph.vertex_count
    comp = [-1] * total
    sizes = []
    for start in range(total):
        if comp[start] >= 0:
            continue
        cid = len(sizes)
        comp[start] = cid
        size = 1
        stack = [start]
        while stack:
            u = stack.pop()
            for w in graph.neighbors(u):
                if comp[w] >= 0:
                    continue
                if ((u, w) if u < w else (w, u)) in gone:
                    continue
                comp[w] = cid
                size += 1
                stack.append(w)
        sizes.append(size)
    predicted = graph.n * target_g - extremal_edge_count(target_g)
    return CutReport(
        cut_size=len(gone),
        component_count=len(sizes),
        isolated_count=sum(1 for s in sizes if s == 1),
        predicted_size=predicted,
        matches_prediction=len(gone) == predicted,
    )


def save_cut(
    edges: Iterable[tuple[int, int]],
    n: int,
    g: int,
    destination: "str | Path | IO[str]",
) -> None:
    """Write a cut as an edge list under an '# hl-cut' header."""
    ordered = sorted((u, v) if u < v else (v, u) for u, v in edges)
    lines = [f"# hl-cut n={n} g={g} size={len(ordered)}"]
    lines.extend(f"{u} {v}" for u, v in ordered)
    text = "\n".join(lines) + "\n"
    if hasattr(destination, "write"):
        destination.write(text)  # type: ignore[union-attr]
    else:
        Path(destination).write_text(text)  # type: ignore[arg-type]


def load_cut(source: "str | Path | IO[str]") -> tuple[set[tuple[int, int]], int, int]:
    """Parse a cut document; returns (edges, n, g)."""
    if hasattr(source, "read"):
        text = source.read()  # type: ignore[union-attr]
    else:
        text = Path(source).read_text()  # type: ignore[arg-type]
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("# hl-cut"):
        raise ValueError("cut document must start with an '# hl-cut' header")
    fields = dict(part.split("=", 1) for part in lines[0].split() if "=" in part)
    try:
        n = int(fields["n"])
        g = int(fields["g"])
        size = int(fields["size"])
    except (KeyError, ValueError):
        raise ValueError("cut header needs integer n=, g=, size=") from None
    edges = set()
    for ln in lines[1:]:
        if ln.startswith("#"):
            continue
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"malformed edge line: {ln!r}")
        u, v = int(parts[0]), int(parts[1])
        if not u < v:
            raise ValueError(f"edge ({u}, {v}) must be written with u < v")
        edges.add((u, v))
    if len(edges) != size:
        raise ValueError(f"cut header claims {size} edges, found {len(edges)}")
    return edges, n, g
