"""Brute-force ground truth for small graphs.

Everything here is deliberately independent of the closed-form machinery:
the subset search and the partition search use only structural bounds (a
new vertex gains at most min(|chosen|, max degree) edges; opening a new
partition block at vertex v costs exactly v's back-edges), so their answers
can validate the formulas without circularity.

Both searches are anytime.  When a node or time budget runs out they return
the incumbent with status "incomplete": a lower bound for the subset search
and an upper bound for the cut search, never a silently wrong answer.
Witness ties break toward the lexicographically smallest subset, or the
lexicographically smallest block-assignment string for partitions.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from pathlib import Path
from typing import IO, Iterable, NamedTuple

from .recipes import Graph

COMPLETE = "complete"
INCOMPLETE = "incomplete"

_TIME_CHECK_INTERVAL = 4096


@dataclass(frozen=True)
class SearchLimits:
    """Optional budgets; None means unlimited."""

    max_nodes_expanded: "int | None" = None
    time_budget: "float | None" = None


class _Budget:
    __slots__ = ("max_nodes", "deadline", "nodes", "exhausted")

    def __init__(self, limits: "SearchLimits | None") -> None:
        limits = limits or SearchLimits()
        self.max_nodes = limits.max_nodes_expanded
        self.deadline = (
            time.monotonic() + limits.time_budget
            if limits.time_budget is not None
            else None
        )
        self.nodes = 0
        self.exhausted = False

    def spend(self) -> bool:
        """Count one expanded node; True while the budget holds."""
        if self.exhausted:
            return False
        self.nodes += 1
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            self.exhausted = True
            return False
        if (
            self.deadline is not None
            and (self.nodes == 1 or self.nodes % _TIME_CHECK_INTERVAL == 0)
            and time.monotonic() > self.deadline
        ):
            self.exhausted = True
            return False
        return True


class MaxEdgesResult(NamedTuple):
    value: int
    witness: tuple[int, ...]
    status: str


@dataclass(frozen=True)
class PartitionWitness:
    """Disjoint blocks covering V, plus the edges running between blocks."""

    blocks: tuple[tuple[int, ...], ...]
    cross_edges: frozenset[tuple[int, int]]


class MinCutResult(NamedTuple):
    value: int
    witness: PartitionWitness
    status: str


def max_induced_edges(
    graph: Graph, k: int, limits: "SearchLimits | None" = None
) -> MaxEdgesResult:
    """Exact maximum of |E(G[X])| over all |X| = k, by pruned subset DFS.

    Vertices are considered in label order, include-branch first, so the
    reported witness is the lexicographically smallest optimum.  The pruning
    bound charges at most min(|chosen so far|, max degree) edges per future
    pick, which never appeals to the closed-form value under test.
    """
    total = graph.vertex_count
    if not 1 <= k <= total:
        raise ValueError(f"k={k} out of range 1..{total}")
    if k == total:
        return MaxEdgesResult(graph.edge_count, tuple(range(total)), COMPLETE)

    masks = graph.neighbor_masks()
    maxdeg = max((len(graph.neighbors(v)) for v in range(total)), default=0)
    # gain_tail[c] bounds the edges gained by the remaining k - c picks
    gain_tail = [0] * (k + 1)
    for c in range(k - 1, -1, -1):
        gain_tail[c] = gain_tail[c + 1] + min(c, maxdeg)

    # the first k labels seed the incumbent; they are also the smallest
    # possible witness, so later strict improvements keep the tie-break
    seed_mask = (1 << k) - 1
    best = sum((masks[v] & seed_mask).bit_count() for v in range(k)) // 2
    best_mask = seed_mask
    budget = _Budget(limits)

    def dfs(v: int, chosen: int, count: int, value: int) -> None:
        nonlocal best, best_mask
        if count == k:
            if value > best:
                best = value
                best_mask = chosen
            return
        if total - v < k - count:
            return
        if value + gain_tail[count] <= best:
            return
        if not budget.spend():
            return
        dfs(v + 1, chosen | (1 << v), count + 1, value + (masks[v] & chosen).bit_count())
        dfs(v + 1, chosen, count, value)

    dfs(0, 0, 0, 0)
    witness = tuple(v for v in range(total) if best_mask >> v & 1)
    return MaxEdgesResult(best, witness, INCOMPLETE if budget.exhausted else COMPLETE)


def min_component_edge_cut(
    graph: Graph, parts: int, limits: "SearchLimits | None" = None
) -> MinCutResult:
    """Exact minimum cross-edge count over partitions into `parts` blocks.

    Minimizing over exactly-k-block partitions equals minimizing over cuts
    leaving at least k components: merging surplus components into blocks
    never adds a cross edge.  Enumeration follows restricted-growth strings
    (block ids appear in first-use order), with two admissible bounds: the
    committed cross-edge count, and the cost of the block openings still
    owed, each of which is exactly the opening vertex's back-edge count.
    """
    total = graph.vertex_count
    if parts == 1:
        witness = _partition_witness(graph, [0] * total, 1)
        return MinCutResult(0, witness, COMPLETE)
    if not 2 <= parts <= total:
        raise ValueError(f"parts={parts} out of range 2..{total}")

    masks = graph.neighbor_masks()
    backdeg = [(masks[v] & ((1 << v) - 1)).bit_count() for v in range(total)]

    # open_tail[i][u]: cheapest total back-edge cost of opening u more blocks
    # using only vertices >= i
    open_tail = []
    for i in range(total + 1):
        tail = sorted(backdeg[i:])
        sums = [0]
        for val in tail[:parts]:
            sums.append(sums[-1] + val)
        open_tail.append(sums)

    assign = [0] * total
    block_masks = [0] * parts

    # incumbent: the first leaf of the search order (everything in block 0,
    # then the forced chain of new singletons), which is also the smallest
    # restricted-growth string with the right block count
    for v in range(total):
        assign[v] = max(0, parts - (total - v))
    best = _cross_edge_count(graph, assign)
    best_assign = assign.copy()
    budget = _Budget(limits)

    def dfs(v: int, used: int, cost: int) -> None:
        nonlocal best, best_assign
        if v == total:
            if used == parts and cost < best:
                best = cost
                best_assign = assign.copy()
            return
        remaining = total - v
        need = parts - used
        if need > remaining:
            return
        owed = open_tail[v][need] if need > 0 else 0
        if cost + owed >= best:
            return
        if not budget.spend():
            return
        nbmask = masks[v]
        back = backdeg[v]
        vbit = 1 << v
        top = used if used < parts else parts - 1
        for b in range(top + 1):
            opening = b == used
            add = back if opening else back - (nbmask & block_masks[b]).bit_count()
            if cost + add >= best:
                continue
            assign[v] = b
            block_masks[b] |= vbit
            dfs(v + 1, used + 1 if opening else used, cost + add)
            block_masks[b] &= ~vbit

    dfs(0, 0, 0)
    witness = _partition_witness(graph, best_assign, parts)
    return MinCutResult(best, witness, INCOMPLETE if budget.exhausted else COMPLETE)


def _cross_edge_count(graph: Graph, assign: list[int]) -> int:
    return sum(1 for u, v in graph.edges() if assign[u] != assign[v])


def _partition_witness(graph: Graph, assign: list[int], parts: int) -> PartitionWitness:
    blocks: list[list[int]] = [[] for _ in range(parts)]
    for v, b in enumerate(assign):
        blocks[b].append(v)
    cross = frozenset((u, v) for u, v in graph.edges() if assign[u] != assign[v])
    return PartitionWitness(tuple(tuple(b) for b in blocks), cross)


def components_after(
    graph: Graph, removed: Iterable[tuple[int, int]]
) -> PartitionWitness:
    """Connected components of the graph minus the removed edges.

    Blocks come out ordered by their minimum label.  Raises if a removed
    pair is not an actual edge.
    """
    gone = _normalize_edge_set(graph, removed)
    total = graph.vertex_count
    comp = [-1] * total
    blocks = []
    for start in range(total):
        if comp[start] >= 0:
            continue
        cid = len(blocks)
        comp[start] = cid
        members = [start]
        stack = [start]
        while stack:
            u = stack.pop()
            for w in graph.neighbors(u):
                if comp[w] >= 0:
                    continue
                if ((u, w) if u < w else (w, u)) in gone:
                    continue
                comp[w] = cid
                members.append(w)
                stack.append(w)
        blocks.append(tuple(sorted(members)))
    cross = frozenset(e for e in gone if comp[e[0]] != comp[e[1]])
    return PartitionWitness(tuple(blocks), cross)


def _normalize_edge_set(
    graph: Graph, edges: Iterable[tuple[int, int]]
) -> set[tuple[int, int]]:
    out = set()
    for u, v in edges:
        e = (u, v) if u < v else (v, u)
        if not graph.has_edge(*e):
            raise ValueError(f"pair ({u}, {v}) is not an edge of the graph")
        out.add(e)
    return out


def isomorphic_small(a: Graph, b: Graph) -> bool:
    """Exact isomorphism test for graphs on at most 16 vertices.

    Backtracks over vertex maps in a connectivity-first order, pruning with
    degree compatibility and adjacency-row consistency on bit masks.
    """
    va, vb = a.vertex_count, b.vertex_count
    if va > 16 or vb > 16:
        raise ValueError("isomorphic_small handles at most 16 vertices")
    if va != vb or a.edge_count != b.edge_count:
        return False
    if sorted(map(len, (a.neighbors(v) for v in range(va)))) != sorted(
        map(len, (b.neighbors(v) for v in range(vb)))
    ):
        return False
    if va == 0:
        return True

    amask = a.neighbor_masks()
    bmask = b.neighbor_masks()
    adeg = [len(a.neighbors(v)) for v in range(va)]
    bdeg = [len(b.neighbors(v)) for v in range(vb)]

    # visit each component of `a` in BFS order so every vertex after the
    # first has a mapped neighbor constraining its candidates
    order = []
    seen = [False] * va
    for root in range(va):
        if seen[root]:
            continue
        seen[root] = True
        queue = [root]
        while queue:
            u = queue.pop(0)
            order.append(u)
            for w in a.neighbors(u):
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)

    image = [-1] * va
    full = (1 << vb) - 1

    def extend(pos: int, used: int) -> bool:
        if pos == va:
            return True
        v = order[pos]
        required = 0
        for w in a.neighbors(v):
            if image[w] >= 0:
                required |= 1 << image[w]
        allowed = full & ~used
        while allowed:
            low = allowed & -allowed
            allowed ^= low
            cand = low.bit_length() - 1
            if bdeg[cand] != adeg[v]:
                continue
            # cand must see exactly the images of v's mapped neighbors
            if bmask[cand] & used != required:
                continue
            image[v] = cand
            if extend(pos + 1, used | low):
                return True
            image[v] = -1
        return False

    return extend(0, 0)


def save_partition(
    witness: PartitionWitness, destination: "str | Path | IO[str]"
) -> None:
    """Write a witness as text: header, then one block per line."""
    lines = [f"# partition blocks={len(witness.blocks)} cross={len(witness.cross_edges)}"]
    lines.extend(" ".join(str(v) for v in block) for block in witness.blocks)
    text = "\n".join(lines) + "\n"
    if hasattr(destination, "write"):
        destination.write(text)  # type: ignore[union-attr]
    else:
        Path(destination).write_text(text)  # type: ignore[arg-type]
