"""Combinatorial engines: bipartite matching, extremal-weight matching,
integral min-cost max-flow, strongly connected components, reachability.

Every engine is deterministic for a fixed input: adjacency is scanned in
canonical index order and ties never depend on hashing or iteration order
of unordered containers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Literal

from .core import Bigraph, Digraph, Matching, Vertex

_INF = 1 << 60


@dataclass(frozen=True)
class FlowNetwork:
    """Arc-list flow network with integer capacities and costs."""

    nodes: int
    arcs: tuple[tuple[int, int, int, int], ...]  # (tail, head, capacity, cost)
    source: int
    sink: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "arcs", tuple(tuple(a) for a in self.arcs))
        if self.source == self.sink:
            raise ValueError("source and sink must differ")
        for tail, head, cap, cost in self.arcs:
            if not (0 <= tail < self.nodes and 0 <= head < self.nodes):
                raise ValueError(f"arc ({tail},{head}) endpoint out of range")
            if cap < 0 or cost < 0:
                raise ValueError(f"arc ({tail},{head}) needs non-negative capacity and cost")


@dataclass(frozen=True)
class Flow:
    """Integral flow: one value per arc plus the total value and cost."""

    arc_flow: tuple[int, ...]
    value: int
    cost: int


def min_cost_max_flow(net: FlowNetwork) -> Flow:
    """Maximum flow of minimum cost, by successive shortest augmenting paths.

    Augmenting paths are found with Bellman-Ford over the residual arcs in
    arc-index order, so the result is deterministic. Costs must be
    non-negative on the input; residual arcs may go negative, which
    Bellman-Ford handles exactly.
    """
    arcs = net.arcs
    flow = [0] * len(arcs)
    while True:
        dist = [_INF] * net.nodes
        parent: list[tuple[int, int] | None] = [None] * net.nodes
        dist[net.source] = 0
        for _ in range(net.nodes):
            changed = False
            for idx, (u, v, cap, cost) in enumerate(arcs):
                du, dv = dist[u], dist[v]
                if flow[idx] < cap and du < _INF and du + cost < dist[v]:
                    dist[v] = du + cost
                    parent[v] = (idx, 1)
                    changed = True
                if flow[idx] > 0 and dv < _INF and dv - cost < dist[u]:
                    dist[u] = dv - cost
                    parent[u] = (idx, -1)
                    changed = True
            if not changed:
                break
        if dist[net.sink] >= _INF:
            break
        # bottleneck along the parent chain, then push
        bottleneck = _INF
        node = net.sink
        while node != net.source:
            idx, direction = parent[node]  # type: ignore[misc]
            u, v, cap, _ = arcs[idx]
            bottleneck = min(bottleneck, cap - flow[idx] if direction > 0 else flow[idx])
            node = u if direction > 0 else v
        node = net.sink
        while node != net.source:
            idx, direction = parent[node]  # type: ignore[misc]
            u, v, _, _ = arcs[idx]
            flow[idx] += direction * bottleneck
            node = u if direction > 0 else v
    value = sum(flow[i] for i, (u, _, _, _) in enumerate(arcs) if u == net.source) - sum(
        flow[i] for i, (_, v, _, _) in enumerate(arcs) if v == net.source
    )
    cost = sum(f * a[3] for f, a in zip(flow, arcs))
    return Flow(tuple(flow), value, cost)


def max_matching(g: Bigraph) -> Matching:
    """Maximum-cardinality matching by augmenting paths.

    Right vertices are processed in ascending order and adjacency is scanned
    in ascending left order, which fixes the tie-breaking.
    """
    adj: list[list[int]] = [[] for _ in range(g.right + 1)]
    for r, l, _ in g.edges:
        adj[r].append(l)
    match_of_left: dict[int, int] = {}

    def augment(r: int, seen: set[int]) -> bool:
        for l in adj[r]:
            if l in seen:
                continue
            seen.add(l)
            owner = match_of_left.get(l)
            if owner is None or augment(owner, seen):
                match_of_left[l] = r
                return True
        return False

    for r in range(1, g.right + 1):
        augment(r, set())
    return Matching(frozenset((r, l) for l, r in match_of_left.items()))


def extremal_weight_max_matching(
    g: Bigraph, sense: Literal["minimize", "maximize"]
) -> Matching:
    """Maximum-cardinality matching of minimum or maximum total cost.

    Reduced to min-cost max-flow on the unit-capacity network; the max-flow
    phase pins the cardinality, so cost only discriminates among maximum
    matchings. For ``maximize`` each edge cost c is replaced by W + 1 - c
    with W the sum of all costs, keeping arc costs non-negative.
    """
    if sense not in ("minimize", "maximize"):
        raise ValueError(f"unknown sense {sense!r}")
    if not g.edges:
        return Matching(frozenset())
    total = sum(c for _, _, c in g.edges)
    source = 0
    sink = g.right + g.left + 1
    arcs: list[tuple[int, int, int, int]] = []
    for r in range(1, g.right + 1):
        arcs.append((source, r, 1, 0))
    edge_base = len(arcs)
    for r, l, c in g.edges:
        cost = c if sense == "minimize" else total + 1 - c
        arcs.append((r, g.right + l, 1, cost))
    for l in range(1, g.left + 1):
        arcs.append((g.right + l, sink, 1, 0))
    net = FlowNetwork(sink + 1, tuple(arcs), source, sink)
    result = min_cost_max_flow(net)
    chosen = frozenset(
        (g.edges[k][0], g.edges[k][1])
        for k in range(len(g.edges))
        if result.arc_flow[edge_base + k] > 0
    )
    return Matching(chosen)


def scc(g: Digraph) -> list[frozenset[Vertex]]:
    """Strongly connected components, in reverse topological order of the
    condensation (every edge points from a later component to an earlier one).
    """
    order = {v: i for i, v in enumerate(g.vertices)}
    adj: dict[Vertex, list[Vertex]] = {v: [] for v in g.vertices}
    for tail, head in sorted(g.edges, key=lambda e: (order[e[0]], order[e[1]])):
        adj[tail].append(head)

    index: dict[Vertex, int] = {}
    lowlink: dict[Vertex, int] = {}
    on_stack: set[Vertex] = set()
    stack: list[Vertex] = []
    components: list[frozenset[Vertex]] = []
    counter = 0

    for root in g.vertices:
        if root in index:
            continue
        work: list[tuple[Vertex, int]] = [(root, 0)]
        while work:
            v, ptr = work[-1]
            if ptr == 0:
                index[v] = lowlink[v] = counter
                counter += 1
                stack.append(v)
                on_stack.add(v)
            advanced = False
            while ptr < len(adj[v]):
                w = adj[v][ptr]
                ptr += 1
                if w not in index:
                    work[-1] = (v, ptr)
                    work.append((w, 0))
                    advanced = True
                    break
                if w in on_stack:
                    lowlink[v] = min(lowlink[v], index[w])
            if advanced:
                continue
            work.pop()
            if lowlink[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.append(w)
                    if w == v:
                        break
                components.append(frozenset(comp))
            if work:
                parent = work[-1][0]
                lowlink[parent] = min(lowlink[parent], lowlink[v])
    return components


def reachable(
    g: Digraph, seeds: Iterable[Vertex], direction: Literal["forward", "backward"]
) -> frozenset[Vertex]:
    """Vertices connected to the seeds by a directed path, seeds included."""
    if direction not in ("forward", "backward"):
        raise ValueError(f"unknown direction {direction!r}")
    vset = set(g.vertices)
    frontier = list(seeds)
    for s in frontier:
        if s not in vset:
            raise ValueError(f"seed {s} is not a vertex of the graph")
    adj: dict[Vertex, list[Vertex]] = {v: [] for v in g.vertices}
    for tail, head in g.edges:
        if direction == "forward":
            adj[tail].append(head)
        else:
            adj[head].append(tail)
    seen = set(frontier)
    while frontier:
        v = frontier.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                frontier.append(w)
    return frozenset(seen)
