"""Boruvka tree construction and tree-path maximum queries.

Repeated Boruvka phases on a spanning tree T yield a full branching tree
whose leaves are the vertices: every phase, each current node selects its
minimum-(w, id) incident T-edge, and the connected components of the
selected edges become the nodes of the next level. The maximum branch
weight between two leaves equals the maximum edge weight on their T-path,
so after one O(n)-query build, path-max queries cost O(log n) and zero
oracle calls.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .graph import Edge, Graph, SpanningTree, UnionFind
from .oracle import InstrumentedOracle


class SameVertexError(ValueError):
    """A path query needs two distinct vertices."""


@dataclass
class BNode:
    """One aggregate in the Boruvka tree.

    branch_edge_id / branch_weight describe the tree edge this node
    selected when it merged into its parent; both are None for the root.
    """

    id: int
    level: int
    parent: int | None = None
    branch_edge_id: int | None = None
    branch_weight: float | None = None
    children: tuple[int, ...] = ()


@dataclass(frozen=True)
class PathMaxAnswer:
    """Heaviest-(w, id) edge on the tree path between two queried vertices."""

    max_weight: float
    max_edge_id: int
    ascent_steps: int


class BoruvkaTree:
    """Full branching tree over vertex aggregates; immutable after build."""

    def __init__(self, nodes: list[BNode], root: int, height: int, build_work: int):
        self.nodes = nodes
        self.root = root
        self.height = height
        self.build_work = build_work
        # leaf i is node i by construction
        self.leaf_of = tuple(range(sum(1 for node in nodes if node.level == 0)))

    @property
    def n_leaves(self) -> int:
        return len(self.leaf_of)

    def path_max(self, u: int, v: int) -> PathMaxAnswer:
        """Maximum branch on the two synchronized ascents from u and v to their LCA.

        Equals the maximum-(w, id) edge of the T-path between u and v.
        O(height) work, no oracle queries.
        """
        if u == v:
            raise SameVertexError(f"path query needs distinct vertices, got {u} twice")
        nodes = self.nodes
        a, b = self.leaf_of[u], self.leaf_of[v]
        best_w = -math.inf
        best_id = -1
        steps = 0
        while a != b:
            for node in (nodes[a], nodes[b]):
                w, eid = node.branch_weight, node.branch_edge_id
                if (w, eid) > (best_w, best_id):
                    best_w, best_id = w, eid
            a = nodes[a].parent
            b = nodes[b].parent
            steps += 2
        return PathMaxAnswer(best_w, best_id, steps)

    def dump(self) -> str:
        """Debug outline, one node per line: id level parent branch_weight branch_edge_id."""
        lines = []
        for node in self.nodes:
            parent = "-" if node.parent is None else str(node.parent)
            bw = "-" if node.branch_weight is None else repr(node.branch_weight)
            be = "-" if node.branch_edge_id is None else str(node.branch_edge_id)
            lines.append(f"{node.id} {node.level} {parent} {bw} {be}")
        return "\n".join(lines) + "\n"


def build_boruvka_tree(g: Graph, t: SpanningTree, oracle: InstrumentedOracle) -> BoruvkaTree:
    """Run Boruvka phases on T until one aggregate remains.

    Each tree edge's weight is fetched through the oracle exactly once and
    cached, so the classical counter advances by exactly n-1. Every phase
    at least halves the aggregate count, so the height is at most
    ceil(log2 n).
    """
    n = g.n
    tree_edges = [g.edges[i] for i in t.edge_ids]
    weight_of = {e.id: oracle.edge_weight(e) for e in tree_edges}

    nodes = [BNode(id=i, level=0) for i in range(n)]
    comp = list(range(n))  # vertex -> current aggregate node id
    current = list(range(n))
    active = tree_edges
    level = 0
    work = 0

    while len(current) > 1:
        level += 1
        # each aggregate selects its minimum-(w, id) incident tree edge
        best: dict[int, Edge] = {}
        for e in active:
            k = (weight_of[e.id], e.id)
            for node_id in (comp[e.u], comp[e.v]):
                cur = best.get(node_id)
                if cur is None or k < (weight_of[cur.id], cur.id):
                    best[node_id] = e
            work += 2
        # components of the selected edges become the next level's nodes
        uf = UnionFind(len(nodes))
        for node_id in current:
            e = best[node_id]
            uf.union(comp[e.u], comp[e.v])
            work += 1
        group: dict[int, int] = {}
        children: dict[int, list[int]] = {}
        for node_id in current:
            root = uf.find(node_id)
            new_id = group.get(root)
            if new_id is None:
                new_id = len(nodes) + len(group)
                group[root] = new_id
                children[new_id] = []
            e = best[node_id]
            node = nodes[node_id]
            node.parent = new_id
            node.branch_edge_id = e.id
            node.branch_weight = weight_of[e.id]
            children[new_id].append(node_id)
        for new_id in sorted(children):
            nodes.append(BNode(id=new_id, level=level, children=tuple(children[new_id])))
        for vertex in range(n):
            comp[vertex] = nodes[comp[vertex]].parent
        current = sorted(children)
        active = [e for e in active if comp[e.u] != comp[e.v]]
        work += n + len(active)

    root = current[0] if n > 1 else 0
    return BoruvkaTree(nodes, root=root, height=level, build_work=work)


def validate_structure(b: BoruvkaTree, n: int) -> None:
    """Raise ValueError unless b is a full branching tree within the size bounds."""
    leaves = [node for node in b.nodes if not node.children]
    if len(leaves) != n or any(node.level != 0 for node in leaves):
        raise ValueError("leaves must be exactly the n vertices at level 0")
    if len(b.nodes) > 2 * n:
        raise ValueError(f"node count {len(b.nodes)} exceeds 2n = {2 * n}")
    for node in b.nodes:
        if node.children and len(node.children) < 2:
            raise ValueError(f"internal node {node.id} has fan-out {len(node.children)}")
        if node.id != b.root and node.parent is None:
            raise ValueError(f"non-root node {node.id} has no parent")
    # equal leaf depth: every leaf must reach the root in exactly `height` hops
    for leaf in leaves:
        depth = 0
        node = leaf
        while node.parent is not None:
            node = b.nodes[node.parent]
            depth += 1
        if node.id != b.root or depth != b.height:
            raise ValueError(f"leaf {leaf.id} at depth {depth}, expected height {b.height}")
    if n > 1 and b.height > math.ceil(math.log2(n)):
        raise ValueError(f"height {b.height} exceeds ceil(log2 {n})")
    if n == 1 and b.height != 0:
        raise ValueError("single-vertex tree must have height 0")


def tree_path_edges(g: Graph, t: SpanningTree, u: int, v: int) -> list[Edge]:
    """The unique T-path between u and v, as a list of edges. O(n)."""
    if u == v:
        raise SameVertexError(f"path query needs distinct vertices, got {u} twice")
    adjacency: list[list[Edge]] = [[] for _ in range(g.n)]
    for i in t.edge_ids:
        e = g.edges[i]
        adjacency[e.u].append(e)
        adjacency[e.v].append(e)
    via: list[Edge | None] = [None] * g.n
    stack = [u]
    seen = [False] * g.n
    seen[u] = True
    while stack:
        x = stack.pop()
        if x == v:
            break
        for e in adjacency[x]:
            y = e.other(x)
            if not seen[y]:
                seen[y] = True
                via[y] = e
                stack.append(y)
    path: list[Edge] = []
    x = v
    while x != u:
        e = via[x]
        path.append(e)
        x = e.other(x)
    path.reverse()
    return path


def direct_path_max(g: Graph, t: SpanningTree, u: int, v: int) -> PathMaxAnswer:
    """Brute-force reference for path_max: walk the T-path, take the (w, id) max."""
    path = tree_path_edges(g, t, u, v)
    best = max(path, key=lambda e: e.key)
    return PathMaxAnswer(best.w, best.id, ascent_steps=len(path))
