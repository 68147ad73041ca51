"""Block decomposition trees: blocks (cut-edges and maximal 2-connected
subgraphs) and cut-vertices of a connected graph, arranged as a tree."""

from __future__ import annotations

from dataclasses import dataclass

from .canon import canonical_form
from .graphs import Graph


@dataclass(frozen=True)
class BlockTree:
    """Tree whose nodes are the blocks and cut-vertices of a graph.

    Node ids 0..len(cuts)-1 are the cut-vertices (ascending by vertex);
    the remaining ids are the blocks (sorted by vertex tuple).  The tree
    is bipartite between the two node kinds and every leaf is a block.
    """

    blocks: tuple[frozenset[int], ...]
    cuts: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]

    @property
    def node_count(self) -> int:
        return len(self.blocks) + len(self.cuts)

    def is_cut_node(self, node: int) -> bool:
        return node < len(self.cuts)

    def tree_graph(self) -> Graph:
        return Graph(self.node_count, self.edges)

    def node_colors(self) -> list[int]:
        # cut nodes colour 0, block nodes colour 1
        return [0] * len(self.cuts) + [1] * len(self.blocks)

    def tagged_form(self) -> bytes:
        return canonical_form(self.tree_graph(), self.node_colors())

    def validate(self, g: Graph) -> None:
        cover = set()
        for b in self.blocks:
            cover |= b
        if cover != set(range(g.n)):
            raise AssertionError("blocks do not cover the vertex set")
        t = self.tree_graph()
        if t.n > 1 and (not t.is_connected() or t.m != t.n - 1):
            raise AssertionError("block structure is not a tree")
        nc = len(self.cuts)
        for u, v in self.edges:
            if (u < nc) == (v < nc):
                raise AssertionError("tree edge joins two nodes of the same kind")
        for i, c in enumerate(self.cuts):
            deg = sum(1 for u, v in self.edges if i in (u, v))
            if deg < 2:
                raise AssertionError(f"cut-vertex {c} lies in fewer than 2 blocks")
        for node in range(self.node_count):
            deg = sum(1 for u, v in self.edges if node in (u, v))
            if deg <= 1 and t.n > 1 and node < nc:
                raise AssertionError("a leaf of the block tree is a cut node")


def biconnected_components(g: Graph) -> tuple[list[frozenset[int]], list[int]]:
    """Blocks and cut-vertices via iterative depth-first search."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    blocks: list[frozenset[int]] = []
    cuts: set[int] = set()
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        if g.rows[root] == 0:
            blocks.append(frozenset({root}))
            disc[root] = timer
            timer += 1
            continue
        estack: list[tuple[int, int]] = []
        root_children = 0
        stack = [(root, iter(g.neighbors(root)))]
        disc[root] = low[root] = timer
        timer += 1
        while stack:
            v, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] == -1:
                    parent[w] = v
                    estack.append((v, w))
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, iter(g.neighbors(w))))
                    advanced = True
                    break
                elif w != parent[v] and disc[w] < disc[v]:
                    estack.append((v, w))
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if stack:
                u = stack[-1][0]
                low[u] = min(low[u], low[v])
                if low[v] >= disc[u]:
                    # u closes a block; pop its edges
                    comp = set()
                    while estack:
                        a, b = estack.pop()
                        comp.add(a)
                        comp.add(b)
                        if (a, b) == (u, v):
                            break
                    blocks.append(frozenset(comp))
                    if u == root:
                        root_children += 1
                    else:
                        cuts.add(u)
        if root_children > 1:
            cuts.add(root)
    return blocks, sorted(cuts)


def block_tree(g: Graph) -> BlockTree:
    """Block decomposition tree of a connected graph; a block node is
    adjacent to a cut node exactly when the cut-vertex lies in the block."""
    if g.n == 0:
        raise ValueError("block tree of the empty graph is undefined")
    if not g.is_connected():
        raise ValueError("block tree is only defined for connected graphs")
    blocks, cuts = biconnected_components(g)
    blocks = sorted(blocks, key=sorted)
    nc = len(cuts)
    cut_index = {c: i for i, c in enumerate(cuts)}
    edges = []
    for bi, b in enumerate(blocks):
        for c in b:
            if c in cut_index:
                edges.append((cut_index[c], nc + bi))
    return BlockTree(tuple(blocks), tuple(cuts), tuple(sorted(edges)))
