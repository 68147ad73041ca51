"""Immutable simple undirected graphs on vertices 0..n-1.

Adjacency is stored as one integer bitmask per vertex, so edge tests,
degrees and common-neighbourhood queries are single word operations.
Every editing operation returns a new Graph; values are hashable and
safe to share between workers.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence


class Graph:
    __slots__ = ("n", "rows", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()) -> None:
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u} not allowed")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        self.n = n
        self.rows: tuple[int, ...] = tuple(rows)
        self._hash: int | None = None

    @classmethod
    def _from_rows(cls, rows: Sequence[int]) -> "Graph":
        # trusted fast path: rows must already be symmetric and loop-free
        g = object.__new__(cls)
        g.n = len(rows)
        g.rows = tuple(rows)
        g._hash = None
        return g

    # -- basic queries ----------------------------------------------------

    @property
    def m(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def min_degree(self) -> int:
        if self.n == 0:
            raise ValueError("minimum degree of the empty graph is undefined")
        return min(r.bit_count() for r in self.rows)

    def max_degree(self) -> int:
        if self.n == 0:
            raise ValueError("maximum degree of the empty graph is undefined")
        return max(r.bit_count() for r in self.rows)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return _bits(self.rows[v])

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            r = self.rows[u] >> (u + 1)
            while r:
                b = r & -r
                out.append((u, u + 1 + b.bit_length() - 1))
                r ^= b
        return out

    def common_neighbors(self, u: int, v: int) -> list[int]:
        return _bits(self.rows[u] & self.rows[v])

    def is_regular(self, r: int | None = None) -> bool:
        degs = set(self.degrees()) if self.n else set()
        if r is None:
            return len(degs) <= 1
        return degs == {r} or (self.n == 0)

    # -- connectivity structure -------------------------------------------

    def components(self) -> list[frozenset[int]]:
        seen = 0
        comps = []
        full = (1 << self.n) - 1
        while seen != full:
            start = (~seen & full) & -(~seen & full)
            comp = start
            frontier = start
            while frontier:
                nxt = 0
                m = frontier
                while m:
                    b = m & -m
                    nxt |= self.rows[b.bit_length() - 1]
                    m ^= b
                frontier = nxt & ~comp
                comp |= frontier
            comps.append(frozenset(_bits(comp)))
            seen |= comp
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    # -- editing operations -------------------------------------------------

    def contract_edge(self, v: int, w: int) -> "Graph":
        """Contract the edge vw, merging parallels; the merged vertex keeps
        the smaller of the two labels and higher vertices shift down by one."""
        self._check_vertex(v)
        self._check_vertex(w)
        if not self.has_edge(v, w):
            raise ValueError(f"({v},{w}) is not an edge; cannot contract")
        keep, drop = (v, w) if v < w else (w, v)
        merged = (self.rows[keep] | self.rows[drop]) & ~(1 << keep) & ~(1 << drop)
        rows = []
        for u in range(self.n):
            if u == drop:
                continue
            r = merged if u == keep else self.rows[u]
            if u != keep:
                if r >> drop & 1:
                    r |= 1 << keep
                r &= ~(1 << drop)
            rows.append(_squeeze(r, drop))
        return Graph._from_rows(rows)

    def delete_vertex(self, v: int) -> "Graph":
        self._check_vertex(v)
        rows = [_squeeze(self.rows[u] & ~(1 << v), v) for u in range(self.n) if u != v]
        return Graph._from_rows(rows)

    def delete_edge(self, u: int, v: int) -> "Graph":
        self._check_vertex(u)
        self._check_vertex(v)
        if not self.has_edge(u, v):
            raise ValueError(f"({u},{v}) is not an edge; cannot delete")
        rows = list(self.rows)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph._from_rows(rows)

    def add_vertex(self, nbrs: Iterable[int] = ()) -> "Graph":
        nb = 0
        for u in nbrs:
            self._check_vertex(u)
            nb |= 1 << u
        rows = list(self.rows)
        for u in _bits(nb):
            rows[u] |= 1 << self.n
        rows.append(nb)
        return Graph._from_rows(rows)

    def add_edge(self, u: int, v: int) -> "Graph":
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise ValueError("loops not allowed")
        rows = list(self.rows)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph._from_rows(rows)

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        rows = [(~self.rows[u]) & full & ~(1 << u) for u in range(self.n)]
        return Graph._from_rows(rows)

    def subgraph(self, vertices: Iterable[int]) -> "Graph":
        """Induced subgraph; kept vertices are relabelled in ascending order."""
        keep = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(keep)}
        rows = [0] * len(keep)
        for v in keep:
            r = self.rows[v]
            for u in _bits(r):
                if u in pos:
                    rows[pos[v]] |= 1 << pos[u]
        return Graph._from_rows(rows)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Relabelled copy where new vertex i is old vertex perm[i]."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("perm must be a permutation of the vertices")
        inv = [0] * self.n
        for i, v in enumerate(perm):
            inv[v] = i
        rows = [0] * self.n
        for i, v in enumerate(perm):
            r = 0
            for u in _bits(self.rows[v]):
                r |= 1 << inv[u]
            rows[i] = r
        return Graph._from_rows(rows)

    def quotient(self, parts: Sequence[int] | Sequence[Iterable[int]]) -> "Graph":
        """Quotient by disjoint vertex sets: part i and part j are adjacent
        iff some edge joins them.  Vertices outside every part are dropped."""
        masks = [p if isinstance(p, int) else _mask(p) for p in parts]
        k = len(masks)
        nbr = []
        for mk in masks:
            r = 0
            m = mk
            while m:
                b = m & -m
                r |= self.rows[b.bit_length() - 1]
                m ^= b
            nbr.append(r)
        rows = [0] * k
        for i in range(k):
            for j in range(i + 1, k):
                if nbr[i] & masks[j]:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
        return Graph._from_rows(rows)

    # -- dunder -------------------------------------------------------------

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise ValueError(f"vertex {v} out of range for n={self.n}")

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph) and self.n == other.n and self.rows == other.rows
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.rows))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()!r})"


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        b = mask & -mask
        out.append(b.bit_length() - 1)
        mask ^= b
    return out


def _mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def _squeeze(mask: int, removed: int) -> int:
    """Drop bit position `removed` and shift higher bits down by one."""
    low = mask & ((1 << removed) - 1)
    high = mask >> (removed + 1)
    return low | (high << removed)


# -- builders ---------------------------------------------------------------


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph._from_rows([full & ~(1 << v) for v in range(n)])


def empty_graph(n: int) -> Graph:
    return Graph._from_rows([0] * n)


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def disjoint_union(g: Graph, h: Graph) -> Graph:
    rows = list(g.rows) + [r << g.n for r in h.rows]
    return Graph._from_rows(rows)


def join(g: Graph, h: Graph) -> Graph:
    """Join of two graphs: disjoint union plus all cross edges."""
    gm = (1 << g.n) - 1
    hm = ((1 << h.n) - 1) << g.n
    rows = [r | hm for r in g.rows]
    rows += [(r << g.n) | gm for r in h.rows]
    return Graph._from_rows(rows)


def complete_multipartite(shape: Iterable[int]) -> Graph:
    """Complete multipartite graph; class i occupies a consecutive vertex
    range, classes ordered as given."""
    sizes = list(shape)
    if not sizes:
        raise ValueError("shape must be nonempty")
    if any(s < 1 for s in sizes):
        raise ValueError("all part sizes must be at least 1")
    n = sum(sizes)
    full = (1 << n) - 1
    rows = []
    start = 0
    for s in sizes:
        part_mask = ((1 << s) - 1) << start
        rows += [full & ~part_mask] * s
        start += s
    return Graph._from_rows([rows[v] for v in range(n)])


def multipartite_classes(shape: Iterable[int]) -> list[range]:
    """Vertex ranges of each colour class as laid out by complete_multipartite."""
    out = []
    start = 0
    for s in shape:
        out.append(range(start, start + s))
        start += s
    return out
