"""Exact graph parameters at desk scale.

Provides minimum/maximum degree, vertex and edge connectivity (unit
capacity flows, Menger), independence and clique numbers (branch and
bound), exact treewidth and pathwidth via dynamic programming over
vertex subsets with validated witness decompositions, and bramble
validation with exact hitting-set order.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from .errors import BudgetError
from .graphs import Graph, complete_multipartite, multipartite_classes

WIDTH_BUDGET_N = 16
ALPHA_BUDGET_N = 40
CMG_BUDGET_N = 12


class ParamKind(Enum):
    MIN_DEGREE = "delta"
    CONNECTIVITY = "kappa"
    TREEWIDTH = "tw"
    PATHWIDTH = "pw"

    @classmethod
    def from_name(cls, name: str) -> "ParamKind":
        for kind in cls:
            if kind.value == name or kind.name.lower() == name.lower():
                return kind
        raise ValueError(f"unknown parameter {name!r}")


# -- degrees and connectivity -------------------------------------------------


def min_degree(g: Graph) -> int:
    return g.min_degree()


def max_degree(g: Graph) -> int:
    return g.max_degree()


def vertex_connectivity(g: Graph) -> int:
    """Minimum number of vertices whose removal disconnects the graph or
    reduces it to a single vertex; n-1 for complete graphs."""
    n = g.n
    if n <= 1:
        return 0
    full = (1 << n) - 1
    if all(g.rows[v] == full ^ (1 << v) for v in range(n)):
        return n - 1
    if not g.is_connected():
        return 0
    best = n - 1
    for s in range(n):
        for t in range(s + 1, n):
            if not g.has_edge(s, t):
                best = min(best, _vertex_disjoint_paths(g, s, t, best))
    return best


def minimum_vertex_cut(g: Graph) -> tuple[int, frozenset[int]]:
    """Connectivity together with one minimum separating set (empty for
    disconnected graphs; undefined for complete graphs)."""
    n = g.n
    if not g.is_connected():
        return 0, frozenset()
    full = (1 << n) - 1
    if all(g.rows[v] == full ^ (1 << v) for v in range(n)):
        raise ValueError("complete graphs have no separating set")
    best = n
    best_cut: frozenset[int] = frozenset()
    for s in range(n):
        for t in range(s + 1, n):
            if not g.has_edge(s, t):
                k, cut = _vertex_disjoint_paths(g, s, t, best, want_cut=True)
                if k < best:
                    best, best_cut = k, cut
    return best, best_cut


def _vertex_disjoint_paths(g, s, t, cap, want_cut=False):
    """Max number of internally vertex-disjoint s-t paths (<= cap + 1),
    via unit-capacity flow on the split digraph."""
    n = g.n
    # node 2v = v_in, 2v+1 = v_out
    succ: dict[int, set[int]] = {}

    def edge(a: int, b: int) -> None:
        succ.setdefault(a, set()).add(b)

    for v in range(n):
        edge(2 * v, 2 * v + 1)
        for u in g.neighbors(v):
            edge(2 * v + 1, 2 * u)
    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while flow <= cap:
        # BFS for an augmenting path in the residual digraph
        prev = {source: -1}
        queue = [source]
        while queue and sink not in prev:
            nxt = []
            for a in queue:
                for b in succ.get(a, ()):
                    if b not in prev:
                        prev[b] = a
                        nxt.append(b)
            queue = nxt
        if sink not in prev:
            break
        b = sink
        while b != source:
            a = prev[b]
            succ[a].discard(b)
            edge(b, a)
            b = a
        flow += 1
    if not want_cut:
        return flow
    # min cut = vertices whose in->out arc crosses the reachable frontier
    reach = {source}
    queue = [source]
    while queue:
        nxt = []
        for a in queue:
            for b in succ.get(a, ()):
                if b not in reach:
                    reach.add(b)
                    nxt.append(b)
        queue = nxt
    cut = frozenset(
        v for v in range(n) if 2 * v in reach and 2 * v + 1 not in reach
    )
    return flow, cut


def edge_connectivity(g: Graph) -> int:
    if g.n <= 1:
        return 0
    if not g.is_connected():
        return 0
    best = g.n * g.n
    s = 0
    for t in range(1, g.n):
        best = min(best, _edge_disjoint_paths(g, s, t))
    return best


def _edge_disjoint_paths(g: Graph, s: int, t: int) -> int:
    cap: dict[tuple[int, int], int] = {}
    for u, v in g.edges():
        cap[(u, v)] = 1
        cap[(v, u)] = 1
    flow = 0
    while True:
        prev = {s: -1}
        queue = [s]
        while queue and t not in prev:
            nxt = []
            for a in queue:
                for b in g.neighbors(a):
                    if b not in prev and cap.get((a, b), 0) > 0:
                        prev[b] = a
                        nxt.append(b)
            queue = nxt
        if t not in prev:
            return flow
        b = t
        while b != s:
            a = prev[b]
            cap[(a, b)] -= 1
            cap[(b, a)] = cap.get((b, a), 0) + 1
            b = a
        flow += 1


# -- independence and clique ---------------------------------------------------


def independence_number(g: Graph, budget_n: int = ALPHA_BUDGET_N) -> int:
    if g.n > budget_n:
        raise BudgetError(
            f"independence number budget exceeded: n={g.n} > {budget_n}", n=g.n
        )
    return _mis_size(g.rows, (1 << g.n) - 1)


def _mis_size(rows: Sequence[int], cand: int) -> int:
    if cand == 0:
        return 0
    # pick a max-degree-in-candidates pivot; branch on taking it or not
    best_v, best_d = -1, -1
    m = cand
    while m:
        b = m & -m
        v = b.bit_length() - 1
        d = (rows[v] & cand).bit_count()
        if d > best_d:
            best_v, best_d = v, d
        m ^= b
    if best_d == 0:
        return cand.bit_count()
    v = best_v
    with_v = 1 + _mis_size(rows, cand & ~rows[v] & ~(1 << v))
    without_v = _mis_size(rows, cand & ~(1 << v))
    return max(with_v, without_v)


def clique_number(g: Graph, budget_n: int = ALPHA_BUDGET_N) -> int:
    return independence_number(g.complement(), budget_n)


def independence_and_clique(g: Graph, budget_n: int = ALPHA_BUDGET_N) -> tuple[int, int]:
    return independence_number(g, budget_n), clique_number(g, budget_n)


# -- tree and path decompositions ---------------------------------------------


@dataclass(frozen=True)
class TreeDecomposition:
    """Bags plus tree adjacency over bag indices; width = max bag size - 1."""

    bags: tuple[frozenset[int], ...]
    edges: tuple[tuple[int, int], ...]

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags), default=0) - 1

    def validate(self, g: Graph) -> None:
        cover = set()
        for b in self.bags:
            cover |= b
        if cover != set(range(g.n)):
            raise AssertionError("bags do not cover every vertex")
        for u, v in g.edges():
            if not any(u in b and v in b for b in self.bags):
                raise AssertionError(f"edge ({u},{v}) not covered by any bag")
        k = len(self.bags)
        if k and len(self.edges) != k - 1:
            raise AssertionError("bag adjacency is not a tree")
        adj = [[] for _ in range(k)]
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        seen = {0} if k else set()
        stack = [0] if k else []
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        if len(seen) != k:
            raise AssertionError("bag adjacency is not connected")
        for v in range(g.n):
            holding = {i for i, b in enumerate(self.bags) if v in b}
            start = next(iter(holding))
            reach = {start}
            stack = [start]
            while stack:
                x = stack.pop()
                for y in adj[x]:
                    if y in holding and y not in reach:
                        reach.add(y)
                        stack.append(y)
            if reach != holding:
                raise AssertionError(f"bags containing vertex {v} are not connected")

    def is_path(self) -> bool:
        k = len(self.bags)
        deg = [0] * k
        for a, b in self.edges:
            deg[a] += 1
            deg[b] += 1
        return all(d <= 2 for d in deg)

    def to_json(self) -> dict:
        return {
            "width": self.width,
            "bags": [sorted(b) for b in self.bags],
            "edges": [list(e) for e in self.edges],
        }


def _reach_through(rows: Sequence[int], inside: int, v: int) -> int:
    """Vertices outside `inside` (and != v) reachable from v by paths whose
    interior lies in `inside`."""
    result = rows[v]
    visited = 0
    cur = rows[v]
    while True:
        new = cur & inside & ~visited
        if not new:
            break
        visited |= new
        nxt = 0
        m = new
        while m:
            b = m & -m
            nxt |= rows[b.bit_length() - 1]
            m ^= b
        result |= nxt
        cur = nxt
    return result & ~inside & ~(1 << v)


def treewidth(g: Graph, budget_n: int = WIDTH_BUDGET_N) -> tuple[int, TreeDecomposition]:
    """Exact treewidth with a validated witness, by dynamic programming
    over elimination prefixes (vertex subsets)."""
    n = g.n
    if n > budget_n:
        raise BudgetError(f"treewidth budget exceeded: n={n} > {budget_n}", n=n)
    if n == 0:
        return -1, TreeDecomposition((), ())
    rows = g.rows
    size = 1 << n
    INF = n + 1
    f = [INF] * size
    choice = [-1] * size
    f[0] = -1
    for s in range(1, size):
        best = INF
        best_v = -1
        m = s
        while m:
            b = m & -m
            v = b.bit_length() - 1
            m ^= b
            prev = f[s ^ b]
            if prev >= best:
                continue
            q = _reach_through(rows, s ^ b, v).bit_count()
            cost = prev if prev > q else q
            if cost < best:
                best = cost
                best_v = v
        f[s] = best
        choice[s] = best_v
    order = []
    s = size - 1
    while s:
        v = choice[s]
        order.append(v)
        s ^= 1 << v
    order.reverse()  # elimination order, first eliminated first
    return f[size - 1], _decomposition_from_order(g, order)


def _decomposition_from_order(g: Graph, order: list[int]) -> TreeDecomposition:
    n = g.n
    rows = g.rows
    pos = {v: i for i, v in enumerate(order)}
    bags = []
    reaches = []
    eliminated = 0
    for v in order:
        reach = _reach_through(rows, eliminated, v)
        reaches.append(reach)
        bags.append(frozenset([v] + [u for u in range(n) if reach >> u & 1]))
        eliminated |= 1 << v
    edges = []
    roots: list[int] = []
    for i, v in enumerate(order):
        reach = reaches[i]
        if reach:
            j = min((pos[u] for u in range(n) if reach >> u & 1))
            edges.append((i, j))
        else:
            roots.append(i)
    for a, b in zip(roots, roots[1:]):
        edges.append((a, b))
    return TreeDecomposition(tuple(bags), tuple(sorted(edges)))


def pathwidth(g: Graph, budget_n: int = WIDTH_BUDGET_N) -> tuple[int, TreeDecomposition]:
    """Exact pathwidth with a path-shaped witness, by the vertex-separation
    dynamic program over layout prefixes."""
    n = g.n
    if n > budget_n:
        raise BudgetError(f"pathwidth budget exceeded: n={n} > {budget_n}", n=n)
    if n == 0:
        return -1, TreeDecomposition((), ())
    rows = g.rows
    size = 1 << n
    full = size - 1
    INF = n + 1
    boundary = [0] * size
    for s in range(1, size):
        b = 0
        m = s
        while m:
            bit = m & -m
            if rows[bit.bit_length() - 1] & ~s & full:
                b += 1
            m ^= bit
        boundary[s] = b
    f = [INF] * size
    choice = [-1] * size
    f[0] = 0
    for s in range(1, size):
        cost_here = boundary[s]
        best = INF
        best_v = -1
        m = s
        while m:
            bit = m & -m
            v = bit.bit_length() - 1
            m ^= bit
            prev = f[s ^ bit]
            cost = prev if prev > cost_here else cost_here
            if cost < best:
                best = cost
                best_v = v
        f[s] = best
        choice[s] = best_v
    order = []
    s = full
    while s:
        v = choice[s]
        order.append(v)
        s ^= 1 << v
    order.reverse()
    bags = []
    prefix = 0
    for v in order:
        border = [u for u in range(n) if prefix >> u & 1 and rows[u] & ~prefix & full]
        bags.append(frozenset(border + [v]))
        prefix |= 1 << v
    edges = tuple((i, i + 1) for i in range(len(bags) - 1))
    return f[full], TreeDecomposition(tuple(bags), edges)


def parameter_value(g: Graph, kind: ParamKind, budget_n: int = WIDTH_BUDGET_N) -> int:
    if kind is ParamKind.MIN_DEGREE:
        return g.min_degree()
    if kind is ParamKind.CONNECTIVITY:
        return vertex_connectivity(g)
    if kind is ParamKind.TREEWIDTH:
        return treewidth(g, budget_n)[0]
    if kind is ParamKind.PATHWIDTH:
        return pathwidth(g, budget_n)[0]
    raise ValueError(f"unsupported parameter {kind}")


# -- brambles -------------------------------------------------------------------


@dataclass(frozen=True)
class Bramble:
    """Family of pairwise touching connected vertex sets."""

    elements: tuple[frozenset[int], ...]

    def to_json(self) -> dict:
        return {"elements": [sorted(e) for e in self.elements]}


def bramble_validate_and_order(g: Graph, bramble: Bramble) -> int:
    """Validate connectivity and pairwise touching, then return the exact
    minimum hitting-set size."""
    elems = bramble.elements
    if not elems:
        raise ValueError("bramble must have at least one element")
    masks = []
    for i, e in enumerate(elems):
        if not e:
            raise ValueError(f"bramble element {i} is empty")
        if any(v < 0 or v >= g.n for v in e):
            raise ValueError(f"bramble element {i} is not a vertex set of the graph")
        if not g.subgraph(e).is_connected():
            raise ValueError(f"bramble element {i} ({sorted(e)}) is not connected")
        m = 0
        for v in e:
            m |= 1 << v
        masks.append(m)
    closed = []
    for mk in masks:
        c = mk
        m = mk
        while m:
            b = m & -m
            c |= g.rows[b.bit_length() - 1]
            m ^= b
        closed.append(c)
    for i in range(len(elems)):
        for j in range(i + 1, len(elems)):
            if not (closed[i] & masks[j]):
                raise ValueError(
                    f"bramble elements {i} ({sorted(elems[i])}) and "
                    f"{j} ({sorted(elems[j])}) do not touch"
                )
    return _min_hitting_set(masks, g.n)


def _min_hitting_set(masks: list[int], n: int) -> int:
    # greedy upper bound
    remaining = list(masks)
    upper = 0
    while remaining:
        counts = [0] * n
        for mk in remaining:
            m = mk
            while m:
                b = m & -m
                counts[b.bit_length() - 1] += 1
                m ^= b
        v = max(range(n), key=lambda x: counts[x])
        upper += 1
        remaining = [mk for mk in remaining if not (mk >> v & 1)]
    best = [upper]

    def lower_bound(elems: list[int]) -> int:
        # greedy packing of pairwise disjoint elements
        used = 0
        count = 0
        for mk in sorted(elems, key=lambda x: x.bit_count()):
            if not (mk & used):
                used |= mk
                count += 1
        return count

    def rec(elems: list[int], picked: int) -> None:
        if not elems:
            if picked < best[0]:
                best[0] = picked
            return
        if picked + lower_bound(elems) >= best[0]:
            return
        target = min(elems, key=lambda x: x.bit_count())
        m = target
        while m:
            b = m & -m
            v = b.bit_length() - 1
            m ^= b
            rec([mk for mk in elems if not (mk >> v & 1)], picked + 1)

    rec(masks, 0)
    return best[0]


def multipartite_bramble(shape: Iterable[int]) -> tuple[Graph, Bramble]:
    """The edges-plus-clique bramble of a complete multipartite graph:
    every edge as a 2-set plus one singleton per colour class.  Its order
    is n - alpha + 1."""
    sizes = list(shape)
    g = complete_multipartite(sizes)
    elems = [frozenset(e) for e in g.edges()]
    elems += [frozenset({cls.start}) for cls in multipartite_classes(sizes)]
    return g, Bramble(tuple(elems))


# -- complete multipartite equalities ------------------------------------------


@dataclass(frozen=True)
class CmgEqualityReport:
    shape: tuple[int, ...]
    n: int
    kappa: int
    delta: int
    tw: int
    pw: int
    n_minus_alpha: int

    @property
    def all_equal(self) -> bool:
        return (
            self.kappa == self.delta == self.tw == self.pw == self.n_minus_alpha
        )

    def to_json(self) -> dict:
        return {
            "shape": list(self.shape),
            "n": self.n,
            "kappa": self.kappa,
            "delta": self.delta,
            "tw": self.tw,
            "pw": self.pw,
            "n_minus_alpha": self.n_minus_alpha,
            "all_equal": self.all_equal,
        }


def cmg_equalities_check(shape: Iterable[int]) -> CmgEqualityReport:
    """Compute connectivity, minimum degree, treewidth and pathwidth of a
    complete multipartite graph with four independent solvers and compare
    against n minus the largest class size."""
    sizes = tuple(sorted(shape))
    n = sum(sizes)
    if n > CMG_BUDGET_N:
        raise BudgetError(f"shape budget exceeded: n={n} > {CMG_BUDGET_N}", n=n)
    g = complete_multipartite(sizes)
    return CmgEqualityReport(
        shape=sizes,
        n=n,
        kappa=vertex_connectivity(g),
        delta=g.min_degree(),
        tw=treewidth(g)[0],
        pw=pathwidth(g)[0],
        n_minus_alpha=n - max(sizes),
    )
