"""Canonical forms, isomorphism tests and canonical relabellings.

Canonical forms are computed by equitable degree refinement plus
backtracking over individualisations.  Two cuts keep highly symmetric
inputs (complete, complete multipartite, regular quotients) cheap:

* a node whose ordered partition is "homogeneous" (every cell a clique or
  independent set, every cell pair complete or empty) yields the same
  adjacency matrix under any completion and is treated as a leaf;
* automorphisms discovered from equal leaves merge root orbits, and only
  one root candidate per orbit is explored.

The form is relabel-invariant and injective on isomorphism classes, and
optional vertex colours restrict it to colour-preserving isomorphism.
"""

from __future__ import annotations

from typing import Sequence

from .graphs import Graph

_CACHE: dict[tuple[int, tuple[int, ...]], tuple[bytes, tuple[int, ...]]] = {}
_CACHE_LIMIT = 1 << 20
_MAX_LEAF_RECORDS = 512


def canonical_form(g: Graph, colors: Sequence[int] | None = None) -> bytes:
    """Byte string equal for two graphs iff they are isomorphic
    (colour-preservingly so when colours are given)."""
    return _canon(g, colors)[0]


def canonical_perm(g: Graph, colors: Sequence[int] | None = None) -> tuple[int, ...]:
    """A permutation realising the canonical form: position i holds perm[i]."""
    return _canon(g, colors)[1]


def canonical_relabel(g: Graph) -> Graph:
    return g.relabel(canonical_perm(g))


def are_isomorphic(
    g: Graph,
    h: Graph,
    g_colors: Sequence[int] | None = None,
    h_colors: Sequence[int] | None = None,
) -> bool:
    return canonical_form(g, g_colors) == canonical_form(h, h_colors)


def _canon(g: Graph, colors: Sequence[int] | None) -> tuple[bytes, tuple[int, ...]]:
    if colors is None:
        key = (g.n, g.rows)
        hit = _CACHE.get(key)
        if hit is not None:
            return hit
        result = _search(g.n, g.rows, [list(range(g.n))] if g.n else [], b"")
        if len(_CACHE) < _CACHE_LIMIT:
            _CACHE[key] = result
        return result
    if len(colors) != g.n:
        raise ValueError("colors must assign one value per vertex")
    order = sorted(set(colors))
    rank = {c: i for i, c in enumerate(order)}
    cells: list[list[int]] = [[] for _ in order]
    for v in range(g.n):
        cells[rank[colors[v]]].append(v)
    cells = [c for c in cells if c]
    prefix = bytes([len(cells)]) + b"".join(
        len(c).to_bytes(4, "big") for c in cells
    )
    return _search(g.n, g.rows, cells, prefix)


def _search(
    n: int, rows: tuple[int, ...], cells: list[list[int]], prefix: bytes
) -> tuple[bytes, tuple[int, ...]]:
    if n == 0:
        return b"\x00" + prefix, ()
    best: list = [None, None]  # packed bytes, perm
    leaf_records: dict[bytes, tuple[int, ...]] = {}
    uf = list(range(n))

    def find(x: int) -> int:
        while uf[x] != x:
            uf[x] = uf[uf[x]]
            x = uf[x]
        return x

    def leaf(perm: tuple[int, ...]) -> None:
        packed = _pack(n, rows, perm)
        if best[0] is None or packed < best[0]:
            best[0] = packed
            best[1] = perm
        prev = leaf_records.get(packed)
        if prev is None:
            if len(leaf_records) < _MAX_LEAF_RECORDS:
                leaf_records[packed] = perm
        else:
            for a, b in zip(prev, perm):
                ra, rb = find(a), find(b)
                if ra != rb:
                    uf[ra] = rb

    def rec(part: list[list[int]], at_root: bool) -> None:
        part = _refine(rows, part)
        target = -1
        for i, cell in enumerate(part):
            if len(cell) > 1:
                target = i
                break
        if target < 0:
            leaf(tuple(c[0] for c in part))
            return
        if _homogeneous(rows, part):
            perm: list[int] = []
            for c in part:
                perm.extend(c)
            leaf(tuple(perm))
            return
        tried: list[int] = []
        for v in part[target]:
            if at_root:
                if any(find(v) == find(u) for u in tried):
                    continue
                tried.append(v)
            rest = [u for u in part[target] if u != v]
            rec(part[:target] + [[v], rest] + part[target + 1 :], False)

    rec(cells, True)
    packed, perm = best
    return bytes([min(n, 255)]) + prefix + packed, perm


def _refine(rows: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    cells = [list(c) for c in cells]
    while True:
        masks = []
        for c in cells:
            m = 0
            for v in c:
                m |= 1 << v
            masks.append(m)
        out: list[list[int]] = []
        changed = False
        for c in cells:
            if len(c) == 1:
                out.append(c)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in c:
                sig = tuple((rows[v] & m).bit_count() for m in masks)
                groups.setdefault(sig, []).append(v)
            if len(groups) == 1:
                out.append(c)
            else:
                changed = True
                for sig in sorted(groups):
                    out.append(groups[sig])
        cells = out
        if not changed:
            return cells


def _homogeneous(rows: tuple[int, ...], cells: list[list[int]]) -> bool:
    masks = []
    for c in cells:
        m = 0
        for v in c:
            m |= 1 << v
        masks.append(m)
    for i, ci in enumerate(cells):
        for j in range(i, len(cells)):
            mj = masks[j]
            want = None
            for v in ci:
                d = (rows[v] & mj).bit_count()
                full = len(cells[j]) - 1 if i == j else len(cells[j])
                if d != 0 and d != full:
                    return False
                if want is None:
                    want = d
                elif d != want:
                    return False
    return True


def _pack(n: int, rows: tuple[int, ...], perm: tuple[int, ...]) -> bytes:
    bits = 0
    count = 0
    for i in range(n):
        ri = rows[perm[i]]
        for j in range(i + 1, n):
            bits = (bits << 1) | (ri >> perm[j] & 1)
            count += 1
    pad = (-count) % 8
    bits <<= pad
    return bits.to_bytes((count + pad) // 8 or 1, "big")


def clear_cache() -> None:
    _CACHE.clear()
