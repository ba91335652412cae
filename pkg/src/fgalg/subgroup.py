"""Finitely generated subgroups of F as Stallings folded graphs.

A subgroup is represented by a labelled graph with a base vertex: a word
belongs to the subgroup iff it labels a closed path at the base.  The graph
is built by wedging one loop per generator at the base and folding edges
with equal labels at a common vertex until none remain.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .errors import NotMember
from .words import ONE, Word, letter_key


class _UnionFind:
    def __init__(self):
        self.parent: list[int] = []

    def add(self) -> int:
        self.parent.append(len(self.parent))
        return len(self.parent) - 1

    def find(self, v: int) -> int:
        root = v
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[v] != root:
            self.parent[v], v = root, self.parent[v]
        return root


class _Folder:
    def __init__(self):
        self.uf = _UnionFind()
        self.adj: dict[int, dict[int, int]] = {}
        self.pending: deque[tuple[int, int]] = deque()

    def vertex(self) -> int:
        v = self.uf.add()
        self.adj[v] = {}
        return v

    def _link(self, u: int, x: int, v: int) -> None:
        # record u -x-> v, queueing a merge on label clash
        t = self.adj[u].get(x)
        if t is None:
            self.adj[u][x] = v
        elif self.uf.find(t) != v:
            self.pending.append((t, v))

    def edge(self, u: int, x: int, v: int) -> None:
        u, v = self.uf.find(u), self.uf.find(v)
        self._link(u, x, v)
        self._link(v, -x, u)
        self._drain()

    def _drain(self) -> None:
        find = self.uf.find
        while self.pending:
            a, b = self.pending.popleft()
            a, b = find(a), find(b)
            if a == b:
                continue
            if a > b:
                a, b = b, a
            self.uf.parent[b] = a
            moved = self.adj.pop(b)
            for x, t in moved.items():
                s = self.adj[a].get(x)
                if s is None:
                    self.adj[a][x] = t
                elif find(s) != find(t):
                    self.pending.append((s, t))

    def normalized(self) -> dict[int, dict[int, int]]:
        find = self.uf.find
        return {v: {x: find(t) for x, t in e.items()} for v, e in self.adj.items()}


@dataclass(frozen=True)
class FoldedGraph:
    """Folded core graph; vertices are ``0..n-1`` in BFS order from base ``0``.

    ``out[v]`` maps a signed letter to the target vertex; both orientations
    of every edge are present.
    """

    num_vertices: int
    out: tuple[dict[int, int], ...]
    _basis: list[Word] = field(default_factory=list, repr=False, compare=False)
    _edge_index: dict[tuple[int, int], int] = field(default_factory=dict, repr=False, compare=False)

    base = 0

    @property
    def edges(self) -> list[tuple[int, int, int]]:
        """Positively labelled edges ``(src, generator_index, dst)``."""
        return sorted((v, x - 1, t) for v in range(self.num_vertices) for x, t in self.out[v].items() if x > 0)

    @property
    def rank(self) -> int:
        return len(self.edges) - self.num_vertices + 1

    def contains(self, w: Word) -> bool:
        v = 0
        for x in w:
            v = self.out[v].get(x)
            if v is None:
                return False
        return v == 0

    def basis(self) -> list[Word]:
        return list(self._basis)

    def rewrite(self, w: Word) -> Word:
        """Express a member word over the free basis (generator ``i`` = ``basis()[i]``)."""
        letters = []
        v = 0
        for x in w:
            t = self.out[v].get(x)
            if t is None:
                raise NotMember(f"{w} is not in the subgroup")
            key = (v, x) if x > 0 else (t, -x)
            i = self._edge_index.get(key)
            if i is not None:
                letters.append(i + 1 if x > 0 else -(i + 1))
            v = t
        if v != 0:
            raise NotMember(f"{w} is not in the subgroup")
        return Word(letters)


def _prune(adj: dict[int, dict[int, int]], base: int) -> None:
    # drop hanging trees; only the base may have degree 1
    changed = True
    while changed:
        changed = False
        for v in list(adj):
            if v != base and len(adj[v]) <= 1:
                for x, t in adj.pop(v).items():
                    if t != v and t in adj:
                        adj[t].pop(-x, None)
                changed = True


def fold(generators: Iterable[Word]) -> FoldedGraph:
    folder = _Folder()
    base = folder.vertex()
    for g in generators:
        if g.is_identity():
            continue
        v = base
        for k, x in enumerate(g):
            t = base if k == len(g) - 1 else folder.vertex()
            folder.edge(v, x, t)
            v = t
    adj = folder.normalized()
    _prune(adj, folder.uf.find(base))
    return _canonical(adj, folder.uf.find(base))


def _canonical(adj: dict[int, dict[int, int]], base: int) -> FoldedGraph:
    order = {base: 0}
    queue = deque([base])
    parent_edge: dict[int, tuple[int, int]] = {}
    while queue:
        v = queue.popleft()
        for x in sorted(adj[v], key=letter_key):
            t = adj[v][x]
            if t not in order:
                order[t] = len(order)
                parent_edge[order[t]] = (order[v], x)
                queue.append(t)
    out = [dict() for _ in order]
    for v, e in adj.items():
        for x, t in e.items():
            out[order[v]][x] = order[t]
    out = [dict(sorted(e.items(), key=lambda kv: letter_key(kv[0]))) for e in out]

    # spanning tree = BFS parent edges; paths from the base along it
    path = [ONE] * len(out)
    for v in range(1, len(out)):
        p, x = parent_edge[v]
        path[v] = path[p] * Word._trusted((x,))
    tree = set()
    for v, (p, x) in parent_edge.items():
        tree.add((p, x) if x > 0 else (v, -x))
    cotree = []
    for v in range(len(out)):
        for x, t in out[v].items():
            if x > 0 and (v, x) not in tree:
                cotree.append(((v, x), path[v] * Word._trusted((x,)) * path[t].inverse()))
    cotree.sort(key=lambda kv: kv[1].sort_key())
    basis = [w for _, w in cotree]
    index = {key: i for i, (key, _) in enumerate(cotree)}
    return FoldedGraph(len(out), tuple(out), basis, index)


def contains(g: FoldedGraph, w: Word) -> bool:
    return g.contains(w)


def basis_and_rewrite(g: FoldedGraph) -> tuple[list[Word], Callable[[Word], Word]]:
    return g.basis(), g.rewrite


def evaluate(word_over_basis: Word, basis: Sequence[Word]) -> Word:
    """Multiply out a word over the basis alphabet in F."""
    result = ONE
    for x in word_over_basis:
        g = basis[abs(x) - 1]
        result = result * (g if x > 0 else g.inverse())
    return result
