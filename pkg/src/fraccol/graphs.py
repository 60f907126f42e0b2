"""Simple graphs, multigraphs and digraphs on integer vertices 0..n-1.

Everything here is immutable by convention: operations return new objects.
Vertices are plain ints so that induced subgraphs can keep the parent's ids
(pattern witnesses and boundary machinery need stable identities).
"""

from __future__ import annotations

import json
from itertools import combinations


class Graph:
    """Simple undirected graph: no loops, no parallel edges.

    ``edges`` is stored as a sorted tuple of (u, v) pairs with u < v and
    ``adj`` as a tuple of frozensets, so equal graphs compare equal and
    hash equal.
    """

    __slots__ = ("n", "edges", "adj", "labels", "_cache")

    def __init__(self, n, edges, labels=None):
        norm = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            norm.add((min(u, v), max(u, v)))
        self.n = n
        self.edges = tuple(sorted(norm))
        adj = [set() for _ in range(n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        self.adj = tuple(frozenset(a) for a in adj)
        self.labels = dict(labels) if labels else None
        self._cache = {}

    # -- basic queries -------------------------------------------------

    def degree(self, v):
        return len(self.adj[v])

    def degrees(self):
        return [len(self.adj[v]) for v in range(self.n)]

    def has_edge(self, u, v):
        return v in self.adj[u]

    def vertices(self):
        return range(self.n)

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={len(self.edges)})"

    # -- derived graphs --------------------------------------------------

    def with_edge(self, u, v):
        return Graph(self.n, self.edges + ((u, v),))

    def without_edges(self, drop):
        drop = {(min(u, v), max(u, v)) for u, v in drop}
        return Graph(self.n, [e for e in self.edges if e not in drop])

    def induced(self, vertices):
        """Induced subgraph relabeled to 0..k-1.

        Returns (graph, order) where order[i] is the parent id of vertex i.
        """
        order = sorted(vertices)
        pos = {v: i for i, v in enumerate(order)}
        edges = [(pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos]
        return Graph(len(order), edges), order

    def induced_adj(self, vertices):
        """Adjacency view of the induced subgraph, keeping parent ids."""
        vs = set(vertices)
        return {v: self.adj[v] & vs for v in vs}

    def contract(self, u, v):
        """Identify u and v (loops/parallels discarded); new vertex keeps slot
        min(u,v), the other slot is removed and higher ids shift down."""
        keep, gone = min(u, v), max(u, v)

        def remap(x):
            if x == gone:
                x = keep
            return x - 1 if x > gone else x

        edges = set()
        for a, b in self.edges:
            a2, b2 = remap(a), remap(b)
            if a2 != b2:
                edges.add((min(a2, b2), max(a2, b2)))
        return Graph(self.n - 1, edges)

    # -- connectivity ----------------------------------------------------

    def components(self):
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            comp, stack = [], [s]
            seen[s] = True
            while stack:
                x = stack.pop()
                comp.append(x)
                for y in self.adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        stack.append(y)
            comps.append(sorted(comp))
        return comps

    def is_connected(self):
        return self.n <= 1 or len(self.components()) == 1

    def connected_without(self, removed):
        """Is the graph minus ``removed`` connected (ignoring empty result)?"""
        removed = set(removed)
        rest = [v for v in range(self.n) if v not in removed]
        if not rest:
            return True
        seen = {rest[0]}
        stack = [rest[0]]
        while stack:
            x = stack.pop()
            for y in self.adj[x]:
                if y not in removed and y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(seen) == len(rest)

    def blocks(self):
        """Biconnected components as vertex lists, plus cut vertices.

        A bridge yields a 2-vertex block. Isolated vertices yield singleton
        blocks so that every vertex appears in some block.
        """
        n = self.n
        num = [0] * n
        low = [0] * n
        visited = [False] * n
        parent = [-1] * n
        cuts = set()
        blocks = []
        estack = []
        counter = [1]

        def dfs(root):
            stack = [(root, iter(self.adj[root]))]
            visited[root] = True
            num[root] = low[root] = counter[0]
            counter[0] += 1
            child_count = {root: 0}
            while stack:
                v, it = stack[-1]
                advanced = False
                for w in it:
                    if not visited[w]:
                        estack.append((v, w))
                        visited[w] = True
                        parent[w] = v
                        num[w] = low[w] = counter[0]
                        counter[0] += 1
                        child_count[v] = child_count.get(v, 0) + 1
                        child_count.setdefault(w, 0)
                        stack.append((w, iter(self.adj[w])))
                        advanced = True
                        break
                    elif w != parent[v] and num[w] < num[v]:
                        estack.append((v, w))
                        low[v] = min(low[v], num[w])
                if advanced:
                    continue
                stack.pop()
                if stack:
                    u = stack[-1][0]
                    low[u] = min(low[u], low[v])
                    if low[v] >= num[u]:
                        comp = set()
                        while estack:
                            a, b = estack[-1]
                            if num[a] >= num[v]:
                                comp.update((a, b))
                                estack.pop()
                            else:
                                break
                        if estack and estack[-1] == (u, v):
                            estack.pop()
                        comp.update((u, v))
                        blocks.append(sorted(comp))
                        if parent[u] != -1 or child_count[u] > 1:
                            cuts.add(u)

        for s in range(n):
            if not visited[s]:
                dfs(s)
                if not self.adj[s]:
                    blocks.append([s])
        return blocks, sorted(cuts)

    # -- serialization -----------------------------------------------------

    def to_json(self):
        obj = {"n": self.n, "edges": [[u, v] for u, v in self.edges]}
        if self.labels:
            obj["labels"] = {str(k): v for k, v in self.labels.items()}
        return obj

    @classmethod
    def from_json(cls, obj):
        labels = obj.get("labels")
        if labels is not None:
            labels = {int(k): v for k, v in labels.items()}
        return cls(obj["n"], [tuple(e) for e in obj["edges"]], labels)

    def dumps(self):
        return json.dumps(self.to_json(), sort_keys=True)

    @classmethod
    def loads(cls, s):
        return cls.from_json(json.loads(s))

    def to_dot(self):
        lines = ["graph G {"]
        for v in range(self.n):
            label = self.labels.get(v) if self.labels else None
            lines.append(f'  {v} [label="{label}"];' if label else f"  {v};")
        for u, v in self.edges:
            lines.append(f"  {u} -- {v};")
        lines.append("}")
        return "\n".join(lines)


class MultiGraph:
    """Undirected multigraph (parallel edges allowed, loops forbidden)."""

    __slots__ = ("n", "edges")

    def __init__(self, n, edges):
        self.n = n
        norm = []
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range")
            norm.append((min(u, v), max(u, v)))
        self.edges = tuple(norm)

    def degree(self, v):
        return sum(1 for u, w in self.edges if v in (u, w))

    def __repr__(self):
        return f"MultiGraph(n={self.n}, m={len(self.edges)})"


class Digraph:
    """Directed graph; ``arcs`` is a multiset of (tail, head) pairs."""

    __slots__ = ("n", "arcs", "out", "inn")

    def __init__(self, n, arcs):
        self.n = n
        self.arcs = tuple(arcs)
        out = [[] for _ in range(n)]
        inn = [[] for _ in range(n)]
        for u, v in self.arcs:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"arc ({u},{v}) out of range")
            out[u].append(v)
            inn[v].append(u)
        self.out = tuple(tuple(x) for x in out)
        self.inn = tuple(tuple(x) for x in inn)

    def out_degree(self, v):
        return len(self.out[v])

    def in_degree(self, v):
        return len(self.inn[v])

    def reversed(self):
        return Digraph(self.n, [(v, u) for u, v in self.arcs])

    def __repr__(self):
        return f"Digraph(n={self.n}, m={len(self.arcs)})"


# -- recognizers ---------------------------------------------------------


def is_triangle_free(g):
    for u, v in g.edges:
        if g.adj[u] & g.adj[v]:
            return False
    return True


def is_subcubic(g):
    return all(len(a) <= 3 for a in g.adj)


def is_bipartite(g):
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            x = stack.pop()
            for y in g.adj[x]:
                if color[y] == -1:
                    color[y] = 1 - color[x]
                    stack.append(y)
                elif color[y] == color[x]:
                    return False
    return True


def decompose_connectivity(g):
    """Components, blocks (block-cut structure) and non-adjacent 2-cuts.

    Returns a dict with:
      components: list of vertex lists,
      blocks: list of vertex lists (maximal 2-connected pieces / bridges),
      cut_vertices: sorted list,
      two_cuts: list of (u, v, sides) with {u,v} a non-adjacent vertex cut
                of a block of size >= 4 and sides the components of
                block - {u,v} (vertex lists in parent ids).
    """
    comps = g.components()
    blocks, cuts = g.blocks()
    two_cuts = []
    for blk in blocks:
        if len(blk) < 4:
            continue
        sub_adj = g.induced_adj(blk)
        for u, v in combinations(blk, 2):
            if v in g.adj[u]:
                continue
            rest = [x for x in blk if x not in (u, v)]
            seen = {rest[0]}
            stack = [rest[0]]
            while stack:
                x = stack.pop()
                for y in sub_adj[x]:
                    if y not in (u, v) and y not in seen:
                        seen.add(y)
                        stack.append(y)
            if len(seen) != len(rest):
                sides = []
                left = set(rest) - seen
                sides.append(sorted(seen))
                while left:
                    s0 = next(iter(left))
                    comp = {s0}
                    stack = [s0]
                    while stack:
                        x = stack.pop()
                        for y in sub_adj[x]:
                            if y not in (u, v) and y not in comp:
                                comp.add(y)
                                stack.append(y)
                    sides.append(sorted(comp))
                    left -= comp
                two_cuts.append((u, v, sides))
    return {
        "components": comps,
        "blocks": blocks,
        "cut_vertices": cuts,
        "two_cuts": two_cuts,
    }


# -- balanced orientation (Lemma: in/out-degree >= floor(deg/2)) ---------


def orient_balanced(mg):
    """Orient a multigraph so every vertex has in- and out-degree at least
    floor(deg/2).

    Pairs odd-degree vertices with phantom edges, walks an Eulerian circuit
    of every component of the augmented multigraph, orients along the walk
    and drops the phantoms. Deterministic for a fixed edge list.
    """
    n = mg.n
    deg = [0] * n
    for u, v in mg.edges:
        deg[u] += 1
        deg[v] += 1
    odd = [v for v in range(n) if deg[v] % 2 == 1]
    phantom = []
    for i in range(0, len(odd), 2):
        phantom.append((odd[i], odd[i + 1]))

    # incidence lists of edge ids; ids >= len(mg.edges) are phantoms
    all_edges = list(mg.edges) + phantom
    inc = [[] for _ in range(n)]
    for eid, (u, v) in enumerate(all_edges):
        inc[u].append(eid)
        inc[v].append(eid)
    used = [False] * len(all_edges)
    ptr = [0] * n
    arcs = []

    for start in range(n):
        if ptr[start] >= len(inc[start]):
            continue
        # Hierholzer from `start`; all degrees in the augmented graph are even
        stack = [start]
        walk = []
        while stack:
            v = stack[-1]
            advanced = False
            while ptr[v] < len(inc[v]):
                eid = inc[v][ptr[v]]
                if used[eid]:
                    ptr[v] += 1
                    continue
                used[eid] = True
                ptr[v] += 1
                a, b = all_edges[eid]
                stack.append(b if a == v else a)
                advanced = True
                break
            if not advanced:
                walk.append(stack.pop())
        walk.reverse()
        for a, b in zip(walk, walk[1:]):
            arcs.append((a, b))

    # drop phantom arcs: keep only as many (u,v) arcs as real parallel edges
    from collections import Counter

    real = Counter((min(u, v), max(u, v)) for u, v in mg.edges)
    kept = []
    for a, b in arcs:
        key = (min(a, b), max(a, b))
        if real[key] > 0:
            real[key] -= 1
            kept.append((a, b))
    d = Digraph(n, kept)
    for v in range(n):
        want = deg[v] // 2
        assert d.out_degree(v) >= want and d.in_degree(v) >= want, (
            f"orientation bound failed at {v}: deg={deg[v]} "
            f"out={d.out_degree(v)} in={d.in_degree(v)}"
        )
    return d
