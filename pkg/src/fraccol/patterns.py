"""Named graph families and pattern detection.

Generators for every family used by the pipeline (paths, cycles, spiders,
generalized Petersen graphs, the R_0..R_7 gadgets, the L-family grown by the
two attachment operations, H_{a,b} and the leaf-decorated super-H path), an
enumerator for L_0 copies, the machinery that grows maximal clusters of
intersecting L_0 copies and classifies them as R_0 / L_k / L-prime, and a
small backtracking subgraph-isomorphism search for the fixed gadgets.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from .graphs import Graph, is_subcubic, is_triangle_free


@dataclass(frozen=True)
class SubgraphWitness:
    kind: str
    vertices: tuple  # ordered realization of the pattern


# -- generators ------------------------------------------------------------


def path_graph(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n):
    if n < 3:
        raise ValueError("cycle needs >= 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def spider_graph(leg_lengths):
    """Tree with one center (vertex 0) and legs of the given edge-lengths."""
    if len(leg_lengths) < 3:
        raise ValueError("a spider has a center of degree >= 3")
    edges = []
    nxt = 1
    for ell in leg_lengths:
        if ell < 1:
            raise ValueError("leg length must be >= 1")
        prev = 0
        for _ in range(ell):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph(nxt, edges)


def star_graph(alpha, beta):
    """(alpha,beta)-star: K_{1,alpha+beta} with beta edges subdivided."""
    return spider_graph([1] * alpha + [2] * beta)


def petersen_graph(n, k):
    """Generalized Petersen graph P(n, k): outer cycle 0..n-1, inner n..2n-1."""
    edges = []
    for i in range(n):
        edges.append((i, (i + 1) % n))
        edges.append((n + i, n + (i + k) % n))
        edges.append((i, n + i))
    return Graph(2 * n, edges)


def l0_graph():
    """L_0: path v1 v2 v3 v4 (ids 0..3) plus u1=4, u2=5 adjacent to v1, v4."""
    return Graph(6, [(0, 1), (1, 2), (2, 3), (0, 4), (3, 4), (0, 5), (3, 5)])


_R_EDGES = {
    # canonical ids: 0..3 = horizontal path, 4 = top, 5 = bottom, 6/7 = inner
    0: [(0, 1), (1, 2), (2, 3), (0, 4), (3, 4), (3, 5), (0, 5), (4, 6), (6, 2)],
    1: [(0, 1), (1, 2), (2, 3), (0, 4), (3, 4), (3, 5), (0, 5), (4, 6), (6, 2), (7, 1), (7, 6)],
    2: [(0, 1), (1, 2), (2, 3), (0, 4), (3, 4), (3, 5), (0, 5), (4, 6), (6, 2), (5, 7), (7, 6)],
    3: [(0, 1), (1, 2), (2, 3), (0, 4), (3, 4), (3, 5), (0, 5), (6, 5), (4, 6), (6, 2)],
    4: [(0, 1), (1, 2), (2, 3), (0, 4), (3, 4), (3, 5), (0, 5), (5, 6), (6, 4), (1, 7), (7, 6)],
    5: [(0, 1), (1, 2), (2, 3), (0, 4), (3, 4), (3, 5), (0, 5), (5, 7), (1, 7), (7, 6), (4, 6), (6, 2)],
    6: [(0, 1), (1, 2), (2, 3), (0, 4), (3, 4), (3, 5), (0, 5), (1, 7), (7, 5), (4, 6), (6, 2), (7, 6)],
    7: [(0, 1), (1, 2), (2, 3), (0, 4), (3, 4), (3, 5), (0, 5), (1, 7), (7, 5), (4, 6), (6, 2)],
}


def r_graph(i):
    """The gadget R_i, 0 <= i <= 7 (R_0 is L_0 plus one vertex into both
    5-cycles; R_1..R_7 are the forbidden variants)."""
    if i not in _R_EDGES:
        raise ValueError(f"R_{i} is not defined")
    n = 1 + max(max(e) for e in _R_EDGES[i])
    return Graph(n, _R_EDGES[i])


def h_graph(a, b):
    """H_{a,b}: paths v_1..v_a (ids 0..a-1) and u_1..u_b (ids a..a+b-1)
    joined by the support-vertex edge v_2 u_2."""
    if a < 4 or b < 4 or a % 2 or b % 2:
        raise ValueError("H_{a,b} needs even a, b >= 4")
    edges = [(i, i + 1) for i in range(a - 1)]
    edges += [(a + j, a + j + 1) for j in range(b - 1)]
    edges.append((1, a + 1))
    return Graph(a + b, edges)


def super_h_graph(t):
    """Path u1 u2 u3 u4 v1..v_{2t} u5 u6 u7 u8 with a leaf on u3..u6."""
    if t < 0:
        raise ValueError("t must be >= 0")
    m = 8 + 2 * t
    edges = [(i, i + 1) for i in range(m - 1)]
    # spine positions of u3, u4, u5, u6
    for k, pos in enumerate([2, 3, 4 + 2 * t, 5 + 2 * t]):
        edges.append((pos, m + k))
    return Graph(m + 4, edges)


def l_family_graph(seq):
    """Grow a member of the L-family from L_0 by the attachment operations.

    Operation 1 adds a P_2 across a degree-two diagonal pair of a 4-cycle;
    Operation 2 adds a C_4 across an adjacent degree-two pair. The attachment
    pair is chosen canonically (smallest sorted pair).
    """
    g = l0_graph()
    for op in seq:
        if op == 1:
            pair = _diagonal_deg2_pair(g)
            if pair is None:
                raise ValueError("operation 1 needs a degree-2 C_4 diagonal")
            a, c = pair
            n = g.n
            g = Graph(n + 2, list(g.edges) + [(n, n + 1), (a, n), (c, n + 1)])
        elif op == 2:
            pair = _adjacent_deg2_pair(g)
            if pair is None:
                raise ValueError("operation 2 needs an adjacent degree-2 pair")
            e1, e2 = pair
            n = g.n
            c4 = [(n, n + 1), (n + 1, n + 2), (n + 2, n + 3), (n, n + 3)]
            g = Graph(n + 4, list(g.edges) + c4 + [(n + 1, e1), (n + 3, e2)])
        else:
            raise ValueError(f"operation must be 1 or 2, got {op}")
    return g


def _diagonal_deg2_pair(g):
    best = None
    for quad in four_cycles(g):
        a, b, c, d = quad
        for p, q in [(a, c), (b, d)]:
            if g.degree(p) == 2 and g.degree(q) == 2:
                cand = tuple(sorted((p, q)))
                if best is None or cand < best:
                    best = cand
    return best


def _adjacent_deg2_pair(g):
    best = None
    for u, v in g.edges:
        if g.degree(u) == 2 and g.degree(v) == 2:
            cand = (u, v)
            if best is None or cand < best:
                best = cand
    return best


def four_cycles(g):
    """All 4-cycles as tuples (a, b, c, d) with a the smallest vertex and
    edges ab, bc, cd, da; each cycle listed once."""
    out = []
    for a in range(g.n):
        for b, d in combinations(sorted(g.adj[a]), 2):
            for c in sorted(g.adj[b] & g.adj[d]):
                if c != a and c > a:
                    out.append((a, b, c, d))
    return out


def random_tf_subcubic(n, seed):
    """Deterministic random connected triangle-free subcubic graph.

    Builds a random degree-bounded spanning tree, then keeps adding random
    chords that respect the degree bound and create no triangle.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    rng = random.Random(seed)
    order = list(range(n))
    rng.shuffle(order)
    deg = [0] * n
    edges = set()
    adj = [set() for _ in range(n)]

    def add(u, v):
        edges.add((min(u, v), max(u, v)))
        adj[u].add(v)
        adj[v].add(u)
        deg[u] += 1
        deg[v] += 1

    for i in range(1, n):
        v = order[i]
        cands = [u for u in order[:i] if deg[u] < 3]
        if not cands:
            cands = [u for u in order[:i]]  # cannot happen for n >= 2
        add(v, rng.choice(cands))

    target_extra = rng.randint(0, n)
    tries = 0
    while target_extra > 0 and tries < 20 * n:
        tries += 1
        u, v = rng.sample(range(n), 2)
        key = (min(u, v), max(u, v))
        if key in edges or deg[u] >= 3 or deg[v] >= 3:
            continue
        if adj[u] & adj[v]:
            continue  # would close a triangle
        add(u, v)
        target_extra -= 1
    g = Graph(n, edges)
    assert is_triangle_free(g) and is_subcubic(g) and g.is_connected()
    return g


def generate(family, params=None, seed=0):
    """Dispatcher used by the CLI: family id plus parameter tuple."""
    p = params if params is not None else ()
    if family == "path":
        return path_graph(int(p[0]))
    if family == "cycle":
        return cycle_graph(int(p[0]))
    if family == "star":
        return star_graph(int(p[0]), int(p[1]))
    if family == "spider":
        return spider_graph([int(x) for x in p])
    if family == "petersen":
        return petersen_graph(int(p[0]), int(p[1]))
    if family == "R":
        return r_graph(int(p[0]))
    if family == "L":
        return l_family_graph([int(x) for x in p])
    if family == "H":
        return h_graph(int(p[0]), int(p[1]))
    if family == "superH":
        return super_h_graph(int(p[0]))
    if family == "random_tf_subcubic":
        return random_tf_subcubic(int(p[0]), seed)
    raise ValueError(f"unknown family {family!r}")


# -- L_0 copies and clusters -------------------------------------------------


def l0_copies(g):
    """All copies of L_0 as canonical tuples (v1, v2, v3, v4, u1, u2).

    Canonical form: v1 < v4 and u1 < u2. The six vertices must induce
    exactly L_0 (the enumeration conditions force this).
    """
    out = []
    seen = set()
    for v2, v3 in g.edges:
        for a, b in ((v2, v3), (v3, v2)):
            for v1 in g.adj[a] - {b}:
                if v1 in g.adj[b]:
                    continue
                for v4 in g.adj[b] - {a, v1}:
                    if v4 in g.adj[a] or v4 in g.adj[v1]:
                        continue
                    if v1 > v4:
                        continue
                    us = sorted((g.adj[v1] & g.adj[v4]) - {a, b})
                    us = [u for u in us if a not in g.adj[u] and b not in g.adj[u]]
                    for u1, u2 in combinations(us, 2):
                        if u1 in g.adj[u2]:
                            continue
                        key = (v1, a, b, v4, u1, u2)
                        if key not in seen:
                            seen.add(key)
                            out.append(key)
    return sorted(out)


def l0_clusters(g, copies=None):
    """Maximal unions of chains of pairwise-intersecting L_0 copies.

    Returns a list of (vertex_set, member_copies) pairs.
    """
    if copies is None:
        copies = l0_copies(g)
    sets = [frozenset(c) for c in copies]
    parent = list(range(len(copies)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    vert_owner = {}
    for i, s in enumerate(sets):
        for v in s:
            j = vert_owner.get(v)
            if j is None:
                vert_owner[v] = i
            else:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[ri] = rj
    groups = {}
    for i in range(len(copies)):
        groups.setdefault(find(i), []).append(i)
    out = []
    for idxs in groups.values():
        verts = set()
        for i in idxs:
            verts |= sets[i]
        out.append((frozenset(verts), [copies[i] for i in idxs]))
    out.sort(key=lambda t: sorted(t[0]))
    return out


# -- L-structure recognition (peel-based) -----------------------------------


@dataclass(frozen=True)
class LStructure:
    """Build recipe of an L-family member inside a host graph.

    ops[0] is ("L0", (v1, v2, v3, v4, u1, u2)); later entries are
    ("op1", (d1, d2), (a, c)) with d1~a, d2~c across the C_4 diagonal (a, c),
    or ("op2", (q1, q2, q3, q4), (e1, e2)) where q1 q2 q3 q4 is the added
    4-cycle (q1, q3 its degree-two diagonal) and q2~e1, q4~e2 on the P_2
    e1 e2. Sequences are alternating after the first operation.
    """

    ops: tuple

    @property
    def t(self):
        return len(self.ops) - 1

    def vertices(self):
        vs = set(self.ops[0][1])
        for op in self.ops[1:]:
            vs.update(op[1])
        return vs

    def seq(self):
        return tuple(1 if op[0] == "op1" else 2 for op in self.ops[1:])


def _adj_of(vertices, adj):
    return {v: adj[v] & vertices for v in vertices}


def l_structure(g, vertices):
    """Recognize g[vertices] as an L-family member; returns LStructure or None.

    Requires g[vertices] to be exactly a member (right degree counts and
    edge count). Peels the last operation with backtracking, preferring
    alternating sequences (every member has an alternating recipe).
    """
    vertices = frozenset(vertices)
    m = sum(1 for u, v in g.edges if u in vertices and v in vertices)
    n = len(vertices)
    if n < 6 or n % 2 or m != 7 + 3 * (n - 6) // 2:
        return None
    adj = {v: g.adj[v] & vertices for v in vertices}
    ops = _peel(adj, prev_op=None)
    if ops is None:
        return None
    return LStructure(tuple(ops))


def _peel(adj, prev_op):
    n = len(adj)
    if n == 6:
        base = _match_l0(adj)
        return [("L0", base)] if base else None
    deg2 = sorted(v for v in adj if len(adj[v]) == 2)
    if len(deg2) != 4:
        return None
    candidates = []
    # op1 peel: adjacent degree-2 pair attached across a C_4 diagonal
    for d1, d2 in combinations(deg2, 2):
        if d2 not in adj[d1]:
            continue
        a = next(iter(adj[d1] - {d2}), None)
        c = next(iter(adj[d2] - {d1}), None)
        if a is None or c is None or a == c or c in adj[a]:
            continue
        common = (adj[a] & adj[c]) - {d1, d2}
        if len(common) >= 2:
            candidates.append(("op1", (d1, d2), (a, c)))
    # op2 peel: a C_4 with a degree-2 diagonal, other diagonal attached to a P_2
    for d1, d3 in combinations(deg2, 2):
        if d3 in adj[d1]:
            continue
        common = sorted(adj[d1] & adj[d3])
        for q2, q4 in combinations(common, 2):
            if q4 in adj[q2]:
                continue
            e1 = next(iter(adj[q2] - {d1, d3}), None)
            e2 = next(iter(adj[q4] - {d1, d3}), None)
            if e1 is None or e2 is None or e1 == e2:
                continue
            if e2 in adj[e1] and len(adj[q2]) == 3 and len(adj[q4]) == 3:
                candidates.append(("op2", (d1, q2, d3, q4), (e1, e2)))
    want_first = None
    if prev_op is not None:
        want_first = "op1" if prev_op == "op2" else "op2"
    candidates.sort(key=lambda cand: (cand[0] != want_first, cand))
    for cand in candidates:
        removed = set(cand[1])
        sub = {v: adj[v] - removed for v in adj if v not in removed}
        rest = _peel(sub, prev_op=cand[0])
        if rest is not None:
            return rest + [cand]
    return None


def _match_l0(adj):
    verts = set(adj)
    for v2, v3 in combinations(sorted(verts), 2):
        if v3 not in adj[v2]:
            continue
        for v1 in sorted(adj[v2] - {v3}):
            for v4 in sorted(adj[v3] - {v2, v1}):
                if v4 in adj[v1] or v4 in adj[v2] or v1 in adj[v3]:
                    continue
                us = sorted(verts - {v1, v2, v3, v4})
                if len(us) != 2:
                    continue
                u1, u2 = us
                if u2 in adj[u1]:
                    continue
                if all(x in adj[u1] and x in adj[u2] for x in (v1, v4)) and all(
                    x not in adj[u1] and x not in adj[u2] for x in (v2, v3)
                ):
                    if sum(len(a) for a in adj.values()) == 14:
                        return (v1, v2, v3, v4, u1, u2)
    return None


def classify_cluster(g, vertices):
    """Classify a maximal L_0 cluster: ("R0", witness) / ("L", struct) /
    ("L-prime", struct, extra_edges) / ("other", None)."""
    vertices = frozenset(vertices)
    sub, order = g.induced(vertices)
    if sub.n == 7 and len(sub.edges) == 9:
        iso = find_iso(r_graph(0), sub)
        if iso is not None:
            witness = tuple(order[iso[i]] for i in range(7))
            return ("R0", witness)
    struct = l_structure(g, vertices)
    if struct is not None:
        return ("L", struct)
    # spanning L-member plus extra edges?
    n = len(vertices)
    m = len(sub.edges)
    expect = 7 + 3 * (n - 6) // 2 if n >= 6 and n % 2 == 0 else None
    if expect is not None and m > expect:
        excess = m - expect
        deg3_edges = [
            (u, v) for u, v in g.edges
            if u in vertices and v in vertices
        ]
        for drop in combinations(deg3_edges, excess):
            g2 = g.without_edges(drop)
            struct = l_structure(g2, vertices)
            if struct is not None:
                return ("L-prime", struct, tuple(drop))
    return ("other", None)


# -- subgraph isomorphism -----------------------------------------------------


def find_iso(pattern, host):
    """One isomorphism pattern -> host (both exact Graphs) or None."""
    if pattern.n != host.n or len(pattern.edges) != len(host.edges):
        return None
    return next(_iso_iter(pattern, host, induced=True, spanning=True), None)


def subgraph_occurrences(pattern, host, induced=True, limit=None):
    """All occurrences of pattern in host as mapping tuples (dedup by image).

    Returns a list of tuples m with m[i] = host vertex of pattern vertex i;
    one representative per host vertex-image.
    """
    seen = set()
    out = []
    for m in _iso_iter(pattern, host, induced=induced, spanning=False):
        key = frozenset(m)
        if key not in seen:
            seen.add(key)
            out.append(m)
            if limit and len(out) >= limit:
                break
    return out


def _iso_iter(pattern, host, induced, spanning):
    pn = pattern.n
    pdeg = pattern.degrees()
    order = sorted(range(pn), key=lambda v: -pdeg[v])
    # place connected-first: reorder so each vertex after the first has a
    # mapped neighbor when possible
    placed = [order[0]]
    rest = set(order[1:])
    while rest:
        nxt = None
        for v in sorted(rest, key=lambda v: -pdeg[v]):
            if pattern.adj[v] & set(placed):
                nxt = v
                break
        if nxt is None:
            nxt = min(rest)
        placed.append(nxt)
        rest.remove(nxt)
    order = placed
    mapping = {}
    used = set()

    def ok(pv, hv):
        if spanning and host.degree(hv) != pdeg[pv]:
            return False
        if host.degree(hv) < pdeg[pv]:
            return False
        for pu in pattern.adj[pv]:
            if pu in mapping:
                if mapping[pu] not in host.adj[hv]:
                    return False
        if induced:
            for pu in mapping:
                if pu not in pattern.adj[pv] and mapping[pu] in host.adj[hv]:
                    return False
        return True

    def rec(i):
        if i == len(order):
            yield tuple(mapping[v] for v in range(pn))
            return
        pv = order[i]
        for hv in range(host.n):
            if hv in used:
                continue
            if ok(pv, hv):
                mapping[pv] = hv
                used.add(hv)
                yield from rec(i + 1)
                used.remove(hv)
                del mapping[pv]

    yield from rec(0)


# -- find_pattern front-end ---------------------------------------------------


def find_pattern(g, kind, coloring=None):
    """Occurrences of a named pattern; returns a list of SubgraphWitness."""
    if kind == "K3":
        out = []
        for u, v in g.edges:
            for w in sorted(g.adj[u] & g.adj[v]):
                if w > v:
                    out.append(SubgraphWitness("K3", (u, v, w)))
        return out
    if kind == "L0-copy":
        return [SubgraphWitness("L0-copy", c) for c in l0_copies(g)]
    if kind == "rainbow-L0":
        if coloring is None:
            raise ValueError("rainbow-L0 needs a 3-coloring")
        out = []
        for c in l0_copies(g):
            v1, v2, v3, v4, u1, u2 = c
            f = coloring
            if (
                f[u1] == f[u2]
                and f[v1] == f[v3]
                and f[v2] == f[v4]
                and len({f[u1], f[v1], f[v2]}) == 3
            ):
                out.append(SubgraphWitness("rainbow-L0", c))
        return out
    if kind.startswith("R") and kind[1:].isdigit():
        i = int(kind[1:])
        pat = r_graph(i)
        occ = subgraph_occurrences(pat, g, induced=True)
        return [SubgraphWitness(kind, m) for m in occ]
    if kind == "H_ab":
        out = []
        for comp in g.components():
            res = h_member_layout(g, comp)
            if res is not None:
                out.append(SubgraphWitness("H_ab", tuple(res[0] + res[1])))
        return out
    if kind == "L-prime-member":
        out = []
        for verts, _ in l0_clusters(g):
            cls = classify_cluster(g, verts)
            if cls[0] == "L-prime":
                out.append(SubgraphWitness("L-prime", tuple(sorted(verts))))
        return out
    raise ValueError(f"unsupported pattern kind {kind!r}")


# -- shape recognizers used by the class-pair machinery ----------------------


def path_order_of(g, comp):
    """If g[comp] is a path, return its vertices end-to-end, else None.

    Single vertices count as paths. The returned order starts at the
    smaller endpoint (determinism).
    """
    comp = sorted(comp)
    if len(comp) == 1:
        return comp
    sub = {v: g.adj[v] & set(comp) for v in comp}
    ends = [v for v in comp if len(sub[v]) == 1]
    if len(ends) != 2 or any(len(sub[v]) > 2 for v in comp):
        return None
    order = [ends[0]]
    prev = None
    cur = ends[0]
    while len(order) < len(comp):
        nxts = [x for x in sub[cur] if x != prev]
        if len(nxts) != 1:
            return None
        prev, cur = cur, nxts[0]
        order.append(cur)
    if order[-1] != ends[1]:
        return None
    return order


def h_member_layout(g, comp):
    """If g[comp] is H_{a,b}, return (x_path, y_path): two end-to-end paths
    with the degree-3 support vertex at index 1 of each; else None.

    The side listed second (y) is the one whose second vertex carries the
    extra color decrement. Sides are ordered canonically by their vertex
    lists.
    """
    comp = set(comp)
    sub = {v: g.adj[v] & comp for v in comp}
    deg3 = sorted(v for v in comp if len(sub[v]) == 3)
    if len(deg3) != 2:
        return None
    p, q = deg3
    if q not in sub[p]:
        return None
    sides = []
    for s, other in ((p, q), (q, p)):
        nbrs = sorted(sub[s] - {other})
        if len(nbrs) != 2:
            return None
        leaves = [x for x in nbrs if len(sub[x]) == 1]
        if len(leaves) != 1:
            return None
        path = [leaves[0], s]
        prev, cur = leaves[0], s
        block = other  # the bridge partner, excluded only at the support step
        while True:
            nxts = [x for x in sub[cur] if x != prev and x != block]
            block = None
            if not nxts:
                break
            if len(nxts) != 1 or len(sub[nxts[0]]) > 2:
                return None
            prev, cur = cur, nxts[0]
            path.append(cur)
        if len(path) % 2 or len(path) < 4:
            return None
        sides.append(path)
    if set(sides[0]) & set(sides[1]):
        return None
    if set(sides[0]) | set(sides[1]) != comp:
        return None
    sides.sort()
    return sides[0], sides[1]
