"""(a:b)-colorings: verification, combination and small-instance search."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations


@dataclass(frozen=True)
class SetColoring:
    """Per-vertex subsets of {1..a}; ``fold`` is the required set size b
    when the coloring claims to be a proper (a:b)-coloring."""

    a: int
    sets: tuple
    fold: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "sets", tuple(frozenset(s) for s in self.sets))
        for s in self.sets:
            if not all(1 <= c <= self.a for c in s):
                raise ValueError("color out of range")

    def __getitem__(self, v):
        return self.sets[v]

    def to_json(self):
        return {"a": self.a, "b": self.fold, "sets": [sorted(s) for s in self.sets]}

    @classmethod
    def from_json(cls, obj):
        return cls(obj["a"], [frozenset(s) for s in obj["sets"]], obj.get("b"))


def verify_set_coloring(g, coloring, a, b, reasons=None):
    """True iff ``coloring`` is a proper (a:b)-coloring of g.

    ``coloring`` may be a SetColoring or a sequence of sets. When a list is
    passed as ``reasons`` it is filled with human-readable failure notes.
    """
    sets = coloring.sets if isinstance(coloring, SetColoring) else [frozenset(s) for s in coloring]
    out = reasons if reasons is not None else []
    if len(sets) != g.n:
        out.append(f"coloring covers {len(sets)} vertices, graph has {g.n}")
    universe = set(range(1, a + 1))
    for v, s in enumerate(sets):
        if not set(s) <= universe:
            out.append(f"vertex {v}: colors {sorted(set(s) - universe)} outside [{a}]")
        if len(s) != b:
            out.append(f"vertex {v}: |set| = {len(s)} != {b}")
    for u, v in g.edges:
        common = sets[u] & sets[v]
        if common:
            out.append(f"edge ({u},{v}): shared colors {sorted(common)}")
    return not out


def uplus(f, g):
    """The combination operator: (f (+) g)(v) = f(v) u {y + a : y in g(v)}."""
    if len(f.sets) != len(g.sets):
        raise ValueError("colorings must share a vertex set")
    a = f.a
    sets = [fs | frozenset(y + a for y in gs) for fs, gs in zip(f.sets, g.sets)]
    fold = None
    if f.fold is not None and g.fold is not None:
        fold = f.fold + g.fold
    return SetColoring(f.a + g.a, sets, fold)


def uplus_maps(fmap, gmap, a):
    """Dict-keyed variant used by the assembly pipeline."""
    out = {}
    for v in fmap:
        out[v] = frozenset(fmap[v]) | frozenset(y + a for y in gmap[v])
    return out


class SearchExhausted(Exception):
    pass


def search_ab_coloring(
    g,
    a,
    b,
    required=None,
    forbidden=None,
    pair_constraints=(),
    node_limit=2_000_000,
):
    """Backtracking search for an (a:b)-coloring.

    required/forbidden: optional dicts vertex -> color set (required subset
    of the chosen set / colors that must be avoided). pair_constraints is an
    iterable of (u, v, lo, hi) demanding lo <= |f(u) & f(v)| <= hi for the
    (possibly non-adjacent) pair. Deterministic; when no per-vertex
    constraint mentions vertex order[0], its set is pinned to the b lowest
    colors to break color symmetry.
    """
    required = {v: frozenset(s) for v, s in (required or {}).items()}
    forbidden = {v: frozenset(s) for v, s in (forbidden or {}).items()}
    universe = list(range(1, a + 1))
    n = g.n
    order = sorted(range(n), key=lambda v: (-g.degree(v), v))
    pos = {v: i for i, v in enumerate(order)}
    pairs_at = [[] for _ in range(n)]
    for (u, v, lo, hi) in pair_constraints:
        late = u if pos[u] > pos[v] else v
        pairs_at[late].append((u, v, lo, hi))

    assignment = {}
    nodes = [0]
    symmetry_pin = not required and not forbidden and not pair_constraints

    def candidates(v):
        pool = set(universe) - forbidden.get(v, frozenset())
        for u in g.adj[v]:
            if u in assignment:
                pool -= assignment[u]
        req = required.get(v, frozenset())
        if not req <= pool:
            return
        rest = sorted(pool - req)
        need = b - len(req)
        if need < 0:
            return
        for extra in combinations(rest, need):
            yield req | frozenset(extra)

    def rec(i):
        nodes[0] += 1
        if nodes[0] > node_limit:
            raise SearchExhausted(f"node limit {node_limit} hit")
        if i == n:
            return True
        v = order[i]
        if i == 0 and symmetry_pin:
            cands = [frozenset(universe[:b])]
        else:
            cands = candidates(v)
        for s in cands:
            ok = True
            for (x, y, lo, hi) in pairs_at[v]:
                other = y if x == v else x
                if other in assignment:
                    k = len(s & assignment[other])
                    if not (lo <= k <= hi):
                        ok = False
                        break
            if not ok:
                continue
            assignment[v] = s
            if rec(i + 1):
                return True
            del assignment[v]
        return False

    if rec(0):
        return SetColoring(a, tuple(assignment[v] for v in range(n)), b)
    return None
