"""Shared machinery for F-avoiding colorings over the 14-color universe."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

U14 = frozenset(range(1, 15))


class PickError(Exception):
    """A deterministic subset choice was infeasible (triggers fallbacks)."""


def pick(k, pool, require=(), prefer=(), avoid=()):
    """Deterministic k-subset of ``pool``: contains ``require``, prefers
    elements of ``prefer`` (in the given priority order when a tuple of
    groups), avoids ``avoid``, fills lowest-numbered first."""
    req = set(require)
    pool = set(pool) - set(avoid)
    if not req <= pool:
        raise PickError(f"required colors {sorted(req - pool)} unavailable")
    if k < len(req):
        raise PickError(f"require larger than k={k}")
    if prefer and isinstance(prefer, (tuple, list)) and isinstance(prefer[0], (set, frozenset, list, tuple)):
        groups = prefer  # priority tiers
    else:
        groups = [prefer]
    chosen = set(req)
    for group in groups:
        for c in sorted(set(group) & pool - chosen):
            if len(chosen) >= k:
                break
            chosen.add(c)
    for c in sorted(pool - chosen):
        if len(chosen) >= k:
            break
        chosen.add(c)
    if len(chosen) != k:
        raise PickError(f"pool too small: need {k}, have {len(chosen)}")
    return frozenset(chosen)


@dataclass(frozen=True)
class AvoidanceSpec:
    """Carrier graph plus the forbidden-color function F: V -> 2^[14]."""

    carrier: object  # Graph
    F: tuple

    def __post_init__(self):
        object.__setattr__(self, "F", tuple(frozenset(s) for s in self.F))
        if len(self.F) != self.carrier.n:
            raise ValueError("F must cover every vertex")
        for s in self.F:
            if not s <= U14:
                raise ValueError("forbidden colors outside [14]")

    def to_json(self):
        return {"graph": self.carrier.to_json(), "F": [sorted(s) for s in self.F]}


def verify_avoiding(F, f, adj):
    """True iff f(v) is disjoint from F(v) and from f(u) for every edge uv.

    F, f are dicts keyed by the vertices of ``adj`` (vertex -> neighbor set).
    """
    for v in adj:
        if f[v] & F.get(v, frozenset()):
            return False
        for u in adj[v]:
            if f[v] & f[u]:
                return False
    return True


def obeys(F, adj, matching, deg=None):
    """The three-clause obedience test of F against a matching M.

    adj: vertex -> neighbor set for the carrier; matching: iterable of edges.
    Raises ValueError when M is not a matching or saturates a support vertex.
    """
    deg = deg or {v: len(adj[v]) for v in adj}
    leaves = {v for v in adj if deg[v] == 1}
    supports = {u for v in leaves for u in adj[v]}
    saturated = set()
    for x, y in matching:
        if x in saturated or y in saturated:
            raise ValueError("M is not a matching")
        saturated.update((x, y))
        if x in supports or y in supports:
            raise ValueError("M saturates a support vertex")
    for v in adj:
        if len(F.get(v, frozenset())) > 6 - 2 * deg[v]:
            return False
    for v in leaves:
        for u in adj[v]:
            if F.get(v, frozenset()) & F.get(u, frozenset()):
                return False
    for x, y in matching:
        if len(F.get(x, frozenset()) & F.get(y, frozenset())) > 1:
            return False
    return True


def search_avoiding(adj, F, sizes, order=None, node_limit=400_000):
    """Complete deterministic search for an F-avoiding coloring with exact
    per-vertex sizes. Returns a dict or None. Used as the safety net behind
    the constructive lemma transcriptions (they are exercised first)."""
    verts = order if order is not None else sorted(adj)
    assignment = {}
    nodes = [0]

    def rec(i):
        nodes[0] += 1
        if nodes[0] > node_limit:
            raise PickError("search_avoiding node limit")
        if i == len(verts):
            return True
        v = verts[i]
        pool = U14 - F.get(v, frozenset())
        for u in adj[v]:
            if u in assignment:
                pool -= assignment[u]
        pool = sorted(pool)
        if len(pool) < sizes[v]:
            return False
        for combo in combinations(pool, sizes[v]):
            assignment[v] = frozenset(combo)
            if rec(i + 1):
                return True
        del assignment[v]
        return False

    if rec(0):
        return dict(assignment)
    return None


def search_path_coloring(F_list, sizes):
    """Complete search specialized to paths (list-indexed), with memoized
    dead states; deterministic."""
    m = len(F_list)
    dead = set()

    def rec(i, prev):
        if i == m:
            return []
        if (i, prev) in dead:
            return None
        pool = sorted(U14 - F_list[i] - (prev or frozenset()))
        if len(pool) >= sizes[i]:
            for combo in combinations(pool, sizes[i]):
                s = frozenset(combo)
                rest = rec(i + 1, s)
                if rest is not None:
                    return [s] + rest
        dead.add((i, prev))
        return None

    return rec(0, None)
