"""Kernels of odd-cycle-free digraphs and kernel-based list coloring."""

from __future__ import annotations

from dataclasses import dataclass

from ..graphs import Digraph


class OddDirectedCycle(Exception):
    def __init__(self, cycle):
        super().__init__(f"odd directed cycle: {cycle}")
        self.cycle = cycle


def _sccs(n, out):
    """Tarjan strongly connected components; deterministic order."""
    index = {}
    low = {}
    on_stack = set()
    stack = []
    counter = [0]
    comps = []

    def strong(v0):
        work = [(v0, 0)]
        while work:
            v, pi = work[-1]
            if pi == 0:
                index[v] = low[v] = counter[0]
                counter[0] += 1
                stack.append(v)
                on_stack.add(v)
            recurse = False
            succ = out[v]
            for i in range(pi, len(succ)):
                w = succ[i]
                if w not in index:
                    work[-1] = (v, i + 1)
                    work.append((w, 0))
                    recurse = True
                    break
                elif w in on_stack:
                    low[v] = min(low[v], index[w])
            if recurse:
                continue
            if pi < len(succ):
                continue
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.append(w)
                    if w == v:
                        break
                comps.append(sorted(comp))
            work.pop()
            if work:
                u, _ = work[-1]
                low[u] = min(low[u], low[v])

    for v in range(n):
        if v not in index:
            strong(v)
    return comps


def _odd_cycle_in_scc(comp, out):
    """Within one SCC: 2-color by arc parity; an inconsistency certifies an
    odd directed closed walk, hence an odd directed cycle."""
    comp_set = set(comp)
    color = {comp[0]: 0}
    parent = {comp[0]: None}
    queue = [comp[0]]
    while queue:
        v = queue.pop()
        for w in out[v]:
            if w not in comp_set:
                continue
            if w not in color:
                color[w] = 1 - color[v]
                parent[w] = v
                queue.append(w)
            elif color[w] == color[v]:
                # reconstruct a witness walk v -> ... -> root plus root -> w
                walk = [w, v]
                x = v
                while parent[x] is not None:
                    x = parent[x]
                    walk.append(x)
                return walk[::-1]
    return None


def find_kernel(d):
    """A nonempty kernel of a digraph without odd directed cycles.

    Kernel: independent K such that every vertex outside K has an arc into
    K. Richardson-style: peel terminal strongly connected components, take
    the parity class of each, remove dominated vertices.
    """
    if d.n == 0:
        return frozenset()
    out = [sorted(set(x)) for x in d.out]
    for comp in _sccs(d.n, out):
        if len(comp) > 1:
            bad = _odd_cycle_in_scc(comp, out)
            if bad is not None:
                raise OddDirectedCycle(bad)
    alive = set(range(d.n))
    kernel = set()
    while alive:
        sub_out = [sorted(set(out[v]) & alive) if v in alive else [] for v in range(d.n)]
        comps = _sccs(d.n, sub_out)
        comps = [c for c in comps if set(c) <= alive]
        terminal = None
        members = {}
        for c in comps:
            for v in c:
                members[v] = tuple(c)
        for c in comps:
            if all(members.get(w) == tuple(c) for v in c for w in sub_out[v]):
                terminal = c
                break
        assert terminal is not None
        if len(terminal) == 1:
            part = set(terminal)
        else:
            color = {terminal[0]: 0}
            queue = [terminal[0]]
            tset = set(terminal)
            while queue:
                v = queue.pop()
                for w in sub_out[v]:
                    if w in tset and w not in color:
                        color[w] = 1 - color[v]
                        queue.append(w)
            cls = color[min(terminal)]
            part = {v for v in terminal if color[v] == cls}
        kernel |= part
        dominated = {v for v in alive if set(out[v]) & part}
        alive -= part | dominated
    # definition check
    kf = frozenset(kernel)
    for v in kf:
        assert not (set(out[v]) & kf) and not any(v in out[u] for u in kf), "kernel not independent"
    for v in range(d.n):
        if v not in kf:
            assert set(out[v]) & kf, "outside vertex without arc into kernel"
    return kf


@dataclass(frozen=True)
class ListAssignment:
    """Demands r and color lists S on a digraph for kernel list coloring."""

    digraph: Digraph
    r: tuple
    S: tuple

    def __post_init__(self):
        object.__setattr__(self, "S", tuple(frozenset(s) for s in self.S))
        d = self.digraph
        for v in range(d.n):
            need = self.r[v] + sum(self.r[u] for u in d.out[v])
            if len(self.S[v]) < need:
                raise ValueError(
                    f"list at {v} too small: |S|={len(self.S[v])} < r+sum(out r)={need}"
                )


def kernel_list_color(assignment):
    """Sets C(v) of size r(v), C(v) within S(v), disjoint across every arc.

    Standard kernel argument: process colors in increasing order; for each
    color c, take a kernel of the subdigraph induced by the vertices that
    still want colors and hold c, give c to the kernel, delete c elsewhere.
    """
    d = assignment.digraph
    r = list(assignment.r)
    S = [set(s) for s in assignment.S]
    C = [set() for _ in range(d.n)]
    colors = sorted(set().union(*[s for s in S]) if S else set())
    for c in colors:
        a = [v for v in range(d.n) if c in S[v] and r[v] > 0]
        if not a:
            continue
        amap = {v: i for i, v in enumerate(a)}
        sub = Digraph(len(a), [(amap[u], amap[v]) for u, v in d.arcs if u in amap and v in amap])
        k = find_kernel(sub)
        for i in k:
            v = a[i]
            C[v].add(c)
            r[v] -= 1
        for v in a:
            S[v].discard(c)
    for v in range(d.n):
        assert r[v] == 0, f"lists exhausted before meeting demand at {v}"
    for u, v in d.arcs:
        assert not (C[u] & C[v]), "adjacent choices intersect"
    return [frozenset(x) for x in C]
