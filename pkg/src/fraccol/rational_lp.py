"""Exact fractional chromatic number via rational LP over independent sets.

chi_f(G) is the optimum of the covering LP  min sum w_I  s.t. for every
vertex v, sum of w_I over independent sets I containing v is >= 1, w >= 0.
Restricting to maximal independent sets loses nothing (any independent set
extends to a maximal one without hurting coverage). We solve the packing
dual  max sum y_v  s.t. sum_{v in I} y_v <= 1 for every maximal I, y >= 0
with an exact rational simplex (Bland's rule), read the primal weights off
the optimal dictionary and re-verify both certificates from scratch.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class InstanceTooLarge(Exception):
    pass


def maximal_independent_sets(g, cap=100_000):
    """All maximal independent sets (Bron-Kerbosch with pivot on the
    complement graph). Raises InstanceTooLarge past ``cap`` sets."""
    n = g.n
    comp = [frozenset(range(n)) - g.adj[v] - {v} for v in range(n)]
    out = []

    def bk(r, p, x):
        if not p and not x:
            out.append(frozenset(r))
            if len(out) > cap:
                raise InstanceTooLarge(f"more than {cap} maximal independent sets")
            return
        pivot = max(p | x, key=lambda u: len(comp[u] & p))
        for v in sorted(p - comp[pivot]):
            bk(r | {v}, p & comp[v], x & comp[v])
            p = p - {v}
            x = x | {v}

    bk(frozenset(), frozenset(range(n)), frozenset())
    for s in out:
        for u in s:
            assert not (g.adj[u] & s), "independence violated"
    return sorted(out, key=sorted)


@dataclass(frozen=True)
class RationalLP:
    """Exact chi_f with an optimal fractional-coloring witness.

    value: chi_f(G) as a Fraction;
    weights: {independent set -> Fraction} covering every vertex with total
             weight equal to value;
    dual: per-vertex Fraction weights summing to value with sum over every
          maximal independent set at most 1 (the optimality certificate).
    """

    value: Fraction
    weights: dict
    dual: tuple

    def verify(self, g, mis=None):
        total = sum(self.weights.values(), Fraction(0))
        if total != self.value:
            return False
        cover = [Fraction(0)] * g.n
        for iset, w in self.weights.items():
            if w < 0:
                return False
            for u in iset:
                if g.adj[u] & iset:
                    return False
                cover[u] += w
        if any(c < 1 for c in cover):
            return False
        if sum(self.dual, Fraction(0)) != self.value:
            return False
        if any(y < 0 for y in self.dual):
            return False
        for iset in mis if mis is not None else maximal_independent_sets(g):
            if sum((self.dual[v] for v in iset), Fraction(0)) > 1:
                return False
        return True


def _simplex_max(A, bvec, cvec):
    """max c x  s.t.  A x <= b, x >= 0  with b >= 0; exact Fractions.

    Standard dictionary simplex with Bland's rule. Returns (value, x, y)
    where y are the dual values of the row constraints.
    """
    m, n = len(A), len(cvec)
    # tableau rows: m constraint rows + objective; columns: n vars + m slacks + rhs
    T = [[Fraction(0)] * (n + m + 1) for _ in range(m + 1)]
    for i in range(m):
        for j in range(n):
            T[i][j] = Fraction(A[i][j])
        T[i][n + i] = Fraction(1)
        T[i][-1] = Fraction(bvec[i])
    for j in range(n):
        T[m][j] = -Fraction(cvec[j])
    basis = [n + i for i in range(m)]

    while True:
        enter = next((j for j in range(n + m) if T[m][j] < 0), None)
        if enter is None:
            break
        best = None
        for i in range(m):
            if T[i][enter] > 0:
                ratio = T[i][-1] / T[i][enter]
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            raise ArithmeticError("unbounded LP")
        _, leave = best
        piv = T[leave][enter]
        T[leave] = [x / piv for x in T[leave]]
        for i in range(m + 1):
            if i != leave and T[i][enter] != 0:
                factor = T[i][enter]
                T[i] = [a - factor * bcol for a, bcol in zip(T[i], T[leave])]
        basis[leave] = enter

    x = [Fraction(0)] * n
    for i, bv in enumerate(basis):
        if bv < n:
            x[bv] = T[i][-1]
    y = [T[m][n + i] for i in range(m)]
    return T[m][-1], x, y


def chi_f_exact(g, cap=100_000):
    """Exact fractional chromatic number plus verified primal/dual witness."""
    if g.n == 0:
        return RationalLP(Fraction(0), {}, ())
    mis = maximal_independent_sets(g, cap=cap)
    if len(g.edges) == 0:
        weights = {mis[0]: Fraction(1)}
        dual = tuple([Fraction(1)] + [Fraction(0)] * (g.n - 1))
        return RationalLP(Fraction(1), weights, dual)
    # dual (packing) LP: rows = maximal independent sets, vars = vertices
    A = [[1 if v in iset else 0 for v in range(g.n)] for iset in mis]
    b = [1] * len(mis)
    c = [1] * g.n
    value, y, primal = _simplex_max(A, b, c)
    weights = {mis[i]: primal[i] for i in range(len(mis)) if primal[i] != 0}
    lp = RationalLP(value, weights, tuple(y))
    assert lp.verify(g, mis), "LP witness failed re-verification"
    return lp


def alpha(g):
    """Independence number by branch and bound on the complement cliques;
    fine at oracle scale."""
    best = 0
    for s in maximal_independent_sets(g):
        best = max(best, len(s))
    return best
