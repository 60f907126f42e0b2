"""Stored (8:3)-coloring fixtures for the small gadget families.

The R_0..R_7 colorings and the L-family base colorings (with their f_1/f_2
variants and end-pair patterns) are data; the periodic 12-vertex extension
block reproduces the color pattern of an adjacent degree-two pair, so base
colorings extend to arbitrarily long members of the family.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph
from .patterns import r_graph


def cs(digits):
    """'378' -> frozenset({3, 7, 8})"""
    return frozenset(int(ch) for ch in digits)


# Figure-1 colorings in the canonical r_graph vertex order
# (0..3 horizontal path, 4 top, 5 bottom, 6/7 inner vertices).
R_COLORINGS = {
    0: tuple(map(cs, ["123", "456", "178", "234", "567", "567", "234"])),
    1: tuple(map(cs, ["123", "456", "178", "234", "567", "567", "234", "178"])),
    2: tuple(map(cs, ["123", "456", "178", "234", "678", "578", "235", "146"])),
    3: tuple(map(cs, ["123", "456", "178", "234", "567", "567", "234"])),
    4: tuple(map(cs, ["123", "456", "178", "234", "567", "567", "348", "127"])),
    5: tuple(map(cs, ["123", "456", "378", "124", "578", "568", "246", "137"])),
    6: tuple(map(cs, ["123", "456", "378", "124", "578", "568", "246", "137"])),
    7: tuple(map(cs, ["123", "456", "378", "124", "567", "568", "124", "123"])),
}


@dataclass(frozen=True)
class LFixture:
    """An L-family base member with its two patterned (8:3)-colorings.

    f1 satisfies f1(w) ^ f1(y) = {} and f1(x) ^ f1(z) = {}; f2 satisfies
    f2(w) ^ f2(y) = {} and 1 <= |f2(x) ^ f2(z)| <= 2. (w, x) and (y, z) are
    the two degree-two pairs; ``wx_adjacent`` tells whether (w, x) is an
    edge (otherwise it is a C_4 diagonal), likewise ``yz_adjacent``.
    """

    name: str
    graph: Graph
    f1: tuple
    f2: tuple
    w: int
    x: int
    y: int
    z: int
    wx_adjacent: bool
    yz_adjacent: bool


def _fx(name, n, edges, f1, f2, w, x, y, z):
    g = Graph(n, edges)
    return LFixture(
        name,
        g,
        tuple(map(cs, f1)),
        tuple(map(cs, f2)),
        w,
        x,
        y,
        z,
        g.has_edge(w, x),
        g.has_edge(y, z),
    )


_L0_EDGES = [(0, 1), (1, 2), (2, 3), (0, 4), (3, 4), (0, 5), (3, 5)]

L_FIXTURES = [
    _fx(
        "L1",
        8,
        _L0_EDGES + [(4, 6), (6, 7), (7, 5)],
        ["123", "456", "378", "124", "567", "678", "238", "145"],
        ["123", "456", "378", "124", "567", "568", "128", "347"],
        1, 2, 6, 7,
    ),
    _fx(
        "L2",
        10,
        _L0_EDGES + [(6, 7), (7, 8), (8, 9), (9, 6), (1, 7), (2, 9)],
        ["123", "456", "378", "124", "567", "578", "348", "127", "346", "125"],
        ["123", "456", "378", "124", "567", "578", "348", "127", "348", "125"],
        4, 5, 6, 8,
    ),
    _fx(
        "L12",
        12,
        _L0_EDGES
        + [(4, 6), (6, 7), (7, 5)]
        + [(8, 9), (9, 10), (10, 11), (11, 8), (6, 9), (7, 11)],
        ["123", "456", "378", "124", "567", "678", "238", "145", "123", "567", "124", "678"],
        ["123", "456", "378", "124", "567", "568", "128", "347", "138", "567", "148", "256"],
        1, 2, 8, 10,
    ),
    _fx(
        "L121",
        14,
        _L0_EDGES
        + [(4, 6), (6, 7), (7, 5)]
        + [(8, 9), (9, 10), (10, 11), (8, 12), (12, 11), (11, 13), (13, 8), (6, 12), (7, 13)],
        ["123", "456", "378", "124", "567", "568", "128", "347",
         "124", "378", "456", "123", "567", "568"],
        ["123", "456", "378", "124", "567", "568", "128", "347",
         "247", "138", "567", "248", "356", "156"],
        1, 2, 9, 10,
    ),
    _fx(
        "L212",
        16,
        _L0_EDGES
        + [(6, 7), (7, 8), (8, 9), (6, 10), (10, 9), (9, 11), (11, 6), (1, 10), (2, 11)]
        + [(12, 13), (13, 14), (14, 15), (15, 12), (7, 13), (8, 15)],
        ["123", "456", "378", "124", "567", "578",
         "348", "167", "258", "346", "127", "125", "128", "345", "126", "347"],
        ["123", "456", "378", "124", "567", "578",
         "348", "167", "258", "346", "127", "125", "128", "345", "128", "347"],
        4, 5, 12, 14,
    ),
    _fx(
        "L1212",
        18,
        _L0_EDGES
        + [(4, 6), (6, 7), (7, 5)]
        + [(8, 9), (9, 10), (10, 11), (8, 12), (12, 11), (11, 13), (13, 8), (6, 12), (7, 13)]
        + [(14, 15), (15, 16), (16, 17), (17, 14), (9, 15), (10, 17)],
        ["123", "456", "378", "124", "567", "678", "138", "245",
         "148", "237", "156", "248", "567", "367", "123", "468", "125", "478"],
        ["123", "456", "378", "124", "567", "568", "128", "347",
         "124", "356", "478", "123", "567", "568", "378", "124", "357", "126"],
        1, 2, 14, 16,
    ),
]

L_FIXTURE_BY_SIZE = {fx.graph.n: fx for fx in L_FIXTURES}


# 12-vertex periodic extension (Operations 2,1,2,1 applied to an adjacent
# degree-two pair): local ids 0..3 = first path, 4/5 = first top/bottom,
# 6..9 = second path, 10/11 = second top/bottom. Vertex 4 attaches to the
# consumed pair's first vertex, vertex 5 to its second. Its own colors put
# the pattern (456, 378) on the new adjacent degree-two pair (7, 8).
BLOCK_EDGES = [
    (0, 1), (1, 2), (2, 3), (0, 4), (4, 3), (3, 5), (5, 0),
    (6, 7), (7, 8), (8, 9), (6, 10), (10, 9), (9, 11), (11, 6),
    (1, 10), (2, 11),
]
BLOCK_COLORS = tuple(
    map(cs, ["345", "127", "568", "347", "128", "126",
             "128", "456", "378", "125", "346", "347"])
)
BLOCK_IN = (4, 5)       # attach: 4 -> first consumed vertex, 5 -> second
BLOCK_OUT = (7, 8)      # the new adjacent degree-two pair
BLOCK_IN_PATTERN = (cs("456"), cs("378"))  # colors the consumed pair must have


def relabel_colors(mapping, sets):
    return tuple(frozenset(mapping[c] for c in s) for s in sets)


def color_bijection(src_pairs, universe=8):
    """A color bijection of [universe] sending each src set to its target.

    src_pairs is a list of (source_set, target_set) with pairwise-disjoint
    sources and pairwise-disjoint targets of equal sizes; remaining colors
    are matched in increasing order.
    """
    mapping = {}
    used_src, used_tgt = set(), set()
    for src, tgt in src_pairs:
        src, tgt = sorted(src), sorted(tgt)
        assert len(src) == len(tgt)
        for a, b in zip(src, tgt):
            assert a not in used_src and b not in used_tgt
            mapping[a] = b
            used_src.add(a)
            used_tgt.add(b)
    rest_src = [c for c in range(1, universe + 1) if c not in used_src]
    rest_tgt = [c for c in range(1, universe + 1) if c not in used_tgt]
    for a, b in zip(rest_src, rest_tgt):
        mapping[a] = b
    return mapping


def extend_with_block(graph, f1, f2, pair):
    """Append the periodic block to an adjacent degree-two pair of a colored
    member; returns (graph', f1', f2', new_pair).

    The consumed pair's colors need not match the block pattern: the block
    colors are renamed by a color bijection per coloring.
    """
    u, v = pair
    assert graph.has_edge(u, v)
    base_n = graph.n
    edges = list(graph.edges)
    for a, b in BLOCK_EDGES:
        edges.append((base_n + a, base_n + b))
    edges.append((base_n + BLOCK_IN[0], u))
    edges.append((base_n + BLOCK_IN[1], v))
    g2 = Graph(base_n + 12, edges)
    outs = []
    for f in (f1, f2):
        pi = color_bijection([(BLOCK_IN_PATTERN[0], f[u]), (BLOCK_IN_PATTERN[1], f[v])])
        outs.append(tuple(f) + relabel_colors(pi, BLOCK_COLORS))
    new_pair = (base_n + BLOCK_OUT[0], base_n + BLOCK_OUT[1])
    return g2, outs[0], outs[1], new_pair
