"""Independent brute-force oracles and tiny instance builders for tests.

Everything here stays deliberately naive: subset enumeration instead of
augmenting paths, Berge's criterion instead of path tracing, so the
package's own algorithms are checked against a different route.
"""

from __future__ import annotations

import itertools

from rainbowmatch import BipartiteGraph, EdgeFamily, Network, NetworkFamily


def is_matching(edges) -> bool:
    left = [a for a, _ in edges]
    right = [b for _, b in edges]
    return len(set(left)) == len(left) and len(set(right)) == len(right)


def brute_matching_number(edges) -> int:
    """Largest matching by enumerating every edge subset."""
    edges = sorted(edges)
    best = 0
    for r in range(len(edges), 0, -1):
        if r <= best:
            break
        for combo in itertools.combinations(edges, r):
            if is_matching(combo):
                best = r
                break
    return best


def brute_rainbow_number(fam: EdgeFamily) -> int:
    """Largest rainbow matching by enumerating every partial choice."""
    m = len(fam)
    best = 0
    for r in range(m, 0, -1):
        if r <= best:
            break
        for picked in itertools.combinations(range(1, m + 1), r):
            pools = [sorted(fam.member(i)) for i in picked]
            for combo in itertools.product(*pools):
                if len(set(combo)) == len(combo) and is_matching(combo):
                    best = r
                    break
            if best == r:
                break
    return best


def has_augmenting_path(edge_pool, matching_edges) -> bool:
    """Berge's criterion: the matching is augmentable inside the pool iff
    it is not maximum there."""
    return brute_matching_number(set(edge_pool) | set(matching_edges)) > len(matching_edges)


def family_on(graph: BipartiteGraph, *sets) -> EdgeFamily:
    return EdgeFamily(graph, tuple(frozenset(s) for s in sets))


def abstract_family(inner, member_arc_sets, full_arcs=None) -> NetworkFamily:
    """Standalone network family; the network carries either the given arc
    space or the union of the members."""
    sets = tuple(frozenset(s) for s in member_arc_sets)
    if full_arcs is None:
        arcs = frozenset().union(*sets) if sets else frozenset()
    else:
        arcs = frozenset(full_arcs)
    net = Network(inner=tuple(inner), arcs=arcs)
    return NetworkFamily(net, sets)


def all_arcs_over(inner) -> list:
    """Every legal arc over source, target, and the given inner vertices."""
    verts = ["s", *inner, "t"]
    return [(u, v) for u in verts for v in verts
            if u != v and u != "t" and v != "s"]
