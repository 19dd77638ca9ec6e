"""Bipartite graphs, matchings, multiset edge families, and exact oracles.

Family members are identified by 1-based position.  A family may contain
the same edge set at two positions; they count as distinct members for
every purpose (rainbow choices, union conditions, certificates).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping

Edge = tuple[int, int]


def _as_edge(e: Iterable[int]) -> Edge:
    a, b = e
    return (int(a), int(b))


@dataclass(frozen=True)
class BipartiteGraph:
    """Bipartite graph on sides A = {1..left_size} and B = {1..right_size}.

    Edges are (a, b) pairs of 1-based indices into the two sides.
    """

    left_size: int
    right_size: int
    edges: frozenset[Edge] = frozenset()

    def __post_init__(self) -> None:
        if self.left_size < 1 or self.right_size < 1:
            raise ValueError("both sides need at least one vertex")
        edges = frozenset(_as_edge(e) for e in self.edges)
        object.__setattr__(self, "edges", edges)
        for a, b in edges:
            if not (1 <= a <= self.left_size and 1 <= b <= self.right_size):
                raise ValueError(f"edge ({a}, {b}) lies outside the vertex ranges")

    @classmethod
    def complete(cls, left_size: int, right_size: int | None = None) -> "BipartiteGraph":
        """K_{left,right}; the right side defaults to the left's size."""
        rs = left_size if right_size is None else right_size
        return cls(left_size, rs,
                   frozenset((a, b) for a in range(1, left_size + 1)
                             for b in range(1, rs + 1)))


@dataclass(frozen=True)
class Matching:
    """A set of pairwise vertex-disjoint edges."""

    edges: frozenset[Edge] = frozenset()

    def __post_init__(self) -> None:
        edges = frozenset(_as_edge(e) for e in self.edges)
        object.__setattr__(self, "edges", edges)
        seen_a: set[int] = set()
        seen_b: set[int] = set()
        for a, b in edges:
            if a in seen_a or b in seen_b:
                raise ValueError("matching edges share a vertex")
            seen_a.add(a)
            seen_b.add(b)

    def __len__(self) -> int:
        return len(self.edges)

    @property
    def left_vertices(self) -> frozenset[int]:
        return frozenset(a for a, _ in self.edges)

    @property
    def right_vertices(self) -> frozenset[int]:
        return frozenset(b for _, b in self.edges)


@dataclass(frozen=True)
class EdgeFamily:
    """Ordered multiset of edge sets over a fixed ambient graph."""

    graph: BipartiteGraph
    sets: tuple[frozenset[Edge], ...]

    def __post_init__(self) -> None:
        sets = tuple(frozenset(_as_edge(e) for e in s) for s in self.sets)
        object.__setattr__(self, "sets", sets)
        for idx, s in enumerate(sets, start=1):
            if not s <= self.graph.edges:
                raise ValueError(f"member {idx} uses edges outside the graph")

    def __len__(self) -> int:
        return len(self.sets)

    def member(self, index: int) -> frozenset[Edge]:
        """1-based member access; the index is the member's identity."""
        if not 1 <= index <= len(self.sets):
            raise IndexError(f"member index {index} out of range 1..{len(self.sets)}")
        return self.sets[index - 1]

    def union(self, indices: Iterable[int] | None = None) -> frozenset[Edge]:
        chosen = self.sets if indices is None else [self.member(i) for i in indices]
        return frozenset().union(*chosen) if chosen else frozenset()


@dataclass(frozen=True)
class RainbowMatching:
    """Injective choice of one edge from some members whose image is a matching.

    assignment maps member index (1-based) to the edge representing it.
    """

    assignment: Mapping[int, Edge]

    def __post_init__(self) -> None:
        assignment = {int(i): _as_edge(e) for i, e in dict(self.assignment).items()}
        object.__setattr__(self, "assignment", assignment)
        edges = list(assignment.values())
        if len(set(edges)) != len(edges):
            raise ValueError("two members are assigned the same edge")
        Matching(frozenset(edges))  # raises when the image is not a matching

    def __len__(self) -> int:
        return len(self.assignment)

    def matching(self) -> Matching:
        return Matching(frozenset(self.assignment.values()))

    def members(self) -> tuple[int, ...]:
        return tuple(sorted(self.assignment))


def is_valid_rainbow(fam: EdgeFamily, rm: RainbowMatching,
                     size: int | None = None) -> bool:
    """Check rm against fam: each assigned edge must belong to its member.

    Injectivity and the matching property are already enforced by the
    RainbowMatching constructor; this adds the family-membership half and
    an optional exact-size requirement.
    """
    if size is not None and len(rm) != size:
        return False
    for i, e in rm.assignment.items():
        if not 1 <= i <= len(fam) or e not in fam.member(i):
            return False
    return True


def max_matching(g: BipartiteGraph,
                 edge_subset: Iterable[Edge] | None = None) -> Matching:
    """Maximum-cardinality matching inside edge_subset (default: all edges).

    Augmenting-path search scanning A-vertices in ascending order, so the
    result is deterministic for a fixed input.
    """
    if edge_subset is None:
        edges = g.edges
    else:
        edges = frozenset(_as_edge(e) for e in edge_subset)
        if not edges <= g.edges:
            raise ValueError("edge_subset must lie inside the graph")
    adj: dict[int, list[int]] = {}
    for a, b in sorted(edges):
        adj.setdefault(a, []).append(b)
    match_of_b: dict[int, int] = {}

    def try_augment(a: int, banned: set[int]) -> bool:
        for b in adj.get(a, ()):
            if b in banned:
                continue
            banned.add(b)
            if b not in match_of_b or try_augment(match_of_b[b], banned):
                match_of_b[b] = a
                return True
        return False

    for a in sorted(adj):
        try_augment(a, set())
    return Matching(frozenset((a, b) for b, a in match_of_b.items()))


def matching_number(g: BipartiteGraph,
                    edge_subset: Iterable[Edge] | None = None) -> int:
    return len(max_matching(g, edge_subset))


def rainbow_matching_max(fam: EdgeFamily) -> tuple[int, RainbowMatching]:
    """Maximum rainbow matching size, with a witness, by exhaustive search.

    This is the project's brute-force oracle: complete backtracking over
    partial choice functions.  Members are explored smallest-set-first,
    branches that cannot beat the incumbent are cut, and the search stops
    once the ceiling min(|fam|, matching number of the union) is reached.
    Deterministic for a fixed input.
    """
    m = len(fam)
    if m == 0:
        return 0, RainbowMatching({})
    order = sorted(range(1, m + 1), key=lambda i: (len(fam.member(i)), i))
    members = [(i, sorted(fam.member(i))) for i in order]
    ceiling = min(m, matching_number(fam.graph, fam.union()))
    best: dict[int, Edge] = {}
    chosen: dict[int, Edge] = {}
    used_a: set[int] = set()
    used_b: set[int] = set()

    def walk(pos: int) -> bool:
        nonlocal best
        if len(chosen) > len(best):
            best = dict(chosen)
            if len(best) >= ceiling:
                return True
        if pos == m or len(chosen) + (m - pos) <= len(best):
            return False
        index, edges = members[pos]
        for a, b in edges:
            if a in used_a or b in used_b:
                continue
            used_a.add(a)
            used_b.add(b)
            chosen[index] = (a, b)
            finished = walk(pos + 1)
            used_a.discard(a)
            used_b.discard(b)
            del chosen[index]
            if finished:
                return True
        return walk(pos + 1)

    walk(0)
    return len(best), RainbowMatching(best)


def cooperative_condition(fam: EdgeFamily, k: int, n: int) -> tuple[int, ...] | None:
    """Does every k-member union contain a matching of size n?

    Returns None on success, otherwise the lexicographically least failing
    index set (1-based, ascending).
    """
    m = len(fam)
    if not 1 <= k <= m:
        raise ValueError(f"k must satisfy 1 <= k <= {m}")
    if n <= 0:
        return None
    for picked in itertools.combinations(range(1, m + 1), k):
        if matching_number(fam.graph, fam.union(picked)) < n:
            return picked
    return None
