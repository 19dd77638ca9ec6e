"""Source-target networks over a rainbow matching.

A network built over a matching has the matching's edges as inner
vertices; each non-matching graph edge of a family member turns into an
arc, and source-target paths correspond to augmenting alternating paths.
The module also implements the symmetric-difference augmentation, repair
of a doubly represented candidate, and source-edge contraction.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence

from .core import (Edge, BipartiteGraph, EdgeFamily, RainbowMatching,
                   _as_edge, is_valid_rainbow)

SOURCE = "s"
TARGET = "t"

# Inner vertices are matching edges when the network is built over one,
# or plain string labels for standalone networks.
Vertex = str | Edge
Arc = tuple[Vertex, Vertex]


class BoundExceeded(RuntimeError):
    """Exhaustive search refused: the instance is above the size bound."""


class PreimageError(ValueError):
    """An arc has no recorded graph-edge witness for the chosen member."""


class RepresentationClash(Exception):
    """Two edges would represent the same member.

    Carries the raw (member, edge) pairs so the caller can repair the
    candidate with rectify_double_representation.
    """

    def __init__(self, member: int, pairs: Sequence[tuple[int, Edge]]):
        super().__init__(f"member {member} would be represented twice")
        self.member = member
        self.pairs = tuple(pairs)


@dataclass(frozen=True)
class Network:
    """Digraph with a distinguished source and target.

    No arc enters the source, none leaves the target, and self-loops are
    rejected.  Vertex order (source, inner..., target) fixes the
    deterministic ranking used by every search in the package.
    """

    inner: tuple
    arcs: frozenset
    source: object = SOURCE
    target: object = TARGET

    def __post_init__(self) -> None:
        inner = tuple(self.inner)
        object.__setattr__(self, "inner", inner)
        object.__setattr__(self, "arcs", frozenset((u, v) for u, v in self.arcs))
        if self.source == self.target:
            raise ValueError("source and target must differ")
        if self.source in inner or self.target in inner:
            raise ValueError("source and target cannot be inner vertices")
        if len(set(inner)) != len(inner):
            raise ValueError("inner vertices repeat")
        verts = set(inner) | {self.source, self.target}
        for u, v in self.arcs:
            if u not in verts or v not in verts:
                raise ValueError(f"arc ({u!r}, {v!r}) leaves the vertex set")
            if u == v:
                raise ValueError("self-loops are not allowed")
            if v == self.source:
                raise ValueError("no arc may enter the source")
            if u == self.target:
                raise ValueError("no arc may leave the target")
        ranks = {v: i for i, v in enumerate((self.source, *inner, self.target))}
        object.__setattr__(self, "_ranks", ranks)

    @property
    def vertices(self) -> tuple:
        return (self.source, *self.inner, self.target)

    def rank(self, v) -> int:
        try:
            return self._ranks[v]
        except KeyError:
            raise ValueError(f"{v!r} is not a vertex of the network") from None

    def arc_key(self, arc) -> tuple[int, int]:
        return (self.rank(arc[0]), self.rank(arc[1]))

    def sorted_arcs(self, arcs: Iterable | None = None) -> list:
        pool = self.arcs if arcs is None else arcs
        return sorted(pool, key=self.arc_key)


@dataclass(frozen=True)
class StPath:
    """Directed path given by its vertex sequence (source first, target last)."""

    vertices: tuple

    def __post_init__(self) -> None:
        verts = tuple(self.vertices)
        object.__setattr__(self, "vertices", verts)
        if len(verts) < 2:
            raise ValueError("a path needs at least two vertices")
        if len(set(verts)) != len(verts):
            raise ValueError("a path may not repeat a vertex")

    @property
    def arcs(self) -> tuple:
        return tuple(zip(self.vertices, self.vertices[1:]))

    @property
    def interior(self) -> tuple:
        return self.vertices[1:-1]


def is_st_path(net: Network, path: StPath, require_arcs: bool = True) -> bool:
    """Structural check against a network; arcs may be waived because
    certificate paths only need to live over the vertex set."""
    verts = path.vertices
    if verts[0] != net.source or verts[-1] != net.target:
        return False
    if not set(path.interior) <= set(net.inner):
        return False
    if require_arcs and not set(path.arcs) <= net.arcs:
        return False
    return True


@dataclass(frozen=True)
class NetworkFamily:
    """Ordered multiset of arc sets over a shared network.

    preimages maps (member position, arc) to the graph edges producing the
    arc when the family was built over a matching; origin maps member
    positions back to the originating edge-family indices.  Both stay None
    for standalone families.  Positions are 1-based.
    """

    network: Network
    sets: tuple
    preimages: Mapping | None = None
    origin: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        sets = tuple(frozenset(s) for s in self.sets)
        object.__setattr__(self, "sets", sets)
        for idx, s in enumerate(sets, start=1):
            if not s <= self.network.arcs:
                raise ValueError(f"member {idx} uses arcs outside the network")
        if self.origin is not None:
            origin = tuple(int(i) for i in self.origin)
            object.__setattr__(self, "origin", origin)
            if len(origin) != len(sets):
                raise ValueError("origin must label every member")
        if self.preimages is not None:
            object.__setattr__(self, "preimages",
                               {key: frozenset(v) for key, v in dict(self.preimages).items()})

    def __len__(self) -> int:
        return len(self.sets)

    def member(self, position: int) -> frozenset:
        if not 1 <= position <= len(self.sets):
            raise IndexError(f"member position {position} out of range 1..{len(self.sets)}")
        return self.sets[position - 1]

    def union(self, positions: Iterable[int] | None = None) -> frozenset:
        chosen = self.sets if positions is None else [self.member(p) for p in positions]
        return frozenset().union(*chosen) if chosen else frozenset()


def has_st_path(arcs: Iterable, source=SOURCE, target=TARGET) -> bool:
    """Reachability over exactly the given arcs."""
    out: dict = {}
    for u, v in arcs:
        out.setdefault(u, set()).add(v)
    seen = {source}
    frontier = [source]
    while frontier:
        nxt = []
        for u in frontier:
            for v in out.get(u, ()):
                if v == target:
                    return True
                if v not in seen:
                    seen.add(v)
                    nxt.append(v)
        frontier = nxt
    return False


def st_paths(arcs: Iterable, net: Network) -> Iterator[StPath]:
    """All simple source-target paths using only the given arcs, emitted in
    lexicographic order of the network's vertex ranks."""
    out: dict = {}
    for u, v in arcs:
        out.setdefault(u, []).append(v)
    for u in out:
        out[u].sort(key=net.rank)
    trail = [net.source]
    on_trail = {net.source}

    def walk(u) -> Iterator[StPath]:
        for v in out.get(u, ()):
            if v == net.target:
                yield StPath(tuple(trail) + (v,))
            elif v not in on_trail:
                trail.append(v)
                on_trail.add(v)
                yield from walk(v)
                trail.pop()
                on_trail.discard(v)

    yield from walk(net.source)


def build_network(g: BipartiteGraph, fam: EdgeFamily,
                  rm: RainbowMatching) -> tuple[Network, NetworkFamily]:
    """Build the network over rm's matching for the unrepresented members.

    The inner vertices are exactly the matching's edges.  Every non-matching
    edge of an unrepresented member becomes an arc: matched endpoints point
    at their matching edges, an unmatched A-endpoint contributes the source,
    an unmatched B-endpoint the target; (source, target) encodes a directly
    addable edge.  All graph-edge witnesses are recorded per (member, arc).
    """
    if g != fam.graph:
        raise ValueError("graph does not match the family's ambient graph")
    if not is_valid_rainbow(fam, rm):
        raise ValueError("not a valid rainbow matching of the family")
    matched = rm.matching().edges
    a_owner = {e[0]: e for e in matched}
    b_owner = {e[1]: e for e in matched}
    inner = tuple(sorted(matched))
    unrepresented = tuple(i for i in range(1, len(fam) + 1) if i not in rm.assignment)
    sets = []
    preimages: dict = {}
    for pos, i in enumerate(unrepresented, start=1):
        arcs = set()
        for h in sorted(fam.member(i)):
            if h in matched:
                continue
            arc = (a_owner.get(h[0], SOURCE), b_owner.get(h[1], TARGET))
            arcs.add(arc)
            preimages.setdefault((pos, arc), set()).add(h)
        sets.append(frozenset(arcs))
    all_arcs = frozenset().union(*sets) if sets else frozenset()
    net = Network(inner=inner, arcs=all_arcs)
    nf = NetworkFamily(net, tuple(sets),
                       preimages={key: frozenset(v) for key, v in preimages.items()},
                       origin=unrepresented)
    return net, nf


@dataclass(frozen=True)
class AlternatingPath:
    """Path in the bipartite graph with vertices tagged ("A", i) or ("B", j).

    Sides alternate; edges at even positions are the non-matching ones when
    the path augments a matching.
    """

    vertices: tuple

    def __post_init__(self) -> None:
        verts = tuple((str(side), int(i)) for side, i in self.vertices)
        object.__setattr__(self, "vertices", verts)
        if len(verts) < 2:
            raise ValueError("an alternating path needs at least two vertices")
        if len(set(verts)) != len(verts):
            raise ValueError("an alternating path may not repeat a vertex")
        for (s1, _), (s2, _) in zip(verts, verts[1:]):
            if s1 not in ("A", "B") or s2 not in ("A", "B") or s1 == s2:
                raise ValueError("sides must alternate between A and B")

    def edges(self) -> tuple[Edge, ...]:
        out = []
        for (s1, i1), (_, i2) in zip(self.vertices, self.vertices[1:]):
            out.append((i1, i2) if s1 == "A" else (i2, i1))
        return tuple(out)

    def new_edges(self) -> tuple[Edge, ...]:
        return self.edges()[0::2]

    def matched_edges(self) -> tuple[Edge, ...]:
        return self.edges()[1::2]


def alternating_from_edges(edges: Sequence[Edge],
                           rm: RainbowMatching) -> AlternatingPath:
    """Assemble the alternating path whose non-matching edges are the given
    sequence, consecutive ones linked through rm's matching edges.

    Validates that the walk starts at an unmatched A-vertex, ends at an
    unmatched B-vertex, and that each link is an actual matching edge.
    """
    if not edges:
        raise ValueError("need at least one edge")
    edges = [_as_edge(e) for e in edges]
    matched = rm.matching().edges
    a_owner = {e[0]: e for e in matched}
    b_owner = {e[1]: e for e in matched}
    if edges[0][0] in a_owner:
        raise ValueError("path must start at an unmatched A-vertex")
    if edges[-1][1] in b_owner:
        raise ValueError("path must end at an unmatched B-vertex")
    for prev, nxt in zip(edges, edges[1:]):
        link = b_owner.get(prev[1])
        if link is None or link[0] != nxt[0]:
            raise ValueError("consecutive edges are not joined by a matching edge")
    verts = []
    for a, b in edges:
        verts.extend([("A", a), ("B", b)])
    return AlternatingPath(tuple(verts))


def path_to_alternating(p: StPath, nf: NetworkFamily, rep: Mapping[int, int],
                        rm: RainbowMatching,
                        chosen: Mapping[int, Edge] | None = None) -> AlternatingPath:
    """Translate a source-target path into an augmenting alternating path.

    rep maps each arc position (0-based) of p to the 1-based member
    position owning that arc.  The graph edge realizing an arc defaults to
    the lexicographically least recorded preimage and can be pinned per
    position through chosen.
    """
    arcs = p.arcs
    if sorted(rep) != list(range(len(arcs))):
        raise ValueError("rep must cover every arc position exactly once")
    members = list(rep.values())
    if len(set(members)) != len(members):
        raise ValueError("rep must use pairwise distinct members")
    if nf.preimages is None:
        raise PreimageError("family has no recorded preimages")
    edges = []
    for j, arc in enumerate(arcs):
        pool = nf.preimages.get((rep[j], arc), frozenset())
        if not pool:
            raise PreimageError(f"no preimage recorded for member {rep[j]} on arc {arc}")
        if chosen is not None and j in chosen:
            e = _as_edge(chosen[j])
            if e not in pool:
                raise PreimageError(f"edge {e} is not a recorded preimage of arc {arc}")
        else:
            e = min(pool)
        edges.append(e)
    return alternating_from_edges(edges, rm)


def augment(rm: RainbowMatching, alt: AlternatingPath,
            new_reps: Sequence[int]) -> RainbowMatching:
    """Symmetric difference of rm's matching with an augmenting path.

    new_reps lists, in path order, the member represented by each new edge.
    Members whose matching edge disappears lose their representation.  The
    result is one edge larger; if some member would end up represented
    twice a RepresentationClash is raised, carrying the candidate pairs so
    the caller can rectify first.
    """
    edges = alt.edges()
    if len(edges) % 2 == 0:
        raise ValueError("an augmenting path has an odd number of edges")
    new, old = edges[0::2], edges[1::2]
    matched = rm.matching().edges
    if not set(old) <= matched:
        raise ValueError("every other edge must belong to the matching")
    if set(new) & matched:
        raise ValueError("new edges must avoid the matching")
    side0, i0 = alt.vertices[0]
    side1, i1 = alt.vertices[-1]
    if side0 != "A" or side1 != "B":
        raise ValueError("an augmenting path runs from the A-side to the B-side")
    if i0 in {e[0] for e in matched} or i1 in {e[1] for e in matched}:
        raise ValueError("path endpoints must be unmatched")
    reps = tuple(int(i) for i in new_reps)
    if len(reps) != len(new):
        raise ValueError("need exactly one representative per new edge")
    removed = set(old)
    pairs = [(i, e) for i, e in sorted(rm.assignment.items()) if e not in removed]
    pairs += list(zip(reps, new))
    counts = Counter(i for i, _ in pairs)
    doubled = sorted(i for i, c in counts.items() if c > 1)
    if doubled:
        raise RepresentationClash(doubled[0], pairs)
    result = RainbowMatching(dict(pairs))
    if len(result) != len(rm) + 1:
        raise ValueError("augmentation must grow the matching by exactly one")
    return result


@dataclass(frozen=True)
class RectifyCycle:
    """Repair cycle for a doubly represented candidate.

    chord joins the A-side of the last matched edge in the run to the
    B-side of the first one; run_edges[j] bridges matched_run[j] and
    matched_run[j+1]; run_members represent the run edges after the toggle.
    """

    chord: Edge
    chord_member: int
    matched_run: tuple[Edge, ...]
    run_edges: tuple[Edge, ...]
    run_members: tuple[int, ...]


def rectify_double_representation(pairs: Sequence[tuple[int, Edge]],
                                  cycle: RectifyCycle) -> RainbowMatching:
    """Toggle the repair cycle on a candidate with one doubled member.

    The doubled member keeps only its edge outside the cycle's matched run,
    which must contain the other copy; size is preserved.
    """
    pairs = [(int(i), _as_edge(e)) for i, e in pairs]
    counts = Counter(i for i, _ in pairs)
    doubled = sorted(i for i, c in counts.items() if c > 1)
    if len(doubled) != 1 or counts[doubled[0]] != 2:
        raise ValueError("exactly one member must be represented exactly twice")
    run = tuple(_as_edge(e) for e in cycle.matched_run)
    bridge = tuple(_as_edge(e) for e in cycle.run_edges)
    chord = _as_edge(cycle.chord)
    if len(run) < 2 or len(bridge) != len(run) - 1 or len(cycle.run_members) != len(bridge):
        raise ValueError("cycle data sizes are inconsistent")
    if chord != (run[-1][0], run[0][1]):
        raise ValueError("chord does not close the cycle")
    for j, e in enumerate(bridge):
        if e != (run[j][0], run[j + 1][1]):
            raise ValueError("run edge does not bridge its matched pair")
    held = {e for _, e in pairs}
    if not set(run) <= held:
        raise ValueError("the matched run must lie inside the candidate")
    if ({chord} | set(bridge)) & held:
        raise ValueError("the cycle's new edges are already present")
    drop = set(run)
    out = [(i, e) for i, e in pairs if e not in drop]
    out.append((int(cycle.chord_member), chord))
    out.extend((int(i), e) for i, e in zip(cycle.run_members, bridge))
    after = Counter(i for i, _ in out)
    if any(c > 1 for c in after.values()):
        raise ValueError("cycle members collide with surviving representatives")
    result = RainbowMatching(dict(out))
    if len(result) != len(pairs):
        raise ValueError("rectification must preserve the candidate's size")
    return result


def _fresh_source(net: Network) -> str:
    label = str(net.source) + "'"
    taken = set(net.inner) | {net.source, net.target}
    while label in taken:
        label += "'"
    return label


def contract_source_edge(nf: NetworkFamily, x) -> NetworkFamily:
    """Contract the arc source -> x into a new source vertex.

    Member rewriting: arcs source->y and x->y become newsource->y, arcs
    into x disappear, and the contracted arc itself (a would-be self-loop)
    is dropped.  The new network's arcs are the union of the rewritten
    members; recorded preimages do not survive contraction.
    """
    net = nf.network
    if x not in net.inner:
        raise ValueError(f"{x!r} is not an inner vertex")
    if (net.source, x) not in net.arcs:
        raise ValueError("the network has no source arc to the given vertex")
    s2 = _fresh_source(net)
    new_sets = []
    for member in nf.sets:
        out = set()
        for u, v in member:
            if v == x:
                continue
            if u == net.source or u == x:
                out.add((s2, v))
            else:
                out.add((u, v))
        new_sets.append(frozenset(out))
    inner = tuple(w for w in net.inner if w != x)
    arcs = frozenset().union(*new_sets) if new_sets else frozenset()
    new_net = Network(inner=inner, arcs=arcs, source=s2, target=net.target)
    return NetworkFamily(new_net, tuple(new_sets), preimages=None, origin=nf.origin)


def uncontract_path(q: StPath, variant: int, x, source=SOURCE) -> StPath:
    """Undo a source contraction on a path that starts at the merged source.

    Variant 1 renames the first vertex back to source; variant 2 expands
    the first arc through the contracted vertex x.
    """
    if variant not in (1, 2):
        raise ValueError("variant must be 1 or 2")
    rest = q.vertices[1:]
    if variant == 1:
        return StPath((source, *rest))
    return StPath((source, x, *rest))
