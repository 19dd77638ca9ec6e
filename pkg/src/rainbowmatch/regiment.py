"""Regimentation certificates and their structure theory.

A regimentation is a set of internally disjoint source-target paths
covering every network vertex, together with an assignment of "essential"
members onto the paths: each path with c arcs gets exactly c - 1 members,
each containing all of the path's arcs.  This module verifies such
certificates, searches for them exhaustively on small networks, and turns
the structural consequences they must satisfy into executable checks.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Mapping

from .network import (Network, NetworkFamily, StPath, BoundExceeded,
                      has_st_path, is_st_path, st_paths)
from .paths import exhaustive_rainbow_path


@dataclass(frozen=True)
class Regimentation:
    """Certificate: disjoint covering paths plus the essential assignment.

    assignment maps member position (1-based) to the index of its path in
    paths (0-based).
    """

    paths: tuple[StPath, ...]
    assignment: Mapping[int, int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "paths", tuple(self.paths))
        assignment = {int(i): int(p) for i, p in dict(self.assignment).items()}
        object.__setattr__(self, "assignment", assignment)

    def essential(self) -> tuple[int, ...]:
        return tuple(sorted(self.assignment))

    def inessential(self, nf: NetworkFamily) -> tuple[int, ...]:
        return tuple(i for i in range(1, len(nf) + 1) if i not in self.assignment)

    def path_of(self, member: int) -> StPath:
        return self.paths[self.assignment[member]]


def backward_arcs(net: Network, q: StPath) -> frozenset:
    """Arcs of the network joining two path vertices against q's direction."""
    pos = {v: i for i, v in enumerate(q.vertices)}
    return frozenset((u, v) for (u, v) in net.arcs
                     if u in pos and v in pos and pos[v] < pos[u])


def useless_arcs(net: Network, q: StPath) -> frozenset:
    """Arcs from off-path inner vertices into q's second vertex, and from
    q's second-to-last vertex out to off-path inner vertices.

    This is the abstract set over the off-path vertices; it is not
    intersected with the arcs actually present, because callers use it as
    a containment mask.
    """
    on_path = set(q.vertices)
    off = [v for v in net.inner if v not in on_path]
    s_q = q.vertices[1]
    t_q = q.vertices[-2]
    return frozenset({(v, s_q) for v in off} | {(t_q, u) for u in off})


def verify_regimentation(net: Network, nf: NetworkFamily,
                         r: Regimentation) -> str | None:
    """None when the certificate is valid, else the first violated
    requirement: "paths" (not source-target paths over the network),
    "disjoint", "assignment" (dangling references), then conditions
    "1" (vertex cover), "2" (arc containment), "3" (representative count).

    Path arcs need not belong to the network: condition 2 pins the arcs of
    every assigned path inside a member anyway, and a bare source-target
    path carrying no members is legitimate cover.
    """
    for q in r.paths:
        if not is_st_path(net, q, require_arcs=False):
            return "paths"
    interiors = [set(q.interior) for q in r.paths]
    for i, j in itertools.combinations(range(len(r.paths)), 2):
        if interiors[i] & interiors[j]:
            return "disjoint"
    for member, pos in r.assignment.items():
        if not 1 <= member <= len(nf) or not 0 <= pos < len(r.paths):
            return "assignment"
    covered = set()
    for q in r.paths:
        covered.update(q.vertices)
    if covered != set(net.vertices):
        return "1"
    for member, pos in r.assignment.items():
        if not set(r.paths[pos].arcs) <= nf.member(member):
            return "2"
    counts = Counter(r.assignment.values())
    for pos, q in enumerate(r.paths):
        if counts.get(pos, 0) != len(q.arcs) - 1:
            return "3"
    return None


def _interior_partitions(items: tuple) -> Iterator[tuple]:
    """Partitions of items into ordered blocks, deterministically:
    the block holding the earliest remaining vertex is chosen first, by
    ascending extra-size then lexicographic content, then every ordering
    of the block, then the rest recursively."""
    if not items:
        yield ()
        return
    first, rest = items[0], items[1:]
    for r in range(len(rest) + 1):
        for extra in itertools.combinations(range(len(rest)), r):
            block = (first,) + tuple(rest[i] for i in extra)
            leftover = tuple(rest[i] for i in range(len(rest)) if i not in extra)
            for ordering in itertools.permutations(block):
                for tail in _interior_partitions(leftover):
                    yield (ordering,) + tail


def find_regimentation(net: Network, nf: NetworkFamily,
                       bound: int = 6) -> Regimentation | None:
    """Exhaustively search for a regimentation; None when there is none.

    Enumerates interior partitions into ordered blocks (each a path), then
    backtracks over assignments satisfying the containment and counting
    conditions; the first hit in that deterministic order wins.
    """
    if len(net.inner) > bound:
        raise BoundExceeded(
            f"{len(net.inner)} inner vertices exceed the bound {bound}")
    if not net.inner:
        # the bare source-target path covers everything and carries no members
        return Regimentation((StPath((net.source, net.target)),), {})
    members = list(range(1, len(nf) + 1))
    for system in _interior_partitions(net.inner):
        paths = [StPath((net.source, *block, net.target)) for block in system]
        need = [len(q.arcs) - 1 for q in paths]
        candidates = [[m for m in members if set(q.arcs) <= nf.member(m)]
                      for q in paths]
        if any(len(c) < w for c, w in zip(candidates, need)):
            continue
        assignment = _assign_members(need, candidates)
        if assignment is not None:
            return Regimentation(tuple(paths), assignment)
    return None


def _assign_members(need: list[int], candidates: list[list[int]]) -> dict | None:
    used: set[int] = set()
    result: dict[int, int] = {}

    def walk(j: int) -> bool:
        if j == len(need):
            return True
        for combo in itertools.combinations(candidates[j], need[j]):
            if any(m in used for m in combo):
                continue
            used.update(combo)
            for m in combo:
                result[m] = j
            if walk(j + 1):
                return True
            used.difference_update(combo)
            for m in combo:
                del result[m]
        return False

    return dict(result) if walk(0) else None


@dataclass(frozen=True)
class StructureLemmaReport:
    """One boolean per structural consequence of a verified certificate.

    When the family still has a rainbow source-target path the
    consequences do not apply and every field past hypothesis_met is None.
    """

    hypothesis_met: bool
    counting_ok: bool | None = None
    backward_ok: bool | None = None
    only_path_ok: bool | None = None
    essential_iff_path_ok: bool | None = None

    @property
    def all_ok(self) -> bool:
        return (self.hypothesis_met
                and bool(self.counting_ok) and bool(self.backward_ok)
                and bool(self.only_path_ok) and bool(self.essential_iff_path_ok))


def check_structure_lemmas(net: Network, nf: NetworkFamily, r: Regimentation,
                           path_bound: int = 8) -> StructureLemmaReport:
    """Check, by enumeration, the consequences a verified certificate must
    satisfy when no rainbow source-target path exists:

    - counting: as many essential members as inner vertices;
    - backward: inessential members only hold backward arcs, and members
      assigned to a path stay inside its arcs, backward arcs, and the
      useless arcs around it;
    - only path: an essential member contains exactly its assigned path;
    - essential iff path: a member is essential exactly when it contains a
      source-target path.

    The no-rainbow-path hypothesis is established by exhaustive search,
    never assumed.
    """
    if verify_regimentation(net, nf, r) is not None:
        raise ValueError("certificate does not verify")
    if exhaustive_rainbow_path(net, nf, bound=path_bound) is not None:
        return StructureLemmaReport(hypothesis_met=False)
    essential = set(r.assignment)
    counting_ok = len(essential) == len(net.inner)
    all_backward = frozenset().union(*(backward_arcs(net, q) for q in r.paths)) \
        if r.paths else frozenset()
    inessential = [i for i in range(1, len(nf) + 1) if i not in essential]
    backward_ok = all(nf.member(i) <= all_backward for i in inessential)
    for pos, q in enumerate(r.paths):
        allowed = set(q.arcs) | all_backward | useless_arcs(net, q)
        for member, target in r.assignment.items():
            if target == pos and not nf.member(member) <= allowed:
                backward_ok = False
    only_path_ok = True
    for member, pos in r.assignment.items():
        found = list(st_paths(nf.member(member), net))
        if found != [r.paths[pos]]:
            only_path_ok = False
    essential_iff = all(
        (i in essential) == has_st_path(nf.member(i), net.source, net.target)
        for i in range(1, len(nf) + 1))
    return StructureLemmaReport(True, counting_ok, backward_ok,
                                only_path_ok, essential_iff)


def check_exchange_lemma(nf_g: NetworkFamily, nf_h: NetworkFamily,
                         r_g: Regimentation, r_h: Regimentation,
                         path_bound: int = 8) -> bool:
    """Swap-stability of certificates under exchanging a single member.

    The two families must differ by exactly one member in each direction
    (multiset difference), both certificates must verify, and neither
    family may have a rainbow source-target path.  Passes when the swapped
    members are both inessential, or both essential with the same assigned
    path.
    """
    if nf_g.network != nf_h.network:
        raise ValueError("families must live over the same network")
    count_g = Counter(nf_g.sets)
    count_h = Counter(nf_h.sets)
    only_g = list((count_g - count_h).elements())
    only_h = list((count_h - count_g).elements())
    if len(only_g) != 1 or len(only_h) != 1:
        raise ValueError("families must differ in exactly one member each way")
    g_set, h_set = only_g[0], only_h[0]
    for nf, r in ((nf_g, r_g), (nf_h, r_h)):
        if verify_regimentation(nf.network, nf, r) is not None:
            raise ValueError("a certificate does not verify")
        if exhaustive_rainbow_path(nf.network, nf, bound=path_bound) is not None:
            raise ValueError("a family still has a rainbow source-target path")

    def essential_path(nf: NetworkFamily, r: Regimentation, content) -> StPath | None:
        positions = [i for i in range(1, len(nf) + 1) if nf.member(i) == content]
        for i in positions:
            if i in r.assignment:
                return r.paths[r.assignment[i]]
        return None

    path_g = essential_path(nf_g, r_g, g_set)
    path_h = essential_path(nf_h, r_h, h_set)
    if path_g is None and path_h is None:
        return True
    return path_g is not None and path_h is not None and path_g == path_h
