"""File formats: bipartite and network instances, certificates, DOT export.

Bipartite instance:   {"left": int, "right": int, "sets": [[[a, b], ...], ...]}
Network instance:     {"inner": [vertex, ...], "sets": [[[u, v], ...], ...]}
Matching certificate: {"schema": "rainbow/1",
                       "assignment": [{"set": i, "edge": [a, b]}, ...],
                       "trail": [...]}
Regimentation cert.:  {"schema": "rainbow/1", "paths": [[vertex, ...], ...],
                       "assignment": {"member": path_index, ...}}

Vertices serialize as strings for labels and [a, b] pairs for matching
edges; the source and target are always "s" and "t" on bipartite-built
networks.  Serialization is canonical (sorted edges, two-space indent,
LF endings, trailing newline) so generate/parse/serialize round-trips are
byte-identical.
"""

from __future__ import annotations

import json
from typing import Any

from .core import BipartiteGraph, Edge, EdgeFamily, RainbowMatching
from .network import SOURCE, TARGET, Network, NetworkFamily
from .regiment import Regimentation, backward_arcs
from .network import StPath

SCHEMA = "rainbow/1"


class ParseError(ValueError):
    """An input file does not match its expected shape."""


class CertificateError(ValueError):
    """A certificate file is malformed."""


def dumps_canonical(payload: Any) -> str:
    return json.dumps(payload, indent=2) + "\n"


# -- bipartite instances ----------------------------------------------------

def family_to_json(fam: EdgeFamily) -> dict:
    return {
        "left": fam.graph.left_size,
        "right": fam.graph.right_size,
        "sets": [[list(e) for e in sorted(s)] for s in fam.sets],
    }


def family_from_json(payload: Any) -> EdgeFamily:
    if not isinstance(payload, dict):
        raise ParseError("instance must be a JSON object")
    try:
        left = int(payload["left"])
        right = int(payload["right"])
        raw_sets = payload["sets"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"instance is missing a field: {exc}") from exc
    if not isinstance(raw_sets, list) or not raw_sets:
        raise ParseError("instance needs a nonempty list of sets")
    sets = []
    for idx, raw in enumerate(raw_sets, start=1):
        if not isinstance(raw, list):
            raise ParseError(f"set {idx} must be a list of edges")
        edges = set()
        for e in raw:
            if not (isinstance(e, list) and len(e) == 2):
                raise ParseError(f"set {idx} holds a malformed edge: {e!r}")
            edges.add((int(e[0]), int(e[1])))
        sets.append(frozenset(edges))
    try:
        graph = BipartiteGraph(
            left, right,
            frozenset().union(*sets) if sets else frozenset())
        return EdgeFamily(graph, tuple(sets))
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def family_dumps(fam: EdgeFamily) -> str:
    return dumps_canonical(family_to_json(fam))


def family_loads(text: str) -> EdgeFamily:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    return family_from_json(payload)


# -- vertices and network instances -----------------------------------------

def vertex_to_json(v):
    return list(v) if isinstance(v, tuple) else v


def vertex_from_json(raw):
    if isinstance(raw, list):
        if len(raw) != 2:
            raise ParseError(f"malformed vertex: {raw!r}")
        return (int(raw[0]), int(raw[1]))
    if isinstance(raw, str):
        return raw
    raise ParseError(f"malformed vertex: {raw!r}")


def network_family_from_json(payload: Any) -> NetworkFamily:
    if not isinstance(payload, dict) or "inner" not in payload or "sets" not in payload:
        raise ParseError("network instance needs 'inner' and 'sets'")
    inner = tuple(vertex_from_json(v) for v in payload["inner"])
    sets = []
    for idx, raw in enumerate(payload["sets"], start=1):
        arcs = set()
        for arc in raw:
            if not (isinstance(arc, list) and len(arc) == 2):
                raise ParseError(f"set {idx} holds a malformed arc: {arc!r}")
            arcs.add((vertex_from_json(arc[0]), vertex_from_json(arc[1])))
        sets.append(frozenset(arcs))
    arcs = frozenset().union(*sets) if sets else frozenset()
    try:
        net = Network(inner=inner, arcs=arcs, source=SOURCE, target=TARGET)
        return NetworkFamily(net, tuple(sets))
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def network_family_to_json(nf: NetworkFamily) -> dict:
    net = nf.network
    return {
        "inner": [vertex_to_json(v) for v in net.inner],
        "sets": [[[vertex_to_json(u), vertex_to_json(v)]
                  for u, v in net.sorted_arcs(s)] for s in nf.sets],
    }


def load_instance(text: str) -> EdgeFamily | NetworkFamily:
    """Parse either instance flavor, keyed on the fields present."""
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    if isinstance(payload, dict) and "inner" in payload:
        return network_family_from_json(payload)
    return family_from_json(payload)


# -- certificates ------------------------------------------------------------

def matching_certificate(rm: RainbowMatching, trail: list | None = None) -> dict:
    return {
        "schema": SCHEMA,
        "assignment": [{"set": i, "edge": list(e)}
                       for i, e in sorted(rm.assignment.items())],
        "trail": trail or [],
    }


def matching_from_certificate(payload: Any) -> RainbowMatching:
    if not isinstance(payload, dict) or "assignment" not in payload:
        raise CertificateError("matching certificate needs 'assignment'")
    assignment: dict[int, Edge] = {}
    for entry in payload["assignment"]:
        try:
            assignment[int(entry["set"])] = (int(entry["edge"][0]),
                                             int(entry["edge"][1]))
        except (KeyError, TypeError, ValueError, IndexError) as exc:
            raise CertificateError(f"malformed assignment entry: {entry!r}") from exc
    try:
        return RainbowMatching(assignment)
    except ValueError as exc:
        raise CertificateError(str(exc)) from exc


def regimentation_certificate(r: Regimentation) -> dict:
    return {
        "schema": SCHEMA,
        "paths": [[vertex_to_json(v) for v in q.vertices] for q in r.paths],
        "assignment": {str(i): pos for i, pos in sorted(r.assignment.items())},
    }


def regimentation_from_certificate(payload: Any) -> Regimentation:
    if not isinstance(payload, dict) or "paths" not in payload or "assignment" not in payload:
        raise CertificateError("regimentation certificate needs 'paths' and 'assignment'")
    try:
        paths = tuple(StPath(tuple(vertex_from_json(v) for v in raw))
                      for raw in payload["paths"])
        assignment = {int(i): int(pos) for i, pos in payload["assignment"].items()}
    except (ParseError, TypeError, ValueError) as exc:
        raise CertificateError(f"malformed certificate: {exc}") from exc
    return Regimentation(paths, assignment)


# -- DOT export ---------------------------------------------------------------

def _dot_id(net: Network, v) -> str:
    if v == net.source:
        return "s"
    if v == net.target:
        return "t"
    if isinstance(v, tuple):
        return f"e_{v[0]}_{v[1]}"
    return str(v).replace('"', "")


def _dot_label(v) -> str:
    if isinstance(v, tuple):
        return f"a{v[0]}b{v[1]}"
    return str(v)


def network_dot(net: Network, nf: NetworkFamily | None = None,
                regimentation: Regimentation | None = None) -> str:
    """Graphviz rendering; inner vertices are labeled by their matching
    edges, and arcs running backward along a certificate path are dashed."""
    backward = set()
    if regimentation is not None:
        for q in regimentation.paths:
            backward |= backward_arcs(net, q)
    lines = ["digraph network {", "  rankdir=LR;"]
    lines.append('  s [shape=circle, label="s"];')
    for v in net.inner:
        lines.append(f'  {_dot_id(net, v)} [shape=box, label="{_dot_label(v)}"];')
    lines.append('  t [shape=circle, label="t"];')
    for u, v in net.sorted_arcs():
        attrs = ""
        if (u, v) in backward:
            attrs = ' [style=dashed, color=crimson, xlabel="backward"]'
        lines.append(f"  {_dot_id(net, u)} -> {_dot_id(net, v)}{attrs};")
    lines.append("}")
    return "\n".join(lines) + "\n"
