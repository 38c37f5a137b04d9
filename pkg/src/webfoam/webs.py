"""Combinatorial webs and their planar diagrams.

A *web* is an abstract trivalent graph: it may have loops, parallel
edges, and vertexless circle components.  A *diagram* is a planar
presentation of a spatial web: trivalent vertices and 4-valent crossings,
each carrying a counterclockwise cyclic order of incident arcs, with an
over-strand designation at every crossing.  Strands are encoded PD-style:
every arc label occurs exactly twice among the node slots (or not at all,
for a free circle).

All structures are immutable after construction; every operation returns
a new object.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import count
from typing import Iterable, Mapping


class WebError(ValueError):
    """Structurally invalid web or diagram data."""


# ---------------------------------------------------------------------------
# webs


@dataclass(frozen=True)
class Web:
    """Abstract trivalent graph with circle components.

    ``edge_ends`` maps a regular edge id to a pair of (vertex, slot)
    endpoints; slots at each vertex are 0, 1, 2.  A loop uses the same
    vertex twice with different slots.  ``circles`` holds the ids of
    vertexless circle edges.
    """

    vertices: tuple
    edge_ends: Mapping
    circles: frozenset

    def __post_init__(self):
        seen_slots: dict = {}
        for e, ends in self.edge_ends.items():
            if len(ends) != 2:
                raise WebError(f"edge {e!r} must have exactly 2 ends")
            for v, slot in ends:
                if v not in self.vertices:
                    raise WebError(f"edge {e!r} meets unknown vertex {v!r}")
                if slot not in (0, 1, 2):
                    raise WebError(f"edge {e!r} uses slot {slot!r}; vertices are trivalent")
                if (v, slot) in seen_slots:
                    raise WebError(f"vertex {v!r} slot {slot} used twice")
                seen_slots[(v, slot)] = e
        for v in self.vertices:
            used = [s for s in (0, 1, 2) if (v, s) in seen_slots]
            if len(used) != 3:
                raise WebError(f"vertex {v!r} has degree {len(used)}, not 3")
        for c in self.circles:
            if c in self.edge_ends:
                raise WebError(f"edge id {c!r} is both a circle and a regular edge")
        if len(self.vertices) % 2 != 0:
            raise WebError("a trivalent graph has an even number of vertices")

    # -- accessors ---------------------------------------------------------

    @property
    def edges(self) -> list:
        return sorted(self.edge_ends, key=str) + sorted(self.circles, key=str)

    def is_circle(self, e) -> bool:
        return e in self.circles

    def ends(self, e):
        return self.edge_ends[e]

    @property
    def darts(self) -> list:
        return [(e, i) for e in sorted(self.edge_ends, key=str) for i in (0, 1)]

    def dart_vertex(self, dart):
        e, i = dart
        return self.edge_ends[e][i][0]

    def dart_edge(self, dart):
        return dart[0]

    def vertex_edges(self, v) -> list:
        """Edges at ``v`` in slot order 0, 1, 2 (a loop appears twice)."""
        out = {}
        for e, ends in self.edge_ends.items():
            for w, slot in ends:
                if w == v:
                    out[slot] = e
        return [out[s] for s in (0, 1, 2)]

    def is_loop(self, e) -> bool:
        if e in self.circles:
            return False
        (u, _), (v, _) = self.edge_ends[e]
        return u == v

    def has_loop(self) -> bool:
        return any(self.is_loop(e) for e in self.edge_ends)


def make_web(vertices: Iterable, edges: Iterable, circles: Iterable = ()) -> Web:
    """Build a web from (edge_id, (v, slot), (v, slot)) triples."""
    ends = {e: (tuple(a), tuple(b)) for e, a, b in edges}
    return Web(tuple(vertices), ends, frozenset(circles))


def web_from_incidences(vertex_edges: Mapping, circles: Iterable = ()) -> Web:
    """Build a web from a map vertex -> list of 3 incident edge ids.

    Slot order follows the given lists.  Loops must appear twice in
    their vertex's list.
    """
    endpoints: dict = {}
    for v, incident in vertex_edges.items():
        if len(incident) != 3:
            raise WebError(f"vertex {v!r} lists {len(incident)} edges, not 3")
        for slot, e in enumerate(incident):
            endpoints.setdefault(e, []).append((v, slot))
    edges = []
    for e, pts in endpoints.items():
        if len(pts) != 2:
            raise WebError(f"edge {e!r} has {len(pts)} endpoints, expected 2")
        edges.append((e, pts[0], pts[1]))
    return make_web(tuple(vertex_edges), edges, circles)


def parse_web(text: str) -> Web:
    """Parse the JSON web format.

    ``{"vertices": [ids], "edges": [{"id": e, "ends": [[v, slot], [v, slot]]}
    | {"id": e, "circle": true}]}``
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise WebError(f"web document is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict) or "edges" not in doc:
        raise WebError("web document must be an object with an 'edges' list")
    vertices = tuple(doc.get("vertices", []))
    edges = []
    circles = []
    for rec in doc["edges"]:
        if "id" not in rec:
            raise WebError("every edge record needs an 'id'")
        if rec.get("circle"):
            circles.append(rec["id"])
        else:
            ends = rec.get("ends")
            if not ends or len(ends) != 2:
                raise WebError(f"edge {rec['id']!r}: need 'ends' with 2 entries or 'circle': true")
            edges.append((rec["id"], tuple(ends[0]), tuple(ends[1])))
    return make_web(vertices, edges, circles)


def serialize_web(w: Web) -> str:
    recs = []
    for e in sorted(w.edge_ends, key=str):
        a, b = w.edge_ends[e]
        recs.append({"id": e, "ends": [list(a), list(b)]})
    for c in sorted(w.circles, key=str):
        recs.append({"id": c, "circle": True})
    return json.dumps({"vertices": list(w.vertices), "edges": recs}, default=str)


def web_component_count(w: Web) -> int:
    """Connected components; vertexless circles count singly."""
    parent: dict = {}

    def find(x):
        while parent.setdefault(x, x) != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    for v in w.vertices:
        parent.setdefault(("v", v), ("v", v))
    for e, ((u, _), (v, _)) in w.edge_ends.items():
        union(("v", u), ("v", v))
    roots = {find(("v", v)) for v in w.vertices}
    return len(roots) + len(w.circles)


def disjoint_union_webs(a: Web, b: Web, tags=("A", "B")) -> Web:
    """Disjoint union, relabelling everything with the given tags."""

    def tag(t, x):
        return f"{t}:{x}"

    verts = [tag(tags[0], v) for v in a.vertices] + [tag(tags[1], v) for v in b.vertices]
    edges = []
    for t, w in ((tags[0], a), (tags[1], b)):
        for e, ((u, i), (v, j)) in w.edge_ends.items():
            edges.append((tag(t, e), (tag(t, u), i), (tag(t, v), j)))
    circles = [tag(tags[0], c) for c in a.circles] + [tag(tags[1], c) for c in b.circles]
    return make_web(verts, edges, circles)


# ---------------------------------------------------------------------------
# diagrams


@dataclass(frozen=True)
class Vertex:
    id: object
    arcs: tuple  # 3 arc ids, counterclockwise


@dataclass(frozen=True)
class Crossing:
    id: object
    arcs: tuple  # 4 arc ids, counterclockwise
    over: tuple = (0, 2)  # positions of the over-strand pair


@dataclass(frozen=True)
class Diagram:
    """Planar diagram: trivalent vertices, crossings, free circles."""

    vertices: tuple = ()
    crossings: tuple = ()
    circles: tuple = ()
    faces: tuple = field(init=False, default=())

    def __post_init__(self):
        ids = [n.id for n in self.vertices] + [c.id for c in self.crossings]
        if len(ids) != len(set(ids)):
            raise WebError("node ids must be distinct")
        occurrences: dict = {}
        for n in self.vertices:
            if len(n.arcs) != 3:
                raise WebError(f"vertex {n.id!r} must list 3 arcs")
            for pos, a in enumerate(n.arcs):
                occurrences.setdefault(a, []).append((n.id, pos))
        for c in self.crossings:
            if len(c.arcs) != 4:
                raise WebError(f"crossing {c.id!r} must list 4 arcs")
            if tuple(c.over) not in ((0, 2), (1, 3)):
                raise WebError(
                    f"crossing {c.id!r}: over-pair {c.over!r} must be opposite positions [0,2] or [1,3]"
                )
            for pos, a in enumerate(c.arcs):
                occurrences.setdefault(a, []).append((c.id, pos))
        for a, occ in occurrences.items():
            if len(occ) != 2:
                raise WebError(f"arc {a!r} has {len(occ)} endpoints, expected 2 (unmatched darts)")
        for a in self.circles:
            if a in occurrences:
                raise WebError(f"arc {a!r} is both a circle and attached to a node")
        object.__setattr__(self, "faces", _trace_faces(self))
        _check_euler(self)

    # -- structure ---------------------------------------------------------

    def node(self, node_id):
        for n in self.vertices:
            if n.id == node_id:
                return n
        for c in self.crossings:
            if c.id == node_id:
                return c
        raise KeyError(node_id)

    def crossing(self, cid) -> Crossing:
        for c in self.crossings:
            if c.id == cid:
                return c
        raise WebError(f"unknown crossing id {cid!r}")

    @property
    def arcs(self) -> list:
        out = set(self.circles)
        for n in self.vertices:
            out.update(n.arcs)
        for c in self.crossings:
            out.update(c.arcs)
        return sorted(out, key=str)

    def endpoints(self) -> dict:
        """arc id -> list of (node id, position) occurrences."""
        occ: dict = {}
        for n in self.vertices:
            for pos, a in enumerate(n.arcs):
                occ.setdefault(a, []).append((n.id, pos))
        for c in self.crossings:
            for pos, a in enumerate(c.arcs):
                occ.setdefault(a, []).append((c.id, pos))
        return occ


def _node_degree(d: Diagram, node_id) -> int:
    return len(d.node(node_id).arcs)


def _dart_partner_map(d: Diagram) -> dict:
    """Involution on darts (node, pos) pairing the two ends of each arc.

    A kink-style arc with both ends on one node pairs its two positions.
    """
    partner: dict = {}
    for occ in d.endpoints().values():
        (n1, p1), (n2, p2) = occ
        partner[(n1, p1)] = (n2, p2)
        partner[(n2, p2)] = (n1, p1)
    return partner


def _trace_faces(d: Diagram) -> tuple:
    """Faces of the combinatorial map as tuples of darts (node, pos)."""
    partner = _dart_partner_map(d)
    unseen = set(partner)
    faces = []
    while unseen:
        start = min(unseen, key=lambda t: (str(t[0]), t[1]))
        face = []
        dart = start
        while True:
            face.append(dart)
            unseen.discard(dart)
            n, p = partner[dart]
            deg = _node_degree(d, n)
            dart = (n, (p + 1) % deg)
            if dart == start:
                break
        faces.append(tuple(face))
    return tuple(faces)


def _check_euler(d: Diagram) -> None:
    """Euler formula V - E + F = 2, per connected component."""
    parents: dict = {}

    def find(x):
        while parents.get(x, x) != x:
            parents[x] = parents.get(parents[x], parents[x])
            x = parents[x]
        return x

    def union(x, y):
        parents.setdefault(x, x)
        parents.setdefault(y, y)
        rx, ry = find(x), find(y)
        if rx != ry:
            parents[rx] = ry

    node_ids = [n.id for n in d.vertices] + [c.id for c in d.crossings]
    for nid in node_ids:
        parents.setdefault(nid, nid)
    for occ in d.endpoints().values():
        (n1, _), (n2, _) = occ
        union(n1, n2)

    comp_v: dict = {}
    comp_e: dict = {}
    comp_f: dict = {}
    for nid in node_ids:
        comp_v[find(nid)] = comp_v.get(find(nid), 0) + 1
    for a, occ in d.endpoints().items():
        root = find(occ[0][0])
        comp_e[root] = comp_e.get(root, 0) + 1
    for face in d.faces:
        root = find(face[0][0])
        comp_f[root] = comp_f.get(root, 0) + 1
    for root in comp_v:
        v = comp_v[root]
        e = comp_e.get(root, 0)
        f = comp_f.get(root, 0)
        if v - e + f != 2:
            raise WebError(
                f"non-planar face structure: component of {root!r} has V-E+F = {v}-{e}+{f} = {v - e + f}"
            )


def parse_diagram(text: str) -> Diagram:
    """Parse the JSON diagram format.

    ``{"vertices": [{"id": v, "darts": [3 arcs ccw]}],
       "crossings": [{"id": c, "darts": [4 arcs ccw], "over": [0,2]}],
       "circles": [arc ids]}``

    Arc labels pair the darts: each label occurs exactly twice.  An
    explicit ``"strands": [[d1, d2], ...]`` list may be given instead, in
    which case dart labels are treated as unique endpoint names.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise WebError(f"diagram document is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise WebError("diagram document must be a JSON object")

    rename = {}
    if "strands" in doc:
        for pair in doc["strands"]:
            if len(pair) != 2:
                raise WebError("each strand must pair exactly 2 darts")
            a, b = pair
            label = str(min(a, b, key=str))
            rename[a] = label
            rename[b] = label

    def lab(x):
        return rename.get(x, x)

    vertices = []
    for rec in doc.get("vertices", []):
        arcs = rec.get("darts") or rec.get("arcs")
        if arcs is None:
            raise WebError(f"vertex {rec.get('id')!r} needs a 'darts' list")
        vertices.append(Vertex(rec["id"], tuple(lab(a) for a in arcs)))
    crossings = []
    for rec in doc.get("crossings", []):
        arcs = rec.get("darts") or rec.get("arcs")
        if arcs is None:
            raise WebError(f"crossing {rec.get('id')!r} needs a 'darts' list")
        crossings.append(
            Crossing(rec["id"], tuple(lab(a) for a in arcs), tuple(rec.get("over", (0, 2))))
        )
    return Diagram(tuple(vertices), tuple(crossings), tuple(doc.get("circles", ())))


def serialize_diagram(d: Diagram) -> str:
    doc = {
        "vertices": [{"id": n.id, "darts": list(n.arcs)} for n in d.vertices],
        "crossings": [
            {"id": c.id, "darts": list(c.arcs), "over": list(c.over)} for c in d.crossings
        ],
        "circles": list(d.circles),
    }
    return json.dumps(doc, default=str)


# ---------------------------------------------------------------------------
# erasing crossings


def _merge_label(ids) -> str:
    return str(min(ids, key=str))


def _erase_nodes(d: Diagram, welds: Mapping) -> tuple[list, list, list]:
    """Remove nodes, welding their darts through in the prescribed way.

    ``welds`` maps a node id to a list of position pairs to be joined,
    covering all of the node's positions.  Returns (surviving vertex
    records, merged arc list, new circle ids): each merged arc is
    (label, (node, pos), (node, pos)) between surviving nodes, and each
    element of the circle list is a label of a closed strand created by
    the welding.  Existing free circles are not included.
    """
    partner = _dart_partner_map(d)
    weld_next: dict = {}
    for nid, pairs in welds.items():
        for p, q in pairs:
            weld_next[(nid, p)] = (nid, q)
            weld_next[(nid, q)] = (nid, p)

    erased = set(welds)
    survivors = [n for n in d.vertices if n.id not in erased]
    surviving_darts = {
        (n.id, pos) for n in survivors for pos in range(3)
    } | {
        (c.id, pos) for c in d.crossings if c.id not in erased for pos in range(4)
    }

    arc_of_dart = {}
    for a, occ in d.endpoints().items():
        for dart in occ:
            arc_of_dart[dart] = a

    merged_arcs = []
    circles = []
    done = set()
    consumed = set()  # erased-node darts swallowed by open chains
    # open chains: walk from each surviving dart
    for start in sorted(surviving_darts, key=lambda t: (str(t[0]), t[1])):
        if start in done:
            continue
        labels = [arc_of_dart[start]]
        dart = partner[start]
        while dart not in surviving_darts:
            consumed.add(dart)
            dart = weld_next[dart]
            consumed.add(dart)
            labels.append(arc_of_dart[dart])
            dart = partner[dart]
        done.add(start)
        done.add(dart)
        merged_arcs.append((_merge_label(labels), start, dart))
    # closed chains entirely inside the erased nodes
    visited = set(consumed)
    for dart in sorted(weld_next, key=lambda t: (str(t[0]), t[1])):
        if dart in visited:
            continue
        labels = []
        cur = dart
        while cur not in visited:
            visited.add(cur)
            visited.add(weld_next[cur])
            labels.append(arc_of_dart[cur])
            cur = partner[weld_next[cur]]
        circles.append(_merge_label(labels))
    return survivors, merged_arcs, circles


def underlying_web(d: Diagram) -> Web:
    """Erase all crossings, concatenating the strands passing through."""
    welds = {c.id: [(0, 2), (1, 3)] for c in d.crossings}
    survivors, merged_arcs, circles = _erase_nodes(d, welds)
    vertex_ids = [n.id for n in survivors]
    edges = []
    for label, (n1, p1), (n2, p2) in merged_arcs:
        edges.append((label, (n1, p1), (n2, p2)))
    all_circles = list(d.circles) + circles
    # guard against a merged edge label colliding with a circle label
    labels = [e[0] for e in edges] + all_circles
    if len(labels) != len(set(labels)):
        edges = [(f"e{idx}:{lbl}", a, b) for idx, (lbl, a, b) in enumerate(edges)]
    return make_web(vertex_ids, edges, all_circles)


# ---------------------------------------------------------------------------
# resolutions

SMOOTH_A = "smooth_a"
SMOOTH_B = "smooth_b"
EDGE_A = "edge_a"
EDGE_B = "edge_b"

RESOLUTIONS = (SMOOTH_A, SMOOTH_B, EDGE_A, EDGE_B)

_fresh = count()


def resolve_crossing(d: Diagram, cid, kind: str) -> Diagram:
    """Replace crossing ``cid`` by a smoothing or an inserted-edge web.

    ``smooth_a`` joins the counterclockwise position pairs (0,1), (2,3);
    ``smooth_b`` joins (1,2), (3,0).  ``edge_a``/``edge_b`` insert a new
    edge between two new trivalent vertices grouped like the matching
    smoothing; the new vertices inherit counterclockwise order from the
    plane.
    """
    c = d.crossing(cid)
    if kind in (SMOOTH_A, SMOOTH_B):
        pairs = [(0, 1), (2, 3)] if kind == SMOOTH_A else [(1, 2), (3, 0)]
        survivors, merged_arcs, new_circles = _erase_nodes(d, {cid: pairs})
        return _rebuild(d, cid, survivors, merged_arcs, new_circles, extra_vertices=())
    if kind not in (EDGE_A, EDGE_B):
        raise WebError(f"unknown resolution kind {kind!r}")

    n = next(_fresh)
    w1, w2, bar = f"{cid}.w{n}a", f"{cid}.w{n}b", f"{cid}.bar{n}"
    groups = [(0, 1), (2, 3)] if kind == EDGE_A else [(1, 2), (3, 0)]
    partner = _dart_partner_map(d)

    # each crossing dart re-attaches to one of the new vertices
    reattach = {}
    for vid, (p, q) in zip((w1, w2), groups):
        reattach[(cid, p)] = (vid, 0)
        reattach[(cid, q)] = (vid, 1)

    def moved(dart):
        return reattach.get(dart, dart)

    new_vertices = list(d.vertices) + [
        Vertex(w1, (f"{bar}.s0", f"{bar}.s1", bar)),
        Vertex(w2, (f"{bar}.s2", f"{bar}.s3", bar)),
    ]
    # rebuild arc occurrence table with the crossing's darts re-homed
    occ = d.endpoints()
    arc_slots: dict = {}
    for a, pair in occ.items():
        if a in c.arcs:
            continue
        arc_slots[a] = [moved(x) for x in pair]
    for p in range(4):
        a = c.arcs[p]
        if a in arc_slots:
            continue
        pair = occ[a]
        arc_slots[a] = [moved(x) for x in pair]

    # place arcs into the new vertices in ccw order:
    #   w1 gets (arc at p, arc at q, bar); w2 likewise; bar joins slot 2 of both
    slot_arc: dict = {}
    for a, pair in arc_slots.items():
        for node, pos in pair:
            slot_arc[(node, pos)] = a
    slot_arc[(w1, 2)] = bar
    slot_arc[(w2, 2)] = bar

    vertex_records = []
    for v in new_vertices:
        if v.id in (w1, w2):
            vertex_records.append(Vertex(v.id, tuple(slot_arc[(v.id, k)] for k in range(3))))
        else:
            vertex_records.append(v)
    crossings = tuple(x for x in d.crossings if x.id != cid)
    return Diagram(tuple(vertex_records), crossings, d.circles)


def _rebuild(d, cid, survivors, merged_arcs, new_circles, extra_vertices):
    slot_arc: dict = {}
    for label, (n1, p1), (n2, p2) in merged_arcs:
        slot_arc[(n1, p1)] = label
        slot_arc[(n2, p2)] = label
    vertex_records = [
        Vertex(v.id, tuple(slot_arc[(v.id, k)] for k in range(3))) for v in survivors
    ]
    crossing_records = []
    for c in d.crossings:
        if c.id == cid:
            continue
        crossing_records.append(
            Crossing(c.id, tuple(slot_arc[(c.id, k)] for k in range(4)), c.over)
        )
    circles = list(d.circles) + list(new_circles)
    # keep circle labels distinct
    seen = set()
    final_circles = []
    for x in circles:
        while x in seen:
            x = f"{x}'"
        seen.add(x)
        final_circles.append(x)
    return Diagram(tuple(vertex_records) + tuple(extra_vertices), tuple(crossing_records), tuple(final_circles))


def flip_crossing(d: Diagram, cid) -> Diagram:
    """Exchange the over- and under-strands of one crossing."""
    c = d.crossing(cid)
    new_over = (1, 3) if tuple(c.over) == (0, 2) else (0, 2)
    crossings = tuple(
        Crossing(x.id, x.arcs, new_over) if x.id == cid else x for x in d.crossings
    )
    return Diagram(d.vertices, crossings, d.circles)


def disjoint_union_diagrams(a: Diagram, b: Diagram, tags=("A", "B")) -> Diagram:
    """Disjoint union of diagrams, relabelling arcs and nodes."""

    def tag(t, x):
        return f"{t}:{x}"

    verts = []
    crossings = []
    circles = []
    for t, d in ((tags[0], a), (tags[1], b)):
        for n in d.vertices:
            verts.append(Vertex(tag(t, n.id), tuple(tag(t, x) for x in n.arcs)))
        for c in d.crossings:
            crossings.append(Crossing(tag(t, c.id), tuple(tag(t, x) for x in c.arcs), c.over))
        circles.extend(tag(t, x) for x in d.circles)
    return Diagram(tuple(verts), tuple(crossings), tuple(circles))


def diagram_vertex_orders(d: Diagram) -> dict:
    """Vertex id -> ccw tuple of web edge labels, matching underlying_web."""
    web = underlying_web(d)
    by_slot = {}
    for e, ends in web.edge_ends.items():
        for v, s in ends:
            by_slot[(v, s)] = e
    return {n.id: tuple(by_slot[(n.id, k)] for k in range(3)) for n in d.vertices}
