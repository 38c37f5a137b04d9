"""Euler-characteristic evaluation of spatial web diagrams.

The graded Euler characteristic of the homology of a semi-framed web is
computed by resolving crossings: a crossing equals a smoothing minus the
inserted-edge web grouped like the *other* smoothing, and a crossing-free
planar diagram evaluates to its Tait coloring count.  The pairing of
smoothings with inserted-edge webs is fixed by calibration on the kinked
unknot, the Hopf link and the trefoil; see ``CALIBRATED_PAIRING``.

The expansion runs on a compact splice structure rather than full
validated diagrams; it agrees with the public ``resolve_crossing`` path
(asserted in the tests) and with the signed Tait count oracle.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .tait import tait_count
from .webs import (
    Diagram,
    EDGE_A,
    EDGE_B,
    SMOOTH_A,
    SMOOTH_B,
    Web,
    WebError,
    make_web,
    underlying_web,
)

# Relation used by euler_char: crossing = SMOOTH minus EDGE, where the
# inserted-edge web groups the darts like the opposite smoothing.  The
# aligned pairing fails the calibration targets (see the tests).
CALIBRATED_PAIRING = {SMOOTH_A: EDGE_B, SMOOTH_B: EDGE_A}
ALIGNED_PAIRING = {SMOOTH_A: EDGE_A, SMOOTH_B: EDGE_B}

_PAIRS = {SMOOTH_A: ((0, 1), (2, 3)), SMOOTH_B: ((1, 2), (3, 0))}


@dataclass
class SkeinState:
    """Worklist of signed states; the signed sum of values is invariant."""

    pending: list = field(default_factory=list)
    accumulator: int = 0
    leaves: int = 0

    def settle(self, value: int, sign: int) -> None:
        self.accumulator += sign * value
        self.leaves += 1


class _Splice:
    """Strand involution on node slots, plus free-circle count.

    Slots are (node id, position); ``verts`` holds trivalent node ids,
    ``crossings`` the 4-valent ones.
    """

    __slots__ = ("links", "verts", "crossings", "circles", "fresh")

    def __init__(self, links, verts, crossings, circles, fresh):
        self.links = links
        self.verts = verts
        self.crossings = crossings
        self.circles = circles
        self.fresh = fresh

    @staticmethod
    def from_diagram(d: Diagram) -> "_Splice":
        links: dict = {}
        for occ in d.endpoints().values():
            (n1, p1), (n2, p2) = occ
            links[(n1, p1)] = (n2, p2)
            links[(n2, p2)] = (n1, p1)
        return _Splice(
            links,
            frozenset(n.id for n in d.vertices),
            frozenset(c.id for c in d.crossings),
            len(d.circles),
            0,
        )

    def copy(self) -> "_Splice":
        return _Splice(dict(self.links), self.verts, self.crossings, self.circles, self.fresh)

    def smooth(self, cid, kind: str) -> "_Splice":
        out = self.copy()
        for p, q in _PAIRS[kind]:
            a = out.links.pop((cid, p))
            if a == (cid, q):
                out.links.pop((cid, q), None)
                out.circles += 1
            else:
                b = out.links.pop((cid, q))
                out.links[a] = b
                out.links[b] = a
        out.crossings = self.crossings - {cid}
        return out

    def insert_edge(self, cid, kind: str) -> "_Splice":
        out = self.copy()
        w1 = ("w", cid, out.fresh)
        w2 = ("w", cid, out.fresh + 1)
        out.fresh += 2
        groups = _PAIRS[SMOOTH_A if kind == EDGE_A else SMOOTH_B]
        rehome = {}
        for vid, (p, q) in zip((w1, w2), groups):
            rehome[(cid, p)] = (vid, 0)
            rehome[(cid, q)] = (vid, 1)
        for s, new_s in rehome.items():
            partner = out.links.pop(s)
            if partner in rehome:
                out.links[new_s] = rehome[partner]
            else:
                out.links[new_s] = partner
                out.links[partner] = new_s
        out.links[(w1, 2)] = (w2, 2)
        out.links[(w2, 2)] = (w1, 2)
        out.verts = self.verts | {w1, w2}
        out.crossings = self.crossings - {cid}
        return out

    def leaf_tait(self) -> int:
        """Tait count of the crossing-free state."""
        ends = []
        seen = set()
        for ep in self.links:
            if ep in seen:
                continue
            q = self.links[ep]
            seen.add(ep)
            seen.add(q)
            if ep[0] == q[0]:
                return 0  # loop edge
            ends.append((ep[0], q[0]))
        # connectivity-aware ordering for effective pruning
        order = []
        remaining = list(range(len(ends)))
        covered: set = set()
        while remaining:
            pick = None
            for idx in remaining:
                u, v = ends[idx]
                if u in covered or v in covered:
                    pick = idx
                    break
            if pick is None:
                pick = remaining[0]
            remaining.remove(pick)
            order.append(ends[pick])
            covered.update(ends[pick])
        used = {v: 0 for v in self.verts}
        n = len(order)

        def backtrack(i: int) -> int:
            if i == n:
                return 1
            u, v = order[i]
            free = ~(used[u] | used[v])
            total = 0
            for bit in (1, 2, 4):
                if free & bit:
                    used[u] |= bit
                    used[v] |= bit
                    total += backtrack(i + 1)
                    used[u] ^= bit
                    used[v] ^= bit
            return total

        return backtrack(0) * 3 ** self.circles


def _expand(d: Diagram, smooth_kind: str, pairing=CALIBRATED_PAIRING) -> SkeinState:
    state = SkeinState()
    edge_kind = pairing[smooth_kind]
    state.pending.append((_Splice.from_diagram(d), +1))
    while state.pending:
        sp, sign = state.pending.pop()
        if sp.crossings:
            cid = min(sp.crossings, key=str)
            state.pending.append((sp.smooth(cid, smooth_kind), sign))
            state.pending.append((sp.insert_edge(cid, edge_kind), -sign))
        else:
            state.settle(sp.leaf_tait(), sign)
    return state


def euler_char(d: Diagram, pairing=CALIBRATED_PAIRING) -> int:
    """Euler characteristic of the homology of the diagrammed web."""
    return _expand(d, SMOOTH_A, pairing).accumulator


def euler_char_dual(d: Diagram, pairing=CALIBRATED_PAIRING) -> int:
    """Same value computed with the quarter-turn-rotated relation."""
    return _expand(d, SMOOTH_B, pairing).accumulator


def euler_char_report(d: Diagram) -> dict:
    state = _expand(d, SMOOTH_A)
    return {"chi": state.accumulator, "expansion_leaves": state.leaves}


# ---------------------------------------------------------------------------
# the Tutte relation at a marked planar site


def _cut_edge(w: Web, e):
    """Remove edge ``e``; return the two loose endpoint descriptors.

    For a regular edge these are its (vertex, slot) ends; for a circle,
    two fresh symbolic ends of the cut strand.
    """
    if w.is_circle(e):
        return ("cut", e, 0), ("cut", e, 1)
    return w.edge_ends[e]


def _site_web(w: Web, e, f, joins, bar=None):
    """Rebuild ``w`` with edges e, f replaced per the join instructions.

    ``joins`` pairs the four loose ends.  With ``bar`` set, two new
    trivalent vertices are created instead, each absorbing one pair,
    joined by a fresh edge.
    """
    verts = list(w.vertices)
    edges = [(x, a, b) for x, (a, b) in w.edge_ends.items() if x not in (e, f)]
    circles = [c for c in w.circles if c not in (e, f)]
    counter = 0

    def fresh_edge():
        nonlocal counter
        counter += 1
        return f"site.{counter}"

    if bar is None:
        cut_links = {}
        for a, b in joins:
            cut_links[a] = b
            cut_links[b] = a
        real_ends = [p for pair in joins for p in pair if p[0] != "cut"]
        seen = set()
        for start in real_ends:
            if start in seen:
                continue
            cur = cut_links[start]
            while cur[0] == "cut":
                _, circ, side = cur
                cur = cut_links[("cut", circ, 1 - side)]
            seen.add(start)
            seen.add(cur)
            if start == cur:
                raise WebError("degenerate site")
            edges.append((fresh_edge(), start, cur))
        visited = set(seen)
        for a, b in joins:
            for p in (a, b):
                if p[0] == "cut" and p not in visited:
                    cur = p
                    while cur not in visited:
                        visited.add(cur)
                        visited.add(cut_links[cur])
                        _, circ, side = cut_links[cur]
                        cur = ("cut", circ, 1 - side)
                    circles.append(fresh_edge())
    else:
        w1, w2 = f"{bar}.v1", f"{bar}.v2"
        verts += [w1, w2]
        pend = []
        for vid, (a, b) in zip((w1, w2), joins):
            for slot, p in enumerate((a, b)):
                if p[0] == "cut":
                    pend.append((p[1], p[2], (vid, slot)))
                else:
                    edges.append((fresh_edge(), (vid, slot), p))
        edges.append((bar, (w1, 2), (w2, 2)))
        halves: dict = {}
        for circ, side, slot_end in pend:
            halves.setdefault(circ, {})[side] = slot_end
        for circ, sides in halves.items():
            if len(sides) != 2:
                raise WebError("invalid site on a circle edge")
            edges.append((f"{circ}.arc", sides[0], sides[1]))
    used = set()
    final = []
    for name, a, b in edges:
        while name in used:
            name = f"{name}'"
        used.add(name)
        final.append((name, a, b))
    return make_web(verts, final, circles)


def site_modifications(w: Web, e, f) -> dict:
    """The four local modifications at a two-strand site.

    Returns the webs for the two reconnections and the two inserted-edge
    webs, keyed 'recon_a', 'recon_b', 'bar_a', 'bar_b'; bar_x groups the
    strand ends exactly like recon_x.
    """
    if e == f:
        raise WebError("site needs two distinct edges")
    e0, e1 = _cut_edge(w, e)
    f0, f1 = _cut_edge(w, f)
    ja = [(e0, f0), (e1, f1)]
    jb = [(e0, f1), (e1, f0)]
    return {
        "recon_a": _site_web(w, e, f, ja),
        "recon_b": _site_web(w, e, f, jb),
        "bar_a": _site_web(w, e, f, ja, bar="barA"),
        "bar_b": _site_web(w, e, f, jb, bar="barB"),
    }


def tutte_check(d: Diagram, site) -> bool:
    """Verify Tait(H) - Tait(I) + Tait(Res1) - Tait(Res0) = 0 at a site.

    ``d`` must have no crossings; ``site`` names two distinct edges of its
    underlying web.
    """
    if d.crossings:
        raise WebError("the Tutte relation site lives on a crossing-free diagram")
    w = underlying_web(d)
    e, f = site
    if e not in w.edges or f not in w.edges:
        raise WebError(f"invalid site {site!r}: not edges of the web")
    mods = site_modifications(w, e, f)
    lhs = tait_count(mods["bar_a"]) + tait_count(mods["recon_a"])
    rhs = tait_count(mods["bar_b"]) + tait_count(mods["recon_b"])
    return lhs == rhs