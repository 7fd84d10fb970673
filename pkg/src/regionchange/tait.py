"""Checkerboard coloring, Tait graphs, planar duals, and the medial map.

Plane multigraphs carry an explicit rotation system: a counterclockwise
cyclic order of darts at each vertex.  A dart is a pair ``(edge, end)``
where end 0 sits at the first endpoint of the edge and end 1 at the
second; a self-loop contributes both ends to the same vertex.

The crossing-sign convention used throughout: a crossing is +1 when the
corner counterclockwise-adjacent to an under-strand dart is black.  Any
consistent convention works for the results implemented here; this one is
round-trip-tested against the medial construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .diagram import Diagram
from .errors import (
    DisconnectedError,
    InternalInconsistencyError,
    MalformedError,
)

Dart = Tuple[int, int]

WHITE = 0
BLACK = 1


@dataclass(frozen=True)
class SignedPlaneGraph:
    """Connected plane multigraph with per-edge signs and a rotation system."""

    n_vertices: int
    edges: Tuple[Tuple[int, int], ...]
    signs: Tuple[int, ...]
    rot: Tuple[Tuple[Dart, ...], ...]

    def __post_init__(self):
        if len(self.rot) != self.n_vertices:
            raise MalformedError("rotation system does not cover all vertices")
        if len(self.signs) != len(self.edges):
            raise MalformedError("one sign per edge required")
        if any(s not in (-1, 1) for s in self.signs):
            raise MalformedError("signs must be +1 or -1")
        seen = set()
        for v, circle in enumerate(self.rot):
            for e, k in circle:
                if not (0 <= e < len(self.edges)) or k not in (0, 1):
                    raise MalformedError(f"bad dart ({e}, {k}) at vertex {v}")
                if (e, k) in seen:
                    raise MalformedError(f"dart ({e}, {k}) appears twice")
                if self.edges[e][k] != v:
                    raise MalformedError(
                        f"dart ({e}, {k}) listed at vertex {v}, "
                        f"but edge endpoint is {self.edges[e][k]}"
                    )
                seen.add((e, k))
        if len(seen) != 2 * len(self.edges):
            raise MalformedError("every edge needs both darts in the rotation")
        for u, v in self.edges:
            if not (0 <= u < self.n_vertices and 0 <= v < self.n_vertices):
                raise MalformedError("edge endpoint out of range")
        self._check_connected()
        # Genus check: embeddings are taken as given, but only plane ones.
        f = len(self.faces())
        if self.n_vertices - len(self.edges) + f != 2:
            raise MalformedError(
                f"rotation system is not planar: V-E+F = "
                f"{self.n_vertices - len(self.edges) + f}"
            )

    def _check_connected(self):
        if self.n_vertices == 0:
            raise MalformedError("empty graph")
        adj: List[List[int]] = [[] for _ in range(self.n_vertices)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        seen = {0}
        stack = [0]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) != self.n_vertices:
            raise DisconnectedError("plane graph is not connected")

    # -- map structure -----------------------------------------------------

    def n_edges(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.rot[v])

    def dart_position(self) -> Dict[Dart, Tuple[int, int]]:
        return {
            d: (v, i)
            for v, circle in enumerate(self.rot)
            for i, d in enumerate(circle)
        }

    def sigma(self, d: Dart, pos: Optional[Dict] = None) -> Dart:
        pos = pos or self.dart_position()
        v, i = pos[d]
        circle = self.rot[v]
        return circle[(i + 1) % len(circle)]

    @staticmethod
    def alpha(d: Dart) -> Dart:
        return (d[0], 1 - d[1])

    def faces(self) -> Tuple[Tuple[Dart, ...], ...]:
        """Orbits of dart -> sigma(alpha(dart))."""
        pos = self.dart_position()
        out: List[Tuple[Dart, ...]] = []
        left = set(pos)
        while left:
            start = min(left)
            orbit = []
            d = start
            while d in left:
                left.remove(d)
                orbit.append(d)
                d = self.sigma(self.alpha(d), pos)
            out.append(tuple(orbit))
        return tuple(out)

    # -- file format -------------------------------------------------------

    @classmethod
    def parse(cls, text: str) -> "SignedPlaneGraph":
        """Parse the plane-graph file format.

        `V n` declares n vertices; `E id u v sign` declares edge `id`
        (1-based, consecutive); `R v e1 e2 ... ek` gives the
        counterclockwise edge order around vertex v, self-loops listed
        twice.  `#` comments and blank lines are ignored.
        """
        n_vertices = None
        edge_decl: Dict[int, Tuple[int, int, int]] = {}
        rot_decl: Dict[int, List[int]] = {}
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            kind = parts[0].upper()
            try:
                if kind == "V" and len(parts) == 2:
                    n_vertices = int(parts[1])
                elif kind == "E" and len(parts) == 5:
                    eid = int(parts[1])
                    sign_txt = parts[4].rstrip()
                    sign = {"+": 1, "+1": 1, "1": 1, "-": -1, "-1": -1}.get(sign_txt)
                    if sign is None:
                        raise MalformedError(
                            f"line {lineno}: sign must be +1 or -1"
                        )
                    if eid in edge_decl:
                        raise MalformedError(f"line {lineno}: duplicate edge {eid}")
                    edge_decl[eid] = (int(parts[2]) - 1, int(parts[3]) - 1, sign)
                elif kind == "R" and len(parts) >= 2:
                    v = int(parts[1]) - 1
                    if v in rot_decl:
                        raise MalformedError(f"line {lineno}: duplicate R line for {v + 1}")
                    rot_decl[v] = [int(p) for p in parts[2:]]
                else:
                    raise MalformedError(f"line {lineno}: cannot parse {raw!r}")
            except ValueError:
                raise MalformedError(f"line {lineno}: bad integer in {raw!r}")
        if n_vertices is None:
            raise MalformedError("missing V header")
        if sorted(edge_decl) != list(range(1, len(edge_decl) + 1)):
            raise MalformedError("edge ids must be 1..m")
        edges = tuple(
            (edge_decl[i][0], edge_decl[i][1]) for i in range(1, len(edge_decl) + 1)
        )
        signs = tuple(edge_decl[i][2] for i in range(1, len(edge_decl) + 1))
        used: Dict[int, int] = {}
        rot: List[Tuple[Dart, ...]] = []
        for v in range(n_vertices):
            circle = []
            for eid in rot_decl.get(v, []):
                e = eid - 1
                if not (0 <= e < len(edges)):
                    raise MalformedError(f"unknown edge {eid} at vertex {v + 1}")
                u, w = edges[e]
                if u == w:
                    k = used.get(e, 0)
                else:
                    k = 0 if u == v else 1
                used[e] = used.get(e, 0) + 1
                circle.append((e, k))
            rot.append(tuple(circle))
        return cls(n_vertices, edges, signs, tuple(rot))

    def serialize(self) -> str:
        lines = [f"V {self.n_vertices}"]
        for v, circle in enumerate(self.rot):
            lines.append(
                f"R {v + 1} " + " ".join(str(e + 1) for e, _ in circle)
            )
        for e, (u, v) in enumerate(self.edges):
            lines.append(f"E {e + 1} {u + 1} {v + 1} {self.signs[e]:+d}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class Checkerboard:
    """Face colors of a diagram; the unbounded face is white."""

    colors: Tuple[int, ...]

    @property
    def n_black(self) -> int:
        return sum(self.colors)

    @property
    def n_white(self) -> int:
        return len(self.colors) - self.n_black


def checkerboard(d: Diagram) -> Checkerboard:
    """Proper 2-coloring of the face-adjacency graph, outer face white."""
    colors = [-1] * len(d.faces)
    colors[d.outer_face] = WHITE
    stack = [d.outer_face]
    while stack:
        f = stack.pop()
        for dart in d.faces[f]:
            g = d.face_of_dart[d.mate[dart]]
            if colors[g] < 0:
                colors[g] = 1 - colors[f]
                stack.append(g)
            elif colors[g] == colors[f]:
                raise InternalInconsistencyError(
                    "face adjacency graph is not bipartite"
                )
    if any(c < 0 for c in colors):
        raise InternalInconsistencyError("face adjacency graph is disconnected")
    return Checkerboard(tuple(colors))


def _black_corner_base(d: Diagram, cb: Checkerboard, p: int) -> int:
    """0 if corners (0,1) and (2,3) at p are black, else 1."""
    return 0 if cb.colors[d.face_of_dart[4 * p + 1]] == BLACK else 1


def tait_sign(d: Diagram, cb: Checkerboard, p: int) -> int:
    """+1 when a black corner follows an under-strand dart counterclockwise."""
    a = 0 if d.over_is_odd[p] else 1
    return 1 if _black_corner_base(d, cb, p) == a else -1


def tait_graph(d: Diagram, cb: Optional[Checkerboard] = None) -> SignedPlaneGraph:
    """Signed plane graph with one vertex per black region, one edge per
    crossing; the edge id equals the crossing id."""
    cb = cb if cb is not None else checkerboard(d)
    black_faces = [f for f in range(len(d.faces)) if cb.colors[f] == BLACK]
    vid = {f: i for i, f in enumerate(black_faces)}
    bases = [_black_corner_base(d, cb, p) for p in range(d.c)]
    edges = []
    signs = []
    for p in range(d.c):
        b = bases[p]
        f0 = d.face_of_dart[4 * p + (b + 1) % 4]
        f1 = d.face_of_dart[4 * p + (b + 3) % 4]
        edges.append((vid[f0], vid[f1]))
        signs.append(tait_sign(d, cb, p))
    rot = []
    for f in black_faces:
        circle = []
        # Face orbits run clockwise around a face, so reverse them to get a
        # counterclockwise rotation at the Tait vertex.
        for dart in reversed(d.faces[f]):
            mate = d.mate[dart]
            p, i = divmod(mate, 4)
            circle.append((p, 0 if i == bases[p] else 1))
        rot.append(tuple(circle))
    return SignedPlaneGraph(len(black_faces), tuple(edges), tuple(signs), tuple(rot))


def dual(g: SignedPlaneGraph) -> SignedPlaneGraph:
    """Planar dual with the identity edge bijection; signs carried over."""
    face_list = g.faces()
    face_of: Dict[Dart, int] = {}
    for i, orbit in enumerate(face_list):
        for dart in orbit:
            face_of[dart] = i
    edges = tuple(
        (face_of[(e, 0)], face_of[(e, 1)]) for e in range(g.n_edges())
    )
    # Reversing each face orbit keeps the dual's rotation counterclockwise
    # under the same convention as the primal.
    rot = tuple(tuple(reversed(orbit)) for orbit in face_list)
    return SignedPlaneGraph(len(face_list), edges, g.signs, rot)


def medial_diagram(g: SignedPlaneGraph) -> Diagram:
    """The 4-valent medial diagram of g: one crossing per edge.

    The over-strand at each crossing is chosen from the edge sign so that
    ``tait_graph(medial_diagram(g))`` reproduces g (same rotation system,
    same signs, identity on edge ids).
    """
    m = g.n_edges()
    if m == 0:
        raise MalformedError("medial of an edgeless graph has no crossings")
    pos = g.dart_position()

    def slot_after(d: Dart) -> Tuple[int, int]:
        return (d[0], 0 if d[1] == 0 else 2)

    def slot_before(d: Dart) -> Tuple[int, int]:
        return (d[0], 1 if d[1] == 0 else 3)

    # Medial mate: the edge through corner (d, sigma(d)) joins the crossing
    # of edge(d) at its after-slot to the crossing of edge(sigma(d)) at its
    # before-slot.
    mate: Dict[Tuple[int, int], Tuple[int, int]] = {}
    for v, circle in enumerate(g.rot):
        for i, d in enumerate(circle):
            nxt = circle[(i + 1) % len(circle)]
            a, b = slot_after(d), slot_before(nxt)
            mate[a] = b
            mate[b] = a

    # Trace the strands (opposite slots continue each other), labeling arcs
    # in traversal order so labels increase along every strand.
    label_at: Dict[Tuple[int, int], int] = {}
    arrival: Dict[Tuple[int, int], int] = {}
    next_label = 1
    for e0 in range(m):
        for s0 in range(4):
            if (e0, s0) in label_at or (e0, s0) in arrival:
                continue
            cur = (e0, s0)
            while True:
                lab = next_label
                next_label += 1
                label_at[cur] = lab
                other = mate[cur]
                arrival[other] = lab
                cur = (other[0], (other[1] + 2) % 4)
                if cur == (e0, s0):
                    break
    assert next_label == 2 * m + 1

    tuples = []
    slot_to_dart: Dict[Tuple[int, int], int] = {}
    for e in range(m):
        under = (0, 2) if g.signs[e] == 1 else (1, 3)
        u_in = [s for s in under if (e, s) in arrival]
        if len(u_in) != 1:
            raise InternalInconsistencyError("strand passes a crossing twice on one side")
        base = u_in[0]
        labels = []
        for k in range(4):
            s = (base + k) % 4
            slot = (e, s)
            labels.append(arrival[slot] if slot in arrival else label_at[slot])
            slot_to_dart[slot] = 4 * e + k
        tuples.append(tuple(labels))

    # The unbounded region must be a face-type region (one inherited from a
    # face of g), so that the black regions are exactly the vertices of g.
    d0 = g.rot[0][0]
    outer_dart = slot_to_dart[slot_after(d0)]
    diag = Diagram(tuples, outer_dart=outer_dart)

    # Safety net for the convention: every vertex of g must reappear as a
    # face of the medial traced by its before-slots.
    for v, circle in enumerate(g.rot):
        want = {slot_to_dart[slot_before(d)] for d in circle}
        got = set(diag.faces[diag.face_of_dart[next(iter(want))]])
        if want != got:
            raise InternalInconsistencyError(
                f"vertex {v} of the plane graph is not a medial face"
            )
    return diag


def is_isomorphic(g: SignedPlaneGraph, h: SignedPlaneGraph) -> bool:
    """Plane-map isomorphism with the identity correspondence on edge ids.

    Requires equal signs edge by edge and a dart bijection (per edge,
    either keeping or swapping the two ends) that commutes with the
    rotation; orientation-preserving only.
    """
    if g.n_vertices != h.n_vertices or g.n_edges() != h.n_edges():
        return False
    if g.signs != h.signs:
        return False
    if g.n_edges() == 0:
        return g.n_vertices == 1
    pos_g = g.dart_position()
    pos_h = h.dart_position()

    def sigma(graph, pos, d):
        v, i = pos[d]
        circle = graph.rot[v]
        return circle[(i + 1) % len(circle)]

    for flip0 in (0, 1):
        flip = {0: flip0}
        ok = True
        stack = [0]
        seen_edges = {0}
        while stack and ok:
            e = stack.pop()
            for k in (0, 1):
                dg = (e, k)
                dh = (e, k ^ flip[e])
                ng = sigma(g, pos_g, dg)
                nh = sigma(h, pos_h, dh)
                if ng[0] != nh[0]:
                    ok = False
                    break
                want = ng[1] ^ nh[1]
                if ng[0] in flip:
                    if flip[ng[0]] != want:
                        ok = False
                        break
                else:
                    flip[ng[0]] = want
                    seen_edges.add(ng[0])
                    stack.append(ng[0])
        if ok and len(seen_edges) == g.n_edges():
            # Full verification pass.
            good = True
            for e in range(g.n_edges()):
                for k in (0, 1):
                    ng = sigma(g, pos_g, (e, k))
                    nh = sigma(h, pos_h, (e, k ^ flip[e]))
                    if (ng[0], ng[1] ^ flip[ng[0]]) != nh:
                        good = False
                        break
                if not good:
                    break
            if good:
                return True
    return False
