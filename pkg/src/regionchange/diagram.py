"""Link diagrams as combinatorial maps, parsed from PD codes.

A diagram with c crossings is stored as 4c darts, dart ``4*p + k`` being the
end of an arc at crossing ``p`` in counterclockwise position ``k``.  The PD
convention is fixed: position 0 of each crossing tuple is the incoming
under-strand and positions are listed counterclockwise.  Arc orientation is
induced by increasing edge labels along each strand, wrapping from the
largest label of a strand to its smallest.

Faces are the orbits of ``d -> sigma(alpha(d))`` where sigma is the
counterclockwise rotation at a crossing and alpha swaps the two darts of an
arc.  A connected diagram has exactly c + 2 faces; anything else means the
rotation data is not planar and is rejected.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import (
    DisconnectedError,
    LabelMultiplicityError,
    MalformedError,
    SameComponentError,
)


@dataclass(frozen=True)
class PDCode:
    """An ordered list of PD crossing tuples (edge labels, 1-based)."""

    crossings: Tuple[Tuple[int, int, int, int], ...]

    @classmethod
    def parse(cls, text: str) -> "PDCode":
        """Parse the PD file format: one `X a b c d` line per crossing.

        `#` starts a comment; blank lines are ignored.
        """
        crossings = []
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if parts[0].upper() != "X" or len(parts) != 5:
                raise MalformedError(f"line {lineno}: expected `X a b c d`, got {raw!r}")
            try:
                labels = tuple(int(p) for p in parts[1:])
            except ValueError:
                raise MalformedError(f"line {lineno}: non-integer edge label in {raw!r}")
            if any(l <= 0 for l in labels):
                raise MalformedError(f"line {lineno}: edge labels must be positive")
            crossings.append(labels)
        if not crossings:
            raise MalformedError("empty PD code")
        return cls(tuple(crossings))


@dataclass(frozen=True)
class Region:
    """A face of the diagram: its id and the set of incident crossings."""

    id: int
    boundary_crossings: frozenset


@dataclass(frozen=True)
class Component:
    """One closed strand of the link: its id and the arcs it traverses."""

    id: int
    arcs: Tuple[int, ...]


class Diagram:
    """Immutable combinatorial-map representation of a link diagram.

    Attributes
    ----------
    c : number of crossings
    tuples : the PD tuples, counterclockwise dart labels per crossing
    over_is_odd : per crossing, True when the over-strand occupies dart
        positions {1, 3} (always True straight after parsing; crossing
        changes toggle it)
    faces : dart orbits of the face permutation, one tuple per face
    outer_face : index of the face taken as unbounded
    components : partition of the arcs into closed strands
    head_dart : per arc label, the dart at which the oriented arc arrives
    """

    def __init__(
        self,
        tuples: Sequence[Tuple[int, int, int, int]],
        over_is_odd: Optional[Sequence[bool]] = None,
        outer_dart: Optional[int] = None,
        head_dart: Optional[Dict[int, int]] = None,
    ):
        self.tuples = tuple(tuple(t) for t in tuples)
        self.c = len(self.tuples)
        if self.c == 0:
            raise MalformedError("a diagram needs at least one crossing")
        self.over_is_odd = (
            tuple(bool(b) for b in over_is_odd)
            if over_is_odd is not None
            else (True,) * self.c
        )
        if len(self.over_is_odd) != self.c:
            raise MalformedError("over_is_odd length mismatch")

        self.edge_of_dart: Tuple[int, ...] = tuple(
            lab for t in self.tuples for lab in t
        )
        self._check_labels()
        self._build_involution()
        self._check_connected()
        self._build_faces(outer_dart)
        self._build_components_and_orientation(head_dart)

    # -- construction ------------------------------------------------------

    def _check_labels(self):
        counts: Dict[int, int] = {}
        for lab in self.edge_of_dart:
            counts[lab] = counts.get(lab, 0) + 1
        bad = sorted(l for l, n in counts.items() if n != 2)
        if bad:
            raise LabelMultiplicityError(
                f"labels not appearing exactly twice: {bad}"
            )
        expected = set(range(1, 2 * self.c + 1))
        if set(counts) != expected:
            raise MalformedError(
                f"labels must be exactly 1..{2 * self.c}, got {sorted(counts)}"
            )

    def _build_involution(self):
        where: Dict[int, List[int]] = {}
        for d, lab in enumerate(self.edge_of_dart):
            where.setdefault(lab, []).append(d)
        self.darts_of_edge: Dict[int, Tuple[int, int]] = {
            lab: (ds[0], ds[1]) for lab, ds in where.items()
        }
        mate = [0] * (4 * self.c)
        for d1, d2 in self.darts_of_edge.values():
            mate[d1], mate[d2] = d2, d1
        self.mate: Tuple[int, ...] = tuple(mate)

    def _check_connected(self):
        seen = {0}
        stack = [0]
        while stack:
            p = stack.pop()
            for k in range(4):
                q = self.mate[4 * p + k] // 4
                if q not in seen:
                    seen.add(q)
                    stack.append(q)
        if len(seen) != self.c:
            raise DisconnectedError("diagram is split (4-valent graph disconnected)")

    def _sigma(self, d: int) -> int:
        return 4 * (d // 4) + (d % 4 + 1) % 4

    def _build_faces(self, outer_dart: Optional[int]):
        n = 4 * self.c
        face_of = [-1] * n
        faces: List[Tuple[int, ...]] = []
        for start in range(n):
            if face_of[start] >= 0:
                continue
            orbit = []
            d = start
            while face_of[d] < 0:
                face_of[d] = len(faces)
                orbit.append(d)
                d = self._sigma(self.mate[d])
            faces.append(tuple(orbit))
        if len(faces) != self.c + 2:
            raise MalformedError(
                f"rotation data is not planar: {len(faces)} faces, "
                f"expected {self.c + 2}"
            )
        self.faces: Tuple[Tuple[int, ...], ...] = tuple(faces)
        self.face_of_dart: Tuple[int, ...] = tuple(face_of)
        if outer_dart is None:
            outer_dart = 0
        self.outer_face: int = face_of[outer_dart]
        self.regions: Tuple[Region, ...] = tuple(
            Region(i, frozenset(d // 4 for d in orbit))
            for i, orbit in enumerate(faces)
        )

    def _trace_strand(self, start_exit: int) -> List[int]:
        """Exit darts visited when flowing out through start_exit."""
        seq = []
        d = start_exit
        while True:
            seq.append(d)
            arrive = self.mate[d]
            d = 4 * (arrive // 4) + (arrive % 4 + 2) % 4
            if d == start_exit:
                return seq

    def _pin_violations(self, exits: List[int]) -> int:
        # The PD convention pins orientation wherever a strand goes under:
        # the incoming under dart must sit at position 0.
        bad = 0
        for e in exits:
            arrive = self.mate[e]
            p, r = divmod(arrive, 4)
            if self.over_is_odd[p] and r == 2:
                bad += 1
        return bad

    def _build_components_and_orientation(self, head_dart: Optional[Dict[int, int]]):
        seen_edges = set()
        components: List[Component] = []
        heads: Dict[int, int] = {}
        comp_of_edge: Dict[int, int] = {}
        for d0 in range(4 * self.c):
            lab0 = self.edge_of_dart[d0]
            if lab0 in seen_edges:
                continue
            fwd = self._trace_strand(d0)
            rev = [self.mate[e] for e in reversed(fwd)]
            ok_fwd = self._is_increasing_cycle([self.edge_of_dart[d] for d in fwd])
            ok_rev = self._is_increasing_cycle([self.edge_of_dart[d] for d in rev])
            if ok_fwd and ok_rev:
                # Cycles of length <= 2 read the same in both directions;
                # break the tie with the under-strand pins.
                exits = fwd if self._pin_violations(fwd) <= self._pin_violations(rev) else rev
            elif ok_fwd:
                exits = fwd
            elif ok_rev:
                exits = rev
            else:
                labels = sorted(self.edge_of_dart[d] for d in fwd)
                raise MalformedError(
                    f"arc labels {labels} do not increase along their strand "
                    "in either direction"
                )
            cid = len(components)
            arcs = []
            for d in exits:
                lab = self.edge_of_dart[d]
                seen_edges.add(lab)
                heads[lab] = self.mate[d]
                comp_of_edge[lab] = cid
                arcs.append(lab)
            components.append(Component(cid, tuple(sorted(arcs))))
        if head_dart is not None:
            # Explicit orientation (carried over a crossing change): must
            # orient every arc consistently with the involution.
            if sorted(head_dart) != sorted(heads):
                raise MalformedError("explicit orientation does not cover the arcs")
            heads = dict(head_dart)
        self.components: Tuple[Component, ...] = tuple(components)
        self.component_of_edge: Dict[int, int] = comp_of_edge
        self.head_dart: Dict[int, int] = heads
        self._check_under_convention()

    @staticmethod
    def _is_increasing_cycle(labels: List[int]) -> bool:
        """True when labels follow their own sorted cyclic order."""
        order = sorted(labels)
        succ = {order[i]: order[(i + 1) % len(order)] for i in range(len(order))}
        return all(
            succ[labels[i]] == labels[(i + 1) % len(labels)]
            for i in range(len(labels))
        )

    def _check_under_convention(self):
        # Only meaningful for freshly parsed diagrams where the over-strand
        # sits on positions {1, 3}: position 0 must then be incoming.
        for p in range(self.c):
            if self.over_is_odd[p]:
                lab = self.tuples[p][0]
                if self.head_dart[lab] != 4 * p:
                    raise MalformedError(
                        f"crossing {p + 1}: position 0 is not the incoming "
                        "under-strand"
                    )

    # -- queries -----------------------------------------------------------

    def under_positions(self, p: int) -> Tuple[int, int]:
        return (0, 2) if self.over_is_odd[p] else (1, 3)

    def over_positions(self, p: int) -> Tuple[int, int]:
        return (1, 3) if self.over_is_odd[p] else (0, 2)

    def incoming_position(self, p: int, positions: Tuple[int, int]) -> int:
        """Which of the two strand positions at p is the arriving dart."""
        for k in positions:
            d = 4 * p + k
            if self.head_dart[self.edge_of_dart[d]] == d:
                return k
        raise AssertionError("no incoming dart on strand")  # unreachable

    def crossing_sign(self, p: int) -> int:
        """+1 iff a counterclockwise quarter turn takes the under-strand
        direction to the over-strand direction."""
        u = self.incoming_position(p, self.under_positions(p))
        o = self.incoming_position(p, self.over_positions(p))
        return 1 if (o - u) % 4 == 1 else -1

    def strand_components_at(self, p: int) -> Tuple[int, int]:
        """Components of the (0,2)-strand and the (1,3)-strand at p."""
        return (
            self.component_of_edge[self.edge_of_dart[4 * p]],
            self.component_of_edge[self.edge_of_dart[4 * p + 1]],
        )

    def linking_number(self, i: int, j: int) -> int:
        """Half the signed count of crossings between components i and j."""
        if i == j:
            raise SameComponentError(f"component {i} paired with itself")
        n = len(self.components)
        if not (0 <= i < n and 0 <= j < n):
            raise MalformedError(f"component ids must be in 0..{n - 1}")
        total = 0
        for p in range(self.c):
            a, b = self.strand_components_at(p)
            if {a, b} == {i, j}:
                total += self.crossing_sign(p)
        if total % 2:
            raise AssertionError("odd inter-crossing sign sum")  # unreachable
        return total // 2

    def with_crossings_flipped(self, mask: int) -> "Diagram":
        """New diagram with the over-strand swapped at the crossings in mask."""
        over = [
            o ^ bool((mask >> p) & 1) for p, o in enumerate(self.over_is_odd)
        ]
        # Faces and orientation do not depend on over/under data; carry both
        # so they stay stable across crossing changes.
        return Diagram(
            self.tuples,
            over,
            outer_dart=self.faces[self.outer_face][0],
            head_dart=self.head_dart,
        )

    def mirror(self) -> "Diagram":
        """Mirror image: reverse the rotation at every crossing.

        The under-strand stays at positions {0, 2}; relabeling keeps
        position 0 incoming.
        """
        tuples = []
        for p, (a, b, c_, d) in enumerate(self.tuples):
            if not self.over_is_odd[p]:
                raise MalformedError("mirror of a flipped diagram is not supported")
            tuples.append((a, d, c_, b))
        return Diagram(tuples, outer_dart=None)

    def to_pd_text(self) -> str:
        """Serialize back to the PD file format (renormalizing so that
        position 0 is the incoming under-strand)."""
        lines = []
        for p in range(self.c):
            u = self.incoming_position(p, self.under_positions(p))
            labs = [self.tuples[p][(u + k) % 4] for k in range(4)]
            lines.append("X " + " ".join(str(x) for x in labs))
        return "\n".join(lines) + "\n"


def parse_pd(text: str) -> Diagram:
    """Parse a PD file into a Diagram."""
    return Diagram(PDCode.parse(text).crossings)


def faces(d: Diagram) -> List[Region]:
    """The regions of the diagram; always c + 2 of them."""
    return list(d.regions)


def components(d: Diagram) -> List[Component]:
    """Strand components by opposite-dart traversal.

    This is the traversal-based component count, independent of any linear
    algebra on the incidence matrix.
    """
    return list(d.components)


def crossing_sign(d: Diagram, p: int) -> int:
    return d.crossing_sign(p)


def linking_number(d: Diagram, i: int, j: int) -> int:
    return d.linking_number(i, j)
