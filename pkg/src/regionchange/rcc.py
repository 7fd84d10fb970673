"""Region crossing change calculus on link diagrams.

Crossing sets and region sets are plain ints used as bit vectors: bit j of
a crossing set is crossing j; bit i of a region set is row i of the
incidence matrix (black regions first, then white regions).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from . import gf2
from .diagram import Diagram
from .errors import IndexMismatchError, MalformedError
from .gf2 import BitMatrix
from .tait import (
    BLACK,
    Checkerboard,
    SignedPlaneGraph,
    checkerboard,
    dual,
    medial_diagram,
)


@dataclass(frozen=True)
class IncidenceMatrix:
    """The (c+2) x c region/crossing incidence matrix of a diagram.

    Row i corresponds to face ``region_rows[i]`` of the diagram; the black
    block comes first.  Column j is crossing j.
    """

    matrix: BitMatrix
    region_rows: Tuple[int, ...]

    def row_of_face(self, face: int) -> int:
        return self.region_rows.index(face)


def incidence_matrix(d: Diagram, cb: Optional[Checkerboard] = None) -> IncidenceMatrix:
    """Entry (i, j) is 1 iff crossing j lies on the boundary of region i.

    Incidence, not multiplicity: a nugatory crossing met twice by one
    region still contributes a single 1.
    """
    cb = cb if cb is not None else checkerboard(d)
    order = [f for f in range(len(d.faces)) if cb.colors[f] == BLACK]
    order += [f for f in range(len(d.faces)) if cb.colors[f] != BLACK]
    rows = []
    for f in order:
        bits = 0
        for p in d.regions[f].boundary_crossings:
            bits |= 1 << p
        rows.append(bits)
    return IncidenceMatrix(BitMatrix.from_rows(rows, d.c), tuple(order))


def _check_region_vector(d: Diagram, r: int):
    if r < 0 or r >> (d.c + 2):
        raise IndexMismatchError(
            f"region set must have {d.c + 2} bits, got {r.bit_length()}"
        )


def _check_crossing_vector(d: Diagram, t: int):
    if t < 0 or t >> d.c:
        raise IndexMismatchError(
            f"crossing set must have {d.c} bits, got {t.bit_length()}"
        )


def apply_rcc(d: Diagram, r: int, inc: Optional[IncidenceMatrix] = None) -> Diagram:
    """Perform region crossing changes at the regions selected by r.

    Flips the over-strand at exactly the crossings hit an odd number of
    times; involutive, and additive in r over GF(2).
    """
    _check_region_vector(d, r)
    inc = inc if inc is not None else incidence_matrix(d)
    return d.with_crossings_flipped(inc.matrix.vec_mat(r))


def solve_regions(
    d: Diagram, target: int, inc: Optional[IncidenceMatrix] = None
) -> Optional[int]:
    """A region set realizing exactly the target crossing changes, or None.

    For knot diagrams every target is solvable; for links the achievable
    targets are cut out by inter-component parity.
    """
    _check_crossing_vector(d, target)
    inc = inc if inc is not None else incidence_matrix(d)
    return gf2.solve_row_combination(inc.matrix, target)


def inter_component_masks(d: Diagram) -> List[int]:
    """Per component, the bit mask of its crossings with other components."""
    masks = [0] * len(d.components)
    for p in range(d.c):
        a, b = d.strand_components_at(p)
        if a != b:
            masks[a] |= 1 << p
            masks[b] |= 1 << p
    return masks


def achievable(d: Diagram, target: int) -> bool:
    """Parity test for realizability by region crossing changes.

    True iff, for every component, the target hits an even number of that
    component's crossings with the rest of the link.  Independent of the
    linear-algebra route through the incidence matrix; the two must agree.
    """
    _check_crossing_vector(d, target)
    return all(
        gf2.parity(target & mask) == 0 for mask in inter_component_masks(d)
    )


def component_count(d: Diagram, inc: Optional[IncidenceMatrix] = None) -> int:
    """Number of link components via the rank identity n = c - rank + 1."""
    inc = inc if inc is not None else incidence_matrix(d)
    return d.c - gf2.rank(inc.matrix) + 1


def is_knot_graph(g: SignedPlaneGraph) -> bool:
    """True iff the signed plane graph represents a knot diagram, decided
    by full rank of the medial's incidence matrix."""
    d = medial_diagram(g)
    return gf2.rank(incidence_matrix(d).matrix) == g.n_edges()


def even_degree_test(g: SignedPlaneGraph) -> bool:
    """True when every vertex degree of g and of its dual is even; such
    graphs always represent multi-component links."""
    if any(g.degree(v) % 2 for v in range(g.n_vertices)):
        return False
    gd = dual(g)
    return not any(gd.degree(v) % 2 for v in range(gd.n_vertices))


def _component_visit_order(d: Diagram, comp: int, basepoint: int) -> List[int]:
    """Arrival darts met when walking component comp from basepoint arc."""
    start = d.head_dart[basepoint]
    visits = []
    dart = start
    while True:
        visits.append(dart)
        p, k = divmod(dart, 4)
        out = 4 * p + (k + 2) % 4
        dart = d.head_dart[d.edge_of_dart[out]]
        if dart == start:
            return visits


def descending_target(
    d: Diagram,
    order: Optional[Sequence[int]] = None,
    basepoints: Optional[Dict[int, int]] = None,
) -> int:
    """Crossing changes that make the diagram a descending unlink.

    Components are stacked by ``order`` (earlier passes over later) and
    each is made descending from its basepoint arc.  Defaults: component id
    order, lowest arc label per component.
    """
    n = len(d.components)
    order = list(order) if order is not None else list(range(n))
    if sorted(order) != list(range(n)):
        raise MalformedError("order must be a permutation of the component ids")
    rank_of = {comp: i for i, comp in enumerate(order)}
    basepoints = dict(basepoints) if basepoints is not None else {
        comp.id: min(comp.arcs) for comp in d.components
    }
    target = 0
    for p in range(d.c):
        a, b = d.strand_components_at(p)
        if a == b:
            continue
        # Strand (0,2) belongs to a, strand (1,3) to b; the earlier-stacked
        # component must be the over-strand.
        over_comp = b if d.over_is_odd[p] else a
        want_over = a if rank_of[a] < rank_of[b] else b
        if over_comp != want_over:
            target |= 1 << p
    for comp in d.components:
        first_seen = set()
        for dart in _component_visit_order(d, comp.id, basepoints[comp.id]):
            p, k = divmod(dart, 4)
            a, b = d.strand_components_at(p)
            if a != b:
                continue
            on_over = (k % 2 == 1) == d.over_is_odd[p]
            if p in first_seen:
                continue
            first_seen.add(p)
            # First pass must be on top; flip the crossing if it is not.
            if not on_over:
                target |= 1 << p
    return target


def is_descending(
    d: Diagram,
    order: Optional[Sequence[int]] = None,
    basepoints: Optional[Dict[int, int]] = None,
) -> bool:
    return descending_target(d, order, basepoints) == 0


def unknottable_by_rcc(d: Diagram) -> bool:
    """Can region crossing changes turn this diagram into an unlink?

    n = 1: always.  n = 2: iff the linking number is even.  n >= 3: iff
    every component's total linking number with the rest is even.  The
    general criterion is derived (the two-component case is the published
    one); it coincides with achievability of any unlinking target.
    """
    n = len(d.components)
    if n == 1:
        return True
    for i in range(n):
        total = sum(d.linking_number(i, j) for j in range(n) if j != i)
        if total % 2:
            return False
    return True


def unknot_plan(d: Diagram) -> Optional[int]:
    """A region set whose application yields a descending unlink diagram,
    or None when region crossing changes cannot unknot the diagram."""
    return solve_regions(d, descending_target(d))
