"""Brute-force verification layer: exhaustive enumeration and cross-checks.

Everything here recomputes results by routes independent of the solver:
region subsets are enumerated outright, components are counted by strand
traversal, and parity audits walk the faces directly.  Disagreement with
the linear-algebra route is a hard error.
"""

from __future__ import annotations

import random
from typing import Dict, List, Optional, Set

from . import gf2
from .diagram import Diagram
from .errors import BudgetExceededError, CheckFailedError
from .rcc import (
    IncidenceMatrix,
    achievable,
    incidence_matrix,
    inter_component_masks,
)
from .tait import SignedPlaneGraph, medial_diagram

ENUMERATION_BUDGET = 1 << 16


def enumerate_achievable(
    d: Diagram, inc: Optional[IncidenceMatrix] = None, budget: int = ENUMERATION_BUDGET
) -> Set[int]:
    """All crossing sets reachable by some region set, by enumerating every
    one of the 2^(c+2) region subsets (Gray-code order, one row XOR each).
    """
    n_rows = d.c + 2
    if 1 << n_rows > budget:
        raise BudgetExceededError(
            f"2^{n_rows} region subsets exceed the budget of {budget}"
        )
    inc = inc if inc is not None else incidence_matrix(d)
    rows = inc.matrix.rows
    out = {0}
    acc = 0
    for k in range(1, 1 << n_rows):
        acc ^= rows[(k & -k).bit_length() - 1]
        out.add(acc)
    return out


def audit_region_parity(d: Diagram) -> Dict:
    """For every region and component, count boundary crossings between
    that component and the rest; all counts must be even."""
    masks = inter_component_masks(d)
    counts = []
    violations = []
    for region in d.regions:
        bits = 0
        for p in region.boundary_crossings:
            bits |= 1 << p
        per_comp = [(bits & mask).bit_count() for mask in masks]
        counts.append(per_comp)
        for comp, n in enumerate(per_comp):
            if n % 2:
                violations.append({"region": region.id, "component": comp, "count": n})
    return {"counts": counts, "violations": violations}


def _serialize(d: Diagram) -> str:
    return d.to_pd_text()


def cross_check(
    d: Diagram,
    budget: int = ENUMERATION_BUDGET,
    exhaustive_max_c: int = 10,
    rng: Optional[random.Random] = None,
    n_random_targets: int = 64,
) -> Dict:
    """Check the rank identities of the incidence matrix against the
    traversal oracle on one diagram.

    Raises CheckFailedError (carrying the PD serialization) whenever any of
    the independent routes disagree.
    """
    inc = incidence_matrix(d)
    rk = gf2.rank(inc.matrix)
    n_traversal = len(d.components)
    n_rank = d.c - rk + 1
    report = {
        "c": d.c,
        "rank": rk,
        "n_traversal": n_traversal,
        "n_rank": n_rank,
        "enumerated": False,
    }
    if n_traversal != n_rank:
        raise CheckFailedError(
            f"component count mismatch: traversal {n_traversal}, rank formula {n_rank}",
            instance=_serialize(d),
        )
    bad = audit_region_parity(d)["violations"]
    if bad:
        raise CheckFailedError(
            f"region parity violations: {bad}", instance=_serialize(d)
        )
    if 1 << (d.c + 2) <= budget:
        reachable = enumerate_achievable(d, inc, budget)
        report["enumerated"] = True
        if len(reachable) != 1 << rk:
            raise CheckFailedError(
                f"achievable set has {len(reachable)} elements, expected 2^{rk}",
                instance=_serialize(d),
            )
        if d.c <= exhaustive_max_c:
            targets = range(1 << d.c)
        else:
            rng = rng or random.Random(0)
            targets = [rng.getrandbits(d.c) for _ in range(n_random_targets)]
        for t in targets:
            member = t in reachable
            if gf2.in_row_space(inc.matrix, t) != member:
                raise CheckFailedError(
                    f"row-space membership disagrees with enumeration at {t:b}",
                    instance=_serialize(d),
                )
            if achievable(d, t) != member:
                raise CheckFailedError(
                    f"parity criterion disagrees with enumeration at {t:b}",
                    instance=_serialize(d),
                )
    return report


def random_plane_graph(
    rng: random.Random, n_edges: int, leaf_prob: float = 0.35
) -> SignedPlaneGraph:
    """Random connected plane multigraph with an explicit rotation system.

    Grows from a single edge by planarity-preserving moves: attach a leaf
    at a random corner, or add an edge between two corners of one face
    (which can create multi-edges and self-loops).  The result is planar
    by construction; signs are uniform.
    """
    if n_edges < 1:
        raise ValueError("need at least one edge")
    # rot as mutable lists of darts; edges as list of (u, v).
    edges: List[List[int]] = [[0, 1]]
    rot: List[List[tuple]] = [[(0, 0)], [(0, 1)]]

    def faces_now() -> List[List[tuple]]:
        pos = {}
        for v, circle in enumerate(rot):
            for i, dd in enumerate(circle):
                pos[dd] = (v, i)
        left = set(pos)
        out = []
        while left:
            start = min(left)
            orbit = []
            dd = start
            while dd in left:
                left.remove(dd)
                orbit.append(dd)
                e, k = dd[0], 1 - dd[1]
                v, i = pos[(e, k)]
                orbit_next = rot[v][(i + 1) % len(rot[v])]
                dd = orbit_next
            out.append(orbit)
        return out

    while len(edges) < n_edges:
        if rng.random() < leaf_prob:
            v = rng.randrange(len(rot))
            e = len(edges)
            edges.append([v, len(rot)])
            slot = rng.randrange(len(rot[v]) + 1)
            rot[v].insert(slot, (e, 0))
            rot.append([(e, 1)])
        else:
            face = rng.choice(faces_now())
            # The corners of a face orbit sit just after the mates of its
            # darts; anchor the new edge at two of them.
            a1 = rng.choice(face)
            a2 = rng.choice(face)
            d1 = (a1[0], 1 - a1[1])
            d2 = (a2[0], 1 - a2[1])
            pos = {}
            for v, circle in enumerate(rot):
                for i, dd in enumerate(circle):
                    pos[dd] = (v, i)
            u, i1 = pos[d1]
            w, i2 = pos[d2]
            e = len(edges)
            edges.append([u, w])
            # Insert (e,0) after d1 and (e,1) after d2; inserting the first
            # dart can shift the second slot at the same vertex.
            rot[u].insert(i1 + 1, (e, 0))
            if w == u and i2 >= i1 + 1:
                i2 += 1
            rot[w].insert(i2 + 1, (e, 1))
    signs = tuple(rng.choice((-1, 1)) for _ in edges)
    return SignedPlaneGraph(
        len(rot),
        tuple((u, v) for u, v in edges),
        signs,
        tuple(tuple(circle) for circle in rot),
    )


def random_diagram(rng: random.Random, n_crossings: int, **kw) -> Diagram:
    """Random link diagram: the medial of a random plane multigraph."""
    return medial_diagram(random_plane_graph(rng, n_crossings, **kw))
