"""Dense GF(2) linear algebra on packed-bit rows.

A row is a Python int used as a bit vector: bit ``1 << j`` is column ``j``.
Word-level XOR gives the row operations; nothing is allocated per element.
All functions leave their inputs untouched.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional


def parity(x: int) -> int:
    """Parity of the popcount of x."""
    return x.bit_count() & 1


@dataclass(frozen=True)
class BitMatrix:
    """An n_rows x n_cols matrix over GF(2) with int-packed rows."""

    n_rows: int
    n_cols: int
    rows: tuple

    def __post_init__(self):
        if self.n_rows != len(self.rows):
            raise ValueError("row count mismatch")
        mask = (1 << self.n_cols) - 1
        for r in self.rows:
            if r < 0 or r & ~mask:
                raise ValueError("row has bits outside n_cols")

    @classmethod
    def from_rows(cls, rows: List[int], n_cols: int) -> "BitMatrix":
        return cls(len(rows), n_cols, tuple(rows))

    @classmethod
    def from_lists(cls, entries: List[List[int]]) -> "BitMatrix":
        n_cols = len(entries[0]) if entries else 0
        rows = []
        for line in entries:
            if len(line) != n_cols:
                raise ValueError("ragged rows")
            rows.append(sum((b & 1) << j for j, b in enumerate(line)))
        return cls(len(entries), n_cols, tuple(rows))

    @classmethod
    def from_text(cls, text: str) -> "BitMatrix":
        """Parse the debug format: one row of 0/1 characters per line."""
        lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
        return cls.from_lists([[int(ch) for ch in ln] for ln in lines])

    def to_text(self) -> str:
        return "\n".join(
            "".join(str((r >> j) & 1) for j in range(self.n_cols))
            for r in self.rows
        )

    def entry(self, i: int, j: int) -> int:
        return (self.rows[i] >> j) & 1

    def transpose(self) -> "BitMatrix":
        cols = []
        for j in range(self.n_cols):
            cols.append(sum(((r >> j) & 1) << i for i, r in enumerate(self.rows)))
        return BitMatrix(self.n_cols, self.n_rows, tuple(cols))

    def vec_mat(self, x: int) -> int:
        """x * M for a row-selector x of length n_rows: XOR of selected rows."""
        acc = 0
        for i, r in enumerate(self.rows):
            if (x >> i) & 1:
                acc ^= r
        return acc

    def mat_vec(self, v: int) -> int:
        """M * v for a column vector v of length n_cols; result has n_rows bits."""
        return sum(parity(r & v) << i for i, r in enumerate(self.rows))


def _eliminate(m: BitMatrix):
    """Forward elimination with combination tracking.

    Returns (pivots, reduced) where pivots is a list of
    (pivot_col, row_bits, combo_bits) in pivot-column order and combo_bits
    records which original rows were XORed into the pivot row.  Pivot choice
    is the first nonzero entry in row-major scan, so results are
    deterministic for a given row order.
    """
    work = [(r, 1 << i) for i, r in enumerate(m.rows)]
    chosen = []
    used = [False] * m.n_rows
    for col in range(m.n_cols):
        pick = None
        for i in range(m.n_rows):
            if not used[i] and (work[i][0] >> col) & 1:
                pick = i
                break
        if pick is None:
            continue
        used[pick] = True
        prow, pcombo = work[pick]
        for i in range(m.n_rows):
            if i != pick and (work[i][0] >> col) & 1:
                work[i] = (work[i][0] ^ prow, work[i][1] ^ pcombo)
        chosen.append((col, pick))
    # Re-read the pivot rows after the loop: later eliminations keep
    # clearing pivot columns from earlier pivot rows, so the final state is
    # fully reduced.
    return [(col, work[i][0], work[i][1]) for col, i in chosen]


def rank(m: BitMatrix) -> int:
    """GF(2) rank of m."""
    return len(_eliminate(m))


def solve_row_combination(m: BitMatrix, target: int) -> Optional[int]:
    """Find x with x * M = target, or None if target is outside the row space.

    x is a bit vector of length n_rows.  When the system is underdetermined
    the witness produced by back-substitution over the pivot rows is
    returned, which is deterministic for a fixed row order.
    """
    if target < 0 or target >> m.n_cols:
        raise ValueError("target has bits outside n_cols")
    x = 0
    t = target
    for col, prow, pcombo in _eliminate(m):
        if (t >> col) & 1:
            t ^= prow
            x ^= pcombo
    if t:
        return None
    return x


def right_nullspace(m: BitMatrix) -> List[int]:
    """Basis of {v : M * v = 0}; has n_cols - rank(m) elements."""
    pivots = _eliminate(m)
    pivot_cols = {col for col, _, _ in pivots}
    basis = []
    for free in range(m.n_cols):
        if free in pivot_cols:
            continue
        v = 1 << free
        for col, prow, _ in pivots:
            if (prow >> free) & 1:
                v |= 1 << col
        basis.append(v)
    return basis


def in_row_space(m: BitMatrix, target: int) -> bool:
    """True iff target lies in the row space of m.

    Implemented as orthogonality against the right nullspace, which is the
    dual route to solve_row_combination; the two must agree everywhere.
    """
    if target < 0 or target >> m.n_cols:
        raise ValueError("target has bits outside n_cols")
    return all(parity(target & v) == 0 for v in right_nullspace(m))
