"""Two-row symbols of charged bipartitions and the matching step.

The symbol of a bipartition (lam1, lam2) charged by (s1, s2) at depth d has
row c of length d + s_c - max(s1, s2), holding the first-column style values
lam^c_j - j + s_c.  Rows are stored in ascending order, so the j-th part
corresponds to the j-th entry from the right.  The minimal admissible depth
makes both rows just long enough to see every nonzero part.

`match_step` pairs entries of the two rows and exchanges the unpaired ones,
producing the symbol of the image bipartition at the swapped charge
(s2, s1).  Decoding a symbol back to a bipartition fails with
MalformedSymbolError when a row is not strictly increasing or would decode
to a negative part.
"""

from bisect import bisect_left, bisect_right
from dataclasses import dataclass

from .core import check_partition, part
from .errors import InputError, MalformedSymbolError


@dataclass(frozen=True)
class Symbol:
    """Charged two-row symbol; rows are ascending tuples."""

    charge: tuple
    rows: tuple

    def __post_init__(self):
        if len(self.charge) != 2 or len(self.rows) != 2:
            raise InputError("a symbol has exactly two rows and two charges")


def symbol_depth(bipartition, charge):
    """Minimal depth at which both components are fully visible."""
    lam1, lam2 = (check_partition(c) for c in bipartition)
    s1, s2 = charge
    if s2 >= s1:
        return max(s2 - s1, len(lam2), len(lam1) + s2 - s1)
    return max(s1 - s2, len(lam1), len(lam2) + s1 - s2)


def build_symbol(bipartition, charge, depth=None):
    """Symbol of a charged bipartition at the given (or minimal) depth."""
    lam = tuple(check_partition(c) for c in bipartition)
    s1, s2 = charge
    d = symbol_depth(bipartition, charge)
    if depth is not None:
        if depth < d:
            raise InputError(f"depth {depth} below minimal depth {d}")
        d = depth
    top = max(s1, s2)
    rows = []
    for c in (0, 1):
        length = d + charge[c] - top
        row = tuple(part(lam[c], j) - j + charge[c] for j in range(length, 0, -1))
        rows.append(row)
    return Symbol(charge=(s1, s2), rows=tuple(rows))


def decode_symbol(symbol):
    """Bipartition encoded by a symbol; raises MalformedSymbolError."""
    out = []
    for c in (0, 1):
        row = symbol.rows[c]
        s_c = symbol.charge[c]
        if any(a >= b for a, b in zip(row, row[1:])):
            raise MalformedSymbolError(f"row {c + 1} not strictly increasing: {row}")
        length = len(row)
        parts = [row[length - j] + j - s_c for j in range(1, length + 1)]
        if any(p < 0 for p in parts):
            raise MalformedSymbolError(f"row {c + 1} decodes to a negative part")
        out.append(tuple(p for p in parts if p > 0))
    return tuple(out)


def match_step(symbol):
    """One matching step: pair the rows and swap the unpaired entries.

    For charge (s1, s2) with s2 >= s1, each entry x of row 1 (taken in
    increasing order) grabs the largest entry of row 2 that is <= x, or the
    largest remaining entry when none is; the grabbed entries become the new
    row 2 and everything else the new row 1.  For s2 < s1 the mirror rule
    runs with the roles of the rows exchanged.  The result is the symbol of
    the image at the swapped charge (s2, s1).
    """
    s1, s2 = symbol.charge
    row1, row2 = symbol.rows
    if s2 >= s1:
        pool = list(row2)
        grabbed = []
        for x in row1:
            idx = bisect_right(pool, x) - 1
            if idx < 0:
                idx = len(pool) - 1
            grabbed.append(pool.pop(idx))
        new_row1 = tuple(sorted(pool + list(row1)))
        new_row2 = tuple(sorted(grabbed))
    else:
        pool = list(row1)
        grabbed = []
        for x in row2:
            idx = bisect_left(pool, x)
            if idx >= len(pool):
                idx = 0
            grabbed.append(pool.pop(idx))
        new_row1 = tuple(sorted(grabbed))
        new_row2 = tuple(sorted(pool + list(row2)))
    return Symbol(charge=(s2, s1), rows=(new_row1, new_row2))
