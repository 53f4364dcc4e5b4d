"""Fraction-free exact nullspaces of sparse integer systems.

Rows are dicts mapping column index to integer coefficient.  Elimination is
incremental Gauss-Jordan with integer cross-multiplication (new = p*row -
r*pivot) and gcd normalization after every combination, so no rationals ever
appear and no tolerance is involved.  Dimension claims coming out of this
module are exact.

The invariant maintained on the pivot set: every stored pivot row contains
its own pivot column and otherwise only free columns.  Reducing an incoming
row therefore strictly removes pivot columns from its support and
terminates.
"""

from __future__ import annotations

from math import gcd, lcm


def _normalize(row: dict) -> dict:
    """Divide by the content; make the lowest-column entry positive."""
    if not row:
        return row
    g = 0
    for v in row.values():
        g = gcd(g, v)
    lead = row[min(row)]
    if lead < 0:
        g = -g
    if g not in (0, 1):
        row = {c: v // g for c, v in row.items()}
    return row


def _eliminate(row: dict, pivot: dict, col: int) -> dict:
    """pivot[col]*row - row[col]*pivot, which cancels the given column."""
    p = pivot[col]
    r = row[col]
    out = {c: p * v for c, v in row.items() if c != col}
    for c, v in pivot.items():
        if c == col:
            continue
        s = out.get(c, 0) - r * v
        if s:
            out[c] = s
        else:
            out.pop(c, None)
    return out


def nullspace(rows, ncols: int, want_basis: bool = True):
    """Rank and an integer basis of the right nullspace of the row system.

    rows: iterable of {column: int} dicts, each encoding one homogeneous
    equation.  Returns (rank, basis) where basis is a list of {column: int}
    vectors spanning the solutions, or None when want_basis is false.
    """
    pivots: dict = {}
    for raw in rows:
        row = {c: int(v) for c, v in raw.items() if v}
        while True:
            hit = None
            for c in row:
                if c in pivots:
                    hit = c
                    break
            if hit is None:
                break
            row = _eliminate(row, pivots[hit], hit)
            if len(row) > 64:
                row = _normalize(row)
        if not row:
            continue
        row = _normalize(row)
        col = min(row)
        for pc in list(pivots):
            prow = pivots[pc]
            if col in prow:
                pivots[pc] = _normalize(_eliminate(prow, row, col))
        pivots[col] = row
    rank = len(pivots)
    if not want_basis:
        return rank, None
    basis = []
    for f in range(ncols):
        if f in pivots:
            continue
        carriers = [(c, prow) for c, prow in pivots.items() if f in prow]
        scale = 1
        for c, prow in carriers:
            scale = lcm(scale, abs(prow[c]))
        vec = {f: scale}
        for c, prow in carriers:
            q = scale // abs(prow[c])
            vec[c] = -prow[f] * q * (1 if prow[c] > 0 else -1)
        basis.append(_normalize(vec))
    return rank, basis


def dot(row: dict, vec: dict) -> int:
    """Integer pairing of a sparse row with a sparse vector."""
    if len(row) > len(vec):
        row, vec = vec, row
    return sum(v * vec.get(c, 0) for c, v in row.items())


def rank_dense(rows, ncols: int) -> int:
    """Exact rank of a dense integer system via fraction-free row echelon.

    rows: iterables of ints of length ncols.  Suited to systems whose rows
    are mostly full, where the sparse path pays too much dict overhead.
    """
    pivots = []  # (col, row) in increasing column order
    for raw in rows:
        row = list(raw)
        for col, prow in pivots:
            r = row[col]
            if not r:
                continue
            p = prow[col]
            row = [p * a - r * b for a, b in zip(row, prow)]
            g = gcd(*row)
            if g > 1:
                row = [v // g for v in row]
        for col in range(ncols):
            if row[col]:
                break
        else:
            continue
        if row[col] < 0:
            row = [-v for v in row]
        pivots.append((col, row))
        pivots.sort(key=lambda cr: cr[0])
        if len(pivots) == ncols:
            break
    return len(pivots)
