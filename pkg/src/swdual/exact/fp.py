"""Sparse linear algebra over F_p.

Vectors are dicts ``{column: nonzero residue}``.  An :class:`Echelon` keeps
pivot rows keyed by their largest column, optionally carrying a *tag*
vector that records how each stored row was assembled from the inputs.
"""
from __future__ import annotations


def _axpy(row: dict, f: int, other: dict, p: int) -> None:
    """row -= f * other, in place."""
    for c, v in other.items():
        w = (row.get(c, 0) - f * v) % p
        if w:
            row[c] = w
        else:
            row.pop(c, None)


class Echelon:
    """Incremental row echelon form over F_p with pivot = max column."""

    def __init__(self, p: int, track: bool = False):
        self.p = p
        self.track = track
        self.piv: dict[int, tuple[dict, dict | None]] = {}

    @property
    def rank(self) -> int:
        return len(self.piv)

    def reduce(self, row: dict, tag: dict | None = None):
        """Reduce ``row`` (copied) against the stored pivots; returns (residue, tag)."""
        p = self.p
        row = {c: v % p for c, v in row.items() if v % p}
        tag = dict(tag) if tag is not None else ({} if self.track else None)
        done = {}
        while row:
            c = max(row)
            hit = self.piv.get(c)
            if hit is None:
                done[c] = row.pop(c)
                continue
            prow, ptag = hit
            f = row[c]
            _axpy(row, f, prow, p)
            if self.track:
                _axpy(tag, f, ptag, p)
        return done, tag

    def add(self, row: dict, tag: dict | None = None) -> bool:
        """Insert a row; returns True when it increased the rank."""
        p = self.p
        row = {c: v % p for c, v in row.items() if v % p}
        tag = dict(tag) if tag is not None else ({} if self.track else None)
        while row:
            c = max(row)
            hit = self.piv.get(c)
            if hit is None:
                inv = pow(row[c], -1, p)
                row = {cc: vv * inv % p for cc, vv in row.items()}
                if self.track:
                    tag = {cc: vv * inv % p for cc, vv in tag.items()}
                self.piv[c] = (row, tag)
                return True
            prow, ptag = hit
            f = row[c]
            _axpy(row, f, prow, p)
            if self.track:
                _axpy(tag, f, ptag, p)
        return False

    def contains(self, row: dict) -> bool:
        return not self.reduce(row)[0]


def rank(rows, p: int) -> int:
    E = Echelon(p)
    for r in rows:
        E.add(r)
    return E.rank


def nullspace(rows: list[dict], ncols: int, p: int) -> list[dict]:
    """Basis of {x : r.x = 0 for every row r}, as sparse vectors over 0..ncols-1.

    Uses the reduced row echelon form with pivot = max column.
    """
    E = Echelon(p)
    for r in rows:
        E.add(r)
    # full back-substitution so each pivot row has zeros in other pivot columns
    pivs = sorted(E.piv)
    red: dict[int, dict] = {}
    for c in pivs:  # ascending: lower pivots already reduced
        row = dict(E.piv[c][0])
        for cc in [x for x in row if x != c and x in red]:
            f = row.get(cc, 0)
            if f:
                _axpy(row, f, red[cc], p)
        red[c] = row
    free = [c for c in range(ncols) if c not in red]
    basis = []
    # x_free = 1 at f, x_pivot = -row[f]
    by_free: dict[int, dict] = {f: {f: 1} for f in free}
    for c, row in red.items():
        for cc, v in row.items():
            if cc != c:
                by_free[cc][c] = (-v) % p
    for f in free:
        basis.append(by_free[f])
    return basis
