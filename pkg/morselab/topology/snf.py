"""
Smith normal form over the integers.

Only the invariant factors are computed, never the transformation matrices.
Python integers give exact arbitrary-precision arithmetic. Boundary matrices are
sparse and mostly reducible by unit pivots, so the sparse elimination runs first
and the dense gcd-based reduction only sees whatever block is left.
"""

from collections.abc import Iterable, Sequence
from dataclasses import dataclass


@dataclass(frozen=True)
class SmithForm:
    """
    Invariant factors d1 | d2 | ... | dr of an integer matrix.

    @brief Nonzero diagonal of the Smith normal form.
    """

    invariant_factors: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)

    @property
    def torsion(self) -> tuple[int, ...]:
        """Invariant factors greater than one."""
        return tuple(d for d in self.invariant_factors if d > 1)


class _SparseMatrix:
    """Row-major sparse integer matrix with a column index."""

    __slots__ = ("rows", "cols")

    def __init__(self, entries: Iterable[tuple[int, int, int]]):
        self.rows: dict[int, dict[int, int]] = {}
        self.cols: dict[int, set[int]] = {}
        for r, c, value in entries:
            if value:
                row = self.rows.setdefault(r, {})
                row[c] = row.get(c, 0) + value
                if row[c] == 0:
                    del row[c]
                    self.cols[c].discard(r)
                else:
                    self.cols.setdefault(c, set()).add(r)
        for c in [c for c, rs in self.cols.items() if not rs]:
            del self.cols[c]
        for r in [r for r, row in self.rows.items() if not row]:
            del self.rows[r]

    def _set(self, r: int, c: int, value: int) -> None:
        row = self.rows[r]
        if value:
            if c not in row:
                self.cols.setdefault(c, set()).add(r)
            row[c] = value
        elif c in row:
            del row[c]
            col = self.cols[c]
            col.discard(r)
            if not col:
                del self.cols[c]

    def pivot_unit(self, r: int, c: int) -> None:
        """Clear column c with row r (entry +-1), then drop row r and column c."""
        pivot_row = self.rows[r]
        unit = pivot_row[c]
        for other in [o for o in self.cols[c] if o != r]:
            factor = self.rows[other][c] * unit
            other_row = self.rows[other]
            for cc, value in pivot_row.items():
                self._set(other, cc, other_row.get(cc, 0) - factor * value)
            if not other_row:
                del self.rows[other]
        # Column c is now zero outside row r, so column operations clear the rest of row r.
        for cc in list(pivot_row):
            col = self.cols[cc]
            col.discard(r)
            if not col:
                del self.cols[cc]
        del self.rows[r]

    def eliminate_units(self) -> int:
        """Repeatedly pivot on unit entries; returns the number of pivots."""
        pivots = 0
        progress = True
        while progress:
            progress = False
            for c in sorted(self.cols, key=lambda c: (len(self.cols[c]), c)):
                rows = self.cols.get(c)
                if not rows:
                    continue
                best = None
                for r in rows:
                    if self.rows[r][c] in (1, -1) and (
                        best is None or (len(self.rows[r]), r) < (len(self.rows[best]), best)
                    ):
                        best = r
                if best is not None:
                    self.pivot_unit(best, c)
                    pivots += 1
                    progress = True
        return pivots

    def to_dense(self) -> list[list[int]]:
        row_ids = sorted(self.rows)
        col_ids = sorted(self.cols)
        col_index = {c: j for j, c in enumerate(col_ids)}
        dense = [[0] * len(col_ids) for _ in row_ids]
        for i, r in enumerate(row_ids):
            for c, value in self.rows[r].items():
                dense[i][col_index[c]] = value
        return dense


def _dense_invariant_factors(matrix: list[list[int]]) -> list[int]:
    """Classic pivot-and-reduce Smith normal form on a dense copy."""
    a = [row[:] for row in matrix]
    m = len(a)
    n = len(a[0]) if m else 0
    factors: list[int] = []
    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if a[i][j] and (best is None or abs(a[i][j]) < best[0]):
                    best = (abs(a[i][j]), i, j)
        if best is None:
            break
        _, i, j = best
        a[t], a[i] = a[i], a[t]
        for row in a:
            row[t], row[j] = row[j], row[t]

        while True:
            # Move the smallest nonzero entry of row t / column t onto the pivot.
            candidates = [(abs(a[i][t]), i, t) for i in range(t, m) if a[i][t]]
            candidates += [(abs(a[t][j]), t, j) for j in range(t + 1, n) if a[t][j]]
            _, i, j = min(candidates)
            if i != t:
                a[t], a[i] = a[i], a[t]
            if j != t:
                for row in a:
                    row[t], row[j] = row[j], row[t]
            pivot = a[t][t]

            dirty = False
            for i in range(t + 1, m):
                if a[i][t]:
                    q = a[i][t] // pivot
                    row_i, row_t = a[i], a[t]
                    for j in range(t, n):
                        row_i[j] -= q * row_t[j]
                    dirty = dirty or a[i][t] != 0
            for j in range(t + 1, n):
                if a[t][j]:
                    q = a[t][j] // pivot
                    for row in a:
                        row[j] -= q * row[t]
                    dirty = dirty or a[t][j] != 0
            if dirty:
                continue

            offender = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if a[i][j] % pivot),
                None,
            )
            if offender is None:
                break
            row_o, row_t = a[offender], a[t]
            for j in range(t, n):
                row_t[j] += row_o[j]

        factors.append(abs(a[t][t]))
        t += 1
    return factors


def smith_from_entries(entries: Iterable[tuple[int, int, int]]) -> SmithForm:
    """
    Invariant factors of a sparse matrix given as (row, column, value) triples.

    @brief Sparse Smith normal form.
    """
    sparse = _SparseMatrix(entries)
    units = sparse.eliminate_units()
    rest = _dense_invariant_factors(sparse.to_dense()) if sparse.rows else []
    return SmithForm(tuple([1] * units + sorted(rest)))


def smith_normal_form(matrix: Sequence[Sequence[int]]) -> SmithForm:
    """
    Invariant factors and rank of an integer matrix.

    @brief Smith normal form diagonal.
    @param matrix Dense matrix as a sequence of rows
    @return SmithForm with d1 | d2 | ... and rank
    """
    entries = (
        (i, j, int(value)) for i, row in enumerate(matrix) for j, value in enumerate(row) if value
    )
    return smith_from_entries(entries)
