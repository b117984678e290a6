"""Exact dense linear algebra over a coefficient field.

Matrices are lists of row lists holding field values (Fraction or int
mod p).  Everything is deterministic: pivots are chosen as the first
nonzero entry in column order, so identical inputs give identical
echelon forms, kernels and ranks.
"""

from __future__ import annotations

from .fields import Field


def copy_matrix(rows):
    return [list(r) for r in rows]


def rref(rows, field: Field):
    """Reduced row echelon form.

    Returns (echelon_rows, pivot_columns).  The input is not modified.
    """
    m = copy_matrix(rows)
    if not m:
        return m, []
    nrows, ncols = len(m), len(m[0])
    zero = field.zero
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pivot_row = None
        for i in range(r, nrows):
            if m[i][c] != zero:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        inv = field.inv(m[r][c])
        if inv != field.one:
            m[r] = [field.mul(inv, x) for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != zero:
                f = m[i][c]
                row_i, row_r = m[i], m[r]
                for j in range(c, ncols):
                    if row_r[j] != zero:
                        row_i[j] = field.sub(row_i[j], field.mul(f, row_r[j]))
        pivots.append(c)
        r += 1
    return m, pivots


def rank(rows, field: Field) -> int:
    return len(rref(rows, field)[1])


def nullspace(rows, ncols: int, field: Field):
    """Basis of the right kernel of the matrix, as a list of vectors.

    The canonical rref-based basis: one vector per free column, with 1
    in the free position.  Deterministic.
    """
    if not rows:
        one, zero = field.one, field.zero
        return [[one if i == j else zero for i in range(ncols)] for j in range(ncols)]
    m, pivots = rref(rows, field)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    zero, one = field.zero, field.one
    basis = []
    for fc in free:
        v = [zero] * ncols
        v[fc] = one
        for r, pc in enumerate(pivots):
            if m[r][fc] != zero:
                v[pc] = field.neg(m[r][fc])
        basis.append(v)
    return basis


def determinant(rows, field: Field):
    """Exact determinant by fraction-friendly Gaussian elimination."""
    n = len(rows)
    if n == 0:
        return field.one
    if any(len(r) != n for r in rows):
        raise ValueError("determinant of a non-square matrix")
    m = copy_matrix(rows)
    zero = field.zero
    det = field.one
    sign_flip = False
    for c in range(n):
        pivot_row = None
        for i in range(c, n):
            if m[i][c] != zero:
                pivot_row = i
                break
        if pivot_row is None:
            return zero
        if pivot_row != c:
            m[c], m[pivot_row] = m[pivot_row], m[c]
            sign_flip = not sign_flip
        det = field.mul(det, m[c][c])
        inv = field.inv(m[c][c])
        for i in range(c + 1, n):
            if m[i][c] != zero:
                f = field.mul(m[i][c], inv)
                for j in range(c, n):
                    if m[c][j] != zero:
                        m[i][j] = field.sub(m[i][j], field.mul(f, m[c][j]))
    return field.neg(det) if sign_flip else det


def mat_mul(a, b, field: Field):
    if not a or not b:
        return []
    n, k, m = len(a), len(b), len(b[0])
    zero = field.zero
    out = [[zero] * m for _ in range(n)]
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for t in range(k):
            x = ai[t]
            if x != zero:
                bt = b[t]
                for j in range(m):
                    if bt[j] != zero:
                        oi[j] = field.add(oi[j], field.mul(x, bt[j]))
    return out


def solve(rows, rhs, field: Field):
    """One solution x of A x = b, or None if inconsistent.

    Free variables are set to zero, so the solution is canonical.
    """
    if not rows:
        return [] if all(x == field.zero for x in rhs) else None
    ncols = len(rows[0])
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    m, pivots = rref(aug, field)
    zero = field.zero
    for r, row in enumerate(m):
        lead = next((c for c in range(ncols + 1) if row[c] != zero), None)
        if lead == ncols:
            return None
    x = [zero] * ncols
    for r, pc in enumerate(pivots):
        if pc < ncols:
            x[pc] = m[r][ncols]
    return x


class RowSpace:
    """Incrementally maintained row space in echelon (not reduced) form.

    Supports adding vectors and testing membership; the workhorse for
    graded-piece linear algebra (minimal generators, Tor quotients).
    Rows are kept sorted by pivot column with monic pivots; membership
    is one forward-elimination sweep.  No back-substitution is
    performed, which keeps add() linear in the current dimension.
    """

    __slots__ = ("field", "ncols", "rows", "pivot_of_row")

    def __init__(self, ncols: int, field: Field):
        self.field = field
        self.ncols = ncols
        self.rows = []            # echelon rows, sorted by pivot column
        self.pivot_of_row = []

    def _reduced(self, vec):
        field = self.field
        zero = field.zero
        sub, mul = field.sub, field.mul
        v = list(vec)
        ncols = self.ncols
        for row, pc in zip(self.rows, self.pivot_of_row):
            c = v[pc]
            if c != zero:
                for j in range(pc, ncols):
                    rj = row[j]
                    if rj != zero:
                        v[j] = sub(v[j], mul(c, rj))
        return v

    def contains(self, vec) -> bool:
        zero = self.field.zero
        return all(x == zero for x in self._reduced(vec))

    def add(self, vec) -> bool:
        """Insert vec; returns True if it enlarged the space."""
        field = self.field
        zero = field.zero
        v = self._reduced(vec)
        pivot = next((j for j, x in enumerate(v) if x != zero), None)
        if pivot is None:
            return False
        inv = field.inv(v[pivot])
        if inv != field.one:
            v = [field.mul(inv, x) for x in v]
        pos = 0
        while pos < len(self.pivot_of_row) and self.pivot_of_row[pos] < pivot:
            pos += 1
        self.rows.insert(pos, v)
        self.pivot_of_row.insert(pos, pivot)
        return True

    @property
    def dim(self) -> int:
        return len(self.rows)
