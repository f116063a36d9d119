"""Exact integer matrices and lattice computations.

Everything here is arbitrary-precision: matrices are tuples of tuples of
Python ints.  Lattices are handled through columns: ``colspan(A)`` means the
subgroup of Z^n generated by the columns of A.
"""

from functools import cached_property

from .snf import smith_normal_form


class IntMat:
    """Immutable integer matrix with explicit shape (so 0 x n != m x 0)."""

    __slots__ = ("rows", "nrows", "ncols", "__dict__")

    def __init__(self, rows, nrows=None, ncols=None):
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        if nrows is None:
            nrows = len(rows)
        if ncols is None:
            if not rows:
                raise ValueError("ncols required for empty matrix")
            ncols = len(rows[0])
        if len(rows) != nrows or any(len(r) != ncols for r in rows):
            raise ValueError("ragged matrix")
        self.rows = rows
        self.nrows = nrows
        self.ncols = ncols

    @staticmethod
    def identity(n):
        return IntMat(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)), n, n)

    @staticmethod
    def zeros(m, n):
        return IntMat(((0,) * n,) * m, m, n)

    @staticmethod
    def from_cols(cols, nrows):
        cols = list(cols)
        return IntMat(tuple(tuple(c[i] for c in cols) for i in range(nrows)), nrows, len(cols))

    @staticmethod
    def diag(entries):
        n = len(entries)
        return IntMat(tuple(tuple(entries[i] if i == j else 0 for j in range(n)) for i in range(n)), n, n)

    def col(self, j):
        return tuple(r[j] for r in self.rows)

    def cols(self):
        return [self.col(j) for j in range(self.ncols)]

    def transpose(self):
        rows = tuple(tuple(r[j] for r in self.rows) for j in range(self.ncols))
        return IntMat(rows, self.ncols, self.nrows)

    def __mul__(self, other):
        if isinstance(other, IntMat):
            if self.ncols != other.nrows:
                raise ValueError("shape mismatch in product")
            bt = other.transpose().rows
            return IntMat(
                tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in bt) for row in self.rows),
                self.nrows,
                other.ncols,
            )
        return NotImplemented

    def apply(self, vec):
        if len(vec) != self.ncols:
            raise ValueError("vector length mismatch")
        return tuple(sum(a * b for a, b in zip(row, vec)) for row in self.rows)

    def __add__(self, other):
        self._same_shape(other)
        return IntMat(
            tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)),
            self.nrows,
            self.ncols,
        )

    def __sub__(self, other):
        self._same_shape(other)
        return IntMat(
            tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)),
            self.nrows,
            self.ncols,
        )

    def __neg__(self):
        return IntMat(tuple(tuple(-a for a in r) for r in self.rows), self.nrows, self.ncols)

    def scale(self, c):
        return IntMat(tuple(tuple(c * a for a in r) for r in self.rows), self.nrows, self.ncols)

    def _same_shape(self, other):
        if self.nrows != other.nrows or self.ncols != other.ncols:
            raise ValueError("shape mismatch")

    def __eq__(self, other):
        return (
            isinstance(other, IntMat)
            and self.nrows == other.nrows
            and self.ncols == other.ncols
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.nrows, self.ncols, self.rows))

    def is_zero(self):
        return all(all(x == 0 for x in r) for r in self.rows)

    def __repr__(self):
        return f"IntMat({list(map(list, self.rows))!r})"

    @staticmethod
    def hstack(mats):
        mats = [m for m in mats]
        if not mats:
            raise ValueError("need at least one matrix")
        nrows = mats[0].nrows
        if any(m.nrows != nrows for m in mats):
            raise ValueError("row count mismatch in hstack")
        rows = tuple(tuple(x for m in mats for x in (m.rows[i] if m.rows else ())) for i in range(nrows))
        return IntMat(rows, nrows, sum(m.ncols for m in mats))

    @staticmethod
    def vstack(mats):
        mats = [m for m in mats]
        if not mats:
            raise ValueError("need at least one matrix")
        ncols = mats[0].ncols
        if any(m.ncols != ncols for m in mats):
            raise ValueError("column count mismatch in vstack")
        return IntMat(tuple(r for m in mats for r in m.rows), sum(m.nrows for m in mats), ncols)

    @staticmethod
    def block_diag(mats):
        mats = list(mats)
        nrows = sum(m.nrows for m in mats)
        ncols = sum(m.ncols for m in mats)
        rows = [[0] * ncols for _ in range(nrows)]
        i0 = j0 = 0
        for m in mats:
            for i, r in enumerate(m.rows):
                rows[i0 + i][j0 : j0 + m.ncols] = list(r)
            i0 += m.nrows
            j0 += m.ncols
        return IntMat(rows, nrows, ncols)

    @cached_property
    def snf(self):
        """(U, D, V) with U*self*V = D in Smith normal form."""
        U, D, V = smith_normal_form(self.rows, self.nrows, self.ncols)
        return (
            IntMat(U, self.nrows, self.nrows),
            IntMat(D, self.nrows, self.ncols),
            IntMat(V, self.ncols, self.ncols),
        )

    @property
    def snf_diagonal(self):
        _, D, _ = self.snf
        return [D.rows[i][i] for i in range(min(self.nrows, self.ncols))]

    def det(self):
        if self.nrows != self.ncols:
            raise ValueError("det of non-square matrix")
        # Bareiss fraction-free elimination
        n = self.nrows
        if n == 0:
            return 1
        a = [list(r) for r in self.rows]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if a[k][k] == 0:
                piv = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
                if piv is None:
                    return 0
                a[k], a[piv] = a[piv], a[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
                a[i][k] = 0
            prev = a[k][k]
        return sign * a[n - 1][n - 1]


def solve(A, b):
    """One integer solution x of A x = b, or None."""
    U, D, V = A.snf
    c = U.apply(b)
    y = [0] * A.ncols
    n = min(A.nrows, A.ncols)
    for i in range(A.nrows):
        d = D.rows[i][i] if i < n else 0
        if d == 0:
            if c[i] != 0:
                return None
        else:
            if c[i] % d != 0:
                return None
            if i < A.ncols:
                y[i] = c[i] // d
    return V.apply(y)


def kernel(A):
    """Matrix whose columns are a basis of {x : A x = 0}."""
    _, D, V = A.snf
    n = min(A.nrows, A.ncols)
    free = [j for j in range(A.ncols) if j >= n or D.rows[j][j] == 0]
    return IntMat.from_cols([V.col(j) for j in free], A.ncols)


def lattice_basis(G):
    """Basis (as columns) of the lattice generated by the columns of G.

    Uses U G V = D: the nonzero columns of G V are d_i * (U^-1 e_i).
    """
    _, D, V = G.snf
    GV = G * V
    n = min(G.nrows, G.ncols)
    keep = [j for j in range(n) if D.rows[j][j] != 0]
    return IntMat.from_cols([GV.col(j) for j in keep], G.nrows)


def preimage_lattice(A, L):
    """Basis of the lattice {x : A x in colspan(L)}.

    A : m x s, L : m x k.  Always contains ker(A).
    """
    stacked = IntMat.hstack([A, L]) if L.ncols else A
    K = kernel(stacked)
    xpart = IntMat(K.rows[: A.ncols], A.ncols, K.ncols)
    return lattice_basis(xpart)


def solve_mod(A, b, L):
    """One x with A x = b modulo colspan(L), or None."""
    if L.ncols:
        full = solve(IntMat.hstack([A, L]), b)
        if full is None:
            return None
        return tuple(full[: A.ncols])
    return solve(A, b)


def in_colspan(A, v):
    return solve(A, v) is not None


def is_unimodular(A):
    return A.nrows == A.ncols and abs(A.det()) == 1
