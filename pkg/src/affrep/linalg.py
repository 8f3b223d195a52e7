"""Sparse exact linear algebra over the rationals.

Vectors are dicts {index: Fraction} with no stored zeros.  Matrices keep a
column-major sparse layout, which makes applying a matrix to a vector (the
hot path everywhere in this package) a handful of dict lookups.  Row
reduction uses the leftmost-pivot rule throughout so that every echelon
basis, kernel and chain computed here is bit-reproducible.
"""

from __future__ import annotations

from fractions import Fraction

Vec = dict  # {index: Fraction}


def vec_is_zero(v: Vec) -> bool:
    return not v

def vec_scale(v: Vec, c) -> Vec:
    c = Fraction(c)
    if not c:
        return {}
    return {i: x * c for i, x in v.items()}

def vec_add_scaled(v: Vec, w: Vec, c) -> Vec:
    """v + c*w as a fresh dict."""
    c = Fraction(c)
    out = dict(v)
    if not c:
        return out
    for i, x in w.items():
        val = out.get(i, 0) + c * x
        if val:
            out[i] = val
        else:
            out.pop(i, None)
    return out

def vec_pivot(v: Vec):
    """Smallest index with a nonzero entry, or None."""
    return min(v) if v else None


class SMat:
    """Sparse matrix, column-major: cols[c] = {row: value}."""

    __slots__ = ("nrows", "ncols", "cols")

    def __init__(self, nrows: int, ncols: int, cols=None):
        self.nrows = nrows
        self.ncols = ncols
        self.cols: dict[int, Vec] = cols if cols is not None else {}

    @classmethod
    def zero(cls, nrows, ncols):
        return cls(nrows, ncols)

    @classmethod
    def identity(cls, n):
        return cls(n, n, {i: {i: Fraction(1)} for i in range(n)})

    @classmethod
    def from_entries(cls, nrows, ncols, entries):
        """entries: iterable of (row, col, value); values accumulate."""
        m = cls(nrows, ncols)
        for r, c, v in entries:
            m.add_entry(r, c, v)
        return m

    def add_entry(self, r, c, v):
        v = Fraction(v)
        if not v:
            return
        col = self.cols.setdefault(c, {})
        val = col.get(r, 0) + v
        if val:
            col[r] = val
        else:
            del col[r]
            if not col:
                del self.cols[c]

    def entry(self, r, c) -> Fraction:
        return self.cols.get(c, {}).get(r, Fraction(0))

    def is_zero(self) -> bool:
        return not self.cols

    def apply(self, v: Vec) -> Vec:
        """Matrix times column vector."""
        out: Vec = {}
        for c, x in v.items():
            col = self.cols.get(c)
            if not col:
                continue
            for r, a in col.items():
                val = out.get(r, 0) + a * x
                if val:
                    out[r] = val
                else:
                    del out[r]
        return out

    def matmul(self, other: "SMat") -> "SMat":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        cols = {}
        for c, col in other.cols.items():
            newcol = self.apply(col)
            if newcol:
                cols[c] = newcol
        return SMat(self.nrows, other.ncols, cols)

    def add(self, other: "SMat") -> "SMat":
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("shape mismatch")
        out = SMat(self.nrows, self.ncols, {c: dict(col) for c, col in self.cols.items()})
        for c, col in other.cols.items():
            for r, v in col.items():
                out.add_entry(r, c, v)
        return out

    def scale(self, c) -> "SMat":
        c = Fraction(c)
        if not c:
            return SMat(self.nrows, self.ncols)
        return SMat(
            self.nrows, self.ncols,
            {j: {r: v * c for r, v in col.items()} for j, col in self.cols.items()},
        )

    def sub(self, other: "SMat") -> "SMat":
        return self.add(other.scale(-1))

    def commutator(self, other: "SMat") -> "SMat":
        return self.matmul(other).sub(other.matmul(self))

    def neg_transpose(self) -> "SMat":
        """-A^T, the dual of a Lie algebra action."""
        cols: dict[int, Vec] = {}
        for c, col in self.cols.items():
            for r, v in col.items():
                cols.setdefault(r, {})[c] = -v
        return SMat(self.ncols, self.nrows, cols)

    def kron(self, other: "SMat") -> "SMat":
        cols: dict[int, Vec] = {}
        on = other.nrows
        oc = other.ncols
        for c1, col1 in self.cols.items():
            for c2, col2 in other.cols.items():
                col = {}
                for r1, v1 in col1.items():
                    for r2, v2 in col2.items():
                        col[r1 * on + r2] = v1 * v2
                cols[c1 * oc + c2] = col
        return SMat(self.nrows * on, self.ncols * oc, cols)

    def direct_sum(self, other: "SMat") -> "SMat":
        cols = {c: dict(col) for c, col in self.cols.items()}
        for c, col in other.cols.items():
            cols[self.ncols + c] = {self.nrows + r: v for r, v in col.items()}
        return SMat(self.nrows + other.nrows, self.ncols + other.ncols, cols)

    def __eq__(self, other):
        if not isinstance(other, SMat):
            return NotImplemented
        return (self.nrows, self.ncols) == (other.nrows, other.ncols) and self.cols == other.cols

    def to_dense(self) -> list[list[Fraction]]:
        out = [[Fraction(0)] * self.ncols for _ in range(self.nrows)]
        for c, col in self.cols.items():
            for r, v in col.items():
                out[r][c] = v
        return out

    @classmethod
    def from_dense(cls, rows) -> "SMat":
        nr = len(rows)
        nc = len(rows[0]) if nr else 0
        m = cls(nr, nc)
        for r, row in enumerate(rows):
            for c, v in enumerate(row):
                m.add_entry(r, c, v)
        return m


class Echelon:
    """Reduced row echelon accumulator over sparse vectors.

    Pivot rule: first nonzero coordinate (smallest index).  Rows are kept
    mutually reduced with pivot entry 1, so coordinates of a vector in the
    accumulated basis can be read off at the pivots.
    """

    def __init__(self):
        self.rows: dict[int, Vec] = {}  # pivot -> row

    def __len__(self):
        return len(self.rows)

    def reduce(self, v: Vec) -> Vec:
        # rows are mutually reduced, so one ascending pass over pivots suffices
        out = dict(v)
        for p in sorted(self.rows):
            c = out.get(p)
            if c:
                out = vec_add_scaled(out, self.rows[p], -c)
        return out

    def insert(self, v: Vec):
        """Reduce v; if independent add it and return its pivot, else None."""
        res = self.reduce(v)
        if not res:
            return None
        p = vec_pivot(res)
        row = vec_scale(res, Fraction(1) / res[p])
        # keep full reduction: clear the new pivot from existing rows
        for q, r in self.rows.items():
            if p in r:
                self.rows[q] = vec_add_scaled(r, row, -r[p])
        self.rows[p] = row
        return p

    def coords(self, v: Vec):
        """Coefficients {pivot: c} with v = sum c * row; None if not in span."""
        out = dict(v)
        coeff: dict[int, Fraction] = {}
        for p in sorted(self.rows):
            c = out.get(p)
            if c:
                coeff[p] = c
                out = vec_add_scaled(out, self.rows[p], -c)
        if out:
            return None
        return coeff

    def contains(self, v: Vec) -> bool:
        return not self.reduce(v)

    def basis(self) -> list[Vec]:
        """Rows in pivot order."""
        return [self.rows[p] for p in sorted(self.rows)]


def rank(vectors) -> int:
    ech = Echelon()
    for v in vectors:
        ech.insert(v)
    return len(ech)


def nullspace(equations: list[Vec], variables: list[int]) -> list[Vec]:
    """Basis of {x supported on `variables` : each equation row dotted with x
    vanishes}.  Equations are sparse rows over the variable indices.
    Deterministic: free variables in increasing order, pivot rule as above.
    """
    ech = Echelon()
    for eq in equations:
        ech.insert(eq)
    pivots = set(ech.rows)
    free = [v for v in variables if v not in pivots]
    basis = []
    for f in free:
        sol: Vec = {f: Fraction(1)}
        # back-substitute: pivot variable p satisfies x_p = -sum_{j>p} row[j] x_j
        for p in sorted(ech.rows, reverse=True):
            row = ech.rows[p]
            s = Fraction(0)
            for j, c in row.items():
                if j == p:
                    continue
                if j in sol:
                    s += c * sol[j]
            if s:
                sol[p] = -s
        basis.append(sol)
    return basis


def invert(mat: SMat) -> SMat:
    """Inverse of a square matrix via Gauss-Jordan; raises if singular."""
    if mat.nrows != mat.ncols:
        raise ValueError("not square")
    n = mat.nrows
    a = mat.to_dense()
    inv = [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = None
        for r in range(col, n):
            if a[r][col]:
                piv = r
                break
        if piv is None:
            raise ValueError("matrix is singular")
        a[col], a[piv] = a[piv], a[col]
        inv[col], inv[piv] = inv[piv], inv[col]
        f = a[col][col]
        a[col] = [x / f for x in a[col]]
        inv[col] = [x / f for x in inv[col]]
        for r in range(n):
            if r != col and a[r][col]:
                g = a[r][col]
                a[r] = [x - g * y for x, y in zip(a[r], a[col])]
                inv[r] = [x - g * y for x, y in zip(inv[r], inv[col])]
    return SMat.from_dense(inv)


# --- small multivariate polynomial helpers (exponent tuple -> Fraction) ---

def poly_zero() -> dict:
    return {}

def poly_const(c, nvars: int) -> dict:
    c = Fraction(c)
    return {(0,) * nvars: c} if c else {}

def poly_var(i: int, nvars: int) -> dict:
    e = [0] * nvars
    e[i] = 1
    return {tuple(e): Fraction(1)}

def poly_add_scaled(p: dict, q: dict, c) -> dict:
    c = Fraction(c)
    out = dict(p)
    for e, v in q.items():
        val = out.get(e, 0) + c * v
        if val:
            out[e] = val
        else:
            out.pop(e, None)
    return out

def poly_mul(p: dict, q: dict) -> dict:
    out: dict = {}
    for e1, v1 in p.items():
        for e2, v2 in q.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            val = out.get(e, 0) + v1 * v2
            if val:
                out[e] = val
            else:
                del out[e]
    return out

def poly_scale(p: dict, c) -> dict:
    c = Fraction(c)
    if not c:
        return {}
    return {e: v * c for e, v in p.items()}

def poly_degree(p: dict) -> int:
    """Total degree; -1 for the zero polynomial."""
    if not p:
        return -1
    return max(sum(e) for e in p)

def poly_eval(p: dict, point) -> Fraction:
    total = Fraction(0)
    for e, c in p.items():
        term = c
        for x, k in zip(point, e):
            for _ in range(k):
                term *= x
        total += term
    return total
