"""Exact dense/sparse linear algebra over a cyclotomic field.

Vectors are handled in two interchangeable forms: dense lists of Scalars
and sparse dicts {index: nonzero Scalar}.  All subspaces are kept in
canonical reduced row echelon form (first-nonzero-column pivoting, rows
processed top-down) so every basis and solver output is deterministic.
"""

from __future__ import annotations

__all__ = [
    "ExactMatrix",
    "SubspaceBasis",
    "QuotientSpace",
    "rref",
    "kernel",
    "solve_linear",
    "quotient_space",
]


# ---------------------------------------------------------------------------
# sparse vector helpers

def sv_from_dense(entries):
    return {i: c for i, c in enumerate(entries) if c}


def sv_to_dense(vec, n, zero):
    out = [zero] * n
    for i, c in vec.items():
        out[i] = c
    return out


def sv_add_into(dst, src, coef=None):
    """dst += coef * src, dropping entries that cancel."""
    if coef is None:
        for i, c in src.items():
            s = dst.get(i)
            s = c if s is None else s + c
            if s:
                dst[i] = s
            else:
                dst.pop(i, None)
    else:
        if not coef:
            return dst
        for i, c in src.items():
            s = dst.get(i)
            t = coef * c
            s = t if s is None else s + t
            if s:
                dst[i] = s
            else:
                dst.pop(i, None)
    return dst


def sv_scale(vec, coef):
    if not coef:
        return {}
    return {i: coef * c for i, c in vec.items()}


def sv_eq(u, v):
    return u == v


# ---------------------------------------------------------------------------
# sparse RREF engine

class _Echelon:
    """Incremental reduced row echelon form with unit pivots.

    Pivot columns can be restricted to a prefix of the column range so that
    augmented systems keep their right-hand sides out of the pivot search.
    """

    def __init__(self, pivot_limit=None):
        self.rows = []          # svec rows, sorted by pivot column
        self.pivots = []        # pivot column of each row
        self.overflow = []      # rows supported beyond pivot_limit only
        self.pivot_limit = pivot_limit

    def reduce(self, vec):
        """Fully reduce a copy of vec against the current rows."""
        vec = dict(vec)
        for p, row in zip(self.pivots, self.rows):
            c = vec.get(p)
            if c:
                sv_add_into(vec, row, -c)
        return vec

    def insert(self, vec):
        """Reduce vec and add it as a new pivot row if independent."""
        vec = self.reduce(vec)
        if not vec:
            return None
        lead = min(vec)
        if self.pivot_limit is not None and lead >= self.pivot_limit:
            self.overflow.append(vec)
            return None
        inv = vec[lead].inverse()
        vec = sv_scale(vec, inv)
        # back-eliminate from existing rows
        for row in self.rows:
            c = row.get(lead)
            if c:
                sv_add_into(row, vec, -c)
        idx = 0
        while idx < len(self.pivots) and self.pivots[idx] < lead:
            idx += 1
        self.pivots.insert(idx, lead)
        self.rows.insert(idx, vec)
        return lead

    def extend(self, vectors):
        for v in vectors:
            self.insert(v)
        return self

    @property
    def rank(self):
        return len(self.rows)


def echelon(vectors, pivot_limit=None):
    return _Echelon(pivot_limit).extend(vectors)


def kernel_sparse(rows, ncols, fld):
    """Canonical RREF basis of the null space of the matrix with the given rows."""
    ech = echelon(rows)
    pivset = set(ech.pivots)
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        vec = {f: fld.one}
        for p, row in zip(ech.pivots, ech.rows):
            c = row.get(f)
            if c:
                vec[p] = -c
        basis.append(vec)
    canon = echelon(basis)
    return SubspaceBasis(fld, ncols, canon.rows, canon.pivots)


def solve_sparse(rows, ncols, rhs_list):
    """Solve A x = b for each b in rhs_list; None entries mark inconsistency.

    rows are the sparse rows of A; right-hand sides are carried as extra
    columns ncols, ncols+1, ... so one elimination serves all of them.
    Free variables are set to zero.
    """
    aug = [dict(r) for r in rows]
    for j, rhs in enumerate(rhs_list):
        for i, c in rhs.items():
            if i >= len(aug):
                aug.extend({} for _ in range(i + 1 - len(aug)))
            if c:
                aug[i][ncols + j] = c
    ech = _Echelon(pivot_limit=ncols)
    for r in aug:
        if r:
            ech.insert(r)
    bad = set()
    for row in ech.overflow:
        for col in row:
            bad.add(col - ncols)
    sols = []
    for j in range(len(rhs_list)):
        if j in bad:
            sols.append(None)
            continue
        sol = {}
        for p, row in zip(ech.pivots, ech.rows):
            c = row.get(ncols + j)
            if c:
                sol[p] = c
        sols.append(sol)
    return sols


# ---------------------------------------------------------------------------
# public dense types

class ExactMatrix:
    """Dense matrix of Scalars, row-major."""

    def __init__(self, fld, nrows, ncols, entries):
        if len(entries) != nrows * ncols:
            raise ValueError("entry count does not match dimensions")
        self.field = fld
        self.nrows = nrows
        self.ncols = ncols
        self.entries = list(entries)

    @classmethod
    def from_rows(cls, fld, rows):
        nrows = len(rows)
        ncols = len(rows[0]) if rows else 0
        flat = []
        for r in rows:
            flat.extend(fld.scalar(x) for x in r)
        return cls(fld, nrows, ncols, flat)

    @classmethod
    def identity(cls, fld, n):
        ent = [fld.zero] * (n * n)
        for i in range(n):
            ent[i * n + i] = fld.one
        return cls(fld, n, n, ent)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.ncols + j]

    def row(self, i):
        return self.entries[i * self.ncols : (i + 1) * self.ncols]

    def rows(self):
        return [self.row(i) for i in range(self.nrows)]

    def sparse_rows(self):
        return [sv_from_dense(self.row(i)) for i in range(self.nrows)]

    def __eq__(self, other):
        return (
            isinstance(other, ExactMatrix)
            and self.nrows == other.nrows
            and self.ncols == other.ncols
            and self.entries == other.entries
        )

    def __matmul__(self, other):
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        fld = self.field
        out = [fld.zero] * (self.nrows * other.ncols)
        for i in range(self.nrows):
            for k in range(self.ncols):
                c = self[i, k]
                if c:
                    for j in range(other.ncols):
                        d = other[k, j]
                        if d:
                            out[i * other.ncols + j] += c * d
        return ExactMatrix(fld, self.nrows, other.ncols, out)

    def apply(self, vec):
        """Matrix times dense vector."""
        fld = self.field
        out = [fld.zero] * self.nrows
        for i in range(self.nrows):
            acc = fld.zero
            for j in range(self.ncols):
                c = self[i, j]
                if c and vec[j]:
                    acc += c * vec[j]
            out[i] = acc
        return out

    def inverse(self):
        """Exact inverse, or None if singular."""
        if self.nrows != self.ncols:
            return None
        n = self.nrows
        cols = []
        fld = self.field
        for j in range(n):
            cols.append({j: fld.one})
        sols = solve_sparse(self.sparse_rows(), n, cols)
        if any(s is None for s in sols):
            return None
        rk = echelon(self.sparse_rows()).rank
        if rk != n:
            return None
        ent = [fld.zero] * (n * n)
        for j, s in enumerate(sols):
            for i, c in s.items():
                ent[i * n + j] = c
        return ExactMatrix(fld, n, n, ent)

    def rank(self):
        return echelon(self.sparse_rows()).rank

    def to_json(self):
        return [[c.to_json() for c in self.row(i)] for i in range(self.nrows)]

    def __repr__(self):
        return f"ExactMatrix({self.nrows}x{self.ncols})"


def rref(m):
    """Canonical reduced row echelon form and its pivot columns."""
    ech = echelon(m.sparse_rows())
    fld = m.field
    ent = []
    for r in ech.rows:
        ent.extend(sv_to_dense(r, m.ncols, fld.zero))
    for _ in range(m.nrows - len(ech.rows)):
        ent.extend([fld.zero] * m.ncols)
    return ExactMatrix(fld, m.nrows, m.ncols, ent), list(ech.pivots)


class SubspaceBasis:
    """A subspace given by its canonical RREF basis rows."""

    def __init__(self, fld, ambient_dim, rows, pivots):
        self.field = fld
        self.ambient_dim = ambient_dim
        self.rows = rows          # list of svec, unit pivots, RREF
        self.pivots = list(pivots)

    @classmethod
    def from_vectors(cls, fld, ambient_dim, vectors):
        ech = echelon(
            v if isinstance(v, dict) else sv_from_dense([fld.scalar(x) for x in v])
            for v in vectors
        )
        return cls(fld, ambient_dim, ech.rows, ech.pivots)

    @property
    def dim(self):
        return len(self.rows)

    def basis_matrix(self):
        return ExactMatrix.from_rows(
            self.field,
            [sv_to_dense(r, self.ambient_dim, self.field.zero) for r in self.rows],
        ) if self.rows else ExactMatrix(self.field, 0, self.ambient_dim, [])

    def reduce(self, vec):
        """Remainder of a sparse vector modulo the subspace."""
        vec = dict(vec)
        for p, row in zip(self.pivots, self.rows):
            c = vec.get(p)
            if c:
                sv_add_into(vec, row, -c)
        return vec

    def contains(self, vec):
        return not self.reduce(vec)

    def coords(self, vec):
        """Coordinates in the RREF basis, or None if vec is outside."""
        out = [vec.get(p, self.field.zero) for p in self.pivots]
        if self.reduce(vec):
            return None
        return out

    def __eq__(self, other):
        return (
            isinstance(other, SubspaceBasis)
            and self.ambient_dim == other.ambient_dim
            and self.pivots == other.pivots
            and self.rows == other.rows
        )

    def __repr__(self):
        return f"SubspaceBasis(dim={self.dim}, ambient={self.ambient_dim})"


class QuotientSpace:
    """Ambient space modulo a relation subspace, with projection/section."""

    def __init__(self, fld, ambient_dim, relations):
        self.field = fld
        self.ambient_dim = ambient_dim
        self.relations = relations
        pivset = set(relations.pivots)
        self.free_cols = [j for j in range(ambient_dim) if j not in pivset]
        self.dim = len(self.free_cols)
        self._free_index = {j: k for k, j in enumerate(self.free_cols)}

    def project(self, vec):
        """Quotient coordinates (sparse) of an ambient sparse vector."""
        red = self.relations.reduce(vec)
        return {self._free_index[i]: c for i, c in red.items()}

    def section(self, qvec):
        """Canonical ambient representative of quotient coordinates."""
        return {self.free_cols[i]: c for i, c in qvec.items()}

    def projection_matrix(self):
        fld = self.field
        cols = [self.project({j: fld.one}) for j in range(self.ambient_dim)]
        ent = [fld.zero] * (self.dim * self.ambient_dim)
        for j, col in enumerate(cols):
            for i, c in col.items():
                ent[i * self.ambient_dim + j] = c
        return ExactMatrix(fld, self.dim, self.ambient_dim, ent)

    def section_matrix(self):
        fld = self.field
        ent = [fld.zero] * (self.ambient_dim * self.dim)
        for k, j in enumerate(self.free_cols):
            ent[j * self.dim + k] = fld.one
        return ExactMatrix(fld, self.ambient_dim, self.dim, ent)

    def __repr__(self):
        return f"QuotientSpace(dim={self.dim}, ambient={self.ambient_dim})"


def kernel(m):
    """Canonical basis of the null space of an ExactMatrix."""
    return kernel_sparse(m.sparse_rows(), m.ncols, m.field)


def solve_linear(m, rhs):
    """One solution of m x = rhs (free variables zero), or None."""
    rvec = rhs if isinstance(rhs, dict) else sv_from_dense(rhs)
    sol = solve_sparse(m.sparse_rows(), m.ncols, [rvec])[0]
    if sol is None:
        return None
    return sv_to_dense(sol, m.ncols, m.field.zero)


def quotient_space(fld, ambient_dim, relation_vectors):
    rel = SubspaceBasis.from_vectors(fld, ambient_dim, relation_vectors)
    return QuotientSpace(fld, ambient_dim, rel)
