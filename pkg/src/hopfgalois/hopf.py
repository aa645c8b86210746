"""Finite-dimensional algebras and Hopf algebras by structure constants.

Vectors over a basis are sparse dicts {index: Scalar}.  Multiplication
tables hold the product of basis elements i and j as a sparse vector;
comultiplications are lists of (coefficient, j, k) triples per basis
element, meaning e_i maps to the sum of coefficient * e_j (x) e_k.
"""

from __future__ import annotations

import itertools

from gmpy2 import mpq

from .errors import InputError
from .field import scalar_from_json
from .linalg import ExactMatrix, solve_sparse, sv_add_into, sv_scale
from .report import Report

__all__ = [
    "Algebra",
    "TensorAlgebra",
    "Hopf",
    "LinearMap",
    "verify_algebra",
    "verify_hopf",
    "convolution",
    "convolution_unit",
    "convolution_inverse",
    "build_taft",
    "build_group_algebra",
    "hopf_to_json",
    "hopf_from_json",
]


class Algebra:
    """Unital associative algebra with an explicit multiplication table."""

    def __init__(self, fld, labels, mult, unit=None):
        self.field = fld
        self.labels = list(labels)
        self.dim = len(self.labels)
        self.mult = mult
        self.unit = unit if unit is not None else {0: fld.one}

    def mrow(self, i, j):
        """Product of basis elements i and j as a sparse vector."""
        return self.mult[i][j]

    def basis_vec(self, i):
        return {i: self.field.one}

    def mul(self, u, v):
        out = {}
        for i, ci in u.items():
            for j, cj in v.items():
                sv_add_into(out, self.mrow(i, j), ci * cj)
        return out

    def power(self, v, k):
        out = dict(self.unit)
        for _ in range(k):
            out = self.mul(out, v)
        return out

    def show(self, vec):
        """Human-readable form of a sparse vector in this basis."""
        if not vec:
            return "0"
        parts = []
        for i in sorted(vec):
            c = vec[i]
            lbl = self.labels[i]
            parts.append(lbl if c == self.field.one else f"({c})*{lbl}")
        return " + ".join(parts)


class TensorAlgebra(Algebra):
    """Tensor product of two algebras, multiplied factorwise.

    Basis index of a (x) b is index(a) * dim(B) + index(b); products are
    computed on demand instead of tabulated.
    """

    def __init__(self, left, right):
        assert left.field is right.field
        self.left = left
        self.right = right
        labels = [
            f"{la}(x){lb}" for la in left.labels for lb in right.labels
        ]
        unit = {}
        for i, c in left.unit.items():
            for j, d in right.unit.items():
                unit[i * right.dim + j] = c * d
        super().__init__(left.field, labels, None, unit)

    def pair(self, i):
        return divmod(i, self.right.dim)

    def mrow(self, i, j):
        a1, b1 = self.pair(i)
        a2, b2 = self.pair(j)
        pa = self.left.mrow(a1, a2)
        pb = self.right.mrow(b1, b2)
        out = {}
        for k, c in pa.items():
            for l, d in pb.items():
                out[k * self.right.dim + l] = c * d
        return out

    def tensor_vec(self, u, v):
        """The element u (x) v from sparse vectors over the factors."""
        out = {}
        for i, c in u.items():
            for j, d in v.items():
                out[i * self.right.dim + j] = c * d
        return out


class LinearMap:
    """A linear map stored as a matrix in column convention.

    Column i holds the image of domain basis element i.
    """

    def __init__(self, matrix, domain_labels=None, codomain_labels=None):
        self.matrix = matrix
        self.domain_dim = matrix.ncols
        self.codomain_dim = matrix.nrows
        self.domain_labels = domain_labels
        self.codomain_labels = codomain_labels

    @classmethod
    def from_columns(cls, fld, codomain_dim, columns, **kw):
        n = len(columns)
        ent = [fld.zero] * (codomain_dim * n)
        for j, col in enumerate(columns):
            for i, c in col.items():
                ent[i * n + j] = c
        return cls(ExactMatrix(fld, codomain_dim, n, ent), **kw)

    @classmethod
    def identity(cls, fld, n, **kw):
        return cls(ExactMatrix.identity(fld, n), **kw)

    def column(self, j):
        m = self.matrix
        return {i: m[i, j] for i in range(m.nrows) if m[i, j]}

    def apply(self, vec):
        out = {}
        for j, c in vec.items():
            sv_add_into(out, self.column(j), c)
        return out

    def compose(self, other):
        """self after other."""
        return LinearMap(
            self.matrix @ other.matrix,
            domain_labels=other.domain_labels,
            codomain_labels=self.codomain_labels,
        )

    def inverse(self):
        inv = self.matrix.inverse()
        if inv is None:
            return None
        return LinearMap(
            inv,
            domain_labels=self.codomain_labels,
            codomain_labels=self.domain_labels,
        )

    def __eq__(self, other):
        return isinstance(other, LinearMap) and self.matrix == other.matrix

    def __repr__(self):
        return f"LinearMap({self.domain_dim} -> {self.codomain_dim})"


class Hopf:
    """Hopf algebra: an Algebra plus comultiplication, counit and antipode.

    comult[i] is a list of (coefficient, j, k) triples; counit is a dense
    list of Scalars; antipode is a LinearMap, with its inverse computed
    eagerly when it exists.
    """

    def __init__(self, algebra, comult, counit, antipode):
        self.algebra = algebra
        self.field = algebra.field
        self.dim = algebra.dim
        self.labels = algebra.labels
        self.comult = comult
        self.counit = counit
        self.antipode = antipode
        self.antipode_inv = antipode.inverse()
        self.square = TensorAlgebra(algebra, algebra)

    # algebra passthroughs
    @property
    def unit(self):
        return self.algebra.unit

    def mul(self, u, v):
        return self.algebra.mul(u, v)

    def mrow(self, i, j):
        return self.algebra.mrow(i, j)

    def basis_vec(self, i):
        return self.algebra.basis_vec(i)

    def show(self, vec):
        return self.algebra.show(vec)

    def delta(self, vec):
        """Comultiplication as a sparse vector over the tensor square."""
        n = self.dim
        out = {}
        for i, ci in vec.items():
            for c, j, k in self.comult[i]:
                idx = j * n + k
                s = out.get(idx, self.field.zero) + ci * c
                if s:
                    out[idx] = s
                else:
                    out.pop(idx, None)
        return out

    def eps(self, vec):
        acc = self.field.zero
        for i, c in vec.items():
            acc += c * self.counit[i]
        return acc

    def s_vec(self, vec):
        return self.antipode.apply(vec)

    def s_inv_vec(self, vec):
        assert self.antipode_inv is not None
        return self.antipode_inv.apply(vec)


# ---------------------------------------------------------------------------
# verifiers

def verify_algebra(a):
    rep = Report("algebra")
    fld = a.field
    ok_unit = True
    wit = None
    for i in range(a.dim):
        left = a.mul(a.unit, a.basis_vec(i))
        right = a.mul(a.basis_vec(i), a.unit)
        if left != a.basis_vec(i) or right != a.basis_vec(i):
            ok_unit, wit = False, a.labels[i]
            break
    rep.add("unit", ok_unit, wit)

    ok_assoc = True
    wit = None
    for i in range(a.dim):
        ei = a.basis_vec(i)
        for j in range(a.dim):
            ij = a.mrow(i, j)
            ej = a.basis_vec(j)
            for k in range(a.dim):
                lhs = a.mul(ij, a.basis_vec(k))
                rhs = a.mul(ei, a.mul(ej, a.basis_vec(k)))
                if lhs != rhs:
                    ok_assoc = False
                    wit = f"({a.labels[i]}, {a.labels[j]}, {a.labels[k]})"
                    break
            if not ok_assoc:
                break
        if not ok_assoc:
            break
    rep.add("associativity", ok_assoc, wit)
    return rep


def _tensor3(h, side, i):
    """(Delta (x) id) Delta e_i if side == 'left', else (id (x) Delta) Delta e_i."""
    n = h.dim
    out = {}
    for c, j, k in h.comult[i]:
        if side == "left":
            for c2, a, b in h.comult[j]:
                idx = (a * n + b) * n + k
                s = out.get(idx, h.field.zero) + c * c2
                if s:
                    out[idx] = s
                else:
                    out.pop(idx, None)
        else:
            for c2, a, b in h.comult[k]:
                idx = (j * n + a) * n + b
                s = out.get(idx, h.field.zero) + c * c2
                if s:
                    out[idx] = s
                else:
                    out.pop(idx, None)
    return out


def verify_hopf(h):
    rep = verify_algebra(h.algebra)
    rep.subject = "hopf"
    n = h.dim
    fld = h.field

    ok, wit = True, None
    for i in range(n):
        if _tensor3(h, "left", i) != _tensor3(h, "right", i):
            ok, wit = False, h.labels[i]
            break
    rep.add("coassociativity", ok, wit)

    ok, wit = True, None
    for i in range(n):
        lhs, rhs = {}, {}
        for c, j, k in h.comult[i]:
            sv_add_into(lhs, {k: c * h.counit[j]})
            sv_add_into(rhs, {j: c * h.counit[k]})
        if lhs != h.basis_vec(i) or rhs != h.basis_vec(i):
            ok, wit = False, h.labels[i]
            break
    rep.add("counit", ok, wit)

    ok, wit = True, None
    if h.delta(h.unit) != h.square.unit:
        ok, wit = False, "unit"
    else:
        for i in range(n):
            di = h.delta(h.basis_vec(i))
            for j in range(n):
                lhs = h.delta(h.mrow(i, j))
                rhs = h.square.mul(di, h.delta(h.basis_vec(j)))
                if lhs != rhs:
                    ok, wit = False, f"({h.labels[i]}, {h.labels[j]})"
                    break
            if not ok:
                break
    rep.add("comultiplication is an algebra map", ok, wit)

    ok, wit = True, None
    if h.eps(h.unit) != fld.one:
        ok, wit = False, "unit"
    else:
        for i in range(n):
            for j in range(n):
                if h.eps(h.mrow(i, j)) != h.counit[i] * h.counit[j]:
                    ok, wit = False, f"({h.labels[i]}, {h.labels[j]})"
                    break
            if not ok:
                break
    rep.add("counit is an algebra map", ok, wit)

    ok, wit = True, None
    for i in range(n):
        left, right = {}, {}
        for c, j, k in h.comult[i]:
            sv_add_into(left, h.mul(h.s_vec(h.basis_vec(j)), h.basis_vec(k)), c)
            sv_add_into(right, h.mul(h.basis_vec(j), h.s_vec(h.basis_vec(k))), c)
        target = sv_scale(h.unit, h.counit[i])
        if left != target or right != target:
            ok, wit = False, h.labels[i]
            break
    rep.add("antipode", ok, wit)

    if h.antipode_inv is not None:
        rep.add(
            "antipode inverse",
            h.antipode_inv.matrix @ h.antipode.matrix
            == ExactMatrix.identity(fld, n),
        )
    return rep


# ---------------------------------------------------------------------------
# convolution algebra of maps C -> A

def convolution(f, g, coalg, alg):
    """(f * g)(c) = f(c_(1)) g(c_(2)) for maps from coalgebra to algebra."""
    cols = []
    for i in range(coalg.dim):
        out = {}
        for c, j, k in coalg.comult[i]:
            sv_add_into(out, alg.mul(f.apply({j: coalg.field.one}),
                                     g.apply({k: coalg.field.one})), c)
        cols.append(out)
    return LinearMap.from_columns(alg.field, alg.dim, cols)


def convolution_unit(coalg, alg):
    """The convolution identity: unit of A composed with the counit of C."""
    cols = [sv_scale(alg.unit, coalg.counit[i]) for i in range(coalg.dim)]
    return LinearMap.from_columns(alg.field, alg.dim, cols)


def convolution_inverse(f, coalg, alg):
    """Two-sided convolution inverse of f, or None.

    Linear in the unknown map g, so both conditions f*g = g*f = unit are
    solved as one exact linear system.
    """
    fld = alg.field
    m, n = alg.dim, coalg.dim
    # unknown index of g[t, k] is k * m + t
    rows = {}

    def put(eq, var, coef):
        if coef:
            row = rows.setdefault(eq, {})
            s = row.get(var, fld.zero) + coef
            if s:
                row[var] = s
            else:
                row.pop(var, None)

    rhs = {}
    eqs = 0
    for side in (0, 1):
        for i in range(n):
            base = eqs
            eqs += m
            for r, c in sv_scale(alg.unit, coalg.counit[i]).items():
                rhs[base + r] = c
            for c, j, k in coalg.comult[i]:
                if side == 0:
                    fixed = f.apply({j: fld.one})
                    free = k
                else:
                    fixed = f.apply({k: fld.one})
                    free = j
                for s, cs in fixed.items():
                    for t in range(m):
                        if side == 0:
                            prod = alg.mrow(s, t)
                        else:
                            prod = alg.mrow(t, s)
                        for r, cr in prod.items():
                            put(base + r, free * m + t, c * cs * cr)
    row_list = [rows.get(e, {}) for e in range(eqs)]
    sol = solve_sparse(row_list, n * m, [rhs])[0]
    if sol is None:
        return None
    cols = []
    for k in range(n):
        cols.append({t: sol[k * m + t] for t in range(m) if k * m + t in sol})
    return LinearMap.from_columns(fld, m, cols)


# ---------------------------------------------------------------------------
# builders

def _taft_label(i, j, xsym="x", gsym="g"):
    parts = []
    if i == 1:
        parts.append(xsym)
    elif i > 1:
        parts.append(f"{xsym}^{i}")
    if j == 1:
        parts.append(gsym)
    elif j > 1:
        parts.append(f"{gsym}^{j}")
    return "".join(parts) if parts else "1"


def taft_multiplication(fld, N, q, s, xsym="x", gsym="g"):
    """Multiplication table for the algebra with relations
    x^N = s, g^N = 1, x g = q g x, on the basis x^i g^j ordered by (i, j)."""
    labels = [_taft_label(i, j, xsym, gsym) for i in range(N) for j in range(N)]
    mult = []
    for i in range(N):
        for j in range(N):
            row = []
            for k in range(N):
                for l in range(N):
                    coef = q ** (-j * k)
                    deg = i + k
                    jl = (j + l) % N
                    if deg < N:
                        row.append({deg * N + jl: coef})
                    else:
                        val = coef * s
                        row.append({(deg - N) * N + jl: val} if val else {})
            mult.append(row)
    return Algebra(fld, labels, mult)


def build_taft(fld, N, q_index=1):
    """The N^2-dimensional Taft Hopf algebra with q = primitive root zeta_N^q_index."""
    q = fld.root_of_unity(N, q_index)
    alg = taft_multiplication(fld, N, q, fld.zero)
    sq = TensorAlgebra(alg, alg)

    def vec_x():
        return alg.basis_vec(N)  # x = x^1 g^0

    def vec_g():
        return alg.basis_vec(1)  # g = x^0 g^1

    dx = sv_add_into(sq.tensor_vec(alg.unit, vec_x()),
                     sq.tensor_vec(vec_x(), vec_g()))
    dg = sq.tensor_vec(vec_g(), vec_g())
    comult = []
    for i in range(N):
        di = sq.power(dx, i)
        for j in range(N):
            dij = sq.mul(di, sq.power(dg, j))
            comult.append([(c, *divmod(idx, alg.dim)) for idx, c in sorted(dij.items())])

    counit = []
    for i in range(N):
        for j in range(N):
            counit.append(fld.one if i == 0 else fld.zero)

    # the antipode axiom on Delta(x) = 1(x)x + x(x)g forces S(x) = -x g^{-1}
    ginv = alg.power(vec_g(), N - 1)
    sx = sv_scale(alg.mul(vec_x(), ginv), -fld.one)
    cols = []
    for i in range(N):
        for j in range(N):
            cols.append(alg.mul(alg.power(vec_g(), (N - j) % N), alg.power(sx, i)))
    antipode = LinearMap.from_columns(fld, alg.dim, cols)
    h = Hopf(alg, comult, counit, antipode)
    h.taft_n = N
    h.taft_q = q
    return h


def build_group_algebra(fld, invariant_factors):
    """Group algebra of Z_{n_1} x ... x Z_{n_k} with grouplike basis."""
    factors = list(invariant_factors)
    elements = list(itertools.product(*(range(n) for n in factors)))
    index = {g: i for i, g in enumerate(elements)}
    labels = ["e" if not any(g) else "g" + "".join(str(c) for c in g)
              for g in elements]
    if len(factors) == 1:
        labels = ["e" if g[0] == 0 else (f"g^{g[0]}" if g[0] > 1 else "g")
                  for g in elements]
    one = fld.one
    mult = [
        [{index[tuple((a + b) % n for a, b, n in zip(g, h, factors))]: one}
         for h in elements]
        for g in elements
    ]
    alg = Algebra(fld, labels, mult, unit={index[tuple(0 for _ in factors)]: one})
    comult = [[(one, i, i)] for i in range(alg.dim)]
    counit = [one] * alg.dim
    cols = [
        alg.basis_vec(index[tuple((-c) % n for c, n in zip(g, factors))])
        for g in elements
    ]
    antipode = LinearMap.from_columns(fld, alg.dim, cols)
    h = Hopf(alg, comult, counit, antipode)
    h.group_elements = elements
    h.group_index = index
    h.invariant_factors = factors
    return h


# ---------------------------------------------------------------------------
# JSON (de)serialization

def hopf_to_json(h):
    mult = []
    for i in range(h.dim):
        for j in range(h.dim):
            for k, c in sorted(h.algebra.mrow(i, j).items()):
                mult.append([i, j, k, c.to_json()])
    comult = []
    for i in range(h.dim):
        for c, j, k in h.comult[i]:
            comult.append([i, j, k, c.to_json()])
    return {
        "basis": h.labels,
        "mult": mult,
        "unit": [h.unit.get(i, h.field.zero).to_json() for i in range(h.dim)],
        "comult": comult,
        "counit": [c.to_json() for c in h.counit],
        "antipode": h.antipode.matrix.to_json(),
    }


def hopf_from_json(fld, data, path="$"):
    try:
        labels = list(data["basis"])
        n = len(labels)
        mult = [[{} for _ in range(n)] for _ in range(n)]
        for i, j, k, sc in data["mult"]:
            val = scalar_from_json(fld, sc)
            if val:
                mult[i][j][k] = val
        unit = {}
        for i, sc in enumerate(data["unit"]):
            val = scalar_from_json(fld, sc)
            if val:
                unit[i] = val
        alg = Algebra(fld, labels, mult, unit)
        comult = [[] for _ in range(n)]
        for i, j, k, sc in data["comult"]:
            comult[i].append((scalar_from_json(fld, sc), j, k))
        counit = [scalar_from_json(fld, sc) for sc in data["counit"]]
        ent = []
        for row in data["antipode"]:
            ent.extend(scalar_from_json(fld, sc) for sc in row)
        antipode = LinearMap(ExactMatrix(fld, n, n, ent))
        return Hopf(alg, comult, counit, antipode)
    except (KeyError, IndexError, TypeError, ValueError) as exc:
        raise InputError(path, f"malformed algebra description: {exc}") from exc
