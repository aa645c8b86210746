"""Right comodule algebras and coinvariant subspaces.

A coaction on an algebra A over a Hopf algebra H is stored like a
comultiplication: coaction[i] is a list of (coefficient, j, k) triples
meaning basis element i of A maps to the sum of coefficient * a_j (x) h_k.
"""

from __future__ import annotations

from .errors import ComoduleAxiomFailure
from .hopf import TensorAlgebra
from .linalg import kernel_sparse, sv_add_into
from .report import Report

__all__ = [
    "ComoduleAlgebra",
    "attach_coaction",
    "coinvariants",
    "diagonal_coaction",
    "coaction_of_coproduct",
]


class ComoduleAlgebra:
    """A verified right comodule algebra with its computed coinvariants."""

    def __init__(self, algebra, hopf, coaction, coinv, b_in_centre):
        self.algebra = algebra
        self.hopf = hopf
        self.field = algebra.field
        self.coaction = coaction
        self.coinvariants = coinv        # SubspaceBasis inside A
        self.b_in_centre = b_in_centre
        self.mixed = TensorAlgebra(algebra, hopf.algebra)

    @property
    def dim(self):
        return self.algebra.dim

    def coact(self, vec):
        """The coaction applied to a sparse vector of A, landing in A (x) H."""
        nh = self.hopf.dim
        out = {}
        for i, ci in vec.items():
            for c, j, k in self.coaction[i]:
                idx = j * nh + k
                s = out.get(idx, self.field.zero) + ci * c
                if s:
                    out[idx] = s
                else:
                    out.pop(idx, None)
        return out


def _coaction_rows(algebra, hopf, coaction):
    """Sparse rows of delta - (.)(x)1_H as a map A -> A(x)H."""
    na, nh = algebra.dim, hopf.dim
    rows = [dict() for _ in range(na * nh)]
    for i in range(na):
        for c, j, k in coaction[i]:
            sv_add_into(rows[j * nh + k], {i: c})
        for k, c in hopf.unit.items():
            sv_add_into(rows[i * nh + k], {i: -c})
    return rows


def coinvariants(algebra, hopf, coaction):
    """Canonical basis of {a : delta(a) = a (x) 1} inside A."""
    rows = _coaction_rows(algebra, hopf, coaction)
    return kernel_sparse(rows, algebra.dim, algebra.field)


def verify_comodule_axioms(algebra, hopf, coaction):
    """Comodule and comodule-algebra axioms, as a report."""
    rep = Report("comodule")
    fld = algebra.field
    na, nh = algebra.dim, hopf.dim

    # counit axiom: (id (x) eps) delta = id
    ok, wit = True, None
    for i in range(na):
        out = {}
        for c, j, k in coaction[i]:
            sv_add_into(out, {j: c * hopf.counit[k]})
        if out != algebra.basis_vec(i):
            ok, wit = False, algebra.labels[i]
            break
    rep.add("coaction counit axiom", ok, wit)

    # coassociativity: (delta (x) id) delta = (id (x) Delta) delta
    ok, wit = True, None
    for i in range(na):
        lhs, rhs = {}, {}
        for c, j, k in coaction[i]:
            for c2, a, b in coaction[j]:
                idx = (a * nh + b) * nh + k
                sv_add_into(lhs, {idx: c * c2})
            for c2, a, b in hopf.comult[k]:
                idx = (j * nh + a) * nh + b
                sv_add_into(rhs, {idx: c * c2})
        if lhs != rhs:
            ok, wit = False, algebra.labels[i]
            break
    rep.add("coaction coassociativity", ok, wit)

    # delta is a unital algebra map into A (x) H
    mixed = TensorAlgebra(algebra, hopf.algebra)

    def coact(vec):
        out = {}
        for i, ci in vec.items():
            for c, j, k in coaction[i]:
                sv_add_into(out, {j * nh + k: ci * c})
        return out

    ok, wit = True, None
    if coact(algebra.unit) != mixed.unit:
        ok, wit = False, "unit"
    else:
        for i in range(na):
            di = coact(algebra.basis_vec(i))
            for j in range(na):
                lhs = coact(algebra.mrow(i, j))
                rhs = mixed.mul(di, coact(algebra.basis_vec(j)))
                if lhs != rhs:
                    ok, wit = False, f"({algebra.labels[i]}, {algebra.labels[j]})"
                    break
            if not ok:
                break
    rep.add("coaction is an algebra map", ok, wit)
    return rep


def attach_coaction(algebra, hopf, coaction):
    """Verify the axioms and package the comodule algebra.

    Raises ComoduleAxiomFailure with the failing axiom and witness.
    Computes the coinvariant subalgebra and whether it is central in A.
    """
    rep = verify_comodule_axioms(algebra, hopf, coaction)
    if not rep.ok:
        bad = rep.failures()[0]
        raise ComoduleAxiomFailure(f"{bad['check']} (witness: {bad['witness']})")
    coinv = coinvariants(algebra, hopf, coaction)

    # closure under multiplication and unit membership
    for r in coinv.rows:
        for s in coinv.rows:
            if not coinv.contains(algebra.mul(r, s)):
                raise ComoduleAxiomFailure("coinvariants not closed under product")
    if not coinv.contains(algebra.unit):
        raise ComoduleAxiomFailure("coinvariants do not contain the unit")

    central = True
    for r in coinv.rows:
        for i in range(algebra.dim):
            e = algebra.basis_vec(i)
            if algebra.mul(r, e) != algebra.mul(e, r):
                central = False
                break
        if not central:
            break
    return ComoduleAlgebra(algebra, hopf, coaction, coinv, central)


def coaction_of_coproduct(hopf):
    """H coacting on itself by its comultiplication."""
    return hopf.comult


def diagonal_coaction(com):
    """The coaction on A (x) A sending a (x) a' to a_(0) (x) a'_(0) (x) a_(1) a'_(1)."""
    alg = com.algebra
    hopf = com.hopf
    na = alg.dim
    out = []
    for i in range(na):
        for j in range(na):
            triples = {}
            for c1, a1, h1 in com.coaction[i]:
                for c2, a2, h2 in com.coaction[j]:
                    coef = c1 * c2
                    for hk, hc in hopf.algebra.mrow(h1, h2).items():
                        key = (a1 * na + a2, hk)
                        s = triples.get(key, alg.field.zero) + coef * hc
                        if s:
                            triples[key] = s
                        else:
                            triples.pop(key, None)
            out.append([(c, jk, k) for (jk, k), c in sorted(triples.items())])
    return out
