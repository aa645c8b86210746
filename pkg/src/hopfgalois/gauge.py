"""Gauge maps of a Hopf-Galois extension and bisections of its bialgebroid.

A gauge map is a comodule-algebra automorphism F of A restricting to an
automorphism of the base B; a bisection is a unital map sigma: C(A, H) -> B
that splits the target map.  The two notions correspond under alpha and
beta, and both carry group structures when B is central.  Extended variants
drop the multiplicativity requirements.
"""

from __future__ import annotations

from .bialgebroid import Bialgebroid, iso_cocommutative, iso_taft
from .errors import CentreRequired, CheckFailure, NotGaloisObject, UnsupportedFamily
from .hopf import Algebra, LinearMap, convolution_inverse
from .linalg import kernel_sparse, solve_sparse, sv_add_into, sv_scale

__all__ = [
    "GaugeMap",
    "Bisection",
    "verify_gauge",
    "gauge_inverse",
    "verify_bisection",
    "bisection_product",
    "bisection_inverse",
    "alpha",
    "beta",
    "counit_bisection",
    "enumerate_characters",
    "hopf_characters",
    "solve_extended_gauge",
    "taft_display_order",
]


class GaugeMap:
    """A linear map A -> A together with its recomputed structural flags."""

    def __init__(self, F, ext, flags):
        self.F = F
        self.ext = ext
        self.flags = flags

    def is_gauge(self, extended=False):
        f = self.flags
        common = (f["equivariant"] and f["unital"] and f["invertible"]
                  and f["restricts_to_aut_B"])
        if extended:
            return common and f["b_multiplicative"]
        return common and f["algebra_map"]

    def __eq__(self, other):
        return isinstance(other, GaugeMap) and self.F == other.F


class Bisection:
    """A linear map C -> B (in coordinates) with recomputed flags."""

    def __init__(self, sigma, bialgebroid, flags):
        self.sigma = sigma              # LinearMap, C coords -> B coords
        self.bialgebroid = bialgebroid
        self.flags = flags

    def is_bisection(self, extended=False):
        f = self.flags
        common = f["unital"] and f["t_section"] and f["s_aut"]
        if extended:
            return common and f["B_linear"] and f["conv_invertible"]
        return common and f["algebra_map"]

    def value(self, cvec):
        """sigma applied to C coordinates, as an ambient element of A."""
        return self.bialgebroid.base_ambient(self.sigma.apply(cvec))

    def scalar(self, cvec):
        """For Galois objects, sigma's value as a multiple of the unit."""
        bia = self.bialgebroid
        amb = self.value(cvec)
        (k, cu), = bia.ext.algebra.unit.items()
        val = amb.pop(k, bia.field.zero) / cu
        if amb:
            raise NotGaloisObject("value is not a multiple of the unit")
        return val

    def __eq__(self, other):
        return isinstance(other, Bisection) and self.sigma == other.sigma


# ---------------------------------------------------------------------------
# gauge maps

def verify_gauge(F, ext, extended=False):
    """Recompute all structural flags of a candidate gauge map."""
    alg = ext.algebra
    com = ext.base
    fld = ext.field
    na = alg.dim
    base = com.coinvariants
    flags = {}

    flags["unital"] = F.apply(alg.unit) == alg.unit
    flags["invertible"] = F.inverse() is not None

    ok = True
    for j in range(na):
        lhs = com.coact(F.apply(alg.basis_vec(j)))
        rhs = {}
        for c, j0, h in com.coaction[j]:
            for p, cp in F.apply(alg.basis_vec(j0)).items():
                sv_add_into(rhs, {p * ext.hopf.dim + h: c * cp})
        if lhs != rhs:
            ok = False
            break
    flags["equivariant"] = ok

    ok = True
    for i in range(na):
        fi = F.apply(alg.basis_vec(i))
        for j in range(na):
            if F.apply(alg.mrow(i, j)) != alg.mul(fi, F.apply(alg.basis_vec(j))):
                ok = False
                break
        if not ok:
            break
    flags["algebra_map"] = ok

    in_b, vertical, bcols = True, True, []
    for r in base.rows:
        img = F.apply(r)
        coords = base.coords(img)
        if coords is None:
            in_b = False
            break
        bcols.append({i: c for i, c in enumerate(coords) if c})
        if img != r:
            vertical = False
    if in_b:
        fb = LinearMap.from_columns(fld, base.dim, bcols)
        flags["restricts_to_aut_B"] = fb.inverse() is not None
        flags["restriction"] = fb
    else:
        flags["restricts_to_aut_B"] = False
        flags["restriction"] = None
        vertical = False
    flags["vertical"] = vertical

    ok = in_b
    if in_b:
        for r in base.rows:
            fr = F.apply(r)
            for j in range(na):
                lhs = F.apply(alg.mul(r, alg.basis_vec(j)))
                if lhs != alg.mul(fr, F.apply(alg.basis_vec(j))):
                    ok = False
                    break
            if not ok:
                break
    flags["b_multiplicative"] = ok
    return GaugeMap(F, ext, flags)


def gauge_inverse(gm, ext, extended=False):
    """F^{-1}(a) = (F|_B)^{-1}(a_(0) F(tau(a_(1))^1)) tau(a_(1))^2."""
    if not ext.base.b_in_centre:
        raise CentreRequired("base algebra must be central")
    if not gm.is_gauge(extended=extended):
        raise CheckFailure("input is not a verified gauge map")
    alg = ext.algebra
    com = ext.base
    na = alg.dim
    base = com.coinvariants
    fb_inv = gm.flags["restriction"].inverse()
    cols = []
    for j in range(na):
        by_t = {}
        for c, j0, h in com.coaction[j]:
            for tid, ct in ext.tau_ambient(h).items():
                s, t = divmod(tid, na)
                term = alg.mul(alg.basis_vec(j0), gm.F.apply(alg.basis_vec(s)))
                sv_add_into(by_t.setdefault(t, {}), term, c * ct)
        out = {}
        for t, slice_a in by_t.items():
            coords = base.coords(slice_a)
            if coords is None:
                raise CheckFailure("inverse formula left the base algebra")
            bvec = fb_inv.apply({i: c for i, c in enumerate(coords) if c})
            amb = {}
            for i, c in bvec.items():
                sv_add_into(amb, base.rows[i], c)
            sv_add_into(out, alg.mul(amb, alg.basis_vec(t)))
        cols.append(out)
    inv = LinearMap.from_columns(ext.field, na, cols)
    ident = LinearMap.identity(ext.field, na)
    if inv.compose(gm.F) != ident or gm.F.compose(inv) != ident:
        raise CheckFailure("computed inverse fails the two-sided identity")
    return verify_gauge(inv, ext, extended=extended)


# ---------------------------------------------------------------------------
# bisections

def _mul_b(bia, u, v):
    """Product of two base elements given in B coordinates."""
    prod = bia.ext.algebra.mul(bia.base_ambient(u), bia.base_ambient(v))
    return bia.base_coords(prod)


def _sigma_s(bia, sig):
    """The composite sigma o s as a LinearMap on B coordinates."""
    fld = bia.field
    cols = [sig.apply(bia.source({i: fld.one})) for i in range(bia.base.dim)]
    return LinearMap.from_columns(fld, bia.base.dim, cols)


def _scalar_algebra(fld):
    return Algebra(fld, ["1"], [[{0: fld.one}]])


def verify_bisection(sig, bia, extended=False):
    """Recompute all structural flags of a candidate bisection C -> B."""
    fld = bia.field
    nc = bia.dim
    nb = bia.base.dim
    one_b = bia.base_coords(bia.ext.algebra.unit)
    flags = {}
    flags["unital"] = sig.apply(bia.unit) == one_b

    ok = True
    for i in range(nb):
        if sig.apply(bia.target({i: fld.one})) != {i: fld.one}:
            ok = False
            break
    flags["t_section"] = ok

    ss = _sigma_s(bia, sig)
    flags["s_aut"] = ss.inverse() is not None
    flags["vertical"] = ss == LinearMap.identity(fld, nb)

    ok = True
    for k in range(nc):
        vk = sig.apply({k: fld.one})
        for l in range(nc):
            lhs = sig.apply(bia.mul({k: fld.one}, {l: fld.one}))
            if lhs != _mul_b(bia, vk, sig.apply({l: fld.one})):
                ok = False
                break
        if not ok:
            break
    flags["algebra_map"] = ok

    # B-linearity: sigma(t(b).c) = sigma(c) b and sigma(s(b).c) = sigma(c) (sigma o s)(b)
    ok = True
    for b in range(nb):
        tb = bia.target({b: fld.one})
        sb = bia.source({b: fld.one})
        for k in range(nc):
            vk = sig.apply({k: fld.one})
            if sig.apply(bia.mul(tb, {k: fld.one})) != _mul_b(bia, vk, {b: fld.one}):
                ok = False
                break
            lhs = sig.apply(bia.mul(sb, {k: fld.one}))
            if lhs != _mul_b(bia, vk, ss.apply({b: fld.one})):
                ok = False
                break
        if not ok:
            break
    flags["B_linear"] = ok

    if extended and bia.is_galois_object:
        flags["conv_invertible"] = _convolution_inverse(sig, bia) is not None
    else:
        flags["conv_invertible"] = flags["algebra_map"] and flags["s_aut"]
    return Bisection(sig, bia, flags)


def _to_scalar_map(bia, sig):
    fld = bia.field
    (k, cu), = bia.ext.algebra.unit.items()
    cols = []
    for i in range(bia.dim):
        amb = bia.base_ambient(sig.apply({i: fld.one}))
        val = amb.pop(k, fld.zero) / cu
        if amb:
            raise NotGaloisObject("value is not a multiple of the unit")
        cols.append({0: val} if val else {})
    return LinearMap.from_columns(fld, 1, cols)


def _from_scalar_map(bia, f):
    fld = bia.field
    one_b = bia.base_coords(bia.ext.algebra.unit)
    cols = []
    for i in range(bia.dim):
        val = f.apply({i: fld.one}).get(0, fld.zero)
        cols.append(sv_scale(one_b, val) if val else {})
    return LinearMap.from_columns(fld, bia.base.dim, cols)


def _convolution_inverse(sig, bia):
    hop = bia.as_hopf()
    inv = convolution_inverse(_to_scalar_map(bia, sig), hop,
                              _scalar_algebra(bia.field))
    if inv is None:
        return None
    return _from_scalar_map(bia, inv)


def counit_bisection(bia):
    """The counit of the bialgebroid, unit of the bisection group."""
    fld = bia.field
    cols = [bia.counit({i: fld.one}) for i in range(bia.dim)]
    return verify_bisection(LinearMap.from_columns(fld, bia.base.dim, cols), bia)


def bisection_product(b1, b2, bia):
    """(sigma1 * sigma2)(c) = (sigma2 o s)(sigma1(c_(1))) sigma2(c_(2))."""
    if not bia.ext.base.b_in_centre:
        raise CentreRequired("base algebra must be central")
    fld = bia.field
    nc = bia.dim
    ss2 = _sigma_s(bia, b2.sigma)
    cols = []
    for i in range(nc):
        out = {}
        for idx, c in bia.delta({i: fld.one}).items():
            k, l = divmod(idx, nc)
            left = ss2.apply(b1.sigma.apply({k: fld.one}))
            right = b2.sigma.apply({l: fld.one})
            sv_add_into(out, _mul_b(bia, left, right), c)
        cols.append(out)
    extended = not (b1.flags["algebra_map"] and b2.flags["algebra_map"])
    return verify_bisection(LinearMap.from_columns(fld, bia.base.dim, cols),
                            bia, extended=extended)


def _tau_split(bia, j):
    """Coordinates of a_(0) (x) tau(a_(1))^1 (x) tau(a_(1))^2 for basis j of A,
    as a dict {(C index, A index): coefficient}."""
    ext = bia.ext
    na = bia.na
    by_t = {}
    for c, j0, h in ext.base.coaction[j]:
        for tid, ct in ext.tau_ambient(h).items():
            s, t = divmod(tid, na)
            sv_add_into(by_t.setdefault(t, {}), {j0 * na + s: c * ct})
    out = {}
    for t, slice_p in by_t.items():
        for k, c in bia._coords(slice_p, "translation split").items():
            out[(k, t)] = c
    return out


def bisection_inverse(b, bia):
    """sigma^{-1}(a (x) a~) = (sigma o s)^{-1}(a sigma(a~_(0) (x) tau^1) tau^2)."""
    if not bia.ext.base.b_in_centre:
        raise CentreRequired("base algebra must be central")
    if not b.is_bisection():
        raise CheckFailure("inverse formula requires a strict bisection")
    fld = bia.field
    alg = bia.ext.algebra
    na = bia.na
    ss_inv = _sigma_s(bia, b.sigma).inverse()
    splits = [_tau_split(bia, j) for j in range(na)]
    cols = []
    for idx in range(bia.dim):
        acc = {}
        for pair, c in bia.C.rows[idx].items():
            i, j = divmod(pair, na)
            for (k, t), ct in splits[j].items():
                val = bia.base_ambient(b.sigma.apply({k: fld.one}))
                term = alg.mul(alg.basis_vec(i), alg.mul(val, alg.basis_vec(t)))
                sv_add_into(acc, term, c * ct)
        cols.append(ss_inv.apply(bia.base_coords(acc)))
    return verify_bisection(LinearMap.from_columns(fld, bia.base.dim, cols), bia)


def bisection_inverse_extended(b, bia):
    """Convolution inverse for extended bisections on a Galois object."""
    inv = _convolution_inverse(b.sigma, bia)
    if inv is None:
        raise CheckFailure("bisection is not convolution invertible")
    return verify_bisection(inv, bia, extended=True)


# ---------------------------------------------------------------------------
# the alpha / beta correspondence

def alpha(gm, bia, extended=False):
    """sigma_F(a (x) a~) = F(a) a~."""
    if not bia.ext.base.b_in_centre:
        raise CentreRequired("base algebra must be central")
    fld = bia.field
    alg = bia.ext.algebra
    na = bia.na
    cols = []
    for idx in range(bia.dim):
        acc = {}
        for pair, c in bia.C.rows[idx].items():
            i, j = divmod(pair, na)
            term = alg.mul(gm.F.apply(alg.basis_vec(i)), alg.basis_vec(j))
            sv_add_into(acc, term, c)
        cols.append(bia.base_coords(acc))
    return verify_bisection(LinearMap.from_columns(fld, bia.base.dim, cols),
                            bia, extended=extended)


def beta(b, bia, extended=False):
    """F_sigma(a) = sigma(a_(0) (x) tau(a_(1))^1) tau(a_(1))^2."""
    if not bia.ext.base.b_in_centre:
        raise CentreRequired("base algebra must be central")
    fld = bia.field
    alg = bia.ext.algebra
    na = bia.na
    cols = []
    for j in range(na):
        out = {}
        for (k, t), c in _tau_split(bia, j).items():
            val = bia.base_ambient(b.sigma.apply({k: fld.one}))
            sv_add_into(out, alg.mul(val, alg.basis_vec(t)), c)
        cols.append(out)
    return verify_gauge(LinearMap.from_columns(fld, na, cols), bia.ext,
                        extended=extended)


# ---------------------------------------------------------------------------
# character families

def hopf_characters(hopf):
    """All algebra characters of a Taft algebra or of a finite abelian group
    algebra, as LinearMaps to the one-dimensional algebra."""
    fld = hopf.field
    if hasattr(hopf, "taft_n"):
        n = hopf.taft_n
        out = []
        for k in range(n):
            zeta = fld.root_of_unity(n, k)
            cols = []
            for i in range(n):
                for j in range(n):
                    cols.append({0: zeta ** j} if i == 0 else {})
            out.append(LinearMap.from_columns(fld, 1, cols))
        return out
    if hasattr(hopf, "group_elements"):
        factors = hopf.invariant_factors
        out = []
        choices = [0] * len(factors)
        total = 1
        for n in factors:
            total *= n
        for flat in range(total):
            r = flat
            for i, n in enumerate(factors):
                choices[i] = r % n
                r //= n
            cols = []
            for g in hopf.group_elements:
                val = fld.one
                for gi, ki, n in zip(g, choices, factors):
                    val = val * fld.root_of_unity(n, (gi * ki) % n)
                cols.append({0: val})
            out.append(LinearMap.from_columns(fld, 1, cols))
        return out
    raise UnsupportedFamily("character enumeration needs a Taft or group algebra")


def bialgebroid_iso(bia):
    """The registered isomorphism C(A, H) = H for the supported families."""
    hopf = bia.ext.hopf
    if hasattr(hopf, "taft_n"):
        return iso_taft(bia)
    if hasattr(hopf, "group_elements"):
        return iso_cocommutative(bia)
    raise UnsupportedFamily("no registered isomorphism for this family")


def enumerate_characters(obj):
    """Characters of a Hopf algebra, or the strict bisections of a supported
    bialgebroid obtained by pulling characters back through the isomorphism."""
    if isinstance(obj, Bialgebroid):
        iso = bialgebroid_iso(obj)
        out = []
        for phi in hopf_characters(obj.ext.hopf):
            sig = _from_scalar_map(obj, phi.compose(iso.forward))
            out.append(verify_bisection(sig, obj))
        return out
    return hopf_characters(obj)


# ---------------------------------------------------------------------------
# the linear family of extended gauge maps

class ExtendedGaugeFamily:
    """Affine solution set of the unitality and equivariance constraints."""

    def __init__(self, ext, particular, basis):
        self.ext = ext
        self.field = ext.field
        self.particular = particular    # sparse over entries i * na + j
        self.basis = basis              # list of sparse homogeneous solutions
        self.free_parameters = len(basis)

    def instantiate(self, params):
        """The member with the given parameter values, as a LinearMap."""
        fld = self.field
        na = self.ext.algebra.dim
        vec = dict(self.particular)
        for d, p in enumerate(params):
            sv_add_into(vec, self.basis[d], fld.scalar(p))
        cols = [dict() for _ in range(na)]
        for idx, c in vec.items():
            i, j = divmod(idx, na)
            cols[j][i] = c
        return LinearMap.from_columns(fld, na, cols)

    def required_nonzero(self):
        """Parameters whose vanishing makes the sampled member singular."""
        fld = self.field
        sample = [fld.scalar(d + 2) for d in range(self.free_parameters)]
        if self.instantiate(sample).inverse() is None:
            raise CheckFailure("sampled family member is singular")
        needed = []
        for d in range(self.free_parameters):
            dropped = list(sample)
            dropped[d] = fld.zero
            if self.instantiate(dropped).inverse() is None:
                needed.append(d)
        return needed

    def parameter_cells(self):
        """Matrix entries (i, j) touched by each free parameter."""
        na = self.ext.algebra.dim
        return [sorted(divmod(idx, na) for idx in vec) for vec in self.basis]


def solve_extended_gauge(ext):
    """Solve the linear system {F unital, F equivariant} for F: A -> A."""
    alg = ext.algebra
    com = ext.base
    fld = ext.field
    na = alg.dim
    nh = ext.hopf.dim
    rows = []
    rhs = {}

    # F(1) = 1
    for i in range(na):
        row = {}
        for j, cu in alg.unit.items():
            row[i * na + j] = cu
        rows.append(row)
        if i in alg.unit:
            rhs[len(rows) - 1] = alg.unit[i]

    # coact(F(e_j)) = (F (x) id)(coact(e_j))
    for j in range(na):
        eq = {}
        for ip in range(na):
            for c, i, h in com.coaction[ip]:
                key = (i, h)
                eq.setdefault(key, {})[ip * na + j] = c
        for c, j0, h in com.coaction[j]:
            for i in range(na):
                key = (i, h)
                row = eq.setdefault(key, {})
                cur = row.get(i * na + j0, fld.zero) - c
                if cur:
                    row[i * na + j0] = cur
                else:
                    row.pop(i * na + j0, None)
        for key in sorted(eq):
            if eq[key]:
                rows.append(eq[key])

    rhs_list = [{i: c for i, c in rhs.items()}]
    sol = solve_sparse(rows, na * na, rhs_list)[0]
    if sol is None:
        raise CheckFailure("constraints are inconsistent")
    hom = kernel_sparse(rows, na * na, fld)
    return ExtendedGaugeFamily(ext, sol, [dict(r) for r in hom.rows])


def taft_display_order(N):
    """Basis rendering order used for the gauge family matrices."""
    if N == 2:
        return [0, 3, 1, 2]             # 1, XG, G, X
    if N == 3:
        return [0, 5, 7, 2, 4, 6, 1, 3, 8]
    return list(range(N * N))
