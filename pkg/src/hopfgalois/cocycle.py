"""Unit-valued 2-cocycles on finite abelian groups.

A cocycle assigns a nonzero scalar lambda(g, h) to each pair of group
elements subject to lambda(g,h) lambda(gh,k) = lambda(h,k) lambda(g,hk).
This module verifies the identity, normalizes representatives, performs
the trivialization lambda(g,h) lambda(h^{-1},g^{-1}) = mu(g) mu(h)
mu(gh)^{-1} with mu(g) = lambda(g, g^{-1}), and decides triviality of the
cohomology class.
"""

from __future__ import annotations

import itertools

from gmpy2 import mpq

from .errors import CheckFailure, CocycleInvalid, InputError
from .field import scalar_from_json
from .report import Report

__all__ = [
    "Cocycle",
    "verify_cocycle",
    "normalize",
    "coboundary",
    "lambda_rescale",
    "classify",
    "cocycle_from_json",
    "cocycle_to_json",
]


class Cocycle:
    """A scalar-valued function on pairs of elements of a finite abelian
    group given in invariant factor form."""

    def __init__(self, fld, invariant_factors, values):
        self.field = fld
        self.factors = list(invariant_factors)
        self.elements = list(itertools.product(*(range(n) for n in self.factors)))
        self.index = {g: i for i, g in enumerate(self.elements)}
        self.identity = tuple(0 for _ in self.factors)
        self.values = {}
        for g in self.elements:
            for h in self.elements:
                if (g, h) not in values:
                    raise CocycleInvalid(f"missing value at {(g, h)}")
                self.values[(g, h)] = fld.scalar(values[(g, h)])

    def value(self, g, h):
        return self.values[(g, h)]

    def mul(self, g, h):
        return tuple((a + b) % n for a, b, n in zip(g, h, self.factors))

    def inv(self, g):
        return tuple((-a) % n for a, n in zip(g, self.factors))


def verify_cocycle(c):
    """Exhaustive check of the two-cocycle identity and non-vanishing."""
    rep = Report("cocycle")
    ok, wit = True, None
    for pair, v in c.values.items():
        if not v:
            ok, wit = False, f"value at {pair} is zero"
            break
    rep.add("all values nonzero", ok, wit)
    ok, wit = True, None
    if rep.ok:
        for g in c.elements:
            for h in c.elements:
                gh = c.mul(g, h)
                for k in c.elements:
                    lhs = c.value(g, h) * c.value(gh, k)
                    rhs = c.value(h, k) * c.value(g, c.mul(h, k))
                    if lhs != rhs:
                        ok, wit = False, f"triple {(g, h, k)}"
                        break
                if not ok:
                    break
            if not ok:
                break
    rep.add("associativity identity", ok, wit)
    return rep


def coboundary(fld, invariant_factors, mu):
    """The cocycle (g, h) -> mu(g) mu(h) mu(gh)^{-1} of a unit-valued mu."""
    factors = list(invariant_factors)
    elements = list(itertools.product(*(range(n) for n in factors)))
    vals = {}
    for g in elements:
        for h in elements:
            gh = tuple((a + b) % n for a, b, n in zip(g, h, factors))
            vals[(g, h)] = (fld.scalar(mu[g]) * fld.scalar(mu[h])
                            / fld.scalar(mu[gh]))
    return Cocycle(fld, factors, vals)


def normalize(c):
    """A cohomologous cocycle with lambda(e, e) = 1 (rescaling u_e)."""
    e = c.identity
    scale = c.value(e, e)
    if scale == c.field.one:
        return c
    mu = {g: c.field.one for g in c.elements}
    mu[e] = scale
    vals = {}
    for g in c.elements:
        for h in c.elements:
            vals[(g, h)] = c.value(g, h) * mu[c.mul(g, h)] / (mu[g] * mu[h])
    return Cocycle(c.field, c.factors, vals)


def _require_normalized(c):
    if c.value(c.identity, c.identity) != c.field.one:
        raise CocycleInvalid("cocycle is not normalized at the identity")


def lambda_rescale(c):
    """Trivialize Lambda(g,h) = lambda(g,h) lambda(h^{-1},g^{-1}) as the
    coboundary of mu(g) = lambda(g, g^{-1}), then divide out a square root
    of that coboundary, rescaling each generator by mu(g)^{-1/2}."""
    _require_normalized(c)
    fld = c.field
    mu = {g: c.value(g, c.inv(g)) for g in c.elements}
    lam_big = {}
    for g in c.elements:
        for h in c.elements:
            lam_big[(g, h)] = c.value(g, h) * c.value(c.inv(h), c.inv(g))
            want = mu[g] * mu[h] / mu[c.mul(g, h)]
            if lam_big[(g, h)] != want:
                raise CheckFailure(f"trivialization fails at {(g, h)}")
    root = {g: fld.nth_root(mu[g], 2) for g in c.elements}
    vals = {}
    for g in c.elements:
        for h in c.elements:
            vals[(g, h)] = (c.value(g, h) * root[c.mul(g, h)]
                            / (root[g] * root[h]))
    rescaled = Cocycle(fld, c.factors, vals)
    if not verify_cocycle(rescaled).ok:
        raise CheckFailure("rescaled values fail the cocycle identity")
    return lam_big, mu, rescaled


def classify(c):
    """Decide whether the cocycle is a coboundary.

    The commutator form beta(g, h) = lambda(g,h) lambda(h,g)^{-1} is
    invariant under coboundaries; the class is trivial exactly when beta
    is identically one.  In that case the central extension defined by
    lambda is abelian and splits: lift each invariant-factor generator a
    of order n to (rho^{-1}, a) where rho^n = prod_{j<n} lambda(a, a^j),
    multiply the lifts out, and read off mu with lambda(g,h) =
    mu(g) mu(h) mu(gh)^{-1}.
    """
    _require_normalized(c)
    fld = c.field
    for g in c.elements:
        for h in c.elements:
            b = c.value(g, h) / c.value(h, g)
            if b != fld.one:
                return {"trivial": False, "witness": (g, h, b)}

    # lifted generator for each invariant factor, corrected by an n-th root
    gens = []
    for i, n in enumerate(c.factors):
        a = tuple(1 % n if j == i else 0 for j in range(len(c.factors)))
        omega = fld.one
        p = c.identity
        for _ in range(n):
            omega = omega * c.value(a, p)
            p = c.mul(a, p)
        rho = fld.nth_root(omega, n)
        gens.append((a, rho.inverse()))

    mu = {}
    for g in c.elements:
        s = fld.one
        p = c.identity
        for (a, corr), k in zip(gens, g):
            for _ in range(k):
                s = s * corr * c.value(a, p)
                p = c.mul(a, p)
        mu[g] = s.inverse()
    for g in c.elements:
        for h in c.elements:
            if c.value(g, h) != mu[g] * mu[h] / mu[c.mul(g, h)]:
                raise CheckFailure(f"splitting failed at {(g, h)}")
    return {"trivial": True, "mu": mu}


def _parse_scalar(fld, data, path):
    try:
        if isinstance(data, list):
            return scalar_from_json(fld, data)
        if isinstance(data, str):
            if "," in data:
                return fld.scalar([mpq(part) for part in data.split(",")])
            return fld.scalar(mpq(data))
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(path, f"bad scalar: {exc}") from None
    raise InputError(path, "scalar must be a string or coefficient list")


def cocycle_from_json(fld, obj, path="$"):
    """Parse {"group": [n_1, ...], "values": [[g_index, h_index, scalar]...]}."""
    if not isinstance(obj, dict):
        raise InputError(path, "expected an object")
    factors = obj.get("group")
    if (not isinstance(factors, list) or not factors
            or any(not isinstance(n, int) or n < 1 for n in factors)):
        raise InputError(f"{path}.group", "expected a list of positive integers")
    elements = list(itertools.product(*(range(n) for n in factors)))
    order = len(elements)
    entries = obj.get("values")
    if not isinstance(entries, list):
        raise InputError(f"{path}.values", "expected a list of triples")
    vals = {}
    for pos, entry in enumerate(entries):
        here = f"{path}.values[{pos}]"
        if not isinstance(entry, list) or len(entry) != 3:
            raise InputError(here, "expected [g_index, h_index, scalar]")
        gi, hi, raw = entry
        for name, idx in (("[0]", gi), ("[1]", hi)):
            if not isinstance(idx, int) or not 0 <= idx < order:
                raise InputError(here + name,
                                 f"index out of range 0..{order - 1}")
        vals[(elements[gi], elements[hi])] = _parse_scalar(fld, raw, here + "[2]")
    if len(vals) != order * order:
        raise InputError(f"{path}.values",
                         f"expected {order * order} distinct entries, got {len(vals)}")
    try:
        return Cocycle(fld, factors, vals)
    except CocycleInvalid as exc:
        raise InputError(f"{path}.values", str(exc)) from None


def cocycle_to_json(c):
    """Inverse of cocycle_from_json, with dense list-form scalars."""
    values = []
    for gi, g in enumerate(c.elements):
        for hi, h in enumerate(c.elements):
            values.append([gi, hi, c.value(g, h).to_json()])
    return {"group": list(c.factors), "values": values}
