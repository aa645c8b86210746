import pytest

from hopfgalois.bialgebroid import build_bialgebroid
from hopfgalois.errors import CheckFailure, UnsupportedFamily
from hopfgalois.field import field
from hopfgalois.galois import build_galois, build_graded_galois, build_taft_galois
from hopfgalois.gauge import (
    alpha,
    beta,
    bisection_inverse,
    bisection_inverse_extended,
    bisection_product,
    counit_bisection,
    enumerate_characters,
    gauge_inverse,
    hopf_characters,
    solve_extended_gauge,
    taft_display_order,
    verify_bisection,
    verify_gauge,
)
from hopfgalois.hopf import LinearMap, build_group_algebra, build_taft

F12 = field(12)


def taft_setup(N=2, q_index=1, s=1):
    com = build_taft_galois(F12, N, q_index, F12.scalar(s))
    ext = build_galois(com)
    return ext, build_bialgebroid(ext)


def test_identity_is_gauge():
    ext, _ = taft_setup()
    gm = verify_gauge(LinearMap.identity(F12, 4), ext)
    assert gm.is_gauge()
    assert gm.flags["vertical"]


def test_sign_flip_gauge_t2():
    # F(G) = -G, F(X) = X extends to a strict gauge map of order two
    ext, _ = taft_setup()
    cols = [
        {0: F12.one},      # 1
        {1: -F12.one},     # G -> -G
        {2: F12.one},      # X -> X
        {3: -F12.one},     # XG -> -XG
    ]
    gm = verify_gauge(LinearMap.from_columns(F12, 4, cols), ext)
    assert gm.is_gauge()
    inv = gauge_inverse(gm, ext)
    assert inv.F == gm.F


def test_gauge_inverse_round_trip_characters():
    for N in (2, 3):
        ext, bia = taft_setup(N=N)
        ident = LinearMap.identity(F12, ext.algebra.dim)
        for sig in enumerate_characters(bia):
            gm = beta(sig, bia)
            assert gm.is_gauge()
            inv = gauge_inverse(gm, ext)
            assert inv.F.compose(gm.F) == ident
            assert gm.F.compose(inv.F) == ident


def test_counit_is_unit_bisection():
    _, bia = taft_setup()
    eps = counit_bisection(bia)
    assert eps.is_bisection()
    assert eps.flags["vertical"]
    for sig in enumerate_characters(bia):
        assert bisection_product(eps, sig, bia) == sig
        assert bisection_product(sig, eps, bia) == sig


def test_alpha_of_identity_is_counit():
    ext, bia = taft_setup()
    gm = verify_gauge(LinearMap.identity(F12, 4), ext)
    assert alpha(gm, bia) == counit_bisection(bia)


def test_alpha_beta_round_trips():
    ext, bia = taft_setup(N=3, s=2)
    for sig in enumerate_characters(bia):
        assert alpha(beta(sig, bia), bia) == sig
    gm = verify_gauge(LinearMap.identity(F12, 9), ext)
    assert beta(alpha(gm, bia), bia).F == gm.F


def test_alpha_intertwines_group_laws():
    # F . G := G o F and alpha(F . G) = alpha(F) * alpha(G)
    ext, bia = taft_setup(N=3)
    chars = enumerate_characters(bia)
    gms = [beta(s, bia) for s in chars]
    for g1 in gms[:2]:
        for g2 in gms:
            composed = verify_gauge(g2.F.compose(g1.F), ext)
            lhs = alpha(composed, bia)
            rhs = bisection_product(alpha(g1, bia), alpha(g2, bia), bia)
            assert lhs == rhs


def test_character_group_is_cyclic():
    for N in (2, 3):
        _, bia = taft_setup(N=N)
        chars = enumerate_characters(bia)
        assert len(chars) == N
        # index the characters and check the full Cayley table is cyclic
        idx = {}
        for i, c in enumerate(chars):
            idx[id(c)] = i
        table = {}
        for i, a in enumerate(chars):
            for j, b in enumerate(chars):
                prod = bisection_product(a, b, bia)
                hits = [k for k, c in enumerate(chars) if c == prod]
                assert len(hits) == 1
                table[(i, j)] = hits[0]
        # abelian with every element generated by a single one
        assert all(table[(i, j)] == table[(j, i)] for i in range(N) for j in range(N))


def test_bisection_inverse_matches_antipode_composite():
    for N in (2, 3):
        _, bia = taft_setup(N=N)
        s_c = bia.antipode()
        for sig in enumerate_characters(bia):
            inv = bisection_inverse(sig, bia)
            assert inv.sigma == sig.sigma.compose(s_c)
            eps = counit_bisection(bia)
            assert bisection_product(sig, inv, bia) == eps
            assert bisection_product(inv, sig, bia) == eps


def test_group_algebra_characters():
    h = build_group_algebra(F12, [2, 2])
    assert len(hopf_characters(h)) == 4
    h3 = build_group_algebra(F12, [3])
    assert len(hopf_characters(h3)) == 3


def test_characters_of_sign_cocycle_object():
    lam = {}
    for i in range(2):
        for j in range(2):
            for k in range(2):
                for l in range(2):
                    lam[((i, j), (k, l))] = F12.scalar((-1) ** (j * k))
    bia = build_bialgebroid(build_galois(build_graded_galois(F12, [2, 2], lam)))
    chars = enumerate_characters(bia)
    assert len(chars) == 4
    for c in chars:
        assert c.is_bisection()


def test_unsupported_family():
    h = build_taft(F12, 2)
    del h.taft_n
    with pytest.raises(UnsupportedFamily):
        hopf_characters(h)


def test_extended_family_t2_pattern():
    ext, _ = taft_setup()
    fam = solve_extended_gauge(ext)
    assert fam.free_parameters == 3
    order = taft_display_order(2)
    pos = {a: r for r, a in enumerate(order)}
    # display cell (row, col): row = argument basis element, col = component
    cells = [{(pos[j], pos[i]) for i, j in vec} for vec in fam.parameter_cells()]
    # display rows {1, XG, G, X}: beta at (1,0), alpha at (1,1) and (2,2),
    # gamma at (3,2)
    assert {(1, 0)} in cells
    assert {(1, 1), (2, 2)} in cells
    assert {(3, 2)} in cells
    # constants: unit row and F(X) = X + ...
    base = fam.instantiate([0, 0, 0])
    assert base.apply({0: F12.one}) == {0: F12.one}
    assert fam.required_nonzero() == [cells.index({(1, 1), (2, 2)})]


def test_extended_family_t3_parameters():
    ext, _ = taft_setup(N=3, s=2)
    fam = solve_extended_gauge(ext)
    assert fam.free_parameters == 8
    # lower triangular in the display order
    order = taft_display_order(3)
    pos = {a: r for r, a in enumerate(order)}
    for vec in fam.parameter_cells():
        for i, j in vec:
            assert pos[j] >= pos[i]
    assert len(fam.required_nonzero()) == 2


def test_extended_members_are_extended_gauge_maps():
    ext, _ = taft_setup()
    fam = solve_extended_gauge(ext)
    member = fam.instantiate([1, 1, 1])
    gm = verify_gauge(member, ext, extended=True)
    assert gm.is_gauge(extended=True)
    assert not gm.flags["algebra_map"]


def test_strict_collapse_t2():
    # algebra maps inside the family have gamma = beta = 0 and alpha^2 = 1
    ext, bia = taft_setup()
    fam = solve_extended_gauge(ext)
    strict = [beta(s, bia) for s in enumerate_characters(bia)]
    assert len(strict) == 2
    for gm in strict:
        assert gm.is_gauge()
        # F(X) = X in both cases
        assert gm.F.apply({2: F12.one}) == {2: F12.one}
    # turning on the off-diagonal parameters breaks multiplicativity
    for params in ([1, 1, 0], [0, 1, 1]):
        gm = verify_gauge(fam.instantiate(params), ext, extended=True)
        assert not gm.flags["algebra_map"]


def test_extended_bisection_and_convolution_inverse():
    # a unital non-multiplicative functional with sigma(Gamma) = u != 0
    _, bia = taft_setup()
    from hopfgalois.bialgebroid import taft_generators

    fam = solve_extended_gauge(bia.ext)
    gm = verify_gauge(fam.instantiate([1, 2, 3]), bia.ext, extended=True)
    sig = alpha(gm, bia, extended=True)
    assert sig.is_bisection(extended=True)
    assert not sig.flags["algebra_map"]
    inv = bisection_inverse_extended(sig, bia)
    eps = counit_bisection(bia)
    assert bisection_product(sig, inv, bia).sigma == eps.sigma
    assert bisection_product(inv, sig, bia).sigma == eps.sigma


def test_extended_character_inverse_entries():
    # sigma^{-1} entries (-sigma_x u^{-1}, u^{-1}, -sigma_xg u^{-1})
    _, bia = taft_setup()
    from hopfgalois.bialgebroid import iso_taft

    iso = iso_taft(bia)
    u = F12.scalar(5)
    sx = F12.scalar(2)
    sxg = F12.scalar(3)
    # values on the Taft basis {1, g, x, xg}, pulled back to C
    vals = {0: F12.one, 1: u, 2: sx, 3: sxg}
    cols = []
    for i in range(bia.dim):
        acc = F12.zero
        for j, c in iso.forward.apply({i: F12.one}).items():
            acc += c * vals.get(j, F12.zero)
        cols.append({0: acc} if acc else {})
    sig_scalar = LinearMap.from_columns(F12, 1, cols)
    from hopfgalois.gauge import _from_scalar_map, _to_scalar_map

    sig = verify_bisection(_from_scalar_map(bia, sig_scalar), bia, extended=True)
    assert sig.is_bisection(extended=True)
    inv = bisection_inverse_extended(sig, bia)
    got = _to_scalar_map(bia, inv.sigma).compose(iso.backward)
    assert got.apply({1: F12.one}) == {0: u.inverse()}
    assert got.apply({2: F12.one}) == {0: -sx * u.inverse()}
    assert got.apply({3: F12.one}) == {0: -sxg * u.inverse()}


def test_bisection_inverse_requires_strict():
    _, bia = taft_setup()
    fam = solve_extended_gauge(bia.ext)
    gm = verify_gauge(fam.instantiate([1, 2, 3]), bia.ext, extended=True)
    sig = alpha(gm, bia, extended=True)
    with pytest.raises(CheckFailure):
        bisection_inverse(sig, bia)
