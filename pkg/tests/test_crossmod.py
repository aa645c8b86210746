import pytest

from hopfgalois.bialgebroid import build_bialgebroid, iso_taft
from hopfgalois.crossmod import (
    act,
    adjoint,
    coinn,
    extended_coinn,
    verify_aut,
    verify_crossed_module,
)
from hopfgalois.field import field
from hopfgalois.galois import build_galois, build_taft_galois
from hopfgalois.gauge import (
    _from_scalar_map,
    _to_scalar_map,
    bisection_inverse,
    bisection_inverse_extended,
    bisection_product,
    counit_bisection,
    enumerate_characters,
    solve_extended_gauge,
    verify_bisection,
    verify_gauge,
    alpha,
)
from hopfgalois.hopf import LinearMap, build_taft

F12 = field(12)


def taft_setup(N=2, q_index=1, s=1):
    com = build_taft_galois(F12, N, q_index, F12.scalar(s))
    ext = build_galois(com)
    return ext, build_bialgebroid(ext)


def character_scalar(h, r):
    # the character g -> r, x -> 0 of the Taft algebra, as a map to scalars
    N = h.taft_n
    cols = []
    for idx in range(h.dim):
        i, j = divmod(idx, N)
        cols.append({} if i else {0: r ** j})
    return LinearMap.from_columns(F12, 1, cols)


def scalar_to_bisection(bia, vals, extended=False):
    # vals: scalar values on the underlying Hopf algebra basis, pulled back
    iso = iso_taft(bia)
    cols = []
    for i in range(bia.dim):
        acc = F12.zero
        for j, c in iso.forward.apply({i: F12.one}).items():
            acc += c * vals.get(j, F12.zero)
        cols.append({0: acc} if acc else {})
    sig_scalar = LinearMap.from_columns(F12, 1, cols)
    return verify_bisection(_from_scalar_map(bia, sig_scalar), bia,
                            extended=extended)


def test_identity_automorphism():
    _, bia = taft_setup()
    aut = verify_aut(LinearMap.identity(F12, bia.dim),
                     LinearMap.identity(F12, bia.base.dim), bia)
    assert aut.is_aut()


def test_coinn_fixes_group_like_and_scales_x():
    # coinn(phi_r)(g) = g and coinn(phi_r)(x) = r^{-1} x
    for N in (2, 3):
        h = build_taft(F12, N)
        for k in range(N):
            r = F12.root_of_unity(N, k)
            m = coinn(character_scalar(h, r), h)
            assert m.apply({1: F12.one}) == {1: F12.one}          # g
            assert m.apply({N: F12.one}) == {N: r.inverse()}      # x


def test_coinn_inverse_composes_to_identity():
    h = build_taft(F12, 3)
    r = F12.root_of_unity(3, 1)
    m = coinn(character_scalar(h, r), h)
    minv = coinn(character_scalar(h, r.inverse()), h)
    assert m.compose(minv) == LinearMap.identity(F12, h.dim)


def test_adjoint_of_characters_is_automorphism():
    for N in (2, 3):
        _, bia = taft_setup(N=N)
        for sig in enumerate_characters(bia):
            aut = adjoint(sig, bia)
            assert aut.is_aut()


def test_adjoint_of_counit_is_identity():
    _, bia = taft_setup(N=3)
    aut = adjoint(counit_bisection(bia), bia)
    assert aut.Phi == LinearMap.identity(F12, bia.dim)


def test_adjoint_matches_coinn_through_iso():
    for N in (2, 3):
        _, bia = taft_setup(N=N)
        iso = iso_taft(bia)
        h = bia.ext.hopf
        for sig in enumerate_characters(bia):
            aut = adjoint(sig, bia)
            transported = iso.forward.compose(aut.Phi.compose(iso.backward))
            phi_scalar = _to_scalar_map(bia, sig.sigma).compose(iso.backward)
            assert transported == coinn(phi_scalar, h)


def test_extended_adjoint_matrix_t2():
    # Ad_sigma on the basis {1, xg, g, x} for an extended character with
    # values sigma_g, sigma_x, sigma_xg
    _, bia = taft_setup()
    iso = iso_taft(bia)
    u = F12.scalar(5)
    sx = F12.scalar(2)
    sxg = F12.scalar(3)
    sig = scalar_to_bisection(bia, {0: F12.one, 1: u, 2: sx, 3: sxg},
                              extended=True)
    assert sig.is_bisection(extended=True)
    aut = adjoint(sig, bia)
    assert aut.is_aut(extended=True)
    m = iso.forward.compose(aut.Phi.compose(iso.backward))
    # basis indices: 1 = 0, g = 1, x = 2, xg = 3
    assert m.apply({0: F12.one}) == {0: F12.one}
    assert m.apply({1: F12.one}) == {1: F12.one}
    ui = u.inverse()
    assert m.apply({2: F12.one}) == {0: -sx * ui, 1: sx * ui, 2: ui}
    assert m.apply({3: F12.one}) == {0: sxg, 1: -sxg, 3: u}


def test_extended_adjoint_agrees_with_extended_coinn():
    _, bia = taft_setup()
    sig = scalar_to_bisection(
        bia, {0: F12.one, 1: F12.scalar(5), 2: F12.scalar(2),
              3: F12.scalar(3)}, extended=True)
    aut = adjoint(sig, bia)
    hb = bia.as_hopf()
    s1 = _to_scalar_map(bia, sig.sigma)
    s3 = _to_scalar_map(bia, bisection_inverse_extended(sig, bia).sigma)
    assert aut.Phi == extended_coinn(s1, s3, hb)


def extended_aut_t2(bia, a1, a2, b, c):
    # Phi(g) = g, Phi(x) = c(g - 1) + a2 x, Phi(xg) = b(1 - g) + a1 xg
    iso = iso_taft(bia)
    cols = [
        {0: F12.one},
        {1: F12.one},
        {0: -c, 1: c, 2: a2},
        {0: b, 1: -b, 3: a1},
    ]
    m = LinearMap.from_columns(F12, 4, cols)
    Phi = iso.backward.compose(m.compose(iso.forward))
    return verify_aut(Phi, LinearMap.identity(F12, bia.base.dim), bia,
                      extended=True)


def test_extended_automorphism_family_member():
    _, bia = taft_setup()
    aut = extended_aut_t2(bia, F12.scalar(2), F12.scalar(3), F12.one, F12.one)
    assert aut.is_aut(extended=True)
    assert not aut.flags["algebra_map"]
    assert not aut.is_aut()


def test_action_of_strict_automorphisms_on_characters_is_trivial():
    for N in (2, 3):
        _, bia = taft_setup(N=N)
        chars = enumerate_characters(bia)
        for tau in chars:
            aut = adjoint(tau, bia)
            for sig in chars:
                assert act(aut, sig, bia).sigma == sig.sigma


def test_extended_automorphism_acts_nontrivially():
    _, bia = taft_setup()
    aut = extended_aut_t2(bia, F12.scalar(2), F12.scalar(3), F12.one, F12.one)
    moved = [act(aut, sig, bia) for sig in enumerate_characters(bia)]
    assert any(m.sigma != s.sigma
               for m, s in zip(moved, enumerate_characters(bia)))
    for m in moved:
        assert m.is_bisection(extended=True)


def test_act_distributes_over_product():
    _, bia = taft_setup()
    aut = extended_aut_t2(bia, F12.scalar(2), F12.scalar(3), F12.one, F12.one)
    sig = scalar_to_bisection(
        bia, {0: F12.one, 1: F12.scalar(5), 2: F12.scalar(2),
              3: F12.scalar(3)}, extended=True)
    tau = scalar_to_bisection(
        bia, {0: F12.one, 1: F12.scalar(7), 2: F12.one, 3: F12.scalar(4)},
        extended=True)
    lhs = act(aut, bisection_product(tau, sig, bia), bia)
    rhs = bisection_product(act(aut, tau, bia), act(aut, sig, bia), bia)
    assert lhs.sigma == rhs.sigma


def test_adjoint_of_inverse_is_inverse_adjoint():
    _, bia = taft_setup(N=3)
    for sig in enumerate_characters(bia):
        inv = bisection_inverse(sig, bia)
        assert adjoint(inv, bia).Phi == adjoint(sig, bia).Phi.inverse()


def sampled_pairs(bia):
    chars = enumerate_characters(bia)
    ext_sig = scalar_to_bisection(
        bia, {0: F12.one, 1: F12.scalar(5), 2: F12.scalar(2),
              3: F12.scalar(3)}, extended=True)
    ext_aut = extended_aut_t2(bia, F12.scalar(2), F12.scalar(3),
                              F12.one, F12.one)
    strict_auts = [adjoint(c, bia) for c in chars]
    return [
        (strict_auts[0], chars[1]),
        (strict_auts[1], chars[0]),
        (strict_auts[1], ext_sig),
        (ext_aut, chars[1]),
        (ext_aut, ext_sig),
    ]


def test_conjugation_identity_on_sampled_pairs():
    # Ad_{Phi |> sigma} = Phi^{-1} o Ad_sigma o Phi
    _, bia = taft_setup()
    for aut, sig in sampled_pairs(bia):
        moved = act(aut, sig, bia)
        lhs = adjoint(moved, bia).Phi
        rhs = aut.Phi.inverse().compose(adjoint(sig, bia).Phi.compose(aut.Phi))
        assert lhs == rhs


def test_crossed_module_strict_t2_t3():
    for N in (2, 3):
        _, bia = taft_setup(N=N)
        chars = enumerate_characters(bia)
        auts = [verify_aut(LinearMap.identity(F12, bia.dim),
                           LinearMap.identity(F12, bia.base.dim), bia)]
        auts += [adjoint(c, bia) for c in chars]
        rep = verify_crossed_module(chars, auts, bia)
        assert rep.ok, rep.failures()


def test_crossed_module_with_extended_members():
    _, bia = taft_setup()
    chars = enumerate_characters(bia)
    ext_sig = scalar_to_bisection(
        bia, {0: F12.one, 1: F12.scalar(5), 2: F12.scalar(2),
              3: F12.scalar(3)}, extended=True)
    ext_aut = extended_aut_t2(bia, F12.scalar(2), F12.scalar(3),
                              F12.one, F12.one)
    rep = verify_crossed_module(chars + [ext_sig],
                                [adjoint(chars[1], bia), ext_aut], bia)
    assert rep.ok, rep.failures()


def test_gauge_family_bisections_have_extended_adjoints():
    ext, bia = taft_setup()
    fam = solve_extended_gauge(ext)
    gm = verify_gauge(fam.instantiate([1, 2, 3]), ext, extended=True)
    sig = alpha(gm, bia, extended=True)
    aut = adjoint(sig, bia)
    assert aut.is_aut(extended=True)
