"""End-to-end acceptance gate.

Each test covers one acceptance criterion, uses exact field arithmetic
throughout, and emits a single [PASS]/[FAIL] line for its criterion.
"""

import functools
import itertools
import json
import time
from contextlib import contextmanager

from hopfgalois.bialgebroid import (
    build_bialgebroid,
    iso_cocommutative,
    iso_self,
    iso_taft,
    taft_generators,
    verify_bialgebroid,
)
from hopfgalois.cli import main
from hopfgalois.cocycle import (
    Cocycle,
    classify,
    coboundary,
    lambda_rescale,
    normalize,
    verify_cocycle,
)
from hopfgalois.comodule import coinvariants, diagonal_coaction
from hopfgalois.crossmod import act, adjoint
from hopfgalois.field import field
from hopfgalois.galois import (
    build_galois,
    build_graded_galois,
    build_taft_galois,
    verify_translation_identities,
)
from hopfgalois.gauge import (
    _from_scalar_map,
    _to_scalar_map,
    alpha,
    beta,
    bisection_product,
    enumerate_characters,
    gauge_inverse,
    solve_extended_gauge,
    taft_display_order,
    verify_bisection,
)
from hopfgalois.hopf import (
    LinearMap,
    build_group_algebra,
    build_taft,
    verify_hopf,
)

F12 = field(12)


@contextmanager
def criterion(number, title):
    try:
        yield
    except BaseException:
        print(f"\n[FAIL] criterion {number}: {title}")
        raise
    print(f"\n[PASS] criterion {number}: {title}")


@functools.lru_cache(maxsize=None)
def taft_ext(N, s):
    return build_galois(build_taft_galois(F12, N, 1, F12.scalar(s)))


@functools.lru_cache(maxsize=None)
def taft_bia(N, s):
    return build_bialgebroid(taft_ext(N, s))


def sign_cocycle():
    vals = {}
    for g in itertools.product(range(2), range(2)):
        for h in itertools.product(range(2), range(2)):
            vals[(g, h)] = F12.scalar((-1) ** (g[1] * h[0]))
    return Cocycle(F12, [2, 2], vals)


@functools.lru_cache(maxsize=None)
def sign_bia():
    c = sign_cocycle()
    return build_bialgebroid(build_galois(
        build_graded_galois(F12, [2, 2], c.values)))


def test_criterion_1_hopf_axioms():
    with criterion(1, "Hopf axioms for Taft and group algebras"):
        cases = [build_taft(F12, n) for n in (2, 3, 4)]
        cases += [build_group_algebra(F12, [n]) for n in range(1, 7)]
        cases.append(build_group_algebra(F12, [2, 2]))
        for h in cases:
            start = time.monotonic()
            rep = verify_hopf(h)
            assert rep.ok, rep.failures()
            assert time.monotonic() - start < 5.0


def test_criterion_2_galois_objects():
    with criterion(2, "Galois objects over Taft algebras"):
        for N in (2, 3, 4):
            start = time.monotonic()
            for s in (0, 1, 2):
                ext = taft_ext(N, s)
                assert ext.is_galois
                com = ext.base
                diag = diagonal_coaction(com)
                coinv = coinvariants(ext.ambient, com.hopf, diag)
                assert len(coinv.rows) == N * N
                rep = verify_translation_identities(ext)
                assert rep.ok, rep.failures()
            if N == 4:
                assert time.monotonic() - start < 60.0


def test_criterion_3_translation_map_on_generators():
    with criterion(3, "translation map on the generators"):
        for N in (2, 3, 4):
            for s in (0, 1, 2):
                ext = taft_ext(N, s)
                na = ext.algebra.dim
                # tau(g) = G^{-1} (x) G
                want_g = {(N - 1) * na + 1: F12.one}
                assert ext.tau_ambient(1) == want_g
                # tau(x) = 1 (x) X - X G^{-1} (x) G
                want_x = {N: F12.one, (2 * N - 1) * na + 1: -F12.one}
                assert ext.tau_ambient(N) == want_x


def test_criterion_4_bialgebroid():
    with criterion(4, "bialgebroid axioms and the Taft identification"):
        for N, s in ((2, 0), (2, 1), (3, 2)):
            bia = taft_bia(N, s)  # builder rejects disagreeing subspace forms
            rep = verify_bialgebroid(bia)
            assert rep.ok, rep.failures()
            names = {c["check"] for c in rep.checks}
            assert "antipode left composite" in names
            assert "antipode right composite" in names
            xi, gamma, _ = taft_generators(bia)
            assert bia.power(xi, N) == {}
            assert bia.power(gamma, N) == bia.unit
            # Delta(Xi) = 1 (x) Xi + Xi (x) Gamma
            want = {}
            for k, cu in bia.unit.items():
                for l, cv in xi.items():
                    want[k * bia.dim + l] = want.get(k * bia.dim + l, F12.zero) \
                        + cu * cv
            for k, cu in xi.items():
                for l, cv in gamma.items():
                    want[k * bia.dim + l] = want.get(k * bia.dim + l, F12.zero) \
                        + cu * cv
            assert bia.delta(xi) == {k: v for k, v in want.items() if v}
            assert iso_taft(bia).ok


def test_criterion_5_self_objects():
    with criterion(5, "regular coaction objects"):
        assert iso_self(build_taft(F12, 2)).ok
        assert iso_self(build_group_algebra(F12, [3])).ok


def test_criterion_6_cocommutative_and_graded():
    with criterion(6, "graded objects and cocycle classification"):
        bia = sign_bia()
        assert iso_cocommutative(bia).ok
        c = sign_cocycle()
        lam_big, mu, rescaled = lambda_rescale(c)
        for g in c.elements:
            for h in c.elements:
                assert lam_big[(g, h)] == mu[g] * mu[h] / mu[c.mul(g, h)]
        # rescaled product of inverse pairs is group-like
        rbia = build_bialgebroid(build_galois(
            build_graded_galois(F12, rescaled.factors, rescaled.values)))
        na = rbia.na
        gidx = rbia.ext.hopf.group_index

        def pair(g):
            return rbia._coords({gidx[g] * na + gidx[c.inv(g)]: F12.one})

        for g in c.elements:
            for h in c.elements:
                assert rbia.mul(pair(g), pair(h)) == pair(c.mul(g, h))
        out = classify(c)
        assert not out["trivial"]
        for n in range(1, 7):
            fld = field(max(n * n, 3))
            omega = fld.root_of_unity(n, 1)
            vals = {((i,), (j,)): omega ** ((i + j) // n)
                    for i in range(n) for j in range(n)}
            cyc = Cocycle(fld, [n], vals)
            assert verify_cocycle(cyc).ok
            res = classify(cyc)
            assert res["trivial"]
            m = res["mu"]
            for g in cyc.elements:
                for h in cyc.elements:
                    assert cyc.value(g, h) == m[g] * m[h] / m[cyc.mul(g, h)]


def test_criterion_7_characters_and_gauge():
    with criterion(7, "character groups and gauge inverses"):
        for N in (2, 3, 4):
            bia = taft_bia(N, 1)
            chars = enumerate_characters(bia)
            assert len(chars) == N
            # cyclic of order N: some character generates all of them
            generated = False
            for g in chars:
                cur, seen = g, []
                for _ in range(N):
                    seen.append(cur)
                    cur = bisection_product(cur, g, bia)
                if all(any(s == c for s in seen) for c in chars):
                    generated = True
                    break
            assert generated
            ident = LinearMap.identity(F12, bia.ext.algebra.dim)
            for sig in chars:
                gm = beta(sig, bia)
                assert alpha(gm, bia) == sig
                inv = gauge_inverse(gm, bia.ext)
                assert inv.F.compose(gm.F) == ident
                assert gm.F.compose(inv.F) == ident


def test_criterion_8_extended_families():
    with criterion(8, "extended gauge families and strict collapse"):
        ext2 = taft_ext(2, 1)
        fam2 = solve_extended_gauge(ext2)
        assert fam2.free_parameters == 3
        order = taft_display_order(2)
        pos = {a: r for r, a in enumerate(order)}
        cells = [{(pos[j], pos[i]) for i, j in vec}
                 for vec in fam2.parameter_cells()]
        assert {(1, 0)} in cells
        assert {(1, 1), (2, 2)} in cells
        assert {(3, 2)} in cells
        fam3 = solve_extended_gauge(taft_ext(3, 2))
        assert fam3.free_parameters == 8
        # algebra maps collapse to the character groups Z_2 and Z_3
        for N, s in ((2, 1), (3, 2)):
            bia = taft_bia(N, s)
            strict = [beta(c, bia) for c in enumerate_characters(bia)]
            assert len(strict) == N
            for gm in strict:
                assert gm.is_gauge()


def test_criterion_9_crossed_modules():
    start = time.monotonic()
    with criterion(9, "crossed modules of bisections and automorphisms"):
        from hopfgalois.crossmod import verify_aut, verify_crossed_module

        for N in (2, 3):
            bia = taft_bia(N, 1)
            chars = enumerate_characters(bia)
            auts = [verify_aut(LinearMap.identity(F12, bia.dim),
                               LinearMap.identity(F12, bia.base.dim), bia)]
            auts += [adjoint(c, bia) for c in chars]
            rep = verify_crossed_module(chars, auts, bia)
            assert rep.ok, rep.failures()
            # the strict action on characters is trivial
            for aut in auts:
                for sig in chars:
                    assert act(aut, sig, bia).sigma == sig.sigma
            # Ad of a character fixes g and scales x by r^{-1}
            h = bia.ext.hopf
            iso = iso_taft(bia)
            for sig in chars:
                aut = adjoint(sig, bia)
                m = iso.forward.compose(aut.Phi.compose(iso.backward))
                r = _to_scalar_map(bia, sig.sigma).compose(
                    iso.backward).apply({1: F12.one})[0]
                assert m.apply({1: F12.one}) == {1: F12.one}
                assert m.apply({N: F12.one}) == {N: r.inverse()}

        # extended members on T_2: the displayed adjoint matrix and the
        # conjugation identity
        bia = taft_bia(2, 1)
        iso = iso_taft(bia)
        u, sx, sxg = F12.scalar(5), F12.scalar(2), F12.scalar(3)
        vals = {0: F12.one, 1: u, 2: sx, 3: sxg}
        cols = []
        for i in range(bia.dim):
            acc = F12.zero
            for j, cc in iso.forward.apply({i: F12.one}).items():
                acc += cc * vals.get(j, F12.zero)
            cols.append({0: acc} if acc else {})
        ext_sig = verify_bisection(
            _from_scalar_map(bia, LinearMap.from_columns(F12, 1, cols)),
            bia, extended=True)
        aut_sig = adjoint(ext_sig, bia)
        m = iso.forward.compose(aut_sig.Phi.compose(iso.backward))
        ui = u.inverse()
        assert m.apply({0: F12.one}) == {0: F12.one}
        assert m.apply({1: F12.one}) == {1: F12.one}
        assert m.apply({2: F12.one}) == {0: -sx * ui, 1: sx * ui, 2: ui}
        assert m.apply({3: F12.one}) == {0: sxg, 1: -sxg, 3: u}

        from hopfgalois.crossmod import verify_aut as _va
        ext_cols = [
            {0: F12.one},
            {1: F12.one},
            {0: -F12.one, 1: F12.one, 2: F12.scalar(3)},
            {0: F12.one, 1: -F12.one, 3: F12.scalar(2)},
        ]
        ext_phi = iso.backward.compose(
            LinearMap.from_columns(F12, 4, ext_cols).compose(iso.forward))
        ext_aut = _va(ext_phi, LinearMap.identity(F12, bia.base.dim), bia,
                      extended=True)
        assert ext_aut.is_aut(extended=True)
        chars = enumerate_characters(bia)
        strict_auts = [adjoint(c, bia) for c in chars]
        moved = [act(ext_aut, sig, bia) for sig in chars]
        assert any(mv.sigma != sig.sigma for mv, sig in zip(moved, chars))
        pairs = [
            (strict_auts[0], chars[1]),
            (strict_auts[1], chars[0]),
            (strict_auts[1], ext_sig),
            (ext_aut, chars[1]),
            (ext_aut, ext_sig),
        ]
        for aut, sig in pairs:
            lhs = adjoint(act(aut, sig, bia), bia).Phi
            rhs = aut.Phi.inverse().compose(
                adjoint(sig, bia).Phi.compose(aut.Phi))
            assert lhs == rhs
    assert time.monotonic() - start < 60.0


def test_criterion_10_cli_determinism(tmp_path):
    with criterion(10, "deterministic command-line reports"):
        runs = [
            ["galois-check", "--taft", "2", "--s", "1"],
            ["characters", "--taft", "3", "--s", "1"],
            ["gauge-solve", "--taft", "2", "--s", "1"],
        ]
        els = list(itertools.product(range(2), range(2)))
        vals = [[gi, hi, "-1" if g[1] * h[0] % 2 else "1"]
                for gi, g in enumerate(els) for hi, h in enumerate(els)]
        cpath = tmp_path / "sign.json"
        cpath.write_text(json.dumps({"group": [2, 2], "values": vals}))
        runs.append(["cocycle", "--cocycle", str(cpath)])
        for argv in runs:
            outputs = []
            for variant in (["--jobs", "1"], ["--jobs", "1"], ["--jobs", "4"]):
                out = tmp_path / "report.json"
                code = main(argv + variant + ["--out", str(out)])
                assert code == 0
                outputs.append(out.read_bytes())
            assert outputs[0] == outputs[1] == outputs[2]
