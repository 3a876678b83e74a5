"""Acceptance criteria, one test per criterion.

Each test prints a single pass/fail line (run with `pytest -s` to see
them as they go); every assertion is exact -- no tolerances anywhere.
"""

import random
import time
from math import factorial

from lieprop.catlie import (HomElem, boxplus, compose, hom_dim, identity,
                            stirling_cycle, surjections, fibers)
from lieprop.cecomplex import (ce_basis, ce_diff, ce_homology_dims,
                               ce_to_dgcat, check_H_ce_QSn)
from lieprop.dgcat import (check_h1_mu_trivial, check_leibniz, homology_cell,
                           syzygy_euler_check)
from lieprop.freelie import lie_dim
from lieprop.mudelta import (Delta1Elem, check_centrality, check_dg_square,
                             check_lie_action, delta1_act_left,
                             delta1_act_right, delta1_dim, iota, mu,
                             mu_tilde_1, project_delta1)
from lieprop.schur_oracle import cross_check


def _report(num, name, ok, started):
    print("criterion %2d %-28s %s  (%.1fs)"
          % (num, name, "PASS" if ok else "FAIL", time.time() - started))
    assert ok, "criterion %d (%s) failed" % (num, name)


def test_criterion_01_dimension_law():
    started = time.time()
    ok = True
    for m in range(8):
        for n in range(m + 1):
            by_enum = 0
            for f in surjections(m, n):
                prod = 1
                for fib in fibers(f, n):
                    prod *= lie_dim(len(fib))
                by_enum += prod
            closed = factorial(n) * stirling_cycle(m, n)
            ok = ok and hom_dim(m, n) == by_enum == closed
        for n in range(m + 1, 9):
            ok = ok and hom_dim(m, n) == 0
    ok = ok and hom_dim(4, 2) == 22
    ok = ok and all(hom_dim(n, n) == factorial(n) for n in range(8))
    elapsed = time.time() - started
    _report(1, "dimension law m<=7", ok and elapsed < 10, started)


def test_criterion_02_category_laws():
    started = time.time()
    rng = random.Random(20240601)
    ok = True
    for _ in range(500):
        l = rng.randint(1, 6)
        m = rng.randint(1, l)
        n = rng.randint(1, m)
        p = rng.randint(1, n)
        h = HomElem(n, p, {rng.randrange(hom_dim(n, p)): 1})
        g = HomElem(m, n, {rng.randrange(hom_dim(m, n)): 1})
        f = HomElem(l, m, {rng.randrange(hom_dim(l, m)): 1})
        ok = ok and compose(h, compose(g, f)) == compose(compose(h, g), f)
        ok = ok and compose(identity(p), h) == h and compose(h, identity(n)) == h
        if not ok:
            break
    elapsed = time.time() - started
    _report(2, "category laws, 500 triples", ok and elapsed < 120, started)


def test_criterion_03_centrality():
    started = time.time()
    ok = all(check_centrality(n, t) for n in range(7) for t in range(n + 1))
    _report(3, "centrality n<=6", ok, started)


def test_criterion_04_lie_action():
    started = time.time()
    ok = all(check_lie_action(n) for n in range(5))
    _report(4, "Lie action n<=4", ok, started)


def test_criterion_05_pi_consistency():
    started = time.time()
    ok = True
    for m in range(6):
        for n in range(m + 1):
            rep = ce_to_dgcat(m, n)
            ok = ok and rep["retraction"] and rep["mu_compat"] and rep["pi_d2_zero"]
    _report(5, "pi consistency m<=5", ok, started)


def test_criterion_06_bimodule_axioms():
    started = time.time()
    rng = random.Random(20240602)
    ok = True
    for _ in range(200):
        m = rng.randint(2, 6)
        n = rng.randint(1, m - 1)
        d1 = delta1_dim(m, n)
        if not d1:
            continue
        z = Delta1Elem(m, n, {rng.randrange(d1): 1})
        p = rng.randint(1, n)
        p2 = rng.randint(1, p)
        g = HomElem(n, p, {rng.randrange(hom_dim(n, p)): 1})
        g2 = HomElem(p, p2, {rng.randrange(hom_dim(p, p2)): 1})
        l = rng.randint(m, 6)
        f = HomElem(l, m, {rng.randrange(hom_dim(l, m)): 1})
        q = rng.randint(l, 6)
        f2 = HomElem(q, l, {rng.randrange(hom_dim(q, l)): 1})
        # unit laws
        ok = ok and delta1_act_left(identity(n), z) == z
        ok = ok and delta1_act_right(z, identity(m)) == z
        # left and right associativity
        ok = ok and (delta1_act_left(g2, delta1_act_left(g, z))
                     == delta1_act_left(compose(g2, g), z))
        ok = ok and (delta1_act_right(delta1_act_right(z, f), f2)
                     == delta1_act_right(z, compose(f, f2)))
        # middle compatibility
        ok = ok and (delta1_act_left(g, delta1_act_right(z, f))
                     == delta1_act_right(delta1_act_left(g, z), f))
        # mu_tilde_1 is a bimodule morphism
        ok = ok and mu_tilde_1(delta1_act_left(g, z)) == compose(g, mu_tilde_1(z))
        ok = ok and mu_tilde_1(delta1_act_right(z, f)) == compose(mu_tilde_1(z), f)
        if not ok:
            break
    _report(6, "bimodule axioms m<=6", ok, started)


def test_criterion_07_dg_category():
    started = time.time()
    ok = True
    for m in range(6):
        for n in range(m + 1):
            for t in range(n + 1):
                ok = ok and check_dg_square(m, n, t)
                ok = ok and check_leibniz(m, n, t)
    # the generator pair reproduces mu(n-1) boxplus 1
    for n in (2, 3, 4):
        lhs = delta1_act_right(iota(n), mu_tilde_1(iota(n + 1)))
        rhs = delta1_act_left(mu_tilde_1(iota(n)), iota(n + 1))
        expect = project_delta1(boxplus(mu(n - 1), identity(1)))
        ok = ok and lhs == rhs == expect
    elapsed = time.time() - started
    _report(7, "DG category m<=5", ok and elapsed < 600, started)


def test_criterion_08_ce_complex():
    started = time.time()
    ok = True
    for m in range(6):
        for n in range(m + 1):
            for t in range(2, m - n + 1):
                for x in ce_basis(m, n, t):
                    ok = ok and ce_diff(m, n, t - 1, ce_diff(m, n, t, x)).is_zero()
            dims = dict(ce_homology_dims(m, n))
            cell = homology_cell(m, n)
            ok = ok and dims.get(0, 0) == cell.h0_dim
            ok = ok and dims.get(1, 0) == cell.h1_dim
            ok = ok and all(v == 0 for t, v in dims.items() if t >= 2)
    _report(8, "CE complex m<=5", ok, started)


def test_criterion_09_ce_qsn():
    started = time.time()
    ok = all(check_H_ce_QSn(n) for n in range(6))
    _report(9, "CE @ QS_n, n<=5", ok, started)


def test_criterion_10_h1_outer():
    started = time.time()
    ok = True
    for m in range(7):
        for n in range(m + 1):
            ok = ok and check_h1_mu_trivial(m, n)
    _report(10, "H1 killed by mu, m<=6", ok, started)


def test_criterion_11_syzygy_euler():
    started = time.time()
    ok = all(syzygy_euler_check(m, n) for m in range(7) for n in range(m + 2))
    _report(11, "syzygy Euler m<=6", ok, started)


def test_criterion_12_schur_oracle():
    started = time.time()
    ok = True
    for d in (1, 2, 3):
        for n in range(4):
            for w in range(1, 5):
                ok = ok and cross_check(d, n, w)
    elapsed = time.time() - started
    _report(12, "Schur oracle d<=3,n<=3,w<=4", ok and elapsed < 300, started)


def test_criterion_13_known_homology():
    started = time.time()
    ok = True
    for n in range(5):
        cell = homology_cell(n, n)
        ok = ok and (cell.h0_dim, cell.h1_dim) == (factorial(n), 0)
    cell21 = homology_cell(2, 1)
    ok = ok and (cell21.h0_dim, cell21.h1_dim) == (0, 1)
    ok = ok and len(cell21.kernel) == 1
    ok = ok and cell21.kernel[0].coords == {0: 1, 1: 1}
    _report(13, "known small homology", ok, started)
