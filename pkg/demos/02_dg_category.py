"""The square-zero DG category and its homology.

Run:  python demos/02_dg_category.py
"""

from lieprop.dgcat import (DGHom, check_h1_mu_trivial, check_leibniz,
                           dg_compose, differential, h0_reduce, homology_cell,
                           syzygy_euler_check)
from lieprop.mudelta import Delta1Elem, iota, mu

print("Hom objects are pairs (degree 0, degree 1); two degree-1 parts")
print("compose to zero:")
z1 = DGHom(3, 2, None, Delta1Elem(3, 2, {0: 1}))
z2 = DGHom(4, 3, None, Delta1Elem(4, 3, {0: 1}))
print("  deg1 o deg1 =", "0" if dg_compose(z1, z2).is_zero() else "nonzero")
print()

print("The differential sends iota_{n+1} to mu(n):")
for n in (1, 2, 3):
    print("  d(iota_%d) == mu(%d):" % (n + 1, n),
          differential(DGHom(n + 1, n, None, iota(n + 1))).deg0 == mu(n))
print()

print("Leibniz over full bases (the degree-(1,1) case is the square-zero")
print("interchange):")
for cell in [(4, 3, 2), (5, 4, 3)]:
    print("  cell %s:" % (cell,), check_leibniz(*cell))
print()

print("Homology table  h0, h1  per cell (m, n):")
print("   m\\n |" + "".join("%12d" % n for n in range(6)))
print("   ----+" + "-" * 72)
for m in range(6):
    cells = []
    for n in range(6):
        c = homology_cell(m, n)
        cells.append("%5d,%-5d" % (c.h0_dim, c.h1_dim))
    print("   %3d |%s" % (m, " ".join(cells)))
print()

print("mu(n) itself is a boundary, so its class vanishes in H0:")
for n in (1, 2, 3):
    print("  [mu(%d)] == 0:" % n, h0_reduce(mu(n)).is_zero())
print()

print("Headline: every degree-one homology class is killed exactly by the")
print("left mu-action (the algebraic form of 'H1 is an outer functor'):")
for m in range(6):
    ok = all(check_h1_mu_trivial(m, n) for n in range(m + 1))
    print("  m = %d:" % m, ok)
print()

print("Exactness bookkeeping 0 -> H1 -> delta1 -> Hom -> H0 -> 0:")
print("  Euler sums vanish on all cells m <= 5:",
      all(syzygy_euler_check(m, n) for m in range(6) for n in range(6)))
