"""Tour of the PROP layer: hom-space bases, composition, and the
centrality of the mu family.

Run:  python demos/01_prop_basics.py
"""

from math import factorial

from lieprop.catlie import (boxplus, compose, hom_basis, hom_dim, identity,
                            stirling_cycle)
from lieprop.freelie import normalize
from lieprop.mudelta import check_centrality, mu

print("Hom-space dimensions: dim Hom(m, n) = n! * c(m, n)")
print()
print("  m\\n |" + "".join("%6d" % n for n in range(7)))
print("  ----+" + "-" * 42)
for m in range(7):
    row = "".join("%6d" % hom_dim(m, n) for n in range(7))
    print("  %3d |%s" % (m, row))
print()
for m, n in [(4, 2), (6, 3)]:
    assert hom_dim(m, n) == factorial(n) * stirling_cycle(m, n)
print("Closed form checked at (4,2) -> %d and (6,3) -> %d."
      % (hom_dim(4, 2), hom_dim(6, 3)))
print()

print("A basis morphism of Hom(4, 2) is a surjection plus one Lie-basis")
print("monomial per fiber.  The first few of the %d:" % hom_dim(4, 2))
for bm in hom_basis(4, 2)[:4]:
    print("  f = %s, tree indices = %s" % (bm.f, bm.trees))
print()

print("Normalization rewrites any bracketing into the left-normed basis:")
e = normalize((1, (2, 3)))
print("  [a1, [a2, a3]] has coordinates %s over [[a1,a2],a3], [[a1,a3],a2]"
      % e.coords)
print()

print("mu(n) in Hom(n+1, n) brackets the extra input onto each output:")
print("  mu(3) =", " + ".join("(f=%s)" % (bm.f,) for _, bm in mu(3).terms()))
print()

print("Centrality:  phi o mu(n) = mu(t) o (phi boxplus 1)  for every phi.")
for n, t in [(3, 2), (4, 2), (4, 4)]:
    print("  all %3d basis morphisms of Hom(%d, %d): %s"
          % (hom_dim(n, t), n, t, check_centrality(n, t)))

phi = boxplus(mu(1), identity(1))  # the Jacobi-flavoured generator case
lhs = compose(phi, mu(3))
rhs = compose(mu(2), boxplus(phi, identity(1)))
print("  generator case phi = mu(1) boxplus 1:", lhs == rhs)
