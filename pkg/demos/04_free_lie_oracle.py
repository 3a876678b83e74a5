"""Cross-checking against an honest free Lie algebra.

The homology cells of the DG category predict, through the Schur
correspondence, the homology of the adjoint-action complex of the free
Lie algebra on d generators.  This demo computes both sides separately.

Run:  python demos/04_free_lie_oracle.py
"""

from lieprop.schur_oracle import (cross_check, h_modules, lyndon_words,
                                  necklace_dim, schur_dim,
                                  weighted_complex_homology)

d = 2
print("Free Lie algebra on %d letters, weight components via Lyndon words:" % d)
for w in range(1, 7):
    words = lyndon_words(d, w)
    assert len(words) == necklace_dim(d, w)
    shown = " ".join("".join(map(str, u)) for u in words[:6])
    print("  weight %d: dim %2d   %s%s"
          % (w, len(words), shown, " ..." if len(words) > 6 else ""))
print()

print("Adjoint-action complex Lie(V)^n (x) V -> Lie(V)^n, weight by weight")
print("(direct computation):")
for (n, w) in [(1, 2), (1, 3), (2, 3), (2, 4)]:
    h0, h1 = weighted_complex_homology(d, n, w)
    print("  n = %d, weight %d:  H0 = %2d, H1 = %2d" % (n, w, h0, h1))
print()

print("Prediction from the homology cells (Schur correspondence):")
for (n, w) in [(1, 2), (1, 3), (2, 3), (2, 4)]:
    m0, m1 = h_modules(w, n)
    print("  n = %d, weight %d:  H0 = %2d, H1 = %2d"
          % (n, w, schur_dim(m0, d), schur_dim(m1, d)))
print()

print("Full agreement over d <= 3, n <= 3, w <= 4:")
ok = all(cross_check(dd, n, w)
         for dd in (1, 2, 3) for n in range(4) for w in range(1, 5))
print("  cross_check everywhere:", ok)
