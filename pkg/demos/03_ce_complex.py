"""The universal Chevalley-Eilenberg complex and its collapse onto the
two-term DG complex.

Run:  python demos/03_ce_complex.py
"""

from math import factorial

from lieprop.cecomplex import (ce_basis, ce_diff, ce_dim, ce_homology_dims,
                               ce_to_dgcat, check_H_ce_QSn, coend_with_qsn,
                               coend_yoneda)
from lieprop.dgcat import homology_cell

print("Degree-t terms are antisymmetrized summands of Hom(m, n+t):")
for (m, n) in [(4, 1), (5, 2)]:
    dims = [ce_dim(m, n, t) for t in range(m - n + 1)]
    print("  CE(%d, %d): term dims by degree = %s" % (m, n, dims))
print()

print("d o d = 0, exactly, on every representative:")
for (m, n, t) in [(4, 0, 3), (5, 1, 3), (5, 0, 4)]:
    ok = all(ce_diff(m, n, t - 1, ce_diff(m, n, t, x)).is_zero()
             for x in ce_basis(m, n, t))
    print("  d_%d then d_%d at (%d, %d): %s" % (t, t - 1, m, n, ok))
print()

print("The chain map onto the two-term complex (id, pi, 0, ...) exists and")
print("is a weak equivalence -- homology agrees degree by degree:")
for (m, n) in [(4, 1), (5, 2), (5, 1)]:
    rep = ce_to_dgcat(m, n)
    dims = dict(ce_homology_dims(m, n))
    cell = homology_cell(m, n)
    match = (dims.get(0, 0), dims.get(1, 0)) == (cell.h0_dim, cell.h1_dim)
    higher = all(v == 0 for t, v in dims.items() if t >= 2)
    print("  (%d, %d): chain map %s, H* match %s, H_{>=2} = 0 %s"
          % (m, n, rep["ok"], match, higher))
print()

print("Against the symmetric-group module at object n the differential")
print("collapses and the homology is concentrated on m + t = n:")
n = 4
print("  Yoneda oracle: Hom(-,k) @ QS_%d =" % n,
      [coend_yoneda(k, n) for k in range(n + 1)], "(n! in slot k = n)")
for m in range(n + 1):
    t = n - m
    dim, residuals = coend_with_qsn(t, n, m)
    print("  m = %d, t = %d: dim %3d (= %d!/%d! = %d), differential zero: %s"
          % (m, t, dim, n, t, factorial(n) // factorial(t), not any(residuals)))
print("  full check for n <= 4:", all(check_H_ce_QSn(k) for k in range(5)))
