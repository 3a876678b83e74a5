"""The Q-linear PROP built from the Lie operad.

Hom(m, n) has basis indexed by pairs (surjection f: [m] ->> [n], one
left-normed basis monomial of Lie(f^{-1}(i)) per output i).  Its
dimension is sum_f prod_i (|f^{-1}(i)| - 1)!, which equals
n! * c(m, n) with c the unsigned Stirling number of the first kind;
Hom(m, n) = 0 for n > m and for n = 0 < m, while Hom(n, n) is the group
algebra of S_n and Hom(0, 0) is Q on the empty morphism.

The basis order is fixed once: surjections in lexicographic order of
the value list (f(1), ..., f(m)), then tree indices in product
lexicographic order.  Composition grafts trees and renormalizes through
`freelie`, so every element stays in canonical coordinates and equality
is coordinate equality.
"""

import itertools
import threading
from typing import NamedTuple

from . import freelie

_lock = threading.RLock()  # cache builders call one another
_surj_cache = {}
_basis_cache = {}
_index_cache = {}
_dim_cache = {}
_compose_cache = {}


class BasisMorphism(NamedTuple):
    m: int
    n: int
    f: tuple    # f[i-1] = output of input i (values 1..n)
    trees: tuple  # trees[j-1] = index into lie_basis(fiber over output j)


def surjections(m, n):
    """All surjective value lists [m] ->> [n], lexicographically ordered."""
    key = (m, n)
    try:
        return _surj_cache[key]
    except KeyError:
        pass
    with _lock:
        if key not in _surj_cache:
            out = []
            f = [0] * m

            def rec(pos, covered):
                missing = n - bin(covered).count("1")
                if m - pos < missing:
                    return
                if pos == m:
                    out.append(tuple(f))
                    return
                for v in range(1, n + 1):
                    f[pos] = v
                    rec(pos + 1, covered | (1 << (v - 1)))

            if n >= 0:
                rec(0, 0)
            _surj_cache[key] = tuple(out)
    return _surj_cache[key]


def fibers(f, n):
    """Sorted fibers of a surjection value list, indexed by output."""
    out = [[] for _ in range(n)]
    for i, v in enumerate(f):
        out[v - 1].append(i + 1)
    return tuple(tuple(fib) for fib in out)


def hom_dim(m, n):
    """dim Hom(m, n), by direct enumeration over surjections."""
    key = (m, n)
    try:
        return _dim_cache[key]
    except KeyError:
        pass
    total = 0
    for f in surjections(m, n):
        prod = 1
        for fib in fibers(f, n):
            prod *= freelie.lie_dim(len(fib))
        total += prod
    _dim_cache[key] = total
    return total


def stirling_cycle(m, n):
    """Unsigned Stirling number of the first kind c(m, n)."""
    if n > m or n < 0:
        return 0
    row = [1] + [0] * n
    for i in range(1, m + 1):
        new = [0] * (n + 1)
        for j in range(min(i, n) + 1):
            new[j] = (row[j - 1] if j else 0) + (i - 1) * row[j]
        row = new
    return row[n]


def hom_basis(m, n):
    key = (m, n)
    try:
        return _basis_cache[key]
    except KeyError:
        pass
    with _lock:
        if key not in _basis_cache:
            out = []
            for f in surjections(m, n):
                ranges = [range(freelie.lie_dim(len(fib))) for fib in fibers(f, n)]
                for trees in itertools.product(*ranges):
                    out.append(BasisMorphism(m, n, f, trees))
            _basis_cache[key] = tuple(out)
    return _basis_cache[key]


def hom_index(m, n):
    key = (m, n)
    try:
        return _index_cache[key]
    except KeyError:
        pass
    with _lock:
        if key not in _index_cache:
            _index_cache[key] = {bm: i for i, bm in enumerate(hom_basis(m, n))}
    return _index_cache[key]


class HomElem:
    """Element of Hom(m, n): sparse rational coordinates over hom_basis(m, n)."""

    __slots__ = ("m", "n", "coords")

    def __init__(self, m, n, coords=None):
        self.m = m
        self.n = n
        self.coords = {i: c for i, c in (coords or {}).items() if c}

    @classmethod
    def zero(cls, m, n):
        return cls(m, n)

    @classmethod
    def from_basis(cls, bm, coeff=1):
        idx = hom_index(bm.m, bm.n)[bm]
        return cls(bm.m, bm.n, {idx: coeff})

    def is_zero(self):
        return not self.coords

    def scale(self, c):
        if not c:
            return HomElem(self.m, self.n)
        return HomElem(self.m, self.n, {i: c * v for i, v in self.coords.items()})

    def _same_cell(self, other):
        if self.m != other.m or self.n != other.n:
            raise ValueError("hom-space mismatch: (%d,%d) vs (%d,%d)"
                             % (self.m, self.n, other.m, other.n))

    def __add__(self, other):
        self._same_cell(other)
        out = dict(self.coords)
        for i, v in other.coords.items():
            nv = out.get(i, 0) + v
            if nv:
                out[i] = nv
            else:
                out.pop(i, None)
        return HomElem(self.m, self.n, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def __neg__(self):
        return self.scale(-1)

    def __eq__(self, other):
        return (isinstance(other, HomElem) and self.m == other.m
                and self.n == other.n and self.coords == other.coords)

    def __repr__(self):
        return "HomElem(%d, %d, %r)" % (self.m, self.n, self.coords)

    def terms(self):
        basis = hom_basis(self.m, self.n)
        return [(c, basis[i]) for i, c in sorted(self.coords.items())]


def _tree_of(bm, j):
    """The actual basis tree sitting over output j of a basis morphism."""
    fib = fibers(bm.f, bm.n)[j - 1]
    return freelie.lie_basis(fib)[bm.trees[j - 1]]


def compose_basis(g, f):
    """Coordinates of g o f for basis morphisms (f first, then g); cached."""
    key = (g, f)
    try:
        return _compose_cache[key]
    except KeyError:
        pass
    if f.n != g.m:
        raise ValueError("inner arities differ")
    w = tuple(g.f[v - 1] for v in f.f)
    f_fibs = fibers(f.f, f.n)
    sub = {i: freelie.lie_basis(f_fibs[i - 1])[f.trees[i - 1]] for i in range(1, f.n + 1)}
    per_output = []
    for j in range(1, g.n + 1):
        grafted = freelie.graft(_tree_of(g, j), sub)
        per_output.append(freelie.normalize_tree(grafted))
    out = {}
    index = hom_index(f.m, g.n)
    for combo in itertools.product(*(sorted(c.items()) for c in per_output)):
        coeff = 1
        trees = []
        for idx, c in combo:
            coeff *= c
            trees.append(idx)
        bm = BasisMorphism(f.m, g.n, w, tuple(trees))
        i = index[bm]
        nv = out.get(i, 0) + coeff
        if nv:
            out[i] = nv
        else:
            del out[i]
    _compose_cache[key] = out
    return out


def compose(g, f):
    """Composite g o f in Hom(f.m, g.n); bilinear over basis morphisms."""
    if f.n != g.m:
        raise ValueError("inner arities differ: %d vs %d" % (g.m, f.n))
    g_basis = hom_basis(g.m, g.n)
    f_basis = hom_basis(f.m, f.n)
    out = {}
    for gi, gc in g.coords.items():
        G = g_basis[gi]
        for fi, fc in f.coords.items():
            c = gc * fc
            for i, v in compose_basis(G, f_basis[fi]).items():
                nv = out.get(i, 0) + c * v
                if nv:
                    out[i] = nv
                else:
                    del out[i]
    return HomElem(f.m, g.n, out)


def identity(n):
    bm = BasisMorphism(n, n, tuple(range(1, n + 1)), (0,) * n)
    return HomElem.from_basis(bm)


def boxplus(f, g):
    """Monoidal sum: disjoint union of surjections with offset relabeling."""
    out = {}
    f_basis = hom_basis(f.m, f.n)
    g_basis = hom_basis(g.m, g.n)
    index = hom_index(f.m + g.m, f.n + g.n)
    for fi, fc in f.coords.items():
        F = f_basis[fi]
        for gi, gc in g.coords.items():
            G = g_basis[gi]
            # shifted fibers are order-isomorphic, so tree indices carry over
            bm = BasisMorphism(f.m + g.m, f.n + g.n,
                               F.f + tuple(v + f.n for v in G.f),
                               F.trees + G.trees)
            i = index[bm]
            nv = out.get(i, 0) + fc * gc
            if nv:
                out[i] = nv
            else:
                del out[i]
    return HomElem(f.m + g.m, f.n + g.n, out)


def perm_hom(sigma):
    """The bijection i -> sigma[i-1] as an element of Hom(n, n)."""
    n = len(sigma)
    if sorted(sigma) != list(range(1, n + 1)):
        raise ValueError("not a permutation of 1..%d" % n)
    return HomElem.from_basis(BasisMorphism(n, n, tuple(sigma), (0,) * n))


def act_out(sigma, f):
    """Left action of S_n on Hom(m, n): post-compose with the bijection."""
    if len(sigma) != f.n:
        raise ValueError("permutation size differs from target arity")
    return compose(perm_hom(sigma), f)


def act_in(f, tau):
    """Right action of S_m on Hom(m, n): pre-compose with the bijection."""
    if len(tau) != f.m:
        raise ValueError("permutation size differs from source arity")
    return compose(f, perm_hom(tau))
