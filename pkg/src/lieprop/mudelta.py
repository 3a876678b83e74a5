"""The morphisms mu(n), the generators iota_a, the sub-bimodule
delta1 of shifted hom-spaces, and the projection pi.

delta1(m, n) is the subspace of Hom(m, n+1) spanned by basis morphisms
whose fiber over the last output n+1 is a singleton; its dimension is
m * hom_dim(m-1, n).  Elements are stored in sub-basis coordinates
(inclusion into and projection from the ambient hom-space are explicit
coordinate maps).

mu(n) in Hom(n+1, n) is the sum of the n basis morphisms that restrict
to the identity on the first n inputs and bracket the extra input onto
one output; mu(0) = 0.  Post-composition with mu gives the natural map
mu_tilde: Hom(m, n+1) -> Hom(m, n) -- the universal form of the n-fold
right adjoint action -- and mu_tilde_1 is its restriction to delta1.

pi: Hom(m, n+1) ->> delta1(m, n) is computed by the recursion

    pi(Z (x) x)      = Z (x) x                 for x a single leaf,
    pi(Z (x) [X, Y]) = pi(Z.X (x) Y) - pi(Z.Y (x) X),

where Z.X brackets X onto each of the first n outputs in turn (a
Leibniz-style sum).  The recursion consumes the tree in the last slot,
always splitting off the left child first; well-definedness is not
assumed but certified by the retraction, compatibility and chain-map
tests downstream.

The module also carries the executable forms of the centrality
identity, the Lie-action identity and the square-zero interchange that
makes the degree-one composition consistent.
"""

import threading

from . import freelie
from .catlie import (BasisMorphism, HomElem, boxplus, compose, fibers,
                     hom_basis, hom_dim, hom_index, identity, perm_hom)

_lock = threading.RLock()
_delta1_cache = {}
_pi_cache = {}


def delta1_basis(m, n):
    """Sub-basis of Hom(m, n+1) with a singleton fiber over output n+1.

    Returns (full_indices, basis_morphisms, index_of) with the ambient
    hom-basis order preserved.
    """
    key = (m, n)
    try:
        return _delta1_cache[key]
    except KeyError:
        pass
    with _lock:
        if key not in _delta1_cache:
            full = []
            bms = []
            for i, bm in enumerate(hom_basis(m, n + 1)):
                if bm.f.count(n + 1) == 1:
                    full.append(i)
                    bms.append(bm)
            index_of = {bm: s for s, bm in enumerate(bms)}
            _delta1_cache[key] = (tuple(full), tuple(bms), index_of)
    return _delta1_cache[key]


def delta1_dim(m, n):
    if m < 1 or n < 0:
        return 0
    return m * hom_dim(m - 1, n)


class Delta1Elem:
    """Element of delta1(m, n), coordinates over the sub-basis."""

    __slots__ = ("m", "n", "coords")

    def __init__(self, m, n, coords=None):
        self.m = m
        self.n = n
        self.coords = {i: c for i, c in (coords or {}).items() if c}

    @classmethod
    def zero(cls, m, n):
        return cls(m, n)

    def is_zero(self):
        return not self.coords

    def scale(self, c):
        if not c:
            return Delta1Elem(self.m, self.n)
        return Delta1Elem(self.m, self.n, {i: c * v for i, v in self.coords.items()})

    def __add__(self, other):
        if (self.m, self.n) != (other.m, other.n):
            raise ValueError("delta1 cell mismatch")
        out = dict(self.coords)
        for i, v in other.coords.items():
            nv = out.get(i, 0) + v
            if nv:
                out[i] = nv
            else:
                out.pop(i, None)
        return Delta1Elem(self.m, self.n, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def __neg__(self):
        return self.scale(-1)

    def __eq__(self, other):
        return (isinstance(other, Delta1Elem) and self.m == other.m
                and self.n == other.n and self.coords == other.coords)

    def __repr__(self):
        return "Delta1Elem(%d, %d, %r)" % (self.m, self.n, self.coords)


def include_delta1(z):
    """Coordinate inclusion delta1(m, n) -> Hom(m, n+1)."""
    full, _, _ = delta1_basis(z.m, z.n)
    return HomElem(z.m, z.n + 1, {full[i]: c for i, c in z.coords.items()})


def project_delta1(w):
    """Read an ambient element known to lie in delta1 back into sub-coordinates."""
    m, n = w.m, w.n - 1
    full, _, _ = delta1_basis(m, n)
    back = {fi: s for s, fi in enumerate(full)}
    out = {}
    for i, c in w.coords.items():
        s = back.get(i)
        if s is None:
            raise ValueError("element is not supported on the delta1 sub-basis")
        out[s] = c
    return Delta1Elem(m, n, out)


def mu(n):
    """The canonical element of Hom(n+1, n); mu(0) = 0."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return HomElem.zero(1, 0)
    index = hom_index(n + 1, n)
    coords = {}
    base = tuple(range(1, n + 1))
    for j in range(1, n + 1):
        bm = BasisMorphism(n + 1, n, base + (j,), (0,) * n)
        coords[index[bm]] = 1
    return HomElem(n + 1, n, coords)


def mu_tilde(w):
    """Post-composition with mu: Hom(m, n+1) -> Hom(m, n)."""
    if w.n < 1:
        raise ValueError("mu_tilde needs target arity >= 1")
    return compose(mu(w.n - 1), w)


def iota(a):
    """Generator of delta1(a, a-1) given by the identity of [a]; iota_0 = 0."""
    if a < 0:
        raise ValueError("a must be >= 0")
    if a == 0:
        return Delta1Elem.zero(0, 0)
    bm = BasisMorphism(a, a, tuple(range(1, a + 1)), (0,) * a)
    _, _, index_of = delta1_basis(a, a - 1)
    return Delta1Elem(a, a - 1, {index_of[bm]: 1})


def mu_tilde_1(z):
    """Restriction of mu_tilde to delta1: delta1(m, n) -> Hom(m, n)."""
    return mu_tilde(include_delta1(z))


def adjoint_append(front, x_tree):
    """All ways to bracket x_tree onto one of the given output trees.

    Returns a tuple of tree tuples; entry i replaces front[i] by
    (front[i], x_tree).  Summing over them is the place-wise right
    adjoint action.
    """
    return tuple(front[:i] + ((front[i], x_tree),) + front[i + 1:]
                 for i in range(len(front)))


def _emit(front, s):
    """Normalize the front trees and emit delta1 sub-basis coordinates.

    `front` holds one (possibly non-basis) tree per ordinary output and
    `s` is the label of the lone input over the last output.
    """
    n = len(front)
    m = 1 + sum(len(freelie.leaves(t)) for t in front)
    f = [0] * m
    per_output = []
    for j, tree in enumerate(front, start=1):
        for leaf in freelie.leaves(tree):
            f[leaf - 1] = j
        per_output.append(sorted(freelie.normalize_tree(tree).items()))
    f[s - 1] = n + 1
    _, _, index_of = delta1_basis(m, n)
    out = {}
    stack = [((), 1)]
    for items in per_output:
        stack = [(trees + (idx,), c * v) for trees, c in stack for idx, v in items]
    for trees, c in stack:
        bm = BasisMorphism(m, n + 1, tuple(f), trees + (0,))
        i = index_of[bm]
        nv = out.get(i, 0) + c
        if nv:
            out[i] = nv
        else:
            del out[i]
    return out


def _pi_rec(front, last):
    key = (front, last)
    try:
        return _pi_cache[key]
    except KeyError:
        pass
    if not isinstance(last, tuple):
        out = _emit(front, last)
    else:
        x, y = last
        out = {}
        for sign, first, second in ((1, x, y), (-1, y, x)):
            for appended in adjoint_append(front, first):
                for i, c in _pi_rec(appended, second).items():
                    nv = out.get(i, 0) + sign * c
                    if nv:
                        out[i] = nv
                    else:
                        del out[i]
    _pi_cache[key] = out
    return out


def pi(w):
    """The retraction Hom(m, n+1) ->> delta1(m, n)."""
    if w.n < 1:
        raise ValueError("pi needs target arity >= 1")
    m, n = w.m, w.n - 1
    basis = hom_basis(m, n + 1)
    out = {}
    for idx, c in w.coords.items():
        bm = basis[idx]
        fibs = fibers(bm.f, bm.n)
        trees = tuple(freelie.lie_basis(fibs[j])[bm.trees[j]] for j in range(bm.n))
        for i, v in _pi_rec(trees[:-1], trees[-1]).items():
            nv = out.get(i, 0) + c * v
            if nv:
                out[i] = nv
            else:
                del out[i]
    return Delta1Elem(m, n, out)


def delta1_act_left(g, z):
    """Left action of Hom(n, p) on delta1(m, n): compose with g boxplus 1."""
    if g.m != z.n:
        raise ValueError("arity mismatch for the left action")
    w = compose(boxplus(g, identity(1)), include_delta1(z))
    return project_delta1(w)


def delta1_act_right(z, f):
    """Right action of Hom(m, n) on delta1(n, p): pre-compose, then project by pi."""
    if f.n != z.m:
        raise ValueError("arity mismatch for the right action")
    return pi(compose(include_delta1(z), f))


def delta1_act_in(z, tau):
    """Right symmetric-group action; stays inside the sub-basis, no pi needed."""
    return project_delta1(compose(include_delta1(z), perm_hom(tau)))


def check_centrality(n, t):
    """phi o mu(n) = mu(t) o (phi boxplus 1) for every basis phi of Hom(n, t)."""
    mun = mu(n)
    mut = mu(t)
    one = identity(1)
    for bm in hom_basis(n, t):
        phi = HomElem.from_basis(bm)
        if compose(phi, mun) != compose(mut, boxplus(phi, one)):
            return False
    return True


def check_lie_action(n):
    """Bracketing the two extra inputs equals the adjoint-action commutator.

    In Hom(n+2, n):  mu(n) o (1_n boxplus mu(1))
                   = mu(n) o mu(n+1)  -  mu(n) o (mu(n+1) o swap),
    with swap exchanging the last two inputs.
    """
    mun = mu(n)
    lhs = compose(mun, boxplus(identity(n), mu(1)))
    inner = mu(n + 1)
    swap = tuple(range(1, n + 1)) + (n + 2, n + 1)
    rhs = compose(mun, inner) - compose(mun, compose(inner, perm_hom(swap)))
    return lhs == rhs


def check_dg_square(m, n, t):
    """Interchange of the two degree-one actions (the square-zero condition).

    For all basis x of delta1(n, t) and y of delta1(m, n):
    x . mu_tilde_1(y) = mu_tilde_1(x) . y.
    """
    _, x_bms, _ = delta1_basis(n, t)
    _, y_bms, _ = delta1_basis(m, n)
    if not x_bms or not y_bms:
        return True
    xs = [Delta1Elem(n, t, {i: 1}) for i in range(len(x_bms))]
    ys = [Delta1Elem(m, n, {i: 1}) for i in range(len(y_bms))]
    mt_x = [mu_tilde_1(x) for x in xs]
    mt_y = [mu_tilde_1(y) for y in ys]
    for x, mx in zip(xs, mt_x):
        for y, my in zip(ys, mt_y):
            if delta1_act_right(x, my) != delta1_act_left(mx, y):
                return False
    return True
