"""Multilinear free Lie algebra on a finite label set.

Lie(S) is spanned by bracket expressions using each label of S exactly
once, modulo antisymmetry and the Jacobi identity; its dimension is
(|S|-1)!.  The basis used everywhere is the left-normed family

    [[...[[a1, s2], s3], ...], sk]        a1 = min(S),

one monomial per ordering (s2, ..., sk) of S \\ {a1}, listed in
lexicographic order of that tuple.

Normalization embeds everything in the tensor algebra: each bracket
[x, y] expands to xy - yx, so a tree with k leaves becomes an exact
integer combination of words of length k.  The expansion of the basis
monomial indexed by (s2, ..., sk) contains exactly one word starting
with a1 -- the word a1 s2 ... sk, with coefficient 1 -- so coordinates
can be read off the a1-initial words directly.  The candidate solution
is then certified by re-expanding and subtracting; a nonzero residue
would mean the input escaped the span of the basis, which cannot happen
for well-formed trees and is treated as an internal error.

Trees are plain nested structures: a leaf is its label (any orderable,
hashable value; ints in practice) and a bracket is a pair
``(left, right)``.
"""

import itertools
import threading
from math import factorial

_lock = threading.RLock()  # cache builders call one another
_basis_cache = {}       # sorted label tuple -> tuple of trees
_perm_index_cache = {}  # sorted label tuple -> {perm tuple: basis index}
_expansion_cache = {}   # sorted label tuple -> tuple of word->coeff dicts
_normal_cache = {}      # tree -> coords dict (treated as read-only)


def leaves(tree):
    """Leaf labels of a tree, left to right."""
    if not isinstance(tree, tuple):
        return (tree,)
    return leaves(tree[0]) + leaves(tree[1])


def graft(tree, mapping):
    """Replace every leaf label by mapping[label] (a label or a whole tree)."""
    if not isinstance(tree, tuple):
        return mapping[tree]
    return (graft(tree[0], mapping), graft(tree[1], mapping))


def expand(tree):
    """Tensor-algebra expansion: dict word-tuple -> integer coefficient."""
    if not isinstance(tree, tuple):
        return {(tree,): 1}
    left, right = expand(tree[0]), expand(tree[1])
    out = {}
    for wl, cl in left.items():
        for wr, cr in right.items():
            c = cl * cr
            w = wl + wr
            nv = out.get(w, 0) + c
            if nv:
                out[w] = nv
            else:
                del out[w]
            w = wr + wl
            nv = out.get(w, 0) - c
            if nv:
                out[w] = nv
            else:
                del out[w]
    return out


def lie_dim(k):
    """dim Lie(S) for |S| = k: zero for k = 0, else (k-1)!."""
    if k < 0:
        raise ValueError("arity must be >= 0")
    return 0 if k == 0 else factorial(k - 1)


def lie_basis(labels):
    """The left-normed basis trees of Lie(S), S given as a sorted tuple."""
    labels = tuple(labels)
    try:
        return _basis_cache[labels]
    except KeyError:
        pass
    with _lock:
        if labels not in _basis_cache:
            if list(labels) != sorted(set(labels)):
                raise ValueError("labels must be a sorted tuple of distinct values")
            out = []
            if labels:
                head, rest = labels[0], labels[1:]
                for perm in itertools.permutations(rest):
                    t = head
                    for s in perm:
                        t = (t, s)
                    out.append(t)
            _basis_cache[labels] = tuple(out)
    return _basis_cache[labels]


def _perm_index(labels):
    try:
        return _perm_index_cache[labels]
    except KeyError:
        pass
    with _lock:
        if labels not in _perm_index_cache:
            rest = labels[1:]
            _perm_index_cache[labels] = {
                perm: i for i, perm in enumerate(itertools.permutations(rest))
            }
    return _perm_index_cache[labels]


def basis_expansions(labels):
    """Expansions of the basis trees, cached per label set."""
    labels = tuple(labels)
    try:
        return _expansion_cache[labels]
    except KeyError:
        pass
    with _lock:
        if labels not in _expansion_cache:
            _expansion_cache[labels] = tuple(expand(t) for t in lie_basis(labels))
    return _expansion_cache[labels]


class LieElem:
    """Element of Lie(S): sparse rational coordinates over the left-normed basis."""

    __slots__ = ("labels", "coords")

    def __init__(self, labels, coords=None):
        self.labels = tuple(labels)
        self.coords = {i: c for i, c in (coords or {}).items() if c}

    def is_zero(self):
        return not self.coords

    def scale(self, c):
        if not c:
            return LieElem(self.labels)
        return LieElem(self.labels, {i: c * v for i, v in self.coords.items()})

    def __add__(self, other):
        if self.labels != other.labels:
            raise ValueError("label sets differ")
        out = dict(self.coords)
        for i, v in other.coords.items():
            nv = out.get(i, 0) + v
            if nv:
                out[i] = nv
            else:
                out.pop(i, None)
        return LieElem(self.labels, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def __neg__(self):
        return self.scale(-1)

    def __eq__(self, other):
        return (isinstance(other, LieElem) and self.labels == other.labels
                and self.coords == other.coords)

    def __repr__(self):
        return "LieElem(%r, %r)" % (self.labels, self.coords)

    def terms(self):
        """(coefficient, basis tree) pairs."""
        basis = lie_basis(self.labels)
        return [(c, basis[i]) for i, c in sorted(self.coords.items())]


def _check_multilinear(tree, labels):
    lvs = leaves(tree)
    if len(lvs) != len(set(lvs)) or tuple(sorted(lvs)) != labels:
        raise ValueError("tree is not multilinear over %r" % (labels,))


def normalize_tree(tree):
    """Coordinates of a single multilinear tree (read-only cached dict)."""
    try:
        return _normal_cache[tree]
    except (KeyError, TypeError):
        pass
    labels = tuple(sorted(leaves(tree)))
    _check_multilinear(tree, labels)
    coords = _solve([(1, tree)], labels)
    try:
        _normal_cache[tree] = coords
    except TypeError:
        pass
    return coords


def _solve(terms, labels):
    """Read coordinates off the a1-initial words, then certify by re-expansion."""
    words = {}
    for c, tree in terms:
        for w, e in expand(tree).items():
            nv = words.get(w, 0) + c * e
            if nv:
                words[w] = nv
            else:
                del words[w]
    head = labels[0]
    index = _perm_index(labels)
    coords = {}
    for w, c in words.items():
        if w[0] == head:
            coords[index[w[1:]]] = c
    expansions = basis_expansions(labels)
    residue = dict(words)
    for i, c in coords.items():
        for w, e in expansions[i].items():
            nv = residue.get(w, 0) - c * e
            if nv:
                residue[w] = nv
            else:
                del residue[w]
    if residue:
        raise AssertionError("expansion escaped the basis span; broken input tree")
    return coords


def normalize(tree):
    """Express a multilinear bracket tree in the left-normed basis."""
    labels = tuple(sorted(leaves(tree)))
    return LieElem(labels, normalize_tree(tree))


def normalize_terms(terms):
    """Normalize a formal sum of (coefficient, tree) pairs over one label set."""
    terms = list(terms)
    if not terms:
        raise ValueError("empty formal sum has no label set")
    labels = tuple(sorted(leaves(terms[0][1])))
    out = {}
    for c, tree in terms:
        if not c:
            continue
        _check_multilinear(tree, labels)
        for i, v in normalize_tree(tree).items():
            nv = out.get(i, 0) + c * v
            if nv:
                out[i] = nv
            else:
                del out[i]
    return LieElem(labels, out)


def bracket(u, v):
    """[u, v] in Lie(S1 | S2); the label sets must be disjoint."""
    if set(u.labels) & set(v.labels):
        raise ValueError("label sets overlap")
    labels = tuple(sorted(u.labels + v.labels))
    if u.is_zero() or v.is_zero():
        return LieElem(labels)
    bu, bv = lie_basis(u.labels), lie_basis(v.labels)
    terms = [(cu * cv, (bu[i], bv[j]))
             for i, cu in u.coords.items() for j, cv in v.coords.items()]
    return normalize_terms(terms)


def relabel(u, mapping):
    """Push u through a bijection of label sets and renormalize."""
    if sorted(mapping) != sorted(u.labels) or len(set(mapping.values())) != len(mapping):
        raise ValueError("mapping is not a bijection from the label set")
    new_labels = tuple(sorted(mapping.values()))
    if u.is_zero():
        return LieElem(new_labels)
    basis = lie_basis(u.labels)
    terms = [(c, graft(basis[i], mapping)) for i, c in u.coords.items()]
    return normalize_terms(terms)


def generator(label):
    """The canonical generator of Lie({label})."""
    return LieElem((label,), {0: 1})
